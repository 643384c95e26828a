#include <quartic/descent.hpp>

#include <array>
#include <functional>

namespace quartic::descent {

namespace {

class Lookup {
 public:
  explicit Lookup(const Bindings& b) : bindings_(b) {}

  const Integer& operator()(std::string_view name) const {
    const Integer* found = nullptr;
    for (const auto& [key, value] : bindings_) {
      if (key == name) found = &value;
    }
    if (found == nullptr) {
      throw Error(ErrorCode::InvalidArgument, "missing binding " + std::string(name));
    }
    return *found;
  }

 private:
  const Bindings& bindings_;
};

Integer p4(const Integer& x) { return x.pow(4); }

struct Entry {
  Condition condition;
  std::function<bool(const Lookup&)> holds;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto add = [&](std::string_view id, std::string_view failure,
                   std::function<bool(const Lookup&)> holds) {
      e.push_back(Entry{Condition{id, failure}, std::move(holds)});
    };

    add("sum4.square", "a^4+b^4 not a perfect square",
        [](const Lookup& v) { return is_square(p4(v("a")) + p4(v("b"))); });
    add("sum4.opposite_parity", "a and b both odd",
        [](const Lookup& v) { return (v("a") * v("b")).is_even(); });
    add("sum4.p_odd", "p is even", [](const Lookup& v) { return v("p").is_odd(); });
    add("sum4.p_square", "p not a perfect square", [](const Lookup& v) { return is_square(v("p")); });
    add("sum4.two_q_square", "2q not a perfect square",
        [](const Lookup& v) { return is_square(2 * v("q")); });
    add("sum4.mn_squares", "m or n not a perfect square",
        [](const Lookup& v) { return is_square(v("m")) && is_square(v("n")); });

    add("diff4.square", "a^4-b^4 not a perfect square",
        [](const Lookup& v) { return is_square(p4(v("a")) - p4(v("b"))); });
    add("diff4.mn_squares", "m, n or m^2-n^2 not a perfect square", [](const Lookup& v) {
      const Integer& m = v("m");
      const Integer& n = v("n");
      return is_square(m) && is_square(n) && is_square(m * m - n * n);
    });
    add("diff4.product_square", "p^4-q^4 differs from (ab)^2", [](const Lookup& v) {
      const Integer ab = v("a") * v("b");
      return p4(v("p")) - p4(v("q")) == ab * ab;
    });

    add("plus2.square", "a^4+2b^4 not a perfect square",
        [](const Lookup& v) { return is_square(p4(v("a")) + 2 * p4(v("b"))); });
    add("plus2.m_even", "m odd, so 2mn cannot be a square",
        [](const Lookup& v) { return v("m").is_even(); });
    add("plus2.k_even", "k odd, so 2kn cannot be a square",
        [](const Lookup& v) { return v("k").is_even(); });
    add("plus2.n_2k_squares", "n or 2k not a perfect square",
        [](const Lookup& v) { return is_square(v("n")) && is_square(2 * v("k")); });
    add("plus2.pq_squares", "p or q not a perfect square",
        [](const Lookup& v) { return is_square(v("p")) && is_square(v("q")); });
    add("plus2.qr_squares", "q or r not a perfect square",
        [](const Lookup& v) { return is_square(v("q")) && is_square(v("r")); });

    add("cube.square", "form value not a perfect square",
        [](const Lookup& v) { return is_square(cube_form_value(v("b"), v("c"))); });
    add("cube.factor_squares", "b, c or c^2-3bc+3b^2 not a perfect square", [](const Lookup& v) {
      const Integer& b = v("b");
      const Integer& c = v("c");
      return is_square(b) && is_square(c) && is_square(c * c - 3 * b * c + 3 * b * b);
    });
    add("cube.mn_lowest_terms", "b/c differs from (2mn-3n^2)/(m^2-3n^2)", [](const Lookup& v) {
      const Integer& m = v("m");
      const Integer& n = v("n");
      return v("b") == 2 * m * n - 3 * n * n && v("c") == m * m - 3 * n * n;
    });
    add("cube.nk_lowest_terms", "b/c differs from (n^2-2kn)/(n^2-3k^2)", [](const Lookup& v) {
      const Integer& n = v("n");
      const Integer& k = v("k");
      return v("b") == n * n - 2 * k * n && v("c") == n * n - 3 * k * k;
    });
    add("cube.reduced_square", "reduced form value not a perfect square",
        [](const Lookup& v) { return is_square(cube_form_value(v("b_next"), v("c_next"))); });
    return e;
  }();
  return entries;
}

const Entry& entry(std::string_view id) {
  for (const Entry& e : registry()) {
    if (e.condition.id == id) return e;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown condition " + std::string(id));
}

}  // namespace

std::string_view to_string(Tag tag) {
  switch (tag) {
    case Tag::Reduced: return "Reduced";
    case Tag::Exception: return "Exception";
    case Tag::Contradiction: return "Contradiction";
  }
  return "?";
}

Bindings DescentOutcome::merged_bindings() const {
  Bindings out;
  for (const TraceStep& step : trace) {
    for (const auto& [name, value] : step.bindings) {
      bool replaced = false;
      for (auto& [key, existing] : out) {
        if (key == name) {
          existing = value;
          replaced = true;
        }
      }
      if (!replaced) out.emplace_back(name, value);
    }
  }
  return out;
}

std::span<const Condition> conditions() {
  static const std::vector<Condition> list = [] {
    std::vector<Condition> out;
    for (const Entry& e : registry()) out.push_back(e.condition);
    return out;
  }();
  return list;
}

const Condition& condition(std::string_view id) { return entry(id).condition; }

bool condition_holds(std::string_view id, const Bindings& bindings) {
  return entry(id).holds(Lookup(bindings));
}

Integer cube_form_value(const Integer& b, const Integer& c) {
  return b * c * (c * c - 3 * b * c + 3 * b * b);
}

}  // namespace quartic::descent
