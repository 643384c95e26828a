#pragma once

#include <quartic/descent.hpp>

namespace quartic::descent::detail {

inline void ensure(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvariantViolation, what);
}

/// Square root where the preceding checks guarantee a square.
inline Natural root_of(const Natural& n) {
  Natural r = isqrt(n);
  ensure(r * r == n, "expected a perfect square");
  return r;
}

class Replay {
 public:
  void step(std::string label, Bindings bindings) {
    out_.trace.push_back(TraceStep{std::move(label), std::move(bindings)});
  }

  /// False, with the outcome set to Contradiction, when the condition fails
  /// on the values bound so far.
  bool require(std::string_view id) {
    if (condition_holds(id, out_.merged_bindings())) return true;
    out_.tag = Tag::Contradiction;
    out_.violated = std::string(id);
    return false;
  }

  DescentOutcome exception(std::string name) {
    out_.tag = Tag::Exception;
    out_.exception_name = std::move(name);
    return std::move(out_);
  }

  /// Checks the termination measure max(x, y) < bound.
  DescentOutcome reduced(const Natural& x, const Natural& y, const Natural& bound) {
    ensure(std::max(x, y) < bound, "reduced candidate is not smaller");
    return reduced_unchecked(x, y);
  }

  DescentOutcome reduced_unchecked(const Natural& x, const Natural& y) {
    out_.tag = Tag::Reduced;
    out_.reduced = std::make_pair(x, y);
    return std::move(out_);
  }

  DescentOutcome finish() { return std::move(out_); }

 private:
  DescentOutcome out_;
};

}  // namespace quartic::descent::detail
