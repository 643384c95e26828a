#pragma once

#include <atomic>
#include <functional>
#include <thread>

#include <quartic/scan.hpp>

namespace quartic::scan::detail {

std::uint64_t splitmix64(std::uint64_t x);

/// The deterministic 1% subsample, keyed on the global tuple index.
inline bool oracle_selected(std::uint64_t index) { return splitmix64(index) % 100 == 0; }

unsigned resolve_workers(unsigned requested);

/// Appends a later chunk's partial result.
void merge_into(ClaimResult& into, ClaimResult&& part);

void note_mismatch(ClaimResult& claim, std::string detail);

/// Fills missing_expected from the square hits.
void finalize(ClaimResult& claim);

std::uint64_t to_u64(const Natural& n, const char* what);

/// Splits [0, total) into contiguous chunks, runs fn(begin, end, partial) on a
/// pool of workers and merges the partials in chunk order, so the result does
/// not depend on the worker count.
template <typename Fn>
ClaimResult run_chunks(std::uint64_t total, unsigned workers, const ClaimResult& prototype, Fn fn) {
  workers = resolve_workers(workers);
  const std::uint64_t chunk_count = std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(total, static_cast<std::uint64_t>(workers) * 16));
  const std::uint64_t chunk = (total + chunk_count - 1) / chunk_count;
  ClaimResult seed;
  seed.name = prototype.name;
  seed.expected = prototype.expected;
  std::vector<ClaimResult> partials(chunk_count, seed);
  std::vector<std::exception_ptr> errors(chunk_count);
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= chunk_count) return;
      const std::uint64_t begin = std::min(total, i * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      try {
        fn(begin, end, partials[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1 || chunk_count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunk_count));
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  ClaimResult out = prototype;
  for (auto& p : partials) merge_into(out, std::move(p));
  finalize(out);
  return out;
}

/// Mixed-radix walk over a box of parameter values; an axis may skip 0.
struct Axis {
  long long lo;
  long long hi;
  bool skip_zero = false;

  std::uint64_t size() const {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return skip_zero && lo <= 0 && hi >= 0 ? span - 1 : span;
  }
  long long value(std::uint64_t digit) const {
    long long v = lo + static_cast<long long>(digit);
    if (skip_zero && lo <= 0 && v >= 0) ++v;
    return v;
  }
};

class TupleCursor {
 public:
  explicit TupleCursor(std::vector<Axis> axes) : axes_(std::move(axes)) {
    digits_.resize(axes_.size());
    values_.resize(axes_.size());
  }

  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (const Axis& a : axes_) t *= a.size();
    return t;
  }

  void seek(std::uint64_t index) {
    for (std::size_t i = axes_.size(); i-- > 0;) {
      const std::uint64_t s = axes_[i].size();
      digits_[i] = index % s;
      index /= s;
      values_[i] = axes_[i].value(digits_[i]);
    }
  }

  void advance() {
    for (std::size_t i = axes_.size(); i-- > 0;) {
      if (++digits_[i] < axes_[i].size()) {
        values_[i] = axes_[i].value(digits_[i]);
        return;
      }
      digits_[i] = 0;
      values_[i] = axes_[i].value(0);
    }
  }

  const std::vector<long long>& values() const { return values_; }

 private:
  std::vector<Axis> axes_;
  std::vector<std::uint64_t> digits_;
  std::vector<long long> values_;
};

std::string join_params(std::span<const long long> values);

/// Hash of the scan kind, target and bounds; worker count is not part of it.
std::string report_hash(std::string_view kind, const ScanReport& report);

/// Visits every tuple of the box in lexicographic order, chunked over workers.
template <typename Visit>
ClaimResult scan_box(const ClaimResult& proto, std::vector<Axis> axes, unsigned workers,
                     Visit visit) {
  const TupleCursor cursor(std::move(axes));
  return run_chunks(cursor.total(), workers, proto,
                    [&](std::uint64_t begin, std::uint64_t end, ClaimResult& part) {
                      TupleCursor c = cursor;
                      c.seek(begin);
                      for (std::uint64_t idx = begin; idx < end; ++idx, c.advance()) {
                        visit(idx, c.values(), part);
                      }
                    });
}

}  // namespace quartic::scan::detail
