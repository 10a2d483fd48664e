#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace dirac {

/// Process-wide worker count for nodewise-parallel kernels (CLI --threads).
void set_thread_count(int n);
int thread_count();

/// Runs fn(i) for i in [0,n). Work is split into contiguous chunks, one per
/// worker; every output index is written by exactly one thread, so results
/// do not depend on the thread count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

/// Chunked variant: fn(begin, end) on disjoint ranges.
void parallel_for_chunks(
    std::int64_t n,
    const std::function<void(std::int64_t, std::int64_t)>& fn);

/// Pairwise (binary-counter) accumulator: deterministic tree summation with
/// O(log n) state. T needs operator+= and zero-initialization via T{}.
template <typename T>
class PairwiseAccumulator {
 public:
  void add(const T& v) {
    T carry = v;
    std::uint64_t c = count_;
    std::size_t level = 0;
    while (c & 1u) {
      carry += bins_[level];
      bins_[level] = T{};
      c >>= 1;
      ++level;
    }
    if (level >= bins_.size()) bins_.resize(level + 1, T{});
    bins_[level] = carry;
    ++count_;
  }

  T total() const {
    T sum{};
    for (const auto& b : bins_) sum += b;
    return sum;
  }

 private:
  std::vector<T> bins_;
  std::uint64_t count_ = 0;
};

template <typename T, typename F>
T pairwise_sum(std::int64_t n, F&& term) {
  PairwiseAccumulator<T> acc;
  for (std::int64_t i = 0; i < n; ++i) acc.add(term(i));
  return acc.total();
}

}  // namespace dirac
