#pragma once

// Exact counts of P-positions: g(m) = |pattern(m)| from the recurrences
//   g(1) = 1,  g(2m) = 4 g(m),  g(2m+1) = g(m) + g(m+1),
// and sums of g over dyadic ranges. All arithmetic is arbitrary precision.

#include <cstdint>
#include <mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace choc {

using Count = boost::multiprecision::cpp_int;

// Largest order accepted by sum_odd / sum_all (2^20 table entries).
inline constexpr unsigned kMaxSumOrder = 20;

// g(m) in O(log m) by carrying the pair (g(k), g(k+1)) down the binary
// expansion of m. Throws DomainError for m < 1.
Count g(std::uint64_t m);

// Largest e with 2^e | x. Throws DomainError for x < 1.
unsigned u(std::uint64_t x);

// Memoized table g(1..n), filled bottom-up from the recurrences. Thread-safe.
class GTable {
 public:
  Count at(std::uint64_t m);

  // Sum of g(m) over lo <= m <= hi.
  Count range_sum(std::uint64_t lo, std::uint64_t hi);

  // Sum of g(2m-1) over 1 <= m <= count.
  Count odd_sum(std::uint64_t count);

 private:
  void ensure(std::uint64_t m);

  std::mutex mutex_;
  std::vector<Count> values_{Count(0), Count(1)};
};

// Sum of g(2m-1) for m = 1..2^(n-1), from the table (never the closed form).
Count sum_odd(unsigned n);

// Sum of g(m) for m = 1..2^n.
Count sum_all(unsigned n);

// 6^(n-1).
Count sum_odd_closed_form(unsigned n);

// (4^n + 6^n) / 2.
Count sum_all_closed_form(unsigned n);

}  // namespace choc
