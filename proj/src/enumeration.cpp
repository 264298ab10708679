#include "choc/enumeration.hpp"

#include <bit>
#include <string>

#include "choc/errors.hpp"

namespace choc {

namespace {

GTable& shared_table() {
  static GTable table;
  return table;
}

void check_order(unsigned n) {
  if (n < 1) throw DomainError("order must be >= 1");
  if (n > kMaxSumOrder) {
    throw CapacityError("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxSumOrder));
  }
}

}  // namespace

Count g(std::uint64_t m) {
  if (m < 1) throw DomainError("g(m) needs m >= 1");
  // Invariant: (lo, hi) = (g(k), g(k+1)) for k = the bits of m read so far.
  Count lo = 1;
  Count hi = 4;
  const int top = std::bit_width(m) - 1;
  for (int b = top - 1; b >= 0; --b) {
    if ((m >> b) & 1U) {
      lo = lo + hi;  // g(2k+1)
      hi = 4 * hi;   // g(2k+2)
    } else {
      hi = lo + hi;  // g(2k+1)
      lo = 4 * lo;   // g(2k)
    }
  }
  return lo;
}

unsigned u(std::uint64_t x) {
  if (x < 1) throw DomainError("u(x) needs x >= 1");
  return static_cast<unsigned>(std::countr_zero(x));
}

void GTable::ensure(std::uint64_t m) {
  for (std::uint64_t k = values_.size(); k <= m; ++k) {
    if (k % 2 == 0) {
      values_.push_back(4 * values_[k / 2]);
    } else {
      values_.push_back(values_[k / 2] + values_[k / 2 + 1]);
    }
  }
}

Count GTable::at(std::uint64_t m) {
  if (m < 1) throw DomainError("g(m) needs m >= 1");
  std::lock_guard lock(mutex_);
  ensure(m);
  return values_[m];
}

Count GTable::range_sum(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1) throw DomainError("range must start at m >= 1");
  std::lock_guard lock(mutex_);
  ensure(hi);
  Count total = 0;
  for (std::uint64_t m = lo; m <= hi; ++m) total += values_[m];
  return total;
}

Count GTable::odd_sum(std::uint64_t count) {
  std::lock_guard lock(mutex_);
  ensure(2 * count);
  Count total = 0;
  for (std::uint64_t m = 1; m <= count; ++m) total += values_[2 * m - 1];
  return total;
}

Count sum_odd(unsigned n) {
  check_order(n);
  return shared_table().odd_sum(std::uint64_t{1} << (n - 1));
}

Count sum_all(unsigned n) {
  check_order(n);
  return shared_table().range_sum(1, std::uint64_t{1} << n);
}

Count sum_odd_closed_form(unsigned n) {
  check_order(n);
  return boost::multiprecision::pow(Count(6), n - 1);
}

Count sum_all_closed_form(unsigned n) {
  check_order(n);
  return (boost::multiprecision::pow(Count(4), n) + boost::multiprecision::pow(Count(6), n)) / 2;
}

}  // namespace choc
