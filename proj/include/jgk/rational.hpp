#ifndef JGK_RATIONAL_HPP
#define JGK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

#include "jgk/util.hpp"

namespace jgk {

/// Exact rational number in lowest terms with a positive denominator.
/// Values stay in a plain int64 pair until an operation overflows, at which
/// point they spill into a shared immutable GMP rational; results are demoted
/// back when they fit. All operations are pure.
class Rat {
public:
  Rat() = default;
  Rat(long long n) : n_(n) {}  // NOLINT: implicit integer literals are convenient
  Rat(long long num, long long den);

  static Rat from_decimal_strings(const std::string& num, const std::string& den);

  bool is_zero() const { return big_ ? *big_ == 0 : n_ == 0; }
  bool is_one() const { return big_ ? *big_ == 1 : (n_ == 1 && d_ == 1); }
  bool is_integer() const;
  int sign() const;

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  Rat inverse() const;
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  bool operator==(const Rat& o) const;
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;

  /// True when both numerator and denominator fit in int64.
  bool is_small() const { return big_ == nullptr; }
  long long small_num() const { return n_; }
  long long small_den() const { return d_; }
  const mpq_class* big_value() const { return big_.get(); }

  std::string num_string() const;
  std::string den_string() const;
  std::string str() const;

private:
  long long n_ = 0, d_ = 1;
  std::shared_ptr<const mpq_class> big_;

  static Rat from_i128(__int128 num, __int128 den);
  static Rat from_mpq(mpq_class q);
  mpq_class to_mpq() const;

  friend struct RatHashAccess;
};

}  // namespace jgk

#endif
