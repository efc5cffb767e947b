#ifndef JGK_CYCLOTOMIC_HPP
#define JGK_CYCLOTOMIC_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "jgk/rational.hpp"

namespace jgk {

/// phi(m) for the supported conductors 1, 3, 5.
int phi_of(int m);

/// Element of the cyclotomic field Q(zeta_m), m in {1,3,5}, stored in the
/// canonical reduced basis 1, zeta, ..., zeta^{phi(m)-1}. Equality is
/// coefficient-wise; values are immutable.
class Cyc {
public:
  Cyc() = default;  // zero of conductor 1
  explicit Cyc(int m) : m_(check_conductor(m)) {}

  /// Canonical reduction of sum raw[k]*zeta^k, raw of length m.
  static Cyc make(int m, std::span<const Rat> raw);
  static Cyc rational(int m, const Rat& r);
  static Cyc zero(int m) { return Cyc(m); }
  static Cyc one(int m) { return rational(m, Rat(1)); }
  static Cyc zeta_pow(int m, long long k);

  int conductor() const { return m_; }
  const Rat& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

  bool is_zero() const;
  bool is_rational() const;  // coefficients above zeta^0 vanish
  const Rat& rational_part() const { return c_[0]; }

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  Cyc scaled(const Rat& r) const;
  Cyc inverse() const;

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  std::string str() const;

private:
  static int check_conductor(int m);

  int m_ = 1;
  std::array<Rat, 4> c_{};  // first phi(m) entries in use
};

inline void check_same_conductor(const Cyc& a, const Cyc& b) {
  if (a.conductor() != b.conductor())
    fail("cyclotomic: conductor mismatch (" + std::to_string(a.conductor()) + " vs " +
         std::to_string(b.conductor()) + ")");
}

}  // namespace jgk

#endif
