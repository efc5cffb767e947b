#include "jgk/rational.hpp"

namespace jgk {
namespace {

// |values| are kept below this bound so products always fit in __int128
constexpr long long kSmallMax = (1LL << 62);

__int128 gcd_i128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_small(__int128 v) { return v > -kSmallMax && v < kSmallMax; }

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rat Rat::from_i128(__int128 num, __int128 den) {
  if (den == 0) fail("rational: division by zero");
  if (num == 0) return Rat();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd_i128(num, den);
  num /= g;
  den /= g;
  if (fits_small(num) && fits_small(den)) {
    Rat r;
    r.n_ = static_cast<long long>(num);
    r.d_ = static_cast<long long>(den);
    return r;
  }
  mpq_class q;
  q.get_num() = mpz_from_i128(num);
  q.get_den() = mpz_from_i128(den);
  // already in lowest terms with positive denominator
  Rat r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rat Rat::from_mpq(mpq_class q) {
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    long long n = q.get_num().get_si(), d = q.get_den().get_si();
    if (n > -kSmallMax && n < kSmallMax && d < kSmallMax) {
      Rat r;
      r.n_ = n;
      r.d_ = d;
      return r;
    }
  }
  Rat r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(static_cast<long>(n_), static_cast<long>(d_));
  q.canonicalize();
  return q;
}

Rat::Rat(long long num, long long den) { *this = from_i128(num, den); }

Rat Rat::from_decimal_strings(const std::string& num, const std::string& den) {
  mpq_class q;
  if (q.get_num().set_str(num, 10) != 0) fail("rational: bad numerator string '" + num + "'");
  if (q.get_den().set_str(den, 10) != 0) fail("rational: bad denominator string '" + den + "'");
  if (q.get_den() == 0) fail("rational: division by zero");
  if (q.get_den() < 0) {
    q.get_num() = -q.get_num();
    q.get_den() = -q.get_den();
  }
  return from_mpq(std::move(q));
}

bool Rat::is_integer() const {
  return big_ ? big_->get_den() == 1 : d_ == 1;
}

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

Rat Rat::operator-() const {
  if (!big_) {
    Rat r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }
  return from_mpq(mpq_class(-*big_));
}

Rat Rat::operator+(const Rat& o) const {
  if (!big_ && !o.big_)
    return from_i128(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
                     static_cast<__int128>(d_) * o.d_);
  return from_mpq(to_mpq() + o.to_mpq());
}

Rat Rat::operator-(const Rat& o) const {
  if (!big_ && !o.big_)
    return from_i128(static_cast<__int128>(n_) * o.d_ - static_cast<__int128>(o.n_) * d_,
                     static_cast<__int128>(d_) * o.d_);
  return from_mpq(to_mpq() - o.to_mpq());
}

Rat Rat::operator*(const Rat& o) const {
  if (!big_ && !o.big_)
    return from_i128(static_cast<__int128>(n_) * o.n_, static_cast<__int128>(d_) * o.d_);
  return from_mpq(to_mpq() * o.to_mpq());
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) fail("rational: division by zero");
  if (!big_ && !o.big_)
    return from_i128(static_cast<__int128>(n_) * o.d_, static_cast<__int128>(d_) * o.n_);
  return from_mpq(to_mpq() / o.to_mpq());
}

Rat Rat::inverse() const {
  if (is_zero()) fail("rational: division by zero");
  if (!big_) return from_i128(d_, n_);
  return from_mpq(1 / *big_);
}

bool Rat::operator==(const Rat& o) const {
  if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;  // canonical forms
  return to_mpq() == o.to_mpq();
}

bool Rat::operator<(const Rat& o) const {
  if (!big_ && !o.big_)
    return static_cast<__int128>(n_) * o.d_ < static_cast<__int128>(o.n_) * d_;
  return to_mpq() < o.to_mpq();
}

std::string Rat::num_string() const {
  if (!big_) return std::to_string(n_);
  return big_->get_num().get_str();
}

std::string Rat::den_string() const {
  if (!big_) return std::to_string(d_);
  return big_->get_den().get_str();
}

std::string Rat::str() const {
  if (is_integer()) return num_string();
  return num_string() + "/" + den_string();
}

}  // namespace jgk
