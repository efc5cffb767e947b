#include "jgk/cyclotomic.hpp"

namespace jgk {

int phi_of(int m) {
  switch (m) {
    case 1: return 1;
    case 3: return 2;
    case 5: return 4;
    default: fail("cyclotomic: unsupported conductor " + std::to_string(m));
  }
}

int Cyc::check_conductor(int m) {
  phi_of(m);
  return m;
}

Cyc Cyc::make(int m, std::span<const Rat> raw) {
  check_conductor(m);
  require(raw.size() == static_cast<std::size_t>(m),
          "cyclotomic: raw coefficient vector must have length m");
  Cyc r(m);
  int phi = phi_of(m);
  // zeta^{m-1} = -(1 + zeta + ... + zeta^{m-2}) for prime m; m = 1 is plain Q
  for (int k = 0; k < phi; ++k) r.c_[static_cast<std::size_t>(k)] = raw[static_cast<std::size_t>(k)];
  if (m > 1) {
    const Rat& top = raw[static_cast<std::size_t>(m - 1)];
    if (!top.is_zero())
      for (int k = 0; k < phi; ++k) r.c_[static_cast<std::size_t>(k)] -= top;
  }
  return r;
}

Cyc Cyc::rational(int m, const Rat& v) {
  Cyc r(m);
  r.c_[0] = v;
  return r;
}

Cyc Cyc::zeta_pow(int m, long long k) {
  check_conductor(m);
  k %= m;
  if (k < 0) k += m;
  std::vector<Rat> raw(static_cast<std::size_t>(m));
  raw[static_cast<std::size_t>(k)] = Rat(1);
  return make(m, raw);
}

bool Cyc::is_zero() const {
  for (int k = 0; k < phi_of(m_); ++k)
    if (!c_[static_cast<std::size_t>(k)].is_zero()) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (int k = 1; k < phi_of(m_); ++k)
    if (!c_[static_cast<std::size_t>(k)].is_zero()) return false;
  return true;
}

Cyc Cyc::operator-() const {
  Cyc r(m_);
  for (int k = 0; k < phi_of(m_); ++k) r.c_[static_cast<std::size_t>(k)] = -c_[static_cast<std::size_t>(k)];
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  check_same_conductor(*this, o);
  Cyc r(m_);
  for (int k = 0; k < phi_of(m_); ++k)
    r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] + o.c_[static_cast<std::size_t>(k)];
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  check_same_conductor(*this, o);
  Cyc r(m_);
  for (int k = 0; k < phi_of(m_); ++k)
    r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] - o.c_[static_cast<std::size_t>(k)];
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  check_same_conductor(*this, o);
  if (is_rational()) {
    if (c_[0].is_zero()) return Cyc(m_);
    return o.scaled(c_[0]);
  }
  if (o.is_rational()) return scaled(o.c_[0]);

  int phi = phi_of(m_);
  // convolution of reduced forms has degree <= 2*phi - 2
  std::array<Rat, 7> conv{};
  for (int i = 0; i < phi; ++i) {
    if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.c_[static_cast<std::size_t>(j)].is_zero()) continue;
      conv[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
  }
  std::vector<Rat> raw(static_cast<std::size_t>(m_));
  for (int k = 0; k <= 2 * phi - 2; ++k) {
    if (conv[static_cast<std::size_t>(k)].is_zero()) continue;
    raw[static_cast<std::size_t>(k % m_)] += conv[static_cast<std::size_t>(k)];
  }
  return make(m_, raw);
}

Cyc Cyc::scaled(const Rat& r) const {
  Cyc out(m_);
  if (r.is_zero()) return out;
  for (int k = 0; k < phi_of(m_); ++k)
    out.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] * r;
  return out;
}

Cyc Cyc::inverse() const {
  if (is_zero()) fail("cyclotomic: division by zero");
  if (is_rational()) return rational(m_, c_[0].inverse());

  // solve (this) * x = 1 against the multiplication matrix in the reduced basis
  int phi = phi_of(m_);
  // columns: this * zeta^j, j = 0..phi-1
  std::array<Cyc, 4> col;
  for (int j = 0; j < phi; ++j) col[static_cast<std::size_t>(j)] = *this * zeta_pow(m_, j);
  // Gaussian elimination on the phi x phi rational system A x = e_0
  std::array<std::array<Rat, 5>, 4> aug{};
  for (int i = 0; i < phi; ++i) {
    for (int j = 0; j < phi; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(j)].coeff(i);
    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(phi)] = Rat(i == 0 ? 1 : 0);
  }
  for (int p = 0; p < phi; ++p) {
    int pr = -1;
    for (int i = p; i < phi; ++i)
      if (!aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)].is_zero()) {
        pr = i;
        break;
      }
    require(pr >= 0, "cyclotomic: singular multiplication matrix");
    std::swap(aug[static_cast<std::size_t>(p)], aug[static_cast<std::size_t>(pr)]);
    Rat inv = aug[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)].inverse();
    for (int j = p; j <= phi; ++j) aug[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] *= inv;
    for (int i = 0; i < phi; ++i) {
      if (i == p) continue;
      Rat f = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
      if (f.is_zero()) continue;
      for (int j = p; j <= phi; ++j)
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * aug[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
    }
  }
  Cyc x(m_);
  for (int i = 0; i < phi; ++i) x.c_[static_cast<std::size_t>(i)] = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(phi)];
  return x;
}

bool Cyc::operator==(const Cyc& o) const {
  if (m_ != o.m_) return false;
  for (int k = 0; k < phi_of(m_); ++k)
    if (c_[static_cast<std::size_t>(k)] != o.c_[static_cast<std::size_t>(k)]) return false;
  return true;
}

std::string Cyc::str() const {
  if (is_rational()) return c_[0].str();
  std::string s;
  for (int k = 0; k < phi_of(m_); ++k) {
    const Rat& v = c_[static_cast<std::size_t>(k)];
    if (v.is_zero()) continue;
    if (!s.empty()) s += v.sign() > 0 ? " + " : " - ";
    else if (v.sign() < 0) s += "-";
    std::string mag = v.abs().str();
    if (k == 0) s += mag;
    else {
      if (mag != "1") s += mag + "*";
      s += "z";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace jgk
