#include "jgk/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace jgk {

SVec svec_from_dense(const std::vector<Cyc>& v) {
  SVec r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace_back(static_cast<int>(i), v[i]);
  return r;
}

std::vector<Cyc> svec_to_dense(const SVec& v, int n, int m) {
  std::vector<Cyc> d(static_cast<std::size_t>(n), Cyc(m));
  for (const auto& [i, c] : v) d[static_cast<std::size_t>(i)] = c;
  return d;
}

const Cyc* svec_get(const SVec& v, int idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& e, int i) { return e.first < i; });
  if (it != v.end() && it->first == idx) return &it->second;
  return nullptr;
}

SVec svec_scaled(const SVec& v, const Cyc& f) {
  SVec r;
  if (f.is_zero()) return r;
  r.reserve(v.size());
  for (const auto& [i, c] : v) {
    Cyc p = c * f;
    if (!p.is_zero()) r.emplace_back(i, p);
  }
  return r;
}

SVec svec_neg(const SVec& v) {
  SVec r;
  r.reserve(v.size());
  for (const auto& [i, c] : v) r.emplace_back(i, -c);
  return r;
}

SVec svec_add(const SVec& a, const SVec& b) {
  SVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
    else if (i >= a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
    else {
      Cyc s = a[i].second + b[j].second;
      if (!s.is_zero()) r.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

SVec svec_add_scaled(const SVec& a, const SVec& b, const Cyc& f) {
  if (f.is_zero()) return a;
  SVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
    else if (i >= a.size() || b[j].first < a[i].first) {
      Cyc s = b[j].second * f;
      if (!s.is_zero()) r.emplace_back(b[j].first, s);
      ++j;
    } else {
      Cyc s = a[i].second + b[j].second * f;
      if (!s.is_zero()) r.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

bool svec_eq(const SVec& a, const SVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
  return true;
}

SVec svec_primitive(SVec v) {
  if (v.empty()) return v;
  int m = v.front().second.conductor();
  bool all_small = true;
  for (const auto& [i, c] : v)
    for (int k = 0; k < phi_of(m) && all_small; ++k)
      if (!c.coeff(k).is_small()) all_small = false;

  Rat scale;
  if (all_small) {
    long long g = 0;
    __int128 l = 1;
    bool overflow = false;
    for (const auto& [i, c] : v) {
      for (int k = 0; k < phi_of(m); ++k) {
        const Rat& r = c.coeff(k);
        if (r.is_zero()) continue;
        g = std::gcd(g, r.small_num() < 0 ? -r.small_num() : r.small_num());
        long long d = r.small_den();
        __int128 gd = std::gcd(static_cast<long long>(l % d), d);
        l = l / (gd == 0 ? 1 : gd) * d;
        if (l > (static_cast<__int128>(1) << 62)) {
          overflow = true;
          break;
        }
      }
      if (overflow) break;
    }
    if (!overflow && g > 0) scale = Rat(static_cast<long long>(l), g);
    else all_small = false;
  }
  if (!all_small) {
    // arbitrary-precision content computation
    mpz_class g = 0, l = 1;
    for (const auto& [i, c] : v) {
      for (int k = 0; k < phi_of(m); ++k) {
        const Rat& r = c.coeff(k);
        if (r.is_zero()) continue;
        if (const mpq_class* q = r.big_value()) {
          mpz_class num = abs(q->get_num());
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
          mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den().get_mpz_t());
        } else {
          mpz_class num(static_cast<long>(r.small_num() < 0 ? -r.small_num() : r.small_num()));
          mpz_class den(static_cast<long>(r.small_den()));
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
          mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
      }
    }
    scale = Rat::from_decimal_strings(l.get_str(), g.get_str());
  }
  if (scale.is_one()) return v;
  for (auto& [i, c] : v) c = c.scaled(scale);
  return v;
}

void Accum::add(int idx, const Cyc& c) {
  if (c.is_zero()) return;
  auto u = static_cast<std::size_t>(idx);
  if (!used_[u]) {
    used_[u] = 1;
    touched_.push_back(idx);
    val_[u] = c;
  } else {
    val_[u] += c;
  }
}

void Accum::add_scaled(const SVec& v, const Cyc& f) {
  if (f.is_zero()) return;
  for (const auto& [i, c] : v) add(i, c * f);
}

SVec Accum::take() {
  std::sort(touched_.begin(), touched_.end());
  SVec r;
  r.reserve(touched_.size());
  for (int i : touched_) {
    auto u = static_cast<std::size_t>(i);
    if (!val_[u].is_zero()) r.emplace_back(i, val_[u]);
    val_[u] = Cyc(m_);
    used_[u] = 0;
  }
  touched_.clear();
  return r;
}

Mat Mat::identity(int n, int cond) {
  Mat r(n, n, cond);
  for (int i = 0; i < n; ++i) r.row[static_cast<std::size_t>(i)].emplace_back(i, Cyc::one(cond));
  return r;
}

Mat Mat::from_dense(const std::vector<std::vector<Cyc>>& d, int cond) {
  Mat r(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()), cond);
  for (std::size_t i = 0; i < d.size(); ++i) r.row[i] = svec_from_dense(d[i]);
  return r;
}

void Mat::set(int i, int j, const Cyc& v) {
  auto& rw = row[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(rw.begin(), rw.end(), j,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != rw.end() && it->first == j) {
    if (v.is_zero()) rw.erase(it);
    else it->second = v;
  } else if (!v.is_zero()) {
    rw.insert(it, {j, v});
  }
}

Cyc Mat::get(int i, int j) const {
  const Cyc* p = svec_get(row[static_cast<std::size_t>(i)], j);
  return p ? *p : Cyc(m);
}

Mat Mat::operator*(const Mat& o) const {
  require(cols == o.rows && m == o.m, "matrix: shape/conductor mismatch in product");
  Mat r(rows, o.cols, m);
  Accum acc(o.cols, m);
  for (int i = 0; i < rows; ++i) {
    for (const auto& [k, a] : row[static_cast<std::size_t>(i)])
      acc.add_scaled(o.row[static_cast<std::size_t>(k)], a);
    r.row[static_cast<std::size_t>(i)] = acc.take();
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  require(rows == o.rows && cols == o.cols && m == o.m, "matrix: shape mismatch in sum");
  Mat r(rows, cols, m);
  for (int i = 0; i < rows; ++i)
    r.row[static_cast<std::size_t>(i)] = svec_add(row[static_cast<std::size_t>(i)], o.row[static_cast<std::size_t>(i)]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require(rows == o.rows && cols == o.cols && m == o.m, "matrix: shape mismatch in difference");
  Mat r(rows, cols, m);
  for (int i = 0; i < rows; ++i)
    r.row[static_cast<std::size_t>(i)] = svec_add_scaled(row[static_cast<std::size_t>(i)], o.row[static_cast<std::size_t>(i)], -Cyc::one(m));
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows != o.rows || cols != o.cols || m != o.m) return false;
  for (int i = 0; i < rows; ++i)
    if (!svec_eq(row[static_cast<std::size_t>(i)], o.row[static_cast<std::size_t>(i)])) return false;
  return true;
}

std::vector<Cyc> Mat::apply_dense(const std::vector<Cyc>& v) const {
  require(static_cast<int>(v.size()) == cols, "matrix: vector length mismatch");
  std::vector<Cyc> r(static_cast<std::size_t>(rows), Cyc(m));
  for (int i = 0; i < rows; ++i)
    for (const auto& [j, a] : row[static_cast<std::size_t>(i)])
      r[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(j)];
  return r;
}

SVec Mat::apply(const SVec& v) const {
  std::vector<Cyc> d = svec_to_dense(v, cols, m);
  return svec_from_dense(apply_dense(d));
}

Mat Mat::minus_scalar(const Cyc& lambda) const {
  require(rows == cols, "matrix: minus_scalar needs a square matrix");
  Mat r = *this;
  for (int i = 0; i < rows; ++i) r.set(i, i, get(i, i) - lambda);
  return r;
}

Mat Mat::pow(long long e) const {
  require(rows == cols, "matrix: pow needs a square matrix");
  require(e >= 0, "matrix: negative power");
  Mat result = identity(rows, m);
  Mat base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = (e >>= 1) > 0 ? base * base : base;
  }
  return result;
}

Mat Mat::transpose() const {
  Mat r(cols, rows, m);
  for (int i = 0; i < rows; ++i)
    for (const auto& [j, a] : row[static_cast<std::size_t>(i)]) r.row[static_cast<std::size_t>(j)].emplace_back(i, a);
  return r;
}

bool Mat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i) {
    const auto& rw = row[static_cast<std::size_t>(i)];
    if (rw.size() != 1 || rw[0].first != i || !(rw[0].second == Cyc::one(m))) return false;
  }
  return true;
}

bool Mat::is_zero() const {
  for (const auto& rw : row)
    if (!rw.empty()) return false;
  return true;
}

bool Mat::commutes_with(const Mat& o) const { return (*this * o) == (o * *this); }

bool RowEchelon::add_row(SVec r) {
  // the stored rows always form the unit-pivot reduced echelon form, which
  // keeps intermediate entries minor-ratio bounded
  for (std::size_t k = 0; k < rows_.size() && !r.empty(); ++k) {
    const Cyc* v = svec_get(r, pivots_[k]);
    if (v) r = svec_add_scaled(r, rows_[k], -*v);
  }
  if (r.empty()) return false;
  Cyc inv = r.front().second.inverse();
  if (!(inv == Cyc::one(m_))) r = svec_scaled(r, inv);
  int piv = r.front().first;
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(r));
  const SVec& nr = rows_[idx];
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (k == idx) continue;
    const Cyc* v = svec_get(rows_[k], piv);
    if (v) rows_[k] = svec_add_scaled(rows_[k], nr, -*v);
  }
  return true;
}

void RowEchelon::finalize() { finalized_ = true; }

SVec RowEchelon::reduce(const SVec& v) const {
  SVec r = v;
  for (std::size_t k = 0; k < rows_.size() && !r.empty(); ++k) {
    const Cyc* c = svec_get(r, pivots_[k]);
    if (c) r = svec_add_scaled(r, rows_[k], -*c);
  }
  return r;
}

Subspace Subspace::zero(int ambient, int cond) {
  Subspace s;
  s.ambient = ambient;
  s.m = cond;
  return s;
}

Subspace Subspace::full(int ambient, int cond) {
  std::vector<SVec> rows;
  for (int i = 0; i < ambient; ++i) rows.push_back({{i, Cyc::one(cond)}});
  return from_rows(ambient, cond, rows);
}

Subspace Subspace::from_rows(int ambient, int cond, const std::vector<SVec>& rows) {
  RowEchelon ech(ambient, cond);
  for (const auto& r : rows) ech.add_row(r);
  ech.finalize();
  Subspace s;
  s.ambient = ambient;
  s.m = cond;
  s.basis = ech.rows();
  s.pivots = ech.pivots();
  return s;
}

bool Subspace::contains(const SVec& v) const { return reduce(v).empty(); }

SVec Subspace::reduce(const SVec& v) const {
  SVec r = v;
  for (std::size_t k = 0; k < basis.size() && !r.empty(); ++k) {
    const Cyc* c = svec_get(r, pivots[k]);
    if (c) r = svec_add_scaled(r, basis[k], -*c);
  }
  return r;
}

std::vector<Cyc> Subspace::coordinates(const SVec& v) const {
  require(contains(v), "subspace: vector outside the span");
  std::vector<Cyc> coords(basis.size(), Cyc(m));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Cyc* c = svec_get(v, pivots[k]);
    if (c) coords[k] = *c;
  }
  return coords;
}

bool Subspace::operator==(const Subspace& o) const {
  if (ambient != o.ambient || m != o.m || basis.size() != o.basis.size()) return false;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!svec_eq(basis[k], o.basis[k])) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& o) const {
  require(ambient == o.ambient && m == o.m, "subspace: ambient mismatch in intersection");
  // Zassenhaus: echelonize rows [u | u] for u in this, [v | 0] for v in o;
  // rows with vanishing left half carry the intersection in the right half.
  RowEchelon ech(2 * ambient, m);
  for (const auto& u : basis) {
    SVec r = u;
    for (const auto& [i, c] : u) r.emplace_back(i + ambient, c);
    ech.add_row(r);
  }
  for (const auto& v : o.basis) ech.add_row(v);
  ech.finalize();
  std::vector<SVec> inter;
  for (std::size_t k = 0; k < ech.rows().size(); ++k) {
    if (ech.pivots()[k] < ambient) continue;
    SVec shifted;
    for (const auto& [i, c] : ech.rows()[k]) shifted.emplace_back(i - ambient, c);
    inter.push_back(std::move(shifted));
  }
  return from_rows(ambient, m, inter);
}

namespace {

/// Batch sparse elimination with one-step fraction-free (Bareiss) division:
/// rows are combined as (piv * r - prow * r_lead) / prev_piv, which keeps the
/// working entries minor-bounded instead of growing exponentially. The final
/// back-substitution divides by the pivots to reach the unit-pivot reduced
/// echelon form.
struct BatchRref {
  int cols, m;
  std::vector<SVec> done;    // pivot rows in pivot order
  std::vector<int> pivots;

  BatchRref(int cols_, int cond, std::vector<SVec> rows) : cols(cols_), m(cond) {
    std::vector<std::vector<SVec>> by_lead(static_cast<std::size_t>(cols_));
    for (auto& r : rows) {
      if (r.empty()) continue;
      int lead = r.front().first;
      by_lead[static_cast<std::size_t>(lead)].push_back(svec_primitive(std::move(r)));
    }
    Cyc prev = Cyc::one(m);
    for (int c = 0; c < cols; ++c) {
      auto& bucket = by_lead[static_cast<std::size_t>(c)];
      if (bucket.empty()) continue;
      std::size_t best = 0;
      for (std::size_t k = 1; k < bucket.size(); ++k)
        if (bucket[k].size() < bucket[best].size()) best = k;
      SVec prow = std::move(bucket[best]);
      bucket.erase(bucket.begin() + static_cast<std::ptrdiff_t>(best));
      Cyc piv = prow.front().second;
      Cyc prev_inv = prev.inverse();
      for (auto& r : bucket) {
        Cyc rl = r.front().second;
        SVec combined = svec_add_scaled(svec_scaled(r, piv), prow, -rl);
        if (!(prev_inv == Cyc::one(m))) combined = svec_scaled(combined, prev_inv);
        if (combined.empty()) continue;
        combined = svec_primitive(std::move(combined));
        by_lead[static_cast<std::size_t>(combined.front().first)].push_back(std::move(combined));
      }
      bucket.clear();
      pivots.push_back(c);
      done.push_back(std::move(prow));
      prev = piv;
    }
    // back-substitution to the canonical reduced form
    for (std::size_t k = done.size(); k-- > 0;) {
      Cyc inv = done[k].front().second.inverse();
      if (!(inv == Cyc::one(m))) done[k] = svec_scaled(done[k], inv);
      for (std::size_t j = 0; j < k; ++j) {
        const Cyc* v = svec_get(done[j], pivots[k]);
        if (v) done[j] = svec_add_scaled(done[j], done[k], -*v);
      }
    }
  }

  int rank() const { return static_cast<int>(pivots.size()); }
};

}  // namespace

Subspace kernel(const Mat& M) {
  BatchRref ech(M.cols, M.m, M.row);
  std::vector<char> is_pivot(static_cast<std::size_t>(M.cols), 0);
  for (int p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<SVec> basis;
  for (int f = 0; f < M.cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    SVec v;
    v.emplace_back(f, Cyc::one(M.m));
    for (std::size_t k = 0; k < ech.done.size(); ++k) {
      const Cyc* c = svec_get(ech.done[k], f);
      if (c) v.emplace_back(ech.pivots[k], -*c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return Subspace::from_rows(M.cols, M.m, basis);
}

int rank(const Mat& M) {
  BatchRref ech(M.cols, M.m, M.row);
  return ech.rank();
}

std::optional<std::vector<Cyc>> solve(const Mat& A, const std::vector<Cyc>& b) {
  require(static_cast<int>(b.size()) == A.rows, "solve: right-hand side length mismatch");
  std::vector<SVec> rows;
  rows.reserve(static_cast<std::size_t>(A.rows));
  for (int i = 0; i < A.rows; ++i) {
    SVec r = A.row[static_cast<std::size_t>(i)];
    if (!b[static_cast<std::size_t>(i)].is_zero()) r.emplace_back(A.cols, b[static_cast<std::size_t>(i)]);
    rows.push_back(std::move(r));
  }
  BatchRref ech(A.cols + 1, A.m, std::move(rows));
  std::vector<Cyc> x(static_cast<std::size_t>(A.cols), Cyc(A.m));
  for (std::size_t k = 0; k < ech.done.size(); ++k) {
    if (ech.pivots[k] == A.cols) return std::nullopt;  // 0 = nonzero
    const Cyc* v = svec_get(ech.done[k], A.cols);
    if (v) x[static_cast<std::size_t>(ech.pivots[k])] = *v;
  }
  return x;
}

Subspace eigenspace(const Mat& M, const Cyc& lambda) { return kernel(M.minus_scalar(lambda)); }

std::map<std::vector<int>, Subspace> simultaneous_eigenspaces(const std::vector<Mat>& ops,
                                                              int p, const Cyc& zeta) {
  require(!ops.empty(), "simultaneous_eigenspaces: no operators");
  int n = ops[0].rows, m = ops[0].m;
  for (const auto& M : ops) {
    require(M.rows == n && M.cols == n && M.m == m, "simultaneous_eigenspaces: shape mismatch");
    require(M.pow(p).is_identity(), "simultaneous_eigenspaces: operator order does not divide p");
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      require(ops[i].commutes_with(ops[j]), "simultaneous_eigenspaces: operators do not commute");

  std::vector<Cyc> zpow(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) zpow[static_cast<std::size_t>(k)] = k == 0 ? Cyc::one(m) : zpow[static_cast<std::size_t>(k - 1)] * zeta;
  require((zpow[static_cast<std::size_t>(p - 1)] * zeta) == Cyc::one(m),
          "simultaneous_eigenspaces: zeta is not a p-th root of unity");

  std::size_t r = ops.size();
  std::map<std::vector<int>, Subspace> out;
  std::vector<int> tuple(r, 0);
  int total = 0;
  while (true) {
    Mat stacked(n * static_cast<int>(r), n, m);
    for (std::size_t i = 0; i < r; ++i) {
      Mat shifted = ops[i].minus_scalar(zpow[static_cast<std::size_t>(tuple[i])]);
      for (int q = 0; q < n; ++q) stacked.row[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(q)] = std::move(shifted.row[static_cast<std::size_t>(q)]);
    }
    Subspace comp = kernel(stacked);
    if (comp.dim() > 0) {
      total += comp.dim();
      out.emplace(tuple, std::move(comp));
    }
    std::size_t d = 0;
    while (d < r && ++tuple[d] == p) tuple[d++] = 0;
    if (d == r) break;
  }
  require(total == n, "simultaneous_eigenspaces: component dimensions do not sum to the ambient dimension");
  return out;
}

}  // namespace jgk
