#include "jgk/lie.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace jgk {

std::size_t LieAlgebra::slot(int i, int j) const {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) -
         static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

void LieAlgebra::set_bracket(int i, int j, SVec v) {
  require(0 <= i && i < j && j < dim_, "lie: set_bracket needs i < j inside the algebra");
  tab_[slot(i, j)] = std::move(v);
}

const SVec& LieAlgebra::bracket_table(int i, int j) const { return tab_[slot(i, j)]; }

SVec LieAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return {};
  if (i < j) return tab_[slot(i, j)];
  return svec_neg(tab_[slot(j, i)]);
}

SVec LieAlgebra::bracket_vb(const SVec& x, int j) const {
  SVec acc;
  for (const auto& [t, c] : x) {
    if (t == j) continue;
    if (t < j) acc = svec_add_scaled(acc, tab_[slot(t, j)], c);
    else acc = svec_add_scaled(acc, tab_[slot(j, t)], -c);
  }
  return acc;
}

SVec LieAlgebra::bracket(const SVec& x, const SVec& y) const {
  SVec acc;
  for (const auto& [j, c] : y) acc = svec_add_scaled(acc, bracket_vb(x, j), c);
  return acc;
}

SVec LieAlgebra::jacobi_defect(int i, int j, int k) const {
  SVec acc = bracket_vb(bracket_basis(i, j), k);
  acc = svec_add(acc, bracket_vb(bracket_basis(j, k), i));
  acc = svec_add(acc, bracket_vb(bracket_basis(k, i), j));
  return acc;
}

Mat LieAlgebra::ad_basis(int i) const {
  Mat A(dim_, dim_, m_);
  for (int j = 0; j < dim_; ++j)
    for (const auto& [t, c] : bracket_basis(i, j)) A.set(t, j, c);
  return A;
}

Mat LieAlgebra::ad(const SVec& x) const {
  Mat A(dim_, dim_, m_);
  for (int j = 0; j < dim_; ++j)
    for (const auto& [t, c] : bracket_vb(x, j)) A.set(t, j, c);
  return A;
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
  if (dim_ != o.dim_ || m_ != o.m_) return false;
  for (std::size_t s = 0; s < tab_.size(); ++s)
    if (!svec_eq(tab_[s], o.tab_[s])) return false;
  return true;
}

Mat killing(const LieAlgebra& L) {
  int n = L.dim(), m = L.conductor();
  std::vector<Mat> ads;
  ads.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
  Mat gram(n, n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Cyc tr = Cyc::zero(m);
      for (int rr = 0; rr < n; ++rr)
        for (const auto& [c, v] : ads[static_cast<std::size_t>(i)].row[static_cast<std::size_t>(rr)]) {
          const Cyc* w = svec_get(ads[static_cast<std::size_t>(j)].row[static_cast<std::size_t>(c)], rr);
          if (w) tr += v * *w;
        }
      if (!tr.is_zero()) {
        gram.set(i, j, tr);
        if (i != j) gram.set(j, i, tr);
      }
    }
  }
  return gram;
}

bool is_nondegenerate(const Mat& gram) { return rank(gram) == gram.cols; }

Cyc killing_pair(const Mat& gram, const SVec& x, const SVec& y) {
  Cyc acc = Cyc::zero(gram.m);
  for (const auto& [i, a] : x) {
    Cyc partial = Cyc::zero(gram.m);
    for (const auto& [j, b] : y) {
      Cyc g = gram.get(i, j);
      if (!g.is_zero()) partial += b * g;
    }
    if (!partial.is_zero()) acc += a * partial;
  }
  return acc;
}

namespace {

Mat stacked_bracket_conditions(const LieAlgebra& L, const Subspace& S, bool modulo_S) {
  int n = L.dim();
  Mat sys(n * S.dim(), n, L.conductor());
  for (int b = 0; b < S.dim(); ++b) {
    for (int k = 0; k < n; ++k) {
      // column k of block b: [x_k, s_b] (optionally reduced mod S)
      SVec col = svec_neg(L.bracket_vb(S.basis[static_cast<std::size_t>(b)], k));
      if (modulo_S) col = S.reduce(col);
      for (const auto& [t, c] : col)
        sys.row[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(t)].emplace_back(k, c);
    }
  }
  for (auto& rw : sys.row)
    std::sort(rw.begin(), rw.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
  return sys;
}

}  // namespace

Subspace centralizer(const LieAlgebra& L, const Subspace& S) {
  return kernel(stacked_bracket_conditions(L, S, false));
}

Subspace normalizer(const LieAlgebra& L, const Subspace& S) {
  return kernel(stacked_bracket_conditions(L, S, true));
}

bool is_cartan(const LieAlgebra& L, const Subspace& H) {
  if (H.dim() == 0) return false;
  for (int a = 0; a < H.dim(); ++a)
    for (int b = a + 1; b < H.dim(); ++b)
      if (!L.bracket(H.basis[static_cast<std::size_t>(a)], H.basis[static_cast<std::size_t>(b)]).empty()) return false;
  return normalizer(L, H) == H;
}

Subspace cartan_subalgebra(const LieAlgebra& L, std::uint64_t seed, int retries) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  int n = L.dim();
  for (int attempt = 0; attempt < retries; ++attempt) {
    int terms = std::min<int>(n, 4 + 2 * attempt);
    Accum acc(n, L.conductor());
    for (int t = 0; t < terms; ++t) {
      int idx = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      long long c = rng.range(-3, 3);
      if (c == 0) c = 1;
      acc.add(idx, Cyc::rational(L.conductor(), Rat(c)));
    }
    SVec h = acc.take();
    if (h.empty()) continue;
    Subspace K = kernel(L.ad(h));
    if (K.dim() == 0 || K.dim() == n) continue;
    bool abelian = true;
    for (int a = 0; a < K.dim() && abelian; ++a)
      for (int b = a + 1; b < K.dim() && abelian; ++b)
        if (!L.bracket(K.basis[static_cast<std::size_t>(a)], K.basis[static_cast<std::size_t>(b)]).empty()) abelian = false;
    if (!abelian) continue;
    if (normalizer(L, K) == K) return K;
  }
  fail("lie: no generic semisimple element found within the retry budget");
}

LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S) {
  int d = S.dim();
  LieAlgebra sub(d, L.conductor());
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      SVec w = L.bracket(S.basis[static_cast<std::size_t>(a)], S.basis[static_cast<std::size_t>(b)]);
      require(S.contains(w), "lie: subspace is not bracket-closed");
      sub.set_bracket(a, b, svec_from_dense(S.coordinates(w)));
    }
  }
  return sub;
}

LieAlgebra from_matrix_basis(const std::vector<Mat>& basis) {
  require(!basis.empty(), "lie: empty matrix basis");
  int n = basis[0].rows, m = basis[0].m;
  int d = static_cast<int>(basis.size());
  auto flat = [&](const Mat& A) {
    SVec v;
    for (int i = 0; i < n; ++i)
      for (const auto& [j, c] : A.row[static_cast<std::size_t>(i)]) v.emplace_back(i * n + j, c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };
  RowEchelon tracked(n * n + d, m);
  for (int i = 0; i < d; ++i) {
    require(basis[static_cast<std::size_t>(i)].rows == n && basis[static_cast<std::size_t>(i)].cols == n && basis[static_cast<std::size_t>(i)].m == m,
            "lie: inconsistent matrix basis");
    SVec row = flat(basis[static_cast<std::size_t>(i)]);
    row.emplace_back(n * n + i, Cyc::one(m));
    require(tracked.add_row(std::move(row)), "lie: matrix basis is linearly dependent");
  }
  LieAlgebra L(d, m);
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      Mat C = basis[static_cast<std::size_t>(a)] * basis[static_cast<std::size_t>(b)] - basis[static_cast<std::size_t>(b)] * basis[static_cast<std::size_t>(a)];
      SVec res = tracked.reduce(flat(C));
      SVec coords;
      for (const auto& [col, c] : res) {
        require(col >= n * n, "lie: commutator escapes the matrix basis span");
        coords.emplace_back(col - n * n, -c);
      }
      L.set_bracket(a, b, std::move(coords));
    }
  }
  return L;
}

namespace {

/// Centroid constraints restricted to a Cartan H. Any centroid element T
/// maps H into H ([Th, H] = T[h, H] = 0 and H is self-centralizing) and is
/// determined on [H, L] by T|_H, so T lives in the r^2 unknowns T_ba. Every
/// harvested condition is necessary, hence the kernel of the system always
/// contains the centroid: kernel dimension 1 certifies a single ideal.
class CentroidProbe {
public:
  CentroidProbe(const LieAlgebra& L, const Subspace& H)
      : L_(L),
        H_(H),
        n_(L.dim()),
        m_(L.conductor()),
        r_(H.dim()),
        full_(2 * n_, m_),
        sys_(r_ * r_, m_) {
    gen_.assign(static_cast<std::size_t>(r_), std::vector<SVec>(static_cast<std::size_t>(n_)));
    RowEchelon probe(n_, m_);
    for (int a = 0; a < r_; ++a)
      for (int j = 0; j < n_; ++j) {
        gen_[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] = L.bracket_vb(H.basis[static_cast<std::size_t>(a)], j);
        const SVec& w = gen_[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
        if (!w.empty() && probe.add_row(w)) basis_tags_.emplace_back(a, j);
      }
    require(probe.rank() == n_ - r_,
            "centroid: [H, L] has unexpected dimension (is H a Cartan of a semisimple algebra?)");
    // tracked decomposition of L = H ⊕ [H, L]: tags 0..r-1 are the H basis,
    // tags r.. are the chosen bracket generators
    int tag = 0;
    for (int a = 0; a < r_; ++a) add_tracked(H.basis[static_cast<std::size_t>(a)], tag++);
    for (const auto& [a, j] : basis_tags_) add_tracked(gen_[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)], tag++);
    full_.finalize();
  }

  int var(int b, int a) const { return b * r_ + a; }  // coeff of u_b in T(u_a)
  int nvars() const { return r_ * r_; }

  /// T~(x) as a T-linear combination: sorted (variable, vector) pairs.
  std::vector<std::pair<int, SVec>> image(const SVec& x) const {
    SVec red = full_.reduce(x);
    std::map<int, SVec> by_var;
    for (const auto& [col, c] : red) {
      require(col >= n_, "centroid: vector escaped H + [H,L]");
      int tag = col - n_;
      Cyc coeff = -c;
      if (tag < r_) {
        for (int b = 0; b < r_; ++b)
          merge(by_var, var(b, tag), svec_scaled(H_.basis[static_cast<std::size_t>(b)], coeff));
      } else {
        auto [a, j] = basis_tags_[static_cast<std::size_t>(tag - r_)];
        for (int b = 0; b < r_; ++b)
          merge(by_var, var(b, a), svec_scaled(gen_[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)], coeff));
      }
    }
    std::vector<std::pair<int, SVec>> out;
    for (auto& [v, w] : by_var)
      if (!w.empty()) out.emplace_back(v, std::move(w));
    return out;
  }

  /// Adds the coordinatewise conditions of T~[x, e_j] = [T~x, e_j].
  bool add_constraints(const SVec& x, int j) {
    std::map<int, std::map<int, Cyc>> per_coord;  // coord -> var -> coeff
    auto put = [&](int coord, int v, const Cyc& c) {
      auto& row = per_coord[coord];
      auto it = row.find(v);
      if (it == row.end()) row.emplace(v, c);
      else it->second += c;
    };
    for (const auto& [v, w] : image(L_.bracket_vb(x, j)))
      for (const auto& [coord, c] : w) put(coord, v, c);
    for (const auto& [v, w] : image(x))
      for (const auto& [coord, c] : L_.bracket_vb(w, j)) put(coord, v, -c);
    bool progress = false;
    for (auto& [coord, terms] : per_coord) {
      SVec rowv;
      for (auto& [v, c] : terms)
        if (!c.is_zero()) rowv.emplace_back(v, c);
      if (!rowv.empty() && sys_.add_row(std::move(rowv))) progress = true;
    }
    return progress;
  }

  /// Well-definedness plus basis-pair constraints; every constraint is a
  /// necessary condition, so any prefix keeps kernel ⊇ centroid and the scan
  /// can stop once only the identity direction is left.
  void harvest(bool exhaustive) {
    for (int a = 0; a < r_; ++a)
      for (int j = 0; j < n_; ++j) {
        if (!exhaustive && sys_.rank() >= nvars() - 1) break;
        add_constraints(H_.basis[static_cast<std::size_t>(a)], j);
      }
    int stall = 0;
    for (int i = 0; i < n_; ++i) {
      if (sys_.rank() >= nvars() - 1) break;  // identity is always in the kernel
      bool progress = false;
      for (int j = 0; j < n_; ++j)
        if (add_constraints(SVec{{i, Cyc::one(m_)}}, j)) progress = true;
      if (!exhaustive) {
        stall = progress ? 0 : stall + 1;
        if (stall >= 3) break;
      }
    }
  }

  int kernel_dim() const { return nvars() - sys_.rank(); }

  std::vector<std::vector<Cyc>> kernel_basis() {
    sys_.finalize();
    std::vector<char> is_pivot(static_cast<std::size_t>(nvars()), 0);
    for (int p : sys_.pivots()) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<std::vector<Cyc>> out;
    for (int f = 0; f < nvars(); ++f) {
      if (is_pivot[static_cast<std::size_t>(f)]) continue;
      std::vector<Cyc> t(static_cast<std::size_t>(nvars()), Cyc(m_));
      t[static_cast<std::size_t>(f)] = Cyc::one(m_);
      for (std::size_t k = 0; k < sys_.rows().size(); ++k) {
        const Cyc* c = svec_get(sys_.rows()[k], f);
        if (c) t[static_cast<std::size_t>(sys_.pivots()[k])] = -*c;
      }
      out.push_back(std::move(t));
    }
    return out;
  }

  /// Materializes T~ for concrete variable values.
  Mat materialize(const std::vector<Cyc>& tvals) const {
    Mat T(n_, n_, m_);
    for (int j = 0; j < n_; ++j) {
      Accum acc(n_, m_);
      for (const auto& [v, w] : image(SVec{{j, Cyc::one(m_)}})) acc.add_scaled(w, tvals[static_cast<std::size_t>(v)]);
      for (const auto& [t, c] : acc.take()) T.set(t, j, c);
    }
    return T;
  }

private:
  static void merge(std::map<int, SVec>& by_var, int v, SVec w) {
    if (w.empty()) return;
    auto it = by_var.find(v);
    if (it == by_var.end()) by_var.emplace(v, std::move(w));
    else it->second = svec_add(it->second, w);
  }

  void add_tracked(const SVec& v, int tag) {
    SVec row = v;
    row.emplace_back(n_ + tag, Cyc::one(m_));
    require(full_.add_row(std::move(row)), "centroid: tracked basis row was dependent");
  }

  const LieAlgebra& L_;
  const Subspace& H_;
  int n_, m_, r_;
  RowEchelon full_, sys_;
  std::vector<std::vector<SVec>> gen_;
  std::vector<std::pair<int, int>> basis_tags_;
};

}  // namespace

int centroid_dimension(const LieAlgebra& L, const Subspace& H) {
  CentroidProbe probe(L, H);
  probe.harvest(false);
  int kdim = probe.kernel_dim();
  require(kdim >= 1, "centroid: identity map violated the constraints");
  return kdim;
}

namespace {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

Subspace lift_subspace(const Subspace& inner, const Subspace& outer) {
  std::vector<SVec> rows;
  for (const auto& v : inner.basis) {
    Accum acc(outer.ambient, outer.m);
    for (const auto& [k, c] : v) acc.add_scaled(outer.basis[static_cast<std::size_t>(k)], c);
    rows.push_back(acc.take());
  }
  return Subspace::from_rows(outer.ambient, outer.m, rows);
}

/// Rational roots of the minimal polynomial of a small matrix; fails loudly
/// when the spectrum is not rational (never the case for the algebras built
/// here).
std::vector<Rat> rational_spectrum(const Mat& M) {
  int r = M.rows, m = M.m;
  // powers of M flattened, first linear dependence gives the minimal polynomial
  std::vector<Mat> pow = {Mat::identity(r, m)};
  RowEchelon ech(r * r, m);
  std::vector<std::vector<Cyc>> flat;
  auto flatten = [&](const Mat& A) {
    std::vector<Cyc> v(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), Cyc(m));
    for (int i = 0; i < r; ++i)
      for (const auto& [j, c] : A.row[static_cast<std::size_t>(i)]) v[static_cast<std::size_t>(i * r + j)] = c;
    return v;
  };
  int deg = 0;
  while (true) {
    std::vector<Cyc> v = flatten(pow.back());
    flat.push_back(v);
    if (!ech.add_row(svec_from_dense(v))) break;  // dependence found
    ++deg;
    pow.push_back(pow.back() * M);
  }
  // solve sum_{t<deg} c_t M^t = M^deg
  Mat sys(r * r, deg, m);
  std::vector<Cyc> rhs(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), Cyc(m));
  for (int t = 0; t < deg; ++t)
    for (int e = 0; e < r * r; ++e)
      if (!flat[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)].is_zero()) sys.row[static_cast<std::size_t>(e)].emplace_back(t, flat[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)]);
  for (auto& rw : sys.row)
    std::sort(rw.begin(), rw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  rhs = flat[static_cast<std::size_t>(deg)];
  auto coeffs = solve(sys, rhs);
  require(coeffs.has_value(), "centroid split: minimal polynomial solve failed");
  // min poly p(X) = X^deg - sum c_t X^t with rational coefficients
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  c[static_cast<std::size_t>(deg)] = Rat(1);
  for (int t = 0; t < deg; ++t) {
    require((*coeffs)[static_cast<std::size_t>(t)].is_rational(), "centroid split: irrational minimal polynomial");
    c[static_cast<std::size_t>(t)] = -(*coeffs)[static_cast<std::size_t>(t)].rational_part();
  }
  // clear denominators to a primitive integer polynomial
  long long lcm = 1;
  for (const auto& q : c) {
    require(q.is_small(), "centroid split: minimal polynomial coefficients too large");
    lcm = std::lcm(lcm, q.small_den());
  }
  std::vector<long long> ip(c.size());
  for (std::size_t t = 0; t < c.size(); ++t) ip[t] = c[t].small_num() * (lcm / c[t].small_den());
  // rational roots p/q with p | ip[0], q | ip[deg]
  auto divisors = [](long long v) {
    std::vector<long long> d;
    v = v < 0 ? -v : v;
    if (v == 0) return d;
    require(v <= 100000000LL, "centroid split: coefficient too large for root search");
    for (long long t = 1; t * t <= v; ++t)
      if (v % t == 0) {
        d.push_back(t);
        if (t != v / t) d.push_back(v / t);
      }
    return d;
  };
  std::vector<Rat> roots;
  auto eval = [&](const Rat& x) {
    Rat acc(0);
    for (std::size_t t = c.size(); t-- > 0;) acc = acc * x + c[t];
    return acc;
  };
  if (ip[0] == 0) roots.push_back(Rat(0));
  for (long long p : divisors(ip[0] == 0 ? ip[1] : ip[0]))
    for (long long q : divisors(ip.back()))
      for (int s : {1, -1}) {
        Rat cand(s * p, q);
        if (eval(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  require(static_cast<int>(roots.size()) == deg,
          "centroid split: spectrum is not rational; cannot split this input");
  return roots;
}

void collect_ideals(const LieAlgebra& L, std::uint64_t seed, const Subspace& ambient_embedding,
                    const Subspace* hint, std::vector<Subspace>& out);

void split_component(const LieAlgebra& sub, std::uint64_t seed, const Subspace& embedding,
                     const Subspace* hint, std::vector<Subspace>& out) {
  Subspace H = hint ? *hint : cartan_subalgebra(sub, seed);
  CentroidProbe probe(sub, H);
  probe.harvest(false);
  if (probe.kernel_dim() == 1) {
    out.push_back(embedding);
    return;
  }
  probe.harvest(true);
  int kdim = probe.kernel_dim();
  if (kdim == 1) {
    out.push_back(embedding);
    return;
  }
  // find a kernel element acting non-scalarly on H and split along its spectrum
  auto basis = probe.kernel_basis();
  int r = H.dim();
  for (const auto& tvals : basis) {
    Mat onH(r, r, sub.conductor());
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) onH.set(b, a, tvals[static_cast<std::size_t>(probe.var(b, a))]);
    bool scalar = true;
    Cyc diag = onH.get(0, 0);
    for (int a = 0; a < r && scalar; ++a)
      for (int b = 0; b < r && scalar; ++b)
        if (!(onH.get(b, a) == (a == b ? diag : Cyc(sub.conductor())))) scalar = false;
    if (scalar) continue;
    Mat T = probe.materialize(tvals);
    std::vector<Rat> spectrum = rational_spectrum(onH);
    int total = 0;
    for (const Rat& c : spectrum) {
      Subspace E = kernel(T.minus_scalar(Cyc::rational(sub.conductor(), c)));
      require(E.dim() > 0, "centroid split: empty eigenspace for a spectrum value");
      total += E.dim();
      LieAlgebra piece = restrict_to(sub, E);
      collect_ideals(piece, seed, lift_subspace(E, embedding), nullptr, out);
    }
    require(total == sub.dim(), "centroid split: eigenspaces do not fill the component");
    return;
  }
  fail("simple_ideals: centroid kernel is " + std::to_string(kdim) +
       "-dimensional but no non-scalar splitting element was found");
}

void collect_ideals(const LieAlgebra& L, std::uint64_t seed, const Subspace& ambient_embedding,
                    const Subspace* hint, std::vector<Subspace>& out) {
  int n = L.dim(), m = L.conductor();
  DisjointSet ds(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const SVec& w = L.bracket_table(i, j);
      if (w.empty()) continue;
      ds.unite(i, j);
      for (const auto& [k, c] : w) ds.unite(i, k);
    }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[ds.find(i)].push_back(i);
  for (const auto& [root, members] : groups) {
    std::vector<SVec> rows;
    for (int i : members) rows.push_back({{i, Cyc::one(m)}});
    Subspace comp = Subspace::from_rows(n, m, rows);
    LieAlgebra sub = restrict_to(L, comp);
    // the hint transfers only when it sits inside this component
    const Subspace* sub_hint = nullptr;
    Subspace hint_in_sub;
    if (hint && static_cast<int>(groups.size()) == 1 && comp.dim() == n) {
      hint_in_sub = *hint;
      sub_hint = &hint_in_sub;
    }
    split_component(sub, seed, lift_subspace(comp, ambient_embedding), sub_hint, out);
  }
}

}  // namespace

std::vector<Subspace> simple_ideals(const LieAlgebra& L, std::uint64_t seed,
                                    const Subspace* cartan_hint) {
  Mat gram = killing(L);
  require(is_nondegenerate(gram), "simple_ideals: Killing form is degenerate");
  if (cartan_hint) require(is_cartan(L, *cartan_hint), "simple_ideals: supplied hint is not a Cartan");
  std::vector<Subspace> out;
  collect_ideals(L, seed, Subspace::full(L.dim(), L.conductor()), cartan_hint, out);
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    return a.pivots < b.pivots;
  });
  // certify: pairwise brackets vanish and summands are Killing-orthogonal
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      for (const auto& u : out[a].basis)
        for (const auto& v : out[b].basis) {
          require(L.bracket(u, v).empty(), "simple_ideals: summands do not commute");
          require(killing_pair(gram, u, v).is_zero(), "simple_ideals: summands not Killing-orthogonal");
        }
  return out;
}

namespace {

struct Candidate {
  std::string label;
  Rat fingerprint;  // sum over roots of kappa*(root,root)^2 / rank
};

std::vector<Candidate> candidates_for(int dim, int rank) {
  std::vector<Candidate> out;
  int n = rank;
  auto add = [&](std::string label, Rat fp) { out.push_back({std::move(label), fp}); };
  if (n >= 1 && n * (n + 2) == dim) add("A" + std::to_string(n), Rat(1, n + 1));
  if (n >= 2 && n * (2 * n + 1) == dim)
    add("B" + std::to_string(n), Rat(4 * n - 3, 2LL * (2 * n - 1) * (2 * n - 1)));
  if (n >= 3 && n * (2 * n + 1) == dim)
    add("C" + std::to_string(n), Rat(n + 3, 2LL * (n + 1) * (n + 1)));
  if (n >= 4 && n * (2 * n - 1) == dim) add("D" + std::to_string(n), Rat(1, 2 * (n - 1)));
  if (n == 2 && dim == 14) add("G2", Rat(5, 24));
  if (n == 4 && dim == 52) add("F4", Rat(5, 54));
  if (n == 6 && dim == 78) add("E6", Rat(1, 12));
  if (n == 7 && dim == 133) add("E7", Rat(1, 18));
  if (n == 8 && dim == 248) add("E8", Rat(1, 30));
  return out;
}

}  // namespace

Rat killing_norm_fingerprint(const LieAlgebra& L, const Subspace& H) {
  // S(h,h') = sum_roots kappa*(b,b) b(h) b(h') is c * kappa|_H with
  // c = sum_roots kappa*(b,b)^2 / rank, computable from traces of four-fold
  // ad products without any root-space splitting
  Mat gram = killing(L);
  int m = L.conductor(), r = H.dim();
  std::vector<Mat> ads;
  for (int a = 0; a < r; ++a) ads.push_back(L.ad(H.basis[static_cast<std::size_t>(a)]));
  std::vector<std::vector<Mat>> prod(static_cast<std::size_t>(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) prod[static_cast<std::size_t>(a)].push_back(ads[static_cast<std::size_t>(a)] * ads[static_cast<std::size_t>(b)]);
  auto trace_prod = [&](const Mat& A, const Mat& B) {
    Cyc t = Cyc::zero(m);
    for (int i = 0; i < A.rows; ++i)
      for (const auto& [k, v] : A.row[static_cast<std::size_t>(i)]) {
        const Cyc* w = svec_get(B.row[static_cast<std::size_t>(k)], i);
        if (w) t += v * *w;
      }
    return t;
  };
  Mat G(r, r, m);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) G.set(a, b, killing_pair(gram, H.basis[static_cast<std::size_t>(a)], H.basis[static_cast<std::size_t>(b)]));
  Mat Ginv(r, r, m);
  for (int col = 0; col < r; ++col) {
    std::vector<Cyc> e(static_cast<std::size_t>(r), Cyc(m));
    e[static_cast<std::size_t>(col)] = Cyc::one(m);
    auto x = solve(G, e);
    require(x.has_value(), "fingerprint: Killing form degenerate on the Cartan");
    for (int rr = 0; rr < r; ++rr)
      if (!(*x)[static_cast<std::size_t>(rr)].is_zero()) Ginv.set(rr, col, (*x)[static_cast<std::size_t>(rr)]);
  }
  Mat S(r, r, m);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Cyc s = Cyc::zero(m);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          Cyc g = Ginv.get(a, b);
          if (g.is_zero()) continue;
          s += g * trace_prod(prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
      if (!s.is_zero()) S.set(i, j, s);
    }
  Cyc c = Cyc::zero(m);
  for (int i = 0; i < r && c.is_zero(); ++i)
    for (int j = 0; j < r && c.is_zero(); ++j)
      if (!G.get(i, j).is_zero()) c = S.get(i, j) * G.get(i, j).inverse();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      require(S.get(i, j) == c * G.get(i, j),
              "fingerprint: norm form is not a multiple of the Killing form");
  require(c.is_rational(), "fingerprint: value must be rational");
  return c.rational_part();
}

TypeInfo identify_type(const LieAlgebra& L, std::uint64_t seed, const Subspace* cartan_hint) {
  Mat gram = killing(L);
  require(is_nondegenerate(gram), "identify_type: Killing form is degenerate");
  if (cartan_hint) require(is_cartan(L, *cartan_hint), "identify_type: supplied hint is not a Cartan");
  if (simple_ideals(L, seed, cartan_hint).size() > 1) return {"not simple", 0, 0};

  Subspace H = cartan_hint ? *cartan_hint : cartan_subalgebra(L, seed);
  int r = H.dim();
  TypeInfo info;
  info.rank = r;
  info.roots = L.dim() - r;

  auto cands = candidates_for(L.dim(), r);
  require(!cands.empty(), "identify_type: no simple type with dim " + std::to_string(L.dim()) +
                              " and rank " + std::to_string(r));
  if (cands.size() == 1) {
    info.label = cands[0].label;
    return info;
  }

  Rat c = killing_norm_fingerprint(L, H);
  for (const auto& cand : cands) {
    if (c == cand.fingerprint) {
      info.label = cand.label;
      return info;
    }
  }
  fail("identify_type: fingerprint " + c.str() + " matches no simple type of dim " +
       std::to_string(L.dim()) + ", rank " + std::to_string(r));
}

}  // namespace jgk
