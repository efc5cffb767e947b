#include "jgk/octonion.hpp"

#include <algorithm>

namespace jgk {

namespace {

struct CdAlgebra {
  int dim;
  std::vector<std::vector<SVec>> mul;
  std::vector<SVec> conj;
  std::vector<Rat> norm_diag;
  std::vector<int> deg;
};

CdAlgebra base_field() {
  CdAlgebra a;
  a.dim = 1;
  a.mul = {{SVec{{0, Cyc::one(1)}}}};
  a.conj = {SVec{{0, Cyc::one(1)}}};
  a.norm_diag = {Rat(1)};
  a.deg = {0};
  return a;
}

SVec table_mul(const std::vector<std::vector<SVec>>& mul, const SVec& x, const SVec& y) {
  SVec acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) acc = svec_add_scaled(acc, mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], a * b);
  return acc;
}

SVec apply_conj(const std::vector<SVec>& conj, const SVec& x) {
  SVec acc;
  for (const auto& [i, a] : x) acc = svec_add_scaled(acc, conj[static_cast<std::size_t>(i)], a);
  return acc;
}

SVec shift(const SVec& v, int off) {
  SVec r;
  for (const auto& [i, c] : v) r.emplace_back(i + off, c);
  return r;
}

CdAlgebra double_algebra(const CdAlgebra& A, const Rat& mu, int level) {
  // (a,b)(c,d) = (ac + mu conj(d) b, d a + b conj(c)), conj(a,b) = (conj a, -b)
  CdAlgebra B;
  int d = A.dim;
  B.dim = 2 * d;
  B.mul.assign(static_cast<std::size_t>(B.dim), std::vector<SVec>(static_cast<std::size_t>(B.dim)));
  Cyc cmu = Cyc::rational(1, mu);
  for (int i = 0; i < d; ++i) {
    SVec ei{{i, Cyc::one(1)}};
    for (int j = 0; j < d; ++j) {
      SVec ej{{j, Cyc::one(1)}};
      B.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = A.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      B.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + j)] = shift(table_mul(A.mul, ej, ei), d);
      B.mul[static_cast<std::size_t>(d + i)][static_cast<std::size_t>(j)] = shift(table_mul(A.mul, ei, apply_conj(A.conj, ej)), d);
      B.mul[static_cast<std::size_t>(d + i)][static_cast<std::size_t>(d + j)] =
          svec_scaled(table_mul(A.mul, apply_conj(A.conj, ej), ei), cmu);
    }
  }
  B.conj.resize(static_cast<std::size_t>(B.dim));
  for (int i = 0; i < d; ++i) {
    B.conj[static_cast<std::size_t>(i)] = A.conj[static_cast<std::size_t>(i)];
    B.conj[static_cast<std::size_t>(d + i)] = shift(svec_neg(SVec{{i, Cyc::one(1)}}), d);
  }
  B.norm_diag.resize(static_cast<std::size_t>(B.dim));
  for (int i = 0; i < d; ++i) {
    B.norm_diag[static_cast<std::size_t>(i)] = A.norm_diag[static_cast<std::size_t>(i)];
    B.norm_diag[static_cast<std::size_t>(d + i)] = -(mu * A.norm_diag[static_cast<std::size_t>(i)]);
  }
  B.deg.resize(static_cast<std::size_t>(B.dim));
  for (int i = 0; i < d; ++i) {
    B.deg[static_cast<std::size_t>(i)] = A.deg[static_cast<std::size_t>(i)];
    B.deg[static_cast<std::size_t>(d + i)] = A.deg[static_cast<std::size_t>(i)] | (1 << level);
  }
  return B;
}

}  // namespace

OctonionAlgebra cayley_dickson(const std::vector<Rat>& params) {
  CdAlgebra a = base_field();
  int level = 0;
  for (const Rat& mu : params) {
    require(!mu.is_zero(), "cayley-dickson: zero doubling parameter");
    a = double_algebra(a, mu, level++);
  }
  OctonionAlgebra out;
  out.dim = a.dim;
  out.mul = std::move(a.mul);
  out.norm_diag = std::move(a.norm_diag);
  out.deg = std::move(a.deg);
  return out;
}

OctonionAlgebra octonion_algebra() { return cayley_dickson({Rat(-1), Rat(-1), Rat(-1)}); }

std::vector<std::vector<SVec>> OctonionAlgebra::subalgebra_table(int d) const {
  require(d >= 1 && d <= dim, "octonion: bad subalgebra dimension");
  std::vector<std::vector<SVec>> out(static_cast<std::size_t>(d), std::vector<SVec>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      for (const auto& [k, c] : mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        require(k < d, "octonion: first basis vectors do not span a subalgebra here");
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  return out;
}

OperatorAlgebra derivation_algebra(const std::vector<std::vector<SVec>>& mul) {
  int d = static_cast<int>(mul.size());
  auto var = [&](int r, int c) { return r * d + c; };  // D(e_c) = sum_r D_rc e_r
  Mat sys(d * d * d, d * d, 1);
  std::size_t rowi = 0;
  Accum acc(d * d, 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      // coordinate k of D(e_i e_j) - D(e_i) e_j - e_i D(e_j)
      for (int k = 0; k < d; ++k) {
        for (const auto& [t, c] : mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) acc.add(var(k, t), c);
        for (int r = 0; r < d; ++r) {
          const Cyc* c1 = svec_get(mul[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)], k);
          if (c1) acc.add(var(r, i), -*c1);
          const Cyc* c2 = svec_get(mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)], k);
          if (c2) acc.add(var(r, j), -*c2);
        }
        sys.row[rowi++] = acc.take();
      }
    }
  }
  Subspace K = kernel(sys);
  OperatorAlgebra out;
  for (const auto& v : K.basis) {
    Mat D(d, d, 1);
    for (const auto& [idx, c] : v) D.set(idx / d, idx % d, c);
    out.ops.push_back(std::move(D));
  }
  out.L = out.ops.empty() ? LieAlgebra(0, 1) : from_matrix_basis(out.ops);
  return out;
}

OperatorAlgebra skew_algebra_of_form(const std::vector<Rat>& norm_diag) {
  int d = static_cast<int>(norm_diag.size());
  for (const Rat& n : norm_diag) require(!n.is_zero(), "skew: degenerate norm");
  auto var = [&](int r, int c) { return r * d + c; };
  // polar(D x, y) + polar(x, D y) = 0  <=>  2 n_r D_rc + 2 n_c D_cr = 0
  Mat sys(d * (d + 1) / 2, d * d, 1);
  std::size_t rowi = 0;
  for (int r = 0; r < d; ++r)
    for (int c = r; c < d; ++c) {
      SVec rw;
      if (r == c) {
        rw.emplace_back(var(r, r), Cyc::rational(1, Rat(4) * norm_diag[static_cast<std::size_t>(r)]));
      } else {
        rw.emplace_back(var(r, c), Cyc::rational(1, Rat(2) * norm_diag[static_cast<std::size_t>(r)]));
        rw.emplace_back(var(c, r), Cyc::rational(1, Rat(2) * norm_diag[static_cast<std::size_t>(c)]));
        std::sort(rw.begin(), rw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      }
      sys.row[rowi++] = std::move(rw);
    }
  Subspace K = kernel(sys);
  OperatorAlgebra out;
  for (const auto& v : K.basis) {
    Mat D(d, d, 1);
    for (const auto& [idx, c] : v) D.set(idx / d, idx % d, c);
    out.ops.push_back(std::move(D));
  }
  out.L = out.ops.empty() ? LieAlgebra(0, 1) : from_matrix_basis(out.ops);
  return out;
}

OperatorAlgebra skew_algebra(const OctonionAlgebra& A) { return skew_algebra_of_form(A.norm_diag); }

namespace {

std::vector<int> alpha_tuple(int alpha, int bits) {
  std::vector<int> t(static_cast<std::size_t>(bits));
  for (int s = 0; s < bits; ++s) t[static_cast<std::size_t>(s)] = (alpha >> s) & 1;
  return t;
}

}  // namespace

std::map<std::vector<int>, Subspace> induced_grading_on_maps(const OperatorAlgebra& A,
                                                             const std::vector<int>& base_deg,
                                                             int bits) {
  int nops = static_cast<int>(A.ops.size());
  require(nops > 0, "induced grading: empty operator algebra");
  int d = A.ops[0].rows;
  require(static_cast<int>(base_deg.size()) == d, "induced grading: degree map length mismatch");
  std::map<std::vector<int>, Subspace> out;
  int total = 0;
  for (int alpha = 0; alpha < (1 << bits); ++alpha) {
    // coefficients y with sum_a y_a (D_a)[r][c] = 0 whenever deg r != alpha ^ deg c
    Mat sys(d * d, nops, 1);
    for (int a = 0; a < nops; ++a) {
      for (int r = 0; r < d; ++r)
        for (const auto& [c, v] : A.ops[static_cast<std::size_t>(a)].row[static_cast<std::size_t>(r)])
          if (base_deg[static_cast<std::size_t>(r)] != (alpha ^ base_deg[static_cast<std::size_t>(c)]))
            sys.row[static_cast<std::size_t>(r * d + c)].emplace_back(a, v);
    }
    for (auto& rw : sys.row)
      std::sort(rw.begin(), rw.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Subspace comp = kernel(sys);
    total += comp.dim();
    out.emplace(alpha_tuple(alpha, bits), std::move(comp));
  }
  require(total == nops,
          "induced grading: components do not sum to the whole algebra (non-homogeneous basis)");
  return out;
}

std::vector<Mat> grading_character_autos(const OperatorAlgebra& A, const std::vector<int>& base_deg,
                                         int bits) {
  int nops = static_cast<int>(A.ops.size());
  require(nops > 0, "grading characters: empty operator algebra");
  int d = A.ops[0].rows;
  // tracked basis for re-expressing conjugated operators
  RowEchelon tracked(d * d + nops, 1);
  auto flat = [&](const Mat& M) {
    SVec v;
    for (int i = 0; i < d; ++i)
      for (const auto& [j, c] : M.row[static_cast<std::size_t>(i)]) v.emplace_back(i * d + j, c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };
  for (int a = 0; a < nops; ++a) {
    SVec row = flat(A.ops[static_cast<std::size_t>(a)]);
    row.emplace_back(d * d + a, Cyc::one(1));
    require(tracked.add_row(std::move(row)), "grading characters: dependent operator basis");
  }
  std::vector<Mat> out;
  for (int s = 0; s < bits; ++s) {
    Mat theta(nops, nops, 1);
    for (int a = 0; a < nops; ++a) {
      // u D u with u = diag((-1)^{bit s of deg})
      Mat C = A.ops[static_cast<std::size_t>(a)];
      for (int r = 0; r < d; ++r) {
        int sr = (base_deg[static_cast<std::size_t>(r)] >> s) & 1;
        for (auto& [c, v] : C.row[static_cast<std::size_t>(r)]) {
          int sc = (base_deg[static_cast<std::size_t>(c)] >> s) & 1;
          if (sr != sc) v = -v;
        }
      }
      SVec res = tracked.reduce(flat(C));
      for (const auto& [col, c] : res) {
        require(col >= d * d, "grading characters: conjugate escaped the operator span");
        theta.set(col - d * d, a, -c);
      }
    }
    out.push_back(std::move(theta));
  }
  return out;
}

}  // namespace jgk
