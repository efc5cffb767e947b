#include "doctest.h"

#include "jgk/exterior.hpp"
#include "jgk/util.hpp"

using namespace jgk;

namespace {

Dense zero_dense(int n, int m) {
  return Dense(static_cast<std::size_t>(n), std::vector<Cyc>(static_cast<std::size_t>(n), Cyc(m)));
}

Dense random_sl(Rng& rng, int n, int m) {
  Dense a = zero_dense(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Cyc::rational(m, Rat(rng.range(-3, 3)));
  // trace-free diagonal
  Rat acc(0);
  for (int i = 0; i + 1 < n; ++i) {
    Rat d(rng.range(-3, 3));
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Cyc::rational(m, d);
    acc += d;
  }
  a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)] = Cyc::rational(m, -acc);
  return a;
}

Dense mat_mul(const Dense& a, const Dense& b, int m) {
  int n = static_cast<int>(a.size());
  Dense r = zero_dense(n, m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }
  return r;
}

/// Wedge product of basis monomials as a sparse vector in the target wedge
/// basis; target index -1 encodes the scalar line.
SVec product_vec(int n, const WedgeBasis& target, unsigned I, unsigned J, int m) {
  WedgeTerm t = wedge_product(n, I, J);
  SVec r;
  if (t.sign == 0) return r;
  int idx = target.k == 0 ? 0 : target.index_of[t.mask];
  r.emplace_back(idx, Cyc::rational(m, Rat(t.sign)));
  return r;
}

}  // namespace

TEST_CASE("wedge basis bookkeeping") {
  CHECK(binom(5, 2) == 10);
  WedgeBasis wb(5, 2);
  CHECK(wb.dim == 10);
  CHECK(wb.mask[0] == 0b00011u);   // {0,1} first in lex order
  CHECK(wb.mask[1] == 0b00101u);   // {0,2}
  CHECK(wb.mask[9] == 0b11000u);   // {3,4} last
  CHECK(merge_sign(0b001u, 0b010u) == 1);
  CHECK(merge_sign(0b010u, 0b001u) == -1);
  CHECK(merge_sign(0b001u, 0b001u) == 0);
}

TEST_CASE("wedge products: plain, scalar pairing, overflow") {
  // e0∧e1 . e2∧e3∧e4 = vol
  WedgeTerm s = wedge_product(5, 0b00011u, 0b11100u);
  CHECK(s.sign == 1);
  CHECK(s.mask == 0u);
  // overlap kills the plain product
  CHECK(wedge_product(5, 0b00011u, 0b00110u).sign == 0);
  // n=3 overflow: union must be everything
  CHECK(wedge_product(3, 0b011u, 0b011u).sign == 0);
  WedgeTerm o = wedge_product(3, 0b011u, 0b110u);
  CHECK(o.sign != 0);
  CHECK(o.mask == 0b010u);  // intersection {1}
}

TEST_CASE("wedge product maps are sl-equivariant for every shape in use") {
  Rng rng(41);
  for (auto [n, m] : {std::pair{5, 1}, std::pair{3, 1}}) {
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        int t = (a + b) % n;
        if (a + b != n && t == 0) continue;
        WedgeBasis wa(n, a), wbb(n, b);
        WedgeBasis wt(n, a + b < n ? a + b : a + b - n);
        Dense g = random_sl(rng, n, m);
        Mat da = wedge_derivation(g, wa, m);
        Mat db = wedge_derivation(g, wbb, m);
        Mat dt = wedge_derivation(g, wt, m);
        for (int i = 0; i < wa.dim; ++i) {
          for (int j = 0; j < wbb.dim; ++j) {
            unsigned I = wa.mask[static_cast<std::size_t>(i)], J = wbb.mask[static_cast<std::size_t>(j)];
            // g . B(x,y)
            SVec lhs = dt.apply(product_vec(n, wt, I, J, m));
            // B(g x, y) + B(x, g y)
            Accum acc(wt.dim == 0 ? 1 : wt.dim, m);
            for (int r = 0; r < wa.dim; ++r) {
              Cyc c = da.get(r, i);
              if (c.is_zero()) continue;
              acc.add_scaled(product_vec(n, wt, wa.mask[static_cast<std::size_t>(r)], J, m), c);
            }
            for (int r = 0; r < wbb.dim; ++r) {
              Cyc c = db.get(r, j);
              if (c.is_zero()) continue;
              acc.add_scaled(product_vec(n, wt, I, wbb.mask[static_cast<std::size_t>(r)], m), c);
            }
            SVec rhs = acc.take();
            if (a + b == n) {
              // scalar target: the pairing is invariant, so rhs must vanish
              CHECK(rhs.empty());
            } else {
              CHECK(svec_eq(lhs, rhs));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("gl contraction is equivariant under the commutator action") {
  Rng rng(43);
  for (auto [n, m] : {std::pair{5, 1}, std::pair{3, 1}}) {
    for (int a = 1; a < n; ++a) {
      WedgeBasis wa(n, a), wj(n, n - a);
      Dense g = random_sl(rng, n, m);
      Mat da = wedge_derivation(g, wa, m);
      Mat dj = wedge_derivation(g, wj, m);
      for (int i = 0; i < wa.dim; ++i) {
        for (int j = 0; j < wj.dim; ++j) {
          unsigned I = wa.mask[static_cast<std::size_t>(i)], J = wj.mask[static_cast<std::size_t>(j)];
          Dense P = gl_contraction(n, I, J, m);
          Dense lhs = mat_mul(g, P, m);  // [g, P(x,y)]
          Dense PR = mat_mul(P, g, m);
          for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) lhs[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= PR[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
          Dense rhs = zero_dense(n, m);
          for (int r = 0; r < wa.dim; ++r) {
            Cyc c = da.get(r, i);
            if (c.is_zero()) continue;
            Dense Q = gl_contraction(n, wa.mask[static_cast<std::size_t>(r)], J, m);
            for (int x = 0; x < n; ++x)
              for (int y = 0; y < n; ++y) rhs[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += Q[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] * c;
          }
          for (int r = 0; r < wj.dim; ++r) {
            Cyc c = dj.get(r, j);
            if (c.is_zero()) continue;
            Dense Q = gl_contraction(n, I, wj.mask[static_cast<std::size_t>(r)], m);
            for (int x = 0; x < n; ++x)
              for (int y = 0; y < n; ++y) rhs[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += Q[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] * c;
          }
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              CHECK(lhs[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == rhs[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
        }
      }
    }
  }
}

TEST_CASE("wedge power is multiplicative and respects the diagonal fast path") {
  Rng rng(47);
  WedgeBasis wb(5, 2);
  Dense A = random_sl(rng, 5, 1), B = random_sl(rng, 5, 1);
  Mat lhs = wedge_power(mat_mul(A, B, 1), wb, 1);
  Mat rhs = wedge_power(A, wb, 1) * wedge_power(B, wb, 1);
  CHECK(lhs == rhs);

  Dense D = zero_dense(5, 5);
  for (int i = 0; i < 5; ++i) D[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Cyc::zeta_pow(5, 2 * i);
  Mat W = wedge_power(D, WedgeBasis(5, 2), 5);
  for (int idx = 0; idx < W.rows; ++idx) {
    CHECK(W.row[static_cast<std::size_t>(idx)].size() == 1);
    CHECK(W.row[static_cast<std::size_t>(idx)][0].first == idx);
  }
}
