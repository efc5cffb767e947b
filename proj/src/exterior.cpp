#include "jgk/exterior.hpp"

#include <bit>

namespace jgk {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

WedgeBasis::WedgeBasis(int n_, int k_) : n(n_), k(k_) {
  require(n >= 0 && k >= 0 && k <= n && n < 31, "wedge basis: bad shape");
  index_of.assign(std::size_t{1} << n, -1);
  // lex order on increasing index tuples
  std::vector<int> tuple(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = i;
  while (true) {
    unsigned msk = 0;
    for (int v : tuple) msk |= 1u << v;
    if (k == 0) msk = 0;
    index_of[msk] = static_cast<int>(mask.size());
    mask.push_back(msk);
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++tuple[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
  }
  dim = static_cast<int>(mask.size());
}

int merge_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  int inv = 0;
  unsigned bb = b;
  while (bb) {
    unsigned low = bb & (~bb + 1);
    // bits of a strictly above this bit of b
    inv += std::popcount(a & ~(low | (low - 1)));
    bb ^= low;
  }
  return (inv & 1) ? -1 : 1;
}

WedgeTerm wedge_product(int n, unsigned maskI, unsigned maskJ) {
  unsigned full = (1u << n) - 1;
  int a = std::popcount(maskI), b = std::popcount(maskJ);
  if (a + b < n) {
    if (maskI & maskJ) return {};
    return {maskI | maskJ, merge_sign(maskI, maskJ)};
  }
  unsigned ic = full & ~maskI, jc = full & ~maskJ;
  if (ic & jc) return {};  // union misses an index
  int s = merge_sign(maskI, ic) * merge_sign(maskJ, jc) * merge_sign(ic, jc) *
          merge_sign(ic | jc, maskI & maskJ);
  return {maskI & maskJ, s};
}

Mat wedge_derivation(const Dense& a, const WedgeBasis& wb, int cond) {
  int n = wb.n;
  Mat out(wb.dim, wb.dim, cond);
  for (int col = 0; col < wb.dim; ++col) {
    unsigned I = wb.mask[static_cast<std::size_t>(col)];
    for (int i = 0; i < n; ++i) {
      if (!(I & (1u << i))) continue;
      for (int q = 0; q < n; ++q) {
        const Cyc& c = a[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (q == i) {
          out.set(col, col, out.get(col, col) + c);
          continue;
        }
        if (I & (1u << q)) continue;  // repeated factor
        unsigned T = (I ^ (1u << i)) | (1u << q);
        // parity of moving q into the slot vacated by i
        unsigned lo = i < q ? (1u << i) : (1u << q), hi = i < q ? (1u << q) : (1u << i);
        int between = std::popcount(I & ~(lo | (lo - 1)) & (hi - 1) & ~hi);
        int sign = (between & 1) ? -1 : 1;
        int r = wb.index_of[T];
        Cyc add = (sign < 0) ? -c : c;
        out.set(r, col, out.get(r, col) + add);
      }
    }
  }
  return out;
}

Mat wedge_power(const Dense& b, const WedgeBasis& wb, int cond) {
  int n = wb.n, k = wb.k;
  Mat out(wb.dim, wb.dim, cond);
  if (k == 0) {
    out.set(0, 0, Cyc::one(cond));
    return out;
  }
  for (int col = 0; col < wb.dim; ++col) {
    unsigned I = wb.mask[static_cast<std::size_t>(col)];
    std::vector<int> cols_of_I;
    for (int i = 0; i < n; ++i)
      if (I & (1u << i)) cols_of_I.push_back(i);
    for (int rix = 0; rix < wb.dim; ++rix) {
      unsigned Q = wb.mask[static_cast<std::size_t>(rix)];
      std::vector<int> rows_of_Q;
      for (int i = 0; i < n; ++i)
        if (Q & (1u << i)) rows_of_Q.push_back(i);
      // minor determinant det(b[Q, I]) via Laplace expansion (k <= 4 here)
      std::vector<std::vector<Cyc>> sm(static_cast<std::size_t>(k), std::vector<Cyc>(static_cast<std::size_t>(k)));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
          sm[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = b[static_cast<std::size_t>(rows_of_Q[static_cast<std::size_t>(r)])][static_cast<std::size_t>(cols_of_I[static_cast<std::size_t>(c)])];
      // recursive determinant
      std::function<Cyc(std::vector<int>, std::vector<int>)> det =
          [&](std::vector<int> rs, std::vector<int> cs) -> Cyc {
        if (rs.size() == 1) return sm[static_cast<std::size_t>(rs[0])][static_cast<std::size_t>(cs[0])];
        Cyc d = Cyc::zero(cond);
        for (std::size_t t = 0; t < rs.size(); ++t) {
          const Cyc& pivot = sm[static_cast<std::size_t>(rs[t])][static_cast<std::size_t>(cs[0])];
          if (pivot.is_zero()) continue;
          std::vector<int> rs2;
          for (std::size_t u = 0; u < rs.size(); ++u)
            if (u != t) rs2.push_back(rs[u]);
          Cyc sub = det(rs2, std::vector<int>(cs.begin() + 1, cs.end()));
          sub *= pivot;
          if (t & 1) d -= sub;
          else d += sub;
        }
        return d;
      };
      std::vector<int> rs(static_cast<std::size_t>(k)), cs(static_cast<std::size_t>(k));
      for (int t = 0; t < k; ++t) rs[static_cast<std::size_t>(t)] = cs[static_cast<std::size_t>(t)] = t;
      Cyc d = det(rs, cs);
      if (!d.is_zero()) out.set(rix, col, d);
    }
  }
  return out;
}

Dense gl_contraction(int n, unsigned maskI, unsigned maskJ, int cond) {
  Dense out(static_cast<std::size_t>(n), std::vector<Cyc>(static_cast<std::size_t>(n), Cyc(cond)));
  unsigned full = (1u << n) - 1;
  int a = std::popcount(maskI);
  require(std::popcount(maskJ) == n - a, "gl_contraction: degree mismatch");
  unsigned K = full & ~maskJ;  // e_J ~ ms(J, K) e*_K under the volume form
  int base = merge_sign(maskJ, K);
  int pos = 0;
  for (int q = 0; q < n; ++q) {
    if (!(K & (1u << q))) continue;
    int sq = (pos & 1) ? -1 : 1;  // interior product picks up (-1)^{position}
    ++pos;
    unsigned Kq = K ^ (1u << q);
    if (Kq & ~maskI) continue;          // K\{q} must sit inside I
    unsigned rest = maskI & ~Kq;        // exactly one index left over
    if (std::popcount(rest) != 1) continue;
    int k = std::countr_zero(rest);
    int sk = merge_sign(Kq, rest);      // sort (K\{q}, k) into I
    int s = base * sq * sk;
    out[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] += Cyc::rational(cond, Rat(s));
  }
  return out;
}

}  // namespace jgk
