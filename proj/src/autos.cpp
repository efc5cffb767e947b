#include "jgk/autos.hpp"

#include <algorithm>
#include <atomic>

namespace jgk {

namespace {

/// M v for sparse v through a precomputed transpose (column access).
SVec apply_cols(const Mat& Mt, const SVec& v) {
  SVec acc;
  for (const auto& [j, c] : v) acc = svec_add_scaled(acc, Mt.row[static_cast<std::size_t>(j)], c);
  return acc;
}

Dense dense_inverse(const Dense& g, int cond) {
  int n = static_cast<int>(g.size());
  std::vector<std::vector<Cyc>> aug(static_cast<std::size_t>(n),
                                    std::vector<Cyc>(static_cast<std::size_t>(2 * n), Cyc(cond)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = Cyc::one(cond);
  }
  for (int p = 0; p < n; ++p) {
    int pr = -1;
    for (int i = p; i < n; ++i)
      if (!aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)].is_zero()) {
        pr = i;
        break;
      }
    require(pr >= 0, "autos: singular operator has no inverse");
    std::swap(aug[static_cast<std::size_t>(p)], aug[static_cast<std::size_t>(pr)]);
    Cyc inv = aug[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)].inverse();
    for (int j = 0; j < 2 * n; ++j) aug[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == p) continue;
      Cyc f = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
      if (f.is_zero()) continue;
      for (int j = 0; j < 2 * n; ++j)
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * aug[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
    }
  }
  Dense out(static_cast<std::size_t>(n), std::vector<Cyc>(static_cast<std::size_t>(n), Cyc(cond)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
  return out;
}

/// Inverse of a small invertible sparse matrix via [M | I] reduction.
Mat mat_inverse(const Mat& M) {
  int n = M.rows;
  RowEchelon ech(2 * n, M.m);
  for (int i = 0; i < n; ++i) {
    SVec r = M.row[static_cast<std::size_t>(i)];
    r.emplace_back(n + i, Cyc::one(M.m));
    ech.add_row(std::move(r));
  }
  ech.finalize();
  Mat inv(n, n, M.m);
  for (std::size_t k = 0; k < ech.rows().size(); ++k) {
    require(ech.pivots()[k] < n, "autos: matrix is singular");
    int i = ech.pivots()[k];
    for (const auto& [col, c] : ech.rows()[k])
      if (col >= n) inv.set(i, col - n, c);
  }
  require(static_cast<int>(ech.rows().size()) == n, "autos: matrix is singular");
  return inv;
}

std::vector<WedgeBasis> block_bases(const GradedModel& M, int d) {
  std::vector<WedgeBasis> wb;
  for (std::size_t s = 0; s < M.skel.space_dim.size(); ++s)
    wb.emplace_back(M.skel.space_dim[s], M.skel.comps[static_cast<std::size_t>(d - 1)].ext[s]);
  return wb;
}

}  // namespace

CheckResult certify_automorphism(const LieAlgebra& L, const Automorphism& a, int threads) {
  int n = L.dim();
  require(a.matrix.rows == n && a.matrix.cols == n && a.matrix.m == L.conductor(),
          "autos: automorphism shape mismatch");
  if (!a.matrix.pow(a.order).is_identity())
    return {false, "order check failed: matrix^" + std::to_string(a.order) + " != identity"};
  Mat Mt = a.matrix.transpose();
  std::size_t total = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
  std::atomic<long long> first_bad{-1};
  parallel_chunks(total, threads, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t t = b; t < e; ++t) {
      long long cur = first_bad.load(std::memory_order_relaxed);
      if (cur >= 0 && static_cast<long long>(t) > cur) return;
      // unrank the pair (i, j)
      std::size_t i = 0, rem = t;
      while (rem >= static_cast<std::size_t>(n - 1 - static_cast<int>(i))) {
        rem -= static_cast<std::size_t>(n - 1 - static_cast<int>(i));
        ++i;
      }
      std::size_t j = i + 1 + rem;
      SVec lhs = apply_cols(Mt, L.bracket_table(static_cast<int>(i), static_cast<int>(j)));
      SVec rhs = L.bracket(Mt.row[i], Mt.row[j]);
      if (!svec_eq(lhs, rhs)) {
        long long mine = static_cast<long long>(t), prev = first_bad.load();
        while ((prev < 0 || mine < prev) && !first_bad.compare_exchange_weak(prev, mine)) {
        }
        return;
      }
    }
  });
  if (first_bad.load() >= 0) {
    std::size_t t = static_cast<std::size_t>(first_bad.load());
    std::size_t i = 0, rem = t;
    while (rem >= static_cast<std::size_t>(n - 1 - static_cast<int>(i))) {
      rem -= static_cast<std::size_t>(n - 1 - static_cast<int>(i));
      ++i;
    }
    return {false, "bracket preservation failed on basis pair (" + std::to_string(i) + "," +
                       std::to_string(i + 1 + rem) + ")"};
  }
  return {};
}

Automorphism scalar_auto(const LieAlgebra& L, const std::vector<int>& deg, int p, const Cyc& zeta) {
  require(static_cast<int>(deg.size()) == L.dim(), "autos: degree map length mismatch");
  int m = L.conductor();
  std::vector<Cyc> zp(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) zp[static_cast<std::size_t>(k)] = k == 0 ? Cyc::one(m) : zp[static_cast<std::size_t>(k - 1)] * zeta;
  Automorphism a;
  a.order = zeta == Cyc::one(m) ? 1 : p;
  a.matrix = Mat(L.dim(), L.dim(), m);
  for (int i = 0; i < L.dim(); ++i) a.matrix.set(i, i, zp[static_cast<std::size_t>(deg[static_cast<std::size_t>(i)])]);
  CheckResult c = certify_automorphism(L, a);
  require(c.ok, "autos: scalar map is not an automorphism (" + c.error + ")");
  return a;
}

std::pair<Dense, Dense> clock_shift_pair(int p, int twist, int cond) {
  require(p == 3 || p == 5, "autos: clock/shift pair needs p in {3,5}");
  require(twist >= 1 && twist < p, "autos: twist must lie in 1..p-1");
  require(cond == p, "autos: conductor must equal p for a primitive root");
  Dense clock(static_cast<std::size_t>(p), std::vector<Cyc>(static_cast<std::size_t>(p), Cyc(cond)));
  Dense shift = clock;
  for (int j = 0; j < p; ++j) {
    clock[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = Cyc::zeta_pow(cond, static_cast<long long>(twist) * j);
    shift[static_cast<std::size_t>((j + 1) % p)][static_cast<std::size_t>(j)] = Cyc::one(cond);
  }
  // determinants are 1: zeta^{t p(p-1)/2} = 1 and the p-cycle is even
  require((static_cast<long long>(twist) * p * (p - 1) / 2) % p == 0, "autos: clock determinant is not 1");
  // clock shift = zeta^t shift clock
  for (int j = 0; j < p; ++j) {
    Cyc lhs = clock[static_cast<std::size_t>((j + 1) % p)][static_cast<std::size_t>((j + 1) % p)];
    Cyc rhs = Cyc::zeta_pow(cond, twist) * clock[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
    require(lhs == rhs, "autos: clock/shift twist relation violated");
  }
  return {clock, shift};
}

Mat g0_block_action(const GradedModel& M, const std::vector<Dense>& g,
                    const std::vector<Dense>& g_inv) {
  int m = M.L.conductor();
  Mat out(M.block_dim[0], M.block_dim[0], m);
  for (std::size_t s = 0; s < M.skel.space_dim.size(); ++s) {
    Mat blk = sl_conjugation_action(g[s], g_inv[s], m);
    int off = M.sl_offset[s];
    for (int i = 0; i < blk.rows; ++i)
      for (const auto& [j, c] : blk.row[static_cast<std::size_t>(i)]) out.set(off + i, off + j, c);
  }
  return out;
}

Mat degree_block_tensor(const GradedModel& M, int d, const std::vector<Dense>& g) {
  int m = M.L.conductor();
  auto wb = block_bases(M, d);
  std::size_t nsp = wb.size();
  std::vector<Mat> slot_t;  // transposed slot operators for column access
  for (std::size_t s = 0; s < nsp; ++s) slot_t.push_back(wedge_power(g[s], wb[s], m).transpose());
  int bd = M.block_dim[static_cast<std::size_t>(d)];
  Mat out(bd, bd, m);
  std::vector<int> tuple(nsp);
  for (int col = 0; col < bd; ++col) {
    int rem = col;
    for (std::size_t s = nsp; s-- > 0;) {
      tuple[s] = rem % wb[s].dim;
      rem /= wb[s].dim;
    }
    // cartesian product of the slot columns
    std::vector<std::pair<int, Cyc>> acc = {{0, Cyc::one(m)}};
    for (std::size_t s = 0; s < nsp; ++s) {
      std::vector<std::pair<int, Cyc>> next;
      for (const auto& [ridx, cval] : acc)
        for (const auto& [r, v] : slot_t[s].row[static_cast<std::size_t>(tuple[s])])
          next.emplace_back(ridx * wb[s].dim + r, cval * v);
      acc = std::move(next);
    }
    for (const auto& [r, v] : acc)
      if (!v.is_zero()) out.set(r, col, v);
  }
  return out;
}

ExtendResult extend_from_degree1(const GradedModel& M, const Mat& action0, const Mat& action1) {
  ExtendResult res;
  const LieAlgebra& L = M.L;
  int m = L.conductor(), p = M.p, n = L.dim();
  require(action0.rows == M.block_dim[0] && action1.rows == M.block_dim[1],
          "autos: block action shapes mismatch");
  Mat full(n, n, m);
  auto place = [&](const Mat& blk, int off) {
    for (int i = 0; i < blk.rows; ++i)
      for (const auto& [j, c] : blk.row[static_cast<std::size_t>(i)]) full.set(off + i, off + j, c);
  };
  place(action0, 0);
  place(action1, M.offset[1]);

  Mat full_t = full.transpose();  // grown as blocks land
  for (int d = 2; d < p; ++d) {
    int off = M.offset[static_cast<std::size_t>(d)], bd = M.block_dim[static_cast<std::size_t>(d)];
    int off1 = M.offset[1], bd1 = M.block_dim[1];
    int offp = M.offset[static_cast<std::size_t>(d - 1)], bdp = M.block_dim[static_cast<std::size_t>(d - 1)];
    RowEchelon span(bd, m);
    Mat V(bd, bd, m), W(bd, bd, m);  // columns = chosen pair brackets / images
    int got = 0;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < bd1 && got < bd; ++a) {
      for (int b = 0; b < bdp && got < bd; ++b) {
        int ga = off1 + a, gb = offp + b;
        SVec v = L.bracket_basis(ga, gb);
        if (v.empty()) continue;
        SVec v_local;
        for (const auto& [k, c] : v) {
          require(k >= off && k < off + bd, "autos: bracket escapes the expected block");
          v_local.emplace_back(k - off, c);
        }
        if (!span.add_row(v_local)) continue;
        SVec img_a = full_t.row[static_cast<std::size_t>(ga)], img_b = full_t.row[static_cast<std::size_t>(gb)];
        SVec w = L.bracket(img_a, img_b);
        for (const auto& [k, c] : v_local) V.set(k, got, c);
        for (const auto& [k, c] : w) {
          if (k < off || k >= off + bd) {
            res.error = "inconsistent propagation at degree " + std::to_string(d) +
                        ": image escapes the block for pair (" + std::to_string(ga) + "," +
                        std::to_string(gb) + ")";
            return res;
          }
          W.set(k - off, got, c);
        }
        pairs.emplace_back(ga, gb);
        ++got;
      }
    }
    if (got < bd) {
      res.error = "degree-1 block does not generate degree " + std::to_string(d);
      return res;
    }
    Mat Md = W * mat_inverse(V);
    place(Md, off);
    full_t = full.transpose();
    // the prescribed action must be consistent on every generating pair
    Mat Md_t = Md.transpose();
    for (int a = 0; a < bd1; ++a) {
      for (int b = 0; b < bdp; ++b) {
        int ga = off1 + a, gb = offp + b;
        SVec v = L.bracket_basis(ga, gb);
        SVec v_local;
        for (const auto& [k, c] : v) v_local.emplace_back(k - off, c);
        SVec lhs = apply_cols(Md_t, v_local);
        SVec w = L.bracket(full_t.row[static_cast<std::size_t>(ga)], full_t.row[static_cast<std::size_t>(gb)]);
        SVec w_local;
        for (const auto& [k, c] : w) {
          if (k < off || k >= off + bd) {
            res.error = "inconsistent propagation at degree " + std::to_string(d) +
                        ": witness pair (" + std::to_string(ga) + "," + std::to_string(gb) + ")";
            return res;
          }
          w_local.emplace_back(k - off, c);
        }
        if (!svec_eq(lhs, w_local)) {
          res.error = "inconsistent propagation at degree " + std::to_string(d) +
                      ": witness pair (" + std::to_string(ga) + "," + std::to_string(gb) + ")";
          return res;
        }
      }
    }
  }
  res.ok = true;
  res.out.matrix = std::move(full);
  res.out.order = p;
  return res;
}

CheckResult check_group(const LieAlgebra& L, const std::vector<Automorphism>& gens, int p,
                        int threads) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    CheckResult c = certify_automorphism(L, gens[i], threads);
    if (!c.ok) return {false, "generator " + std::to_string(i + 1) + ": " + c.error};
    Mat pw = gens[i].matrix;
    bool proper = false;
    for (int k = 1; k < p; ++k) {
      if (!pw.is_identity()) proper = true;
      pw = pw * gens[i].matrix;
    }
    if (!proper || !pw.is_identity())
      return {false, "generator " + std::to_string(i + 1) + " does not have exact order " +
                         std::to_string(p)};
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].matrix.commutes_with(gens[j].matrix))
        return {false, "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                           " do not commute"};
  // faithfulness of all p^r products
  std::size_t r = gens.size();
  std::vector<std::vector<Mat>> pows(r);
  for (std::size_t i = 0; i < r; ++i) {
    pows[i].push_back(Mat::identity(L.dim(), L.conductor()));
    for (int k = 1; k < p; ++k) pows[i].push_back(pows[i].back() * gens[i].matrix);
  }
  std::vector<int> tuple(r, 0);
  while (true) {
    std::size_t d = 0;
    while (d < r && ++tuple[d] == p) tuple[d++] = 0;
    if (d == r) break;
    bool trivial = true;
    for (std::size_t i = 0; i < r; ++i)
      if (tuple[i] != 0) trivial = false;
    if (trivial) continue;
    Mat prod = pows[0][static_cast<std::size_t>(tuple[0])];
    for (std::size_t i = 1; i < r; ++i) prod = prod * pows[i][static_cast<std::size_t>(tuple[i])];
    if (prod.is_identity()) {
      std::string t = "(";
      for (std::size_t i = 0; i < r; ++i) t += (i ? "," : "") + std::to_string(tuple[i]);
      return {false, "faithfulness failed: power product " + t + ") is the identity"};
    }
  }
  return {};
}

std::map<std::vector<int>, Subspace> grading_from_group(const LieAlgebra& L,
                                                        const std::vector<Automorphism>& gens,
                                                        int p, const Cyc& zeta) {
  std::vector<Mat> mats;
  for (const auto& g : gens) mats.push_back(g.matrix);
  auto comps = simultaneous_eigenspaces(mats, p, zeta);
  (void)L;
  return comps;
}

Subspace fixed_subalgebra(const LieAlgebra& L, const std::vector<Automorphism>& autos) {
  int n = L.dim(), m = L.conductor();
  Mat stacked(n * static_cast<int>(autos.size()), n, m);
  for (std::size_t i = 0; i < autos.size(); ++i) {
    Mat shifted = autos[i].matrix.minus_scalar(Cyc::one(m));
    for (int q = 0; q < n; ++q) stacked.row[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(q)] = std::move(shifted.row[static_cast<std::size_t>(q)]);
  }
  Subspace fix = kernel(stacked);
  for (int a = 0; a < fix.dim(); ++a)
    for (int b = a + 1; b < fix.dim(); ++b)
      require(fix.contains(L.bracket(fix.basis[static_cast<std::size_t>(a)], fix.basis[static_cast<std::size_t>(b)])),
              "autos: fixed subspace is not bracket-closed");
  return fix;
}

ModelAutos tensor_model_autos(const GradedModel& M, bool skip_normalization, int threads) {
  ModelAutos out;
  int p = M.p, m = M.L.conductor();
  std::size_t nsp = M.skel.space_dim.size();
  Cyc zeta = Cyc::zeta_pow(m, 1);
  out.gens.push_back(scalar_auto(M.L, M.deg, p, zeta));

  std::vector<int> twists;
  if (p == 5) twists = {1, 2};
  else twists = std::vector<int>(nsp, 1);

  std::vector<Dense> clocks, clock_invs, shifts, shift_invs;
  for (std::size_t s = 0; s < nsp; ++s) {
    auto [b, c] = clock_shift_pair(p, twists[s], m);
    if (skip_normalization && s == 0) {
      // unnormalized degree-1 action: the p-th power of the block action
      // becomes a nontrivial scalar, violating the order requirement
      for (int i = 0; i < p; ++i) b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].scaled(Rat(2));
    }
    clocks.push_back(b);
    shifts.push_back(c);
    clock_invs.push_back(dense_inverse(b, m));
    shift_invs.push_back(dense_inverse(c, m));
  }

  auto build = [&](const std::vector<Dense>& g, const std::vector<Dense>& ginv,
                   const char* what) -> bool {
    ExtendResult er = extend_from_degree1(M, g0_block_action(M, g, ginv),
                                          degree_block_tensor(M, 1, g));
    if (!er.ok) {
      out.status = {false, std::string(what) + ": " + er.error};
      return false;
    }
    out.gens.push_back(std::move(er.out));
    return true;
  };
  if (!build(clocks, clock_invs, "clock generator")) return out;
  if (!build(shifts, shift_invs, "shift generator")) return out;

  out.status = check_group(M.L, out.gens, p, threads);
  return out;
}

ModelAutos restricted_autos(const F4Build& f4, const ModelAutos& ambient, int threads) {
  ModelAutos out;
  int m = f4.model.L.conductor();
  for (std::size_t i = 0; i < ambient.gens.size(); ++i) {
    const Automorphism& g = ambient.gens[i];
    if (!g.matrix.commutes_with(f4.tau)) {
      out.status = {false, "ambient generator " + std::to_string(i + 1) +
                               " does not commute with the swap automorphism"};
      return out;
    }
    Mat restricted(52, 52, m);
    for (int col = 0; col < 52; ++col) {
      SVec img = g.matrix.apply(f4.embedding.basis[static_cast<std::size_t>(col)]);
      require(f4.embedding.contains(img), "autos: restriction escapes the fixed subalgebra");
      SVec coords = svec_from_dense(f4.embedding.coordinates(img));
      for (const auto& [r, c] : coords) restricted.set(r, col, c);
    }
    out.gens.push_back({std::move(restricted), g.order});
  }
  out.status = check_group(f4.model.L, out.gens, ambient.gens.empty() ? 1 : ambient.gens[0].order,
                           threads);
  return out;
}

ModelAutos octonion_model_autos(const OperatorAlgebra& A, const std::vector<int>& base_deg,
                                int threads) {
  ModelAutos out;
  for (const Mat& th : grading_character_autos(A, base_deg, 3)) out.gens.push_back({th, 2});
  out.status = check_group(A.L, out.gens, 2, threads);
  return out;
}

}  // namespace jgk
