#include "jgk/skeleton.hpp"
#include <array>

#include <algorithm>
#include <map>
#include <set>

namespace jgk {

int sl_dim(int n) { return n * n - 1; }

namespace {

std::pair<int, int> sl_offdiag_pair(int n, int idx) {
  int k = idx / (n - 1), r = idx % (n - 1);
  int l = r < k ? r : r + 1;
  return {k, l};
}

int sl_offdiag_index(int n, int k, int l) { return k * (n - 1) + (l < k ? l : l - 1); }

Dense dense_zero(int n, int cond) {
  return Dense(static_cast<std::size_t>(n), std::vector<Cyc>(static_cast<std::size_t>(n), Cyc(cond)));
}

Dense dense_mul(const Dense& a, const Dense& b, int cond) {
  int n = static_cast<int>(a.size());
  Dense r = dense_zero(n, cond);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }
  return r;
}

}  // namespace

Dense sl_basis_matrix(int n, int idx, int cond) {
  Dense M = dense_zero(n, cond);
  if (idx < n * (n - 1)) {
    auto [k, l] = sl_offdiag_pair(n, idx);
    M[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = Cyc::one(cond);
  } else {
    int a = idx - n * (n - 1);
    M[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = Cyc::one(cond);
    M[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(a + 1)] = -Cyc::one(cond);
  }
  return M;
}

SVec sl_decompose(const Dense& M) {
  int n = static_cast<int>(M.size());
  int cond = M[0][0].conductor();
  Cyc tr = Cyc::zero(cond);
  for (int i = 0; i < n; ++i) tr += M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  require(tr.is_zero(), "sl_decompose: matrix has nonzero trace");
  SVec out;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      const Cyc& v = M[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
      if (!v.is_zero()) out.emplace_back(sl_offdiag_index(n, k, l), v);
    }
  Cyc partial = Cyc::zero(cond);
  for (int a = 0; a < n - 1; ++a) {
    partial += M[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)];
    if (!partial.is_zero()) out.emplace_back(n * (n - 1) + a, partial);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Mat sl_conjugation_action(const Dense& g, const Dense& g_inv, int cond) {
  int n = static_cast<int>(g.size());
  int d = sl_dim(n);
  Mat out(d, d, cond);
  for (int idx = 0; idx < d; ++idx) {
    Dense A = sl_basis_matrix(n, idx, cond);
    Dense C = dense_mul(g, dense_mul(A, g_inv, cond), cond);
    for (const auto& [r, v] : sl_decompose(C)) out.set(r, idx, v);
  }
  return out;
}

TensorSkeleton e8_skeleton() {
  TensorSkeleton s;
  s.p = 5;
  s.space_dim = {5, 5};
  for (int d = 1; d <= 4; ++d) s.comps.push_back({d, {d, (2 * d) % 5}});
  s.expected_block_dims = {48, 50, 50, 50, 50};
  return s;
}

TensorSkeleton e6_skeleton() {
  TensorSkeleton s;
  s.p = 3;
  s.space_dim = {3, 3, 3};
  s.comps.push_back({1, {1, 1, 1}});
  s.comps.push_back({2, {2, 2, 2}});
  s.expected_block_dims = {24, 27, 27};
  return s;
}

namespace {

/// Layout, fixed action rows, and the per-slot equivariant bracket maps of a
/// graded tensor skeleton.
class ModelBuilder {
public:
  ModelBuilder(const TensorSkeleton& skel, int cond) : skel_(skel), m_(cond), p_(skel.p) {
    nsp_ = static_cast<int>(skel_.space_dim.size());
    require(p_ >= 2 && nsp_ >= 1, "skeleton: degenerate layout");
    require(static_cast<int>(skel_.comps.size()) == p_ - 1, "skeleton: need one component per nonzero degree");
    build_layout();
  }

  bool dims_match() const {
    if (static_cast<int>(skel_.expected_block_dims.size()) != p_) return false;
    for (int d = 0; d < p_; ++d)
      if (bdim_[static_cast<std::size_t>(d)] != skel_.expected_block_dims[static_cast<std::size_t>(d)]) return false;
    return true;
  }

  /// Enumerates scalar slots; returns a diagnostic when some declared degree
  /// pair admits no equivariant map of the declared shape.
  std::string enumerate_slots() {
    for (int di = 1; di < p_; ++di) {
      for (int dj = di; dj < p_; ++dj) {
        int t = (di + dj) % p_;
        const auto& ei = skel_.comps[static_cast<std::size_t>(di - 1)].ext;
        const auto& ej = skel_.comps[static_cast<std::size_t>(dj - 1)].ext;
        if (t == 0) {
          for (int s = 0; s < nsp_; ++s)
            if (ei[static_cast<std::size_t>(s)] + ej[static_cast<std::size_t>(s)] != skel_.space_dim[static_cast<std::size_t>(s)])
              return "no equivariant map for degree pair (" + std::to_string(di) + "," +
                     std::to_string(dj) + "): slot " + std::to_string(s + 1) +
                     " does not pair with the volume form";
          for (int s = 0; s < nsp_; ++s) slots_.push_back({di, dj, s});
        } else {
          const auto& et = skel_.comps[static_cast<std::size_t>(t - 1)].ext;
          for (int s = 0; s < nsp_; ++s) {
            int a = ei[static_cast<std::size_t>(s)], b = ej[static_cast<std::size_t>(s)], n = skel_.space_dim[static_cast<std::size_t>(s)];
            int target = a + b < n ? a + b : a + b - n;
            if (a + b == n || target != et[static_cast<std::size_t>(s)])
              return "no equivariant map for degree pair (" + std::to_string(di) + "," +
                     std::to_string(dj) + "): slot " + std::to_string(s + 1) + " maps to degree " +
                     std::to_string(target) + ", component expects " + std::to_string(et[static_cast<std::size_t>(s)]);
          }
          slots_.push_back({di, dj, -1});
        }
      }
    }
    std::sort(slots_.begin(), slots_.end());
    for (std::size_t i = 0; i < slots_.size(); ++i) slot_id_[slots_[i]] = static_cast<int>(i);
    return {};
  }

  void build_table() {
    symtab_.assign(static_cast<std::size_t>(total_) * (static_cast<std::size_t>(total_) + 1) / 2, {});
    build_g0_g0();
    build_g0_action();
    for (const auto& slot : slots_) build_slot_map(slot);
  }

  int total() const { return total_; }
  int conductor() const { return m_; }
  int degrees() const { return p_; }
  const std::vector<int>& offsets() const { return offset_; }
  const std::vector<int>& block_dims() const { return bdim_; }
  const std::vector<int>& sl_offsets() const { return sl_off_; }
  const std::vector<ScalarSlot>& slots() const { return slots_; }

  const std::vector<std::pair<int, SVec>>& sym(int i, int j) const {
    return symtab_[pair_slot(i, j)];
  }

  LieAlgebra materialize(const std::map<ScalarSlot, Cyc>& lambda) const {
    LieAlgebra L(total_, m_);
    for (int i = 0; i < total_; ++i)
      for (int j = i + 1; j < total_; ++j) {
        const auto& entries = sym(i, j);
        if (entries.empty()) continue;
        SVec acc;
        for (const auto& [sid, vec] : entries) {
          if (sid < 0) acc = svec_add(acc, vec);
          else acc = svec_add_scaled(acc, vec, lambda.at(slots_[static_cast<std::size_t>(sid)]));
        }
        if (!acc.empty()) L.set_bracket(i, j, std::move(acc));
      }
    return L;
  }

  int degree_of(int idx) const {
    for (int d = p_ - 1; d >= 1; --d)
      if (idx >= offset_[static_cast<std::size_t>(d)]) return d;
    return 0;
  }

  /// Human-readable basis names: sl entries per space, wedge monomials per
  /// degree block ("d2:02|134" lists the slot index sets).
  std::vector<std::string> labels() const {
    std::vector<std::string> out(static_cast<std::size_t>(total_));
    for (int s = 0; s < nsp_; ++s) {
      int n = skel_.space_dim[static_cast<std::size_t>(s)];
      for (int t = 0; t < sl_dim(n); ++t) {
        std::string name;
        if (t < n * (n - 1)) {
          int k = t / (n - 1), rm = t % (n - 1);
          int l = rm < k ? rm : rm + 1;
          name = "E" + std::to_string(k) + std::to_string(l);
        } else {
          name = "H" + std::to_string(t - n * (n - 1));
        }
        out[static_cast<std::size_t>(sl_off_[static_cast<std::size_t>(s)] + t)] = "V" + std::to_string(s + 1) + ":" + name;
      }
    }
    for (int d = 1; d < p_; ++d) {
      for (int local = 0; local < bdim_[static_cast<std::size_t>(d)]; ++local) {
        std::vector<int> tup = decode(d, local);
        std::string name = "d" + std::to_string(d) + ":";
        for (int s = 0; s < nsp_; ++s) {
          if (s) name += "|";
          unsigned msk = wb_[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)].mask[static_cast<std::size_t>(tup[static_cast<std::size_t>(s)])];
          for (int bit = 0; bit < skel_.space_dim[static_cast<std::size_t>(s)]; ++bit)
            if (msk & (1u << bit)) name += std::to_string(bit);
        }
        out[static_cast<std::size_t>(offset_[static_cast<std::size_t>(d)] + local)] = name;
      }
    }
    return out;
  }

private:
  std::size_t pair_slot(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(total_) -
           static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
           static_cast<std::size_t>(j - i - 1);
  }

  void push_entry(int i, int j, int sid, SVec vec) {
    if (!vec.empty()) symtab_[pair_slot(i, j)].emplace_back(sid, std::move(vec));
  }

  void build_layout() {
    g0dim_ = 0;
    for (int s = 0; s < nsp_; ++s) {
      sl_off_.push_back(g0dim_);
      g0dim_ += sl_dim(skel_.space_dim[static_cast<std::size_t>(s)]);
    }
    offset_.assign(static_cast<std::size_t>(p_), 0);
    bdim_.assign(static_cast<std::size_t>(p_), 0);
    bdim_[0] = g0dim_;
    int at = g0dim_;
    wb_.assign(static_cast<std::size_t>(p_), {});
    for (int d = 1; d < p_; ++d) {
      offset_[static_cast<std::size_t>(d)] = at;
      int bd = 1;
      for (int s = 0; s < nsp_; ++s) {
        wb_[static_cast<std::size_t>(d)].emplace_back(skel_.space_dim[static_cast<std::size_t>(s)],
                                                      skel_.comps[static_cast<std::size_t>(d - 1)].ext[static_cast<std::size_t>(s)]);
        bd *= wb_[static_cast<std::size_t>(d)].back().dim;
      }
      bdim_[static_cast<std::size_t>(d)] = bd;
      at += bd;
    }
    total_ = at;
  }

  std::vector<int> decode(int d, int local) const {
    std::vector<int> t(static_cast<std::size_t>(nsp_));
    for (int s = nsp_ - 1; s >= 0; --s) {
      int ds = wb_[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)].dim;
      t[static_cast<std::size_t>(s)] = local % ds;
      local /= ds;
    }
    return t;
  }

  int encode(int d, const std::vector<int>& t) const {
    int idx = 0;
    for (int s = 0; s < nsp_; ++s) idx = idx * wb_[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)].dim + t[static_cast<std::size_t>(s)];
    return idx;
  }

  void build_g0_g0() {
    for (int s = 0; s < nsp_; ++s) {
      int n = skel_.space_dim[static_cast<std::size_t>(s)];
      int d = sl_dim(n);
      std::vector<Dense> basis;
      for (int t = 0; t < d; ++t) basis.push_back(sl_basis_matrix(n, t, m_));
      for (int t = 0; t < d; ++t)
        for (int u = t + 1; u < d; ++u) {
          Dense C = dense_mul(basis[static_cast<std::size_t>(t)], basis[static_cast<std::size_t>(u)], m_);
          Dense D = dense_mul(basis[static_cast<std::size_t>(u)], basis[static_cast<std::size_t>(t)], m_);
          for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) C[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= D[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
          SVec coords = sl_decompose(C);
          SVec shifted;
          for (const auto& [k, v] : coords) shifted.emplace_back(sl_off_[static_cast<std::size_t>(s)] + k, v);
          push_entry(sl_off_[static_cast<std::size_t>(s)] + t, sl_off_[static_cast<std::size_t>(s)] + u, -1, std::move(shifted));
        }
    }
  }

  void build_g0_action() {
    for (int d = 1; d < p_; ++d) {
      for (int s = 0; s < nsp_; ++s) {
        int n = skel_.space_dim[static_cast<std::size_t>(s)];
        for (int t = 0; t < sl_dim(n); ++t) {
          Mat W = wedge_derivation(sl_basis_matrix(n, t, m_), wb_[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)], m_);
          Mat Wt = W.transpose();
          int gi = sl_off_[static_cast<std::size_t>(s)] + t;
          for (int local = 0; local < bdim_[static_cast<std::size_t>(d)]; ++local) {
            std::vector<int> tup = decode(d, local);
            const SVec& col = Wt.row[static_cast<std::size_t>(tup[static_cast<std::size_t>(s)])];
            if (col.empty()) continue;
            SVec vec;
            for (const auto& [r, v] : col) {
              std::vector<int> tt = tup;
              tt[static_cast<std::size_t>(s)] = r;
              vec.emplace_back(offset_[static_cast<std::size_t>(d)] + encode(d, tt), v);
            }
            std::sort(vec.begin(), vec.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            push_entry(gi, offset_[static_cast<std::size_t>(d)] + local, -1, std::move(vec));
          }
        }
      }
    }
  }

  void build_slot_map(const ScalarSlot& slot) {
    int sid = slot_id_.at(slot);
    int di = slot.di, dj = slot.dj;
    int t = (di + dj) % p_;
    int oi = offset_[static_cast<std::size_t>(di)], oj = offset_[static_cast<std::size_t>(dj)];
    for (int a = 0; a < bdim_[static_cast<std::size_t>(di)]; ++a) {
      std::vector<int> ta = decode(di, a);
      int b0 = di == dj ? a + 1 : 0;
      for (int b = b0; b < bdim_[static_cast<std::size_t>(dj)]; ++b) {
        std::vector<int> tb = decode(dj, b);
        if (t != 0) {
          int sign = 1;
          std::vector<int> tt(static_cast<std::size_t>(nsp_));
          for (int s = 0; s < nsp_ && sign != 0; ++s) {
            const WedgeBasis& wa = wb_[static_cast<std::size_t>(di)][static_cast<std::size_t>(s)];
            const WedgeBasis& wbj = wb_[static_cast<std::size_t>(dj)][static_cast<std::size_t>(s)];
            WedgeTerm term = wedge_product(skel_.space_dim[static_cast<std::size_t>(s)], wa.mask[static_cast<std::size_t>(ta[static_cast<std::size_t>(s)])],
                                           wbj.mask[static_cast<std::size_t>(tb[static_cast<std::size_t>(s)])]);
            sign *= term.sign;
            if (term.sign != 0) tt[static_cast<std::size_t>(s)] = wb_[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)].index_of[term.mask];
          }
          if (sign == 0) continue;
          push_entry(oi + a, oj + b, sid,
                     {{offset_[static_cast<std::size_t>(t)] + encode(t, tt), Cyc::rational(m_, Rat(sign))}});
        } else {
          int s = slot.summand;
          int pairing = 1;
          for (int s2 = 0; s2 < nsp_ && pairing != 0; ++s2) {
            if (s2 == s) continue;
            WedgeTerm term = wedge_product(skel_.space_dim[static_cast<std::size_t>(s2)],
                                           wb_[static_cast<std::size_t>(di)][static_cast<std::size_t>(s2)].mask[static_cast<std::size_t>(ta[static_cast<std::size_t>(s2)])],
                                           wb_[static_cast<std::size_t>(dj)][static_cast<std::size_t>(s2)].mask[static_cast<std::size_t>(tb[static_cast<std::size_t>(s2)])]);
            pairing *= term.sign;
          }
          if (pairing == 0) continue;
          int n = skel_.space_dim[static_cast<std::size_t>(s)];
          Dense P = gl_contraction(n, wb_[static_cast<std::size_t>(di)][static_cast<std::size_t>(s)].mask[static_cast<std::size_t>(ta[static_cast<std::size_t>(s)])],
                                   wb_[static_cast<std::size_t>(dj)][static_cast<std::size_t>(s)].mask[static_cast<std::size_t>(tb[static_cast<std::size_t>(s)])], m_);
          Cyc tr = Cyc::zero(m_);
          for (int r = 0; r < n; ++r) tr += P[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
          Cyc shift = tr.scaled(Rat(1, n));
          for (int r = 0; r < n; ++r) P[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] -= shift;
          SVec coords = sl_decompose(P);
          SVec vec;
          Cyc scale = Cyc::rational(m_, Rat(pairing));
          for (const auto& [k, v] : coords) vec.emplace_back(sl_off_[static_cast<std::size_t>(s)] + k, v * scale);
          push_entry(oi + a, oj + b, sid, std::move(vec));
        }
      }
    }
  }

  TensorSkeleton skel_;
  int m_, p_, nsp_ = 0;
  std::vector<std::vector<WedgeBasis>> wb_;
  std::vector<int> offset_, bdim_, sl_off_;
  int g0dim_ = 0, total_ = 0;
  std::vector<ScalarSlot> slots_;
  std::map<ScalarSlot, int> slot_id_;
  std::vector<std::vector<std::pair<int, SVec>>> symtab_;
};

/// One Jacobi equation: sum of coeff * lambda_{s1} * lambda_{s2} (slot -1 is
/// the fixed coefficient 1) must vanish.
struct SymEq {
  std::vector<std::tuple<int, int, Cyc>> terms;
};

void cyc_accumulate(std::map<int, Cyc>& bucket, int key, const Cyc& v) {
  auto it = bucket.find(key);
  if (it == bucket.end()) bucket.emplace(key, v);
  else it->second += v;
}

void harvest_triple(const ModelBuilder& mb, int x, int y, int z, std::vector<SymEq>& eqs) {
  std::map<std::pair<int, int>, std::map<int, Cyc>> acc;
  auto term = [&](int u, int v, int w) {
    int sgn1 = 1, uu = u, vv = v;
    if (uu > vv) {
      std::swap(uu, vv);
      sgn1 = -1;
    }
    for (const auto& [s1, vec] : mb.sym(uu, vv)) {
      for (const auto& [e, c0] : vec) {
        int sgn2 = sgn1, ee = e, ww = w;
        if (ee == ww) continue;
        if (ee > ww) {
          std::swap(ee, ww);
          sgn2 = -sgn2;
        }
        for (const auto& [s2, vec2] : mb.sym(ee, ww)) {
          int klo = std::min(s1, s2), khi = std::max(s1, s2);
          Cyc f = sgn2 < 0 ? -c0 : c0;
          auto& bucket = acc[{klo, khi}];
          for (const auto& [coord, cv] : vec2) cyc_accumulate(bucket, coord, f * cv);
        }
      }
    }
  };
  term(x, y, z);
  term(y, z, x);
  term(z, x, y);
  // transpose into per-coordinate equations
  std::map<int, SymEq> per_coord;
  for (const auto& [key, bucket] : acc)
    for (const auto& [coord, cv] : bucket)
      if (!cv.is_zero()) per_coord[coord].terms.emplace_back(key.first, key.second, cv);
  for (auto& [coord, eq] : per_coord) eqs.push_back(std::move(eq));
}

std::vector<int> pick_window(int bdim, int w, Rng& rng) {
  std::set<int> chosen;
  if (bdim <= w) {
    for (int i = 0; i < bdim; ++i) chosen.insert(i);
  } else {
    for (int t = 0; t < w; ++t) chosen.insert(t * (bdim - 1) / (w - 1));
    for (int t = 0; t < 4; ++t) chosen.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(bdim))));
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

SVec canonical_invariant_map(const TensorSkeleton& skel, int conductor, const ScalarSlot& slot,
                             int a, int b) {
  ModelBuilder mb(skel, conductor);
  require(mb.dims_match(), "skeleton: component dimensions do not match the declared totals");
  std::string shape = mb.enumerate_slots();
  require(shape.empty(), "skeleton: " + shape);
  const auto& slots = mb.slots();
  require(std::find(slots.begin(), slots.end(), slot) != slots.end(),
          "skeleton: undeclared invariant-map triple");
  mb.build_table();
  int sid = static_cast<int>(std::find(slots.begin(), slots.end(), slot) - slots.begin());
  require(a < b, "skeleton: basis pair must be ordered");
  for (const auto& [s, vec] : mb.sym(a, b))
    if (s == sid) return vec;
  return {};
}

BuildResult solve_scalars(const TensorSkeleton& skel, int conductor, const BuildOptions& opts) {
  BuildResult out;
  ModelBuilder mb(skel, conductor);
  if (!mb.dims_match()) {
    out.error = "component dimensions do not match the declared totals";
    return out;
  }
  std::string shape = mb.enumerate_slots();
  if (!shape.empty()) {
    out.error = shape;
    return out;
  }
  mb.build_table();

  int p = mb.degrees(), m = mb.conductor();
  const auto& slots = mb.slots();

  // gauge: component rescalings allow normalizing the (1,k) slots to 1
  std::map<ScalarSlot, Cyc> known;
  for (int k = 1; k <= p - 2; ++k) {
    ScalarSlot g{1, k, -1};
    if (std::find(slots.begin(), slots.end(), g) != slots.end()) known[g] = Cyc::one(m);
  }

  // Jacobi triples on windowed indices of the nonzero-degree blocks; the
  // equations are re-harvested per round to keep the working set small
  Rng rng(opts.seed * 0x9e3779b97f4a7c15ULL + 17);
  std::vector<std::vector<int>> window(static_cast<std::size_t>(p));
  for (int d = 1; d < p; ++d) {
    auto idx = pick_window(mb.block_dims()[static_cast<std::size_t>(d)], opts.window, rng);
    for (int& v : idx) v += mb.offsets()[static_cast<std::size_t>(d)];
    window[static_cast<std::size_t>(d)] = idx;
  }
  std::vector<std::array<int, 3>> harvested;
  for (int d1 = 1; d1 < p; ++d1)
    for (int d2 = d1; d2 < p; ++d2)
      for (int d3 = d2; d3 < p; ++d3)
        for (int x : window[static_cast<std::size_t>(d1)])
          for (int y : window[static_cast<std::size_t>(d2)]) {
            if (d1 == d2 && x >= y) continue;
            for (int z : window[static_cast<std::size_t>(d3)]) {
              if (d2 == d3 && y >= z) continue;
              harvested.push_back({x, y, z});
            }
          }

  // staged quasi-linear solve: equations with a single unknown factor feed a
  // linear system; fully known monomials become constants; equations with an
  // unknown x unknown product wait for a later round
  int ns = static_cast<int>(slots.size());
  Cyc one = Cyc::one(m);
  enum class St { kFixed, kKnown, kUnknown };
  auto state_of = [&](int sid) {
    if (sid < 0) return St::kFixed;
    return known.count(slots[static_cast<std::size_t>(sid)]) ? St::kKnown : St::kUnknown;
  };
  auto known_value = [&](int sid) -> const Cyc& {
    if (sid < 0) return one;
    return known.at(slots[static_cast<std::size_t>(sid)]);
  };
  for (int round = 0; round < ns + 2 && static_cast<int>(known.size()) < ns; ++round) {
    std::vector<int> unknown_ids;
    for (int s = 0; s < ns; ++s)
      if (!known.count(slots[static_cast<std::size_t>(s)])) unknown_ids.push_back(s);
    std::map<int, int> col_of;
    for (std::size_t c = 0; c < unknown_ids.size(); ++c) col_of[unknown_ids[c]] = static_cast<int>(c);
    int nu = static_cast<int>(unknown_ids.size());
    RowEchelon sys(nu + 1, m);
    std::vector<SymEq> eqs;
    for (const auto& [x, y, z] : harvested) {
      eqs.clear();
      harvest_triple(mb, x, y, z, eqs);
      for (const auto& eq : eqs) {
        std::map<int, Cyc> lin;
        Cyc cst = Cyc::zero(m);
        bool defer = false;
        for (const auto& [s1, s2, c] : eq.terms) {
          St t1 = state_of(s1), t2 = state_of(s2);
          if (t1 == St::kUnknown && t2 == St::kUnknown) {
            defer = true;
            break;
          }
          if (t1 == St::kUnknown) cyc_accumulate(lin, s1, c * known_value(s2));
          else if (t2 == St::kUnknown) cyc_accumulate(lin, s2, c * known_value(s1));
          else cst += c * known_value(s1) * known_value(s2);
        }
        if (defer) continue;
        SVec row;
        for (const auto& [s, c] : lin)
          if (!c.is_zero()) row.emplace_back(col_of.at(s), c);
        if (!cst.is_zero()) row.emplace_back(nu, cst);
        if (!row.empty()) sys.add_row(std::move(row));
      }
    }
    sys.finalize();
    bool progress = false;
    for (std::size_t k = 0; k < sys.rows().size(); ++k) {
      if (sys.pivots()[k] == nu) {
        out.error = "Jacobi system is inconsistent (no scalar solution exists)";
        return out;
      }
      const SVec& row = sys.rows()[k];
      if (row.size() == 1 || (row.size() == 2 && row[1].first == nu)) {
        Cyc val = row.size() == 1 ? Cyc::zero(m) : -row[1].second;
        known[slots[static_cast<std::size_t>(unknown_ids[static_cast<std::size_t>(sys.pivots()[k])])]] = val;
        progress = true;
      }
    }
    if (static_cast<int>(known.size()) == ns) break;
    if (!progress) {
      // residual one-parameter gauge freedom: normalize the first unknown
      for (int s = 0; s < ns; ++s)
        if (!known.count(slots[static_cast<std::size_t>(s)])) {
          known[slots[static_cast<std::size_t>(s)]] = one;
          break;
        }
    }
  }
  if (static_cast<int>(known.size()) < static_cast<int>(slots.size())) {
    out.error = "scalar solve stalled with unknowns remaining";
    return out;
  }
  for (const auto& [slot, val] : known)
    if (val.is_zero()) {
      out.error = "scalar for degree pair (" + std::to_string(slot.di) + "," +
                  std::to_string(slot.dj) + ") vanishes; skeleton admits no Lie structure";
      return out;
    }

  LieAlgebra L = mb.materialize(known);
  for (const auto& [x, y, z] : harvested)
    if (!L.jacobi_defect(x, y, z).empty()) {
      out.error = "Jacobi identity fails on harvested triple (" + std::to_string(x) + "," +
                  std::to_string(y) + "," + std::to_string(z) + ")";
      return out;
    }
  // seeded random triples across all degrees (catches action/fixed-part bugs)
  int n = mb.total();
  for (int t = 0; t < opts.verify_samples; ++t) {
    int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int z = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (x == y || y == z || x == z) continue;
    if (!L.jacobi_defect(x, y, z).empty()) {
      out.error = "Jacobi identity fails on sampled triple (" + std::to_string(x) + "," +
                  std::to_string(y) + "," + std::to_string(z) + ")";
      return out;
    }
  }

  L.labels = mb.labels();
  out.ok = true;
  out.model.L = std::move(L);
  out.model.p = p;
  out.model.skel = skel;
  out.model.offset = mb.offsets();
  out.model.block_dim = mb.block_dims();
  out.model.sl_offset = mb.sl_offsets();
  out.model.lambda = std::move(known);
  out.model.deg.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) out.model.deg[static_cast<std::size_t>(i)] = mb.degree_of(i);
  return out;
}

GradedModel build_e8() {
  BuildResult r = solve_scalars(e8_skeleton(), 5);
  require(r.ok, "e8 build failed: " + r.error);
  return std::move(r.model);
}

GradedModel build_e6() {
  BuildResult r = solve_scalars(e6_skeleton(), 3);
  require(r.ok, "e6 build failed: " + r.error);
  return std::move(r.model);
}

Subspace diagonal_cartan(const GradedModel& M) {
  int m = M.L.conductor();
  std::vector<SVec> rows;
  for (std::size_t s = 0; s < M.sl_offset.size(); ++s) {
    int n = M.skel.space_dim[s];
    for (int a = 0; a < n - 1; ++a)
      rows.push_back({{M.sl_offset[s] + n * (n - 1) + a, Cyc::one(m)}});
  }
  return Subspace::from_rows(M.L.dim(), m, rows);
}

Subspace f4_cartan(const F4Build& f4) {
  const GradedModel& e6 = f4.e6;
  int m = e6.L.conductor();
  std::vector<SVec> rows;
  for (int a = 0; a < 2; ++a) {
    SVec v1{{e6.sl_offset[0] + 6 + a, Cyc::one(m)}};
    rows.push_back(svec_from_dense(f4.embedding.coordinates(v1)));
    SVec v23{{e6.sl_offset[1] + 6 + a, Cyc::one(m)}, {e6.sl_offset[2] + 6 + a, Cyc::one(m)}};
    std::sort(v23.begin(), v23.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    rows.push_back(svec_from_dense(f4.embedding.coordinates(v23)));
  }
  return Subspace::from_rows(52, m, rows);
}

F4Build build_f4() {
  F4Build out;
  out.e6 = build_e6();
  const GradedModel& e6 = out.e6;
  int n = e6.L.dim(), m = e6.L.conductor();
  require(n == 78, "f4 build: ambient model has wrong dimension");

  // factor-swap: exchange the second and third tensor slots everywhere
  Mat tau(n, n, m);
  int d8 = sl_dim(3);
  for (int t = 0; t < d8; ++t) {
    tau.set(e6.sl_offset[0] + t, e6.sl_offset[0] + t, Cyc::one(m));
    tau.set(e6.sl_offset[2] + t, e6.sl_offset[1] + t, Cyc::one(m));
    tau.set(e6.sl_offset[1] + t, e6.sl_offset[2] + t, Cyc::one(m));
  }
  for (int d = 1; d <= 2; ++d) {
    int off = e6.offset[static_cast<std::size_t>(d)];
    // slot dimensions are equal (3 or 3): local index (i,j,k) -> (i,k,j)
    for (int local = 0; local < e6.block_dim[static_cast<std::size_t>(d)]; ++local) {
      int k = local % 3, j = (local / 3) % 3, i = local / 9;
      int swapped = i * 9 + k * 3 + j;
      tau.set(off + swapped, off + local, Cyc::one(m));
    }
  }
  require(tau.pow(2).is_identity(), "f4 build: swap map is not an involution");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      SVec lhs = tau.apply(e6.L.bracket_table(a, b));
      SVec rhs = e6.L.bracket(tau.apply(SVec{{a, Cyc::one(m)}}), tau.apply(SVec{{b, Cyc::one(m)}}));
      require(svec_eq(lhs, rhs), "f4 build: swap map is not an automorphism of the ambient model");
    }
  out.tau = tau;

  Subspace fix = eigenspace(tau, Cyc::one(m));
  require(fix.dim() == 52, "f4 build: fixed subalgebra has dimension " + std::to_string(fix.dim()));
  out.embedding = fix;

  GradedModel& f4 = out.model;
  f4.L = restrict_to(e6.L, fix);
  f4.p = 3;
  f4.deg.assign(52, 0);
  for (int t = 0; t < 52; ++t) {
    int d = e6.deg[static_cast<std::size_t>(fix.pivots[static_cast<std::size_t>(t)])];
    // homogeneity of the echelon basis: all support indices share the degree
    for (const auto& [idx, c] : fix.basis[static_cast<std::size_t>(t)])
      require(e6.deg[static_cast<std::size_t>(idx)] == d, "f4 build: non-homogeneous fixed basis vector");
    f4.deg[static_cast<std::size_t>(t)] = d;
  }
  f4.offset.assign(3, 0);
  f4.block_dim.assign(3, 0);
  for (int t = 0; t < 52; ++t) ++f4.block_dim[static_cast<std::size_t>(f4.deg[static_cast<std::size_t>(t)])];
  require(f4.block_dim[0] == 16 && f4.block_dim[1] == 18 && f4.block_dim[2] == 18,
          "f4 build: unexpected homogeneous dimensions");
  f4.offset[1] = f4.block_dim[0];
  f4.offset[2] = f4.block_dim[0] + f4.block_dim[1];
  for (int t = 0; t < 52; ++t)
    f4.L.labels.push_back("fix:" + e6.L.labels[static_cast<std::size_t>(fix.pivots[static_cast<std::size_t>(t)])]);
  for (int t = 0; t < 52; ++t) {
    int d = f4.deg[static_cast<std::size_t>(t)];
    bool in_block = t >= f4.offset[static_cast<std::size_t>(d)] &&
                    t < f4.offset[static_cast<std::size_t>(d)] + f4.block_dim[static_cast<std::size_t>(d)];
    require(in_block, "f4 build: basis is not ordered by degree blocks");
  }
  return out;
}

}  // namespace jgk
