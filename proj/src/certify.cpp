#include "jgk/certify.hpp"

#include <algorithm>
#include <atomic>

namespace jgk {

namespace {

std::string tuple_str(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

std::vector<int> tuple_add(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

std::vector<int> tuple_scale(const std::vector<int>& a, int k, int p) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * k) % p;
  return r;
}

bool is_zero_tuple(const std::vector<int>& a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

}  // namespace

Check grading_compat(const LieAlgebra& L, const Grading& G) {
  Check out{"grading_compat", true, "", 0};
  for (const auto& [alpha, A] : G.components) {
    for (const auto& [beta, B] : G.components) {
      std::vector<int> target = tuple_add(alpha, beta, G.p);
      const Subspace* T = G.component(target);
      for (int a = 0; a < A.dim(); ++a) {
        for (int b = 0; b < B.dim(); ++b) {
          ++out.count;
          SVec w = L.bracket(A.basis[static_cast<std::size_t>(a)], B.basis[static_cast<std::size_t>(b)]);
          if (w.empty()) continue;
          if (T == nullptr || !T->contains(w)) {
            out.pass = false;
            out.witness = "[" + tuple_str(alpha) + " basis " + std::to_string(a) + ", " +
                          tuple_str(beta) + " basis " + std::to_string(b) +
                          "] escapes class " + tuple_str(target);
            return out;
          }
        }
      }
    }
  }
  return out;
}

std::map<std::vector<int>, Subspace> line_subalgebras(const Grading& G, int ambient, int cond) {
  const Subspace* zero = nullptr;
  for (const auto& [alpha, S] : G.components)
    if (is_zero_tuple(alpha)) zero = &S;
  require(zero == nullptr || zero->dim() == 0,
          "line_subalgebras: nonzero zero class, lines are not disjoint");

  std::map<std::vector<int>, Subspace> lines;
  for (const auto& [alpha, S] : G.components) {
    if (is_zero_tuple(alpha)) continue;
    // canonical projective representative: first nonzero coordinate is 1
    int lead = -1;
    for (std::size_t i = 0; i < alpha.size() && lead < 0; ++i)
      if (alpha[i] != 0) lead = static_cast<int>(i);
    int inv = 1;
    for (int k = 1; k < G.p; ++k)
      if (alpha[static_cast<std::size_t>(lead)] * k % G.p == 1) inv = k;
    std::vector<int> rep = tuple_scale(alpha, inv, G.p);
    if (lines.count(rep)) continue;
    std::vector<SVec> rows;
    for (int k = 1; k < G.p; ++k) {
      const Subspace* Sk = G.component(tuple_scale(rep, k, G.p));
      if (Sk)
        for (const auto& v : Sk->basis) rows.push_back(v);
    }
    lines.emplace(rep, Subspace::from_rows(ambient, cond, rows));
  }
  return lines;
}

Certificate jordan_certificate(const LieAlgebra& L, const Grading& G, int expected_d,
                               const Mat* gram_in, int threads) {
  Certificate cert;
  int n = L.dim(), m = L.conductor();

  long long pr = 1;
  for (int i = 0; i < G.r; ++i) pr *= G.p;

  // (1) trivial zero class
  {
    Check c{"zero_class_trivial", true, "", 1};
    const Subspace* zero = G.component(std::vector<int>(static_cast<std::size_t>(G.r), 0));
    if (zero && zero->dim() != 0) {
      c.pass = false;
      c.witness = "zero class has dimension " + std::to_string(zero->dim());
    }
    cert.checks.push_back(c);
    cert.dims["zero_class"] = zero ? zero->dim() : 0;
  }

  // (2) class dimensions
  {
    Check c{"class_dimensions", true, "", 0};
    long long nonzero = 0;
    int total = 0;
    for (const auto& [alpha, S] : G.components) {
      if (is_zero_tuple(alpha)) continue;
      ++c.count;
      ++nonzero;
      total += S.dim();
      if (c.pass && S.dim() != expected_d) {
        c.pass = false;
        c.witness = "class " + tuple_str(alpha) + " has dimension " + std::to_string(S.dim()) +
                    ", expected " + std::to_string(expected_d);
      }
    }
    if (c.pass && nonzero != pr - 1) {
      c.pass = false;
      c.witness = "expected " + std::to_string(pr - 1) + " nonzero classes, found " +
                  std::to_string(nonzero);
    }
    if (c.pass && total != n) {
      c.pass = false;
      c.witness = "class dimensions sum to " + std::to_string(total) + ", algebra has " +
                  std::to_string(n);
    }
    cert.checks.push_back(c);
    cert.dims["nonzero_classes"] = nonzero;
    cert.dims["class_dim"] = expected_d;
    cert.dims["algebra_dim"] = n;
  }

  bool dims_ok = cert.checks.back().pass && cert.checks.front().pass;

  // (3) bracket compatibility
  cert.checks.push_back(grading_compat(L, G));

  // the expensive sweeps only run on structurally sound gradings
  if (!dims_ok || !cert.checks.back().pass) return cert;

  Mat gram = gram_in ? *gram_in : killing(L);

  // (4) every line subalgebra is a Cartan subalgebra
  {
    Check c{"lines_are_cartan", true, "", 0};
    auto lines = line_subalgebras(G, n, m);
    std::vector<std::pair<std::vector<int>, const Subspace*>> ordered;
    for (const auto& [rep, S] : lines) ordered.emplace_back(rep, &S);
    std::atomic<long long> bad{-1};
    parallel_chunks(ordered.size(), threads, [&](std::size_t b, std::size_t e, std::size_t) {
      for (std::size_t t = b; t < e; ++t) {
        if (bad.load(std::memory_order_relaxed) >= 0) return;
        if (!is_cartan(L, *ordered[t].second)) {
          long long mine = static_cast<long long>(t), prev = bad.load();
          while ((prev < 0 || mine < prev) && !bad.compare_exchange_weak(prev, mine)) {
          }
        }
      }
    });
    c.count = static_cast<long long>(ordered.size());
    if (bad.load() >= 0) {
      c.pass = false;
      c.witness = "line " + tuple_str(ordered[static_cast<std::size_t>(bad.load())].first) +
                  " is not a Cartan subalgebra";
    }
    cert.checks.push_back(c);
    cert.dims["lines"] = static_cast<long long>(ordered.size());
    cert.dims["line_dim"] = ordered.empty() ? 0 : ordered[0].second->dim();
  }

  // (5) Killing orthogonality of classes unless beta = -alpha
  {
    Check c{"killing_orthogonal", true, "", 0};
    for (const auto& [alpha, A] : G.components) {
      if (!c.pass) break;
      for (const auto& [beta, B] : G.components) {
        if (!c.pass) break;
        bool opposite = is_zero_tuple(tuple_add(alpha, beta, G.p));
        if (opposite) continue;
        ++c.count;
        for (const auto& u : A.basis)
          for (const auto& v : B.basis)
            if (!killing_pair(gram, u, v).is_zero()) {
              c.pass = false;
              c.witness = "kappa(" + tuple_str(alpha) + ", " + tuple_str(beta) + ") != 0";
              break;
            }
      }
    }
    cert.checks.push_back(c);
  }

  // (6) the form is nondegenerate on every line
  {
    Check c{"line_killing_nondegenerate", true, "", 0};
    auto lines = line_subalgebras(G, n, m);
    for (const auto& [rep, S] : lines) {
      ++c.count;
      int d = S.dim();
      Mat block(d, d, m);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          Cyc v = killing_pair(gram, S.basis[static_cast<std::size_t>(a)], S.basis[static_cast<std::size_t>(b)]);
          if (!v.is_zero()) block.set(a, b, v);
        }
      if (rank(block) != d) {
        c.pass = false;
        c.witness = "Killing form degenerate on line " + tuple_str(rep);
        break;
      }
    }
    cert.checks.push_back(c);
  }

  return cert;
}

namespace {

Check jacobi_sweep_impl(const LieAlgebra& L, bool full, long long samples, std::uint64_t seed,
                        int threads) {
  int n = L.dim();
  Check out{full ? "jacobi_full" : "jacobi_sample", true, "", 0};
  std::atomic<long long> bad{-1};
  if (full) {
    // linear index over i < j < k
    long long total = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    out.count = total;
    parallel_chunks(static_cast<std::size_t>(n), threads, [&](std::size_t b, std::size_t e, std::size_t) {
      for (std::size_t i = b; i < e; ++i) {
        if (bad.load(std::memory_order_relaxed) >= 0) return;
        for (int j = static_cast<int>(i) + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            if (!L.jacobi_defect(static_cast<int>(i), j, k).empty()) {
              long long code = (static_cast<long long>(i) * n + j) * n + k;
              long long prev = bad.load();
              while ((prev < 0 || code < prev) && !bad.compare_exchange_weak(prev, code)) {
              }
              return;
            }
      }
    });
  } else {
    out.count = samples;
    parallel_chunks(static_cast<std::size_t>(samples), threads, [&](std::size_t b, std::size_t e, std::size_t) {
      // worker draws are independent seeded streams keyed by the start index
      for (std::size_t t = b; t < e; ++t) {
        if (bad.load(std::memory_order_relaxed) >= 0) return;
        Rng rng(seed ^ (0x5851f42d4c957f2dULL * (t + 1)));
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (i == j || j == k || i == k) continue;
        if (!L.jacobi_defect(i, j, k).empty()) {
          long long code = (static_cast<long long>(i) * n + j) * n + k;
          long long prev = bad.load();
          while ((prev < 0 || code < prev) && !bad.compare_exchange_weak(prev, code)) {
          }
          return;
        }
      }
    });
  }
  if (bad.load() >= 0) {
    long long code = bad.load();
    int k = static_cast<int>(code % n);
    int j = static_cast<int>((code / n) % n);
    int i = static_cast<int>(code / n / n);
    out.pass = false;
    out.witness = "Jacobi identity fails on triple (" + std::to_string(i) + "," +
                  std::to_string(j) + "," + std::to_string(k) + ")";
  }
  return out;
}

}  // namespace

Check jacobi_sweep_full(const LieAlgebra& L, int threads) {
  return jacobi_sweep_impl(L, true, 0, 0, threads);
}

Check jacobi_sweep_sample(const LieAlgebra& L, long long samples, std::uint64_t seed, int threads) {
  return jacobi_sweep_impl(L, false, samples, seed, threads);
}

}  // namespace jgk
