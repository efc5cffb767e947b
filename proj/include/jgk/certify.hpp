#ifndef JGK_CERTIFY_HPP
#define JGK_CERTIFY_HPP

#include "jgk/lie.hpp"

namespace jgk {

/// Group-indexed decomposition of an algebra; classes of dimension zero may
/// be omitted from the map.
struct Grading {
  int p = 0, r = 0;
  std::map<std::vector<int>, Subspace> components;

  const Subspace* component(const std::vector<int>& alpha) const {
    auto it = components.find(alpha);
    return it == components.end() ? nullptr : &it->second;
  }
};

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;  // empty when the check passes
  long long count = 0;  // items swept
};

struct Certificate {
  std::vector<Check> checks;
  std::map<std::string, long long> dims;
  std::uint64_t seed = 0;
  long long elapsed_ms = 0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// [G_alpha, G_beta] ⊆ G_{alpha+beta} on all basis pairs, exact membership.
Check grading_compat(const LieAlgebra& L, const Grading& G);

/// One subalgebra per projective point: the span of g_{i alpha} over i != 0.
/// Requires a trivial zero class.
std::map<std::vector<int>, Subspace> line_subalgebras(const Grading& G, int ambient, int cond);

/// Full certificate: trivial zero class, class dimensions, bracket
/// compatibility, Cartan property of every line, Killing orthogonality of
/// classes (beta != -alpha), and nondegeneracy of the form on each line.
Certificate jordan_certificate(const LieAlgebra& L, const Grading& G, int expected_d,
                               const Mat* gram = nullptr, int threads = 0);

/// Jacobi identity sweep: the full C(dim,3) triple set, or a seeded sample.
Check jacobi_sweep_full(const LieAlgebra& L, int threads = 0);
Check jacobi_sweep_sample(const LieAlgebra& L, long long samples, std::uint64_t seed,
                          int threads = 0);

}  // namespace jgk

#endif
