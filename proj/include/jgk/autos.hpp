#ifndef JGK_AUTOS_HPP
#define JGK_AUTOS_HPP

#include "jgk/octonion.hpp"
#include "jgk/skeleton.hpp"

namespace jgk {

/// Invertible matrix with a claimed finite order; bracket preservation and
/// the order are certified separately so negative controls can observe the
/// exact failing check.
struct Automorphism {
  Mat matrix;
  int order = 1;
};

struct CheckResult {
  bool ok = true;
  std::string error;  // names the failed condition with a witness
};

/// matrix^order = I and phi[x_i,x_j] = [phi x_i, phi x_j] on all basis pairs.
CheckResult certify_automorphism(const LieAlgebra& L, const Automorphism& a, int threads = 0);

/// The diagonal map zeta^{deg} (order p when zeta is a primitive p-th root).
Automorphism scalar_auto(const LieAlgebra& L, const std::vector<int>& deg, int p, const Cyc& zeta);

/// The standard order-p pair on F^p: clock = diag(1, z^t, z^{2t}, ...) and
/// shift = the p-cycle; both have determinant 1 and clock·shift =
/// zeta^t shift·clock.
std::pair<Dense, Dense> clock_shift_pair(int p, int twist, int cond);

/// Assembled degree-0 action of per-space invertible operators g_s
/// (conjugation on every sl block).
Mat g0_block_action(const GradedModel& M, const std::vector<Dense>& g,
                    const std::vector<Dense>& g_inv);
/// Tensor-product action of per-space operators on a nonzero-degree block.
Mat degree_block_tensor(const GradedModel& M, int d, const std::vector<Dense>& g);

struct ExtendResult {
  bool ok = false;
  std::string error;
  Automorphism out;
};

/// Unique linear extension of (action0, action1) through brackets: degree
/// d+1 is spanned by [degree 1, degree d]. Fails with a witness pair when
/// the prescribed action is not extendable.
ExtendResult extend_from_degree1(const GradedModel& M, const Mat& action0, const Mat& action1);

/// Pairwise commutation, exact order p, and faithfulness of all p^r power
/// products.
CheckResult check_group(const LieAlgebra& L, const std::vector<Automorphism>& gens, int p,
                        int threads = 0);

/// Simultaneous eigenspace decomposition for a certified generator family.
std::map<std::vector<int>, Subspace> grading_from_group(const LieAlgebra& L,
                                                        const std::vector<Automorphism>& gens,
                                                        int p, const Cyc& zeta);

/// Intersection of the fixed spaces; certified bracket-closed.
Subspace fixed_subalgebra(const LieAlgebra& L, const std::vector<Automorphism>& autos);

/// The three grading generators of a tensor model: the scalar automorphism,
/// the clock-type extension, and the shift-type extension. With
/// skip_normalization the clock generator is built from an unnormalized
/// degree-1 action whose fifth (third) power is a nontrivial scalar, which
/// the order check must reject.
struct ModelAutos {
  std::vector<Automorphism> gens;  // scalar, clock, shift
  CheckResult status;
};
ModelAutos tensor_model_autos(const GradedModel& M, bool skip_normalization = false,
                              int threads = 0);

/// Restrictions of certified ambient generators to the fixed-point model.
ModelAutos restricted_autos(const F4Build& f4, const ModelAutos& ambient, int threads = 0);

/// The grading-character conjugations of an octonion-derived operator
/// algebra as order-2 automorphisms.
ModelAutos octonion_model_autos(const OperatorAlgebra& A, const std::vector<int>& base_deg,
                                int threads = 0);

}  // namespace jgk

#endif
