#ifndef JGK_JSON_IO_HPP
#define JGK_JSON_IO_HPP

#include <json.hpp>

#include "jgk/certify.hpp"
#include "jgk/lie.hpp"

namespace jgk {

using nlohmann::json;

/// {"m": conductor, "c": [[num, den], ...]} — integers when they fit in
/// 64 bits, decimal strings otherwise.
json cyc_to_json(const Cyc& a);
Cyc cyc_from_json(const json& j);

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

/// {"dim", "m", "brackets": [{"i","j","v": [[k, elem], ...]}], "labels"}
json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const json& j);

/// Degree-map sidecar {"p", "deg": [..]}.
json degrees_to_json(int p, const std::vector<int>& deg);
std::pair<int, std::vector<int>> degrees_from_json(const json& j);

/// {"p","r","m","dim","components": [{"alpha": [..], "basis": [[[k, elem],..],..]}]}
json grading_to_json(const Grading& G, int ambient, int cond);
Grading grading_from_json(const json& j, int* ambient = nullptr, int* cond = nullptr);

json certificate_to_json(const Certificate& c);

/// {"rows","cols","m","entries": [[i, j, elem], ...]}
json matrix_to_json(const Mat& M);
Mat matrix_from_json(const json& j);

json subspace_to_json(const Subspace& S);
Subspace subspace_from_json(const json& j, int ambient, int cond);

}  // namespace jgk

#endif
