#pragma once

#include "superlie/superalg.hpp"

#include <json.hpp>

#include <string>

namespace superlie {

// Sparse vectors in metadata and reports: [[index, "p/q"], ...].
nlohmann::json sparse_to_json(const SparseVec& v);
SparseVec sparse_from_json(const nlohmann::json& j);
nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

// {labels, parities, bracket: [[i, j, [[k, num, den], ...]], ...], metadata}.
// Only pairs i <= j with nonzero bracket are stored; the rest follow from skew symmetry.
nlohmann::json algebra_to_json(const LieSuperalgebra& g);
LieSuperalgebra algebra_from_json(const nlohmann::json& j, bool validate_algebra = true);

// Keys are sorted (std::map backed objects), so equal documents give equal bytes.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace superlie
