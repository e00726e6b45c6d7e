#pragma once

#include "superlie/weyl.hpp"

#include <json.hpp>

#include <string>

namespace superlie {

inline constexpr const char* kToolVersion = "0.1.0";

// JSON views of computed objects. Arrays are emitted in a fixed order (roots by (height, functional),
// weights by (depth, coordinates)) so equal inputs give equal bytes under dump_canonical.
nlohmann::json roots_json(const RootDatum& d);
nlohmann::json decomposition_json(const TriangularDecomposition& dec);
nlohmann::json conditions_json(const Conditions& c, const RootDatum& d);
nlohmann::json simple_system_json(const SimpleSystem& s);
nlohmann::json module_json(const WeightModule& m, const Vec& lambda);
nlohmann::json scan_json(const ScanResult& s);
nlohmann::json garland_json(const GarlandCheck& g);
nlohmann::json ideal_json(const IdealInfo& info, const JetAlgebra& A);
nlohmann::json tensor_json(const TensorCheck& t);

// Decomposition files store the witness; loading re-derives the positive system.
TriangularDecomposition decomposition_from_json(std::shared_ptr<const RootDatum> datum, const nlohmann::json& j);

// psi tables: [[cartan_index, jet_index, "p/q"], ...]; absent entries are zero.
// Throws DomainError INVALID_PSI on malformed or out-of-range entries.
PsiValues psi_from_json(const nlohmann::json& j, int rank, int jet_dim);
// The same table read as a pattern psi(h_i (x) t^k), k unbounded.
std::vector<Vec> pattern_from_json(const nlohmann::json& j, int rank);

// Parses "1,0,-1/2" (exact rationals only).
Vec parse_vector(const std::string& s);

}  // namespace superlie
