#pragma once

#include "superlie/hwengine.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superlie {

// A = prod_i k[t]/((t - c_i)^{N_i}), the finite-dimensional quotient of k[t] by prod (t - c_i)^{N_i}.
// Basis: (t - c_i)^k for k < N_i, point by point.
struct JetAlgebra {
    std::vector<Scalar> points;
    std::vector<int> orders;

    int dim() const;
    int index(int point, int k) const;
    std::pair<int, int> position(int basis_index) const;  // (point, k)
    SparseVec mul(const SparseVec& a, const SparseVec& b) const;
    SparseVec pow(const SparseVec& a, int k) const;
    SparseVec unit() const;
    SparseVec t() const;  // the image of t
    // Image of a polynomial given by coefficients c_0 + c_1 t + ...
    SparseVec polynomial(const Vec& coeffs) const;
    std::string label(int basis_index) const;
    std::string spec() const;  // "jet:c^N,..."
};

// Throws DomainError BAD_JET_SPEC for repeated points or orders < 1.
JetAlgebra jet_algebra(const std::vector<std::pair<Scalar, int>>& points);
// "jet:0^4", "jet:0^2+jet:1^2" or "jet:0^2,1/2^1". Throws BAD_JET_SPEC.
JetAlgebra parse_jet(const std::string& spec);
// Throws DomainError SUPPORT_OVERLAP when the two algebras share a point.
JetAlgebra direct_sum(const JetAlgebra& a, const JetAlgebra& b);

// g (x) A in the adapted basis of dec; basis element x (x) a_j has index x * dim A + j.
struct MapAlgebra {
    AdaptedAlgebra g;
    JetAlgebra A;
    std::shared_ptr<const LieSuperalgebra> L;

    int index(int x, int j) const { return x * A.dim() + j; }
    SparseVec element(const SparseVec& x, const SparseVec& a) const;  // x over the adapted basis
};
MapAlgebra map_superalgebra(const TriangularDecomposition& dec, const JetAlgebra& A);
// Plain g (x) A in g's own basis (no adaptation); validates nothing.
LieSuperalgebra map_superalgebra(const LieSuperalgebra& g, const JetAlgebra& A);

// psi(h_i (x) a_j) = values[i][j] over the Cartan basis and the jet basis.
struct PsiValues {
    std::vector<Vec> values;
};
// psi(h_i (x) t^k) = pattern[i][k] at the point 0 (missing entries are zero).
PsiValues psi_from_pattern(const std::vector<Vec>& pattern, const JetAlgebra& A);

struct LocalWeyl {
    MapAlgebra map;
    PsiValues psi;
    Vec lambda;  // psi restricted to h (x) 1
    WeightModule module;
};
// Throws DomainError INVALID_PSI when lambda(h_alpha) is not a non-negative integer for a simple
// root of the reductive part.
LocalWeyl local_weyl(const TriangularDecomposition& dec, const JetAlgebra& A, const PsiValues& psi, int cutoff = 0);

struct ThetaResult {
    bool holds = false;   // x_theta^- lies in the ad(r)-submodule generated by n+
    int lowest_root = -1;
    int closure_dim = 0;
};
ThetaResult theta_criterion(const TriangularDecomposition& dec);

struct ScanEntry {
    int N = 0;
    long long dim = 0;
    std::string certificate;
};
struct ScanResult {
    std::vector<ScanEntry> entries;
    std::string verdict;  // STABILIZED, STABILIZED_UNCERTIFIED, UNBOUNDED_EVIDENCE, INCONCLUSIVE
    int stabilized_at = 0;
    ThetaResult theta;
};
ScanResult truncation_scan(const TriangularDecomposition& dec, const std::vector<Vec>& pattern, int max_n,
    int cutoff = 0);

// p_0..p_N with p(u) = exp(-sum_{i>=1} s_i u^i / i); each p_k maps exponent vectors over s_1..s_N
// to coefficients.
using Polynomial = std::map<std::vector<int>, Scalar>;
std::vector<Polynomial> garland_coefficients(int N);
std::string polynomial_string(const Polynomial& p);

struct GarlandCheck {
    int m = 0;
    std::string a;
    bool holds = false;          // divided-power identity modulo the left ideal of x (x) A
    bool literal_holds = false;  // the same identity without the factorials
};
// In U(sl_2 (x) A): (x(a))^(m) (x^-)^(m+1) = (-1)^m sum_i x^-(a^{m-i}) p_i(h(a), h(a^2), ...)
// modulo U . (x (x) A), with divided powers y^(k) = y^k / k!.
GarlandCheck garland_verify(const JetAlgebra& A, const Vec& a_poly, int m);

struct IdealInfo {
    std::vector<SparseVec> basis;     // over the jet basis
    std::vector<int> order_at_point;  // I projects to (t - c_i)^{k_i}; k_i = 0 means all of A_i
    std::vector<Scalar> support;      // points with k_i > 0
};
struct AnnihilatorResult {
    IdealInfo I;  // largest ideal with (n_0^- (x) I) w = 0
    IdealInfo J;  // largest ideal with (g (x) J) M = 0
    bool supports_equal = false;
};
// Throws DomainError NOT_FINITE when J cannot be computed.
AnnihilatorResult annihilating_ideals(const LocalWeyl& w);

struct TensorCheck {
    long long dim_a = 0, dim_b = 0, dim_sum = 0;
    bool total_holds = false;
    bool weights_hold = false;
};
TensorCheck tensor_check(const TriangularDecomposition& dec, const JetAlgebra& A, const PsiValues& psi,
    const JetAlgebra& B, const PsiValues& phi, int cutoff = 0);

}  // namespace superlie
