#pragma once

#include "superlie/superalg.hpp"

#include <string>
#include <vector>

namespace superlie {

// Exterior algebra on xi_1..xi_n. Monomials are bitmasks (bit k = xi_{k+1}); the basis is
// ordered by (degree, lexicographic index set).
struct ExteriorAlgebra {
    int n = 0;
    std::vector<unsigned> mono;   // basis index -> mask
    std::vector<int> index_of;    // mask -> basis index

    int dim() const { return static_cast<int>(mono.size()); }
    std::string label(int i) const;
    SparseVec mul(const SparseVec& a, const SparseVec& b) const;
};

ExteriorAlgebra build_exterior(int n);

// Sign of xi_A xi_B = sign * xi_{A|B}; 0 when A and B intersect.
int monomial_sign(unsigned a, unsigned b);
// d_j(xi_K) = sign * xi_{K \ j}; sign 0 when j is not in K.
int partial_sign(unsigned k, int j);
std::string monomial_label(unsigned mask);

// A superderivation of Lambda(n), determined by the images of the generators.
struct Superderivation {
    int parity = 0;
    std::vector<SparseVec> images;  // images[j] = D(xi_{j+1}) over the exterior basis
};

SparseVec apply(const ExteriorAlgebra& ext, const Superderivation& d, const SparseVec& x);
SparseVec divergence(const ExteriorAlgebra& ext, const Superderivation& d);
// The superderivation of an element of a Cartan-type algebra (realization metadata "derivation").
Superderivation as_superderivation(const ExteriorAlgebra& ext, const LieSuperalgebra& g, const SparseVec& x);

LieSuperalgebra superderivation_algebra(int n);
// family in {"S", "S~", "H"}.
LieSuperalgebra build_cartan_family(const std::string& family, int n);
// family in {"gl", "sl", "A", "osp", "B", "C", "D", "p"}. osp takes (M, 2n); B(m,n), D(m,n),
// C(n) follow the usual osp dictionary.
LieSuperalgebra build_matrix_family(const std::string& family, const std::vector<int>& params);

// Raw gl(m|n) on the matrix units, index i*(m+n)+j, unvalidated; used as an ambient algebra.
LieSuperalgebra gl_ambient(const std::vector<int>& row_parity);
// Raw W(n) on xi_K d_j with index K*n + j, unvalidated.
LieSuperalgebra w_ambient(int n);

}  // namespace superlie
