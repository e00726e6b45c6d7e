#pragma once

#include "superlie/superalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace superlie {

struct Root {
    Vec functional;            // values on the Cartan basis, then the grading value if external
    int parity = 0;
    std::optional<int> height;
    int multiplicity = 0;
    std::vector<SparseVec> space;  // basis of g_alpha over the algebra basis
};

struct GradingInfo {
    std::string kind;                 // internal, external, height_only, none
    std::optional<SparseVec> element; // present when internal
    std::vector<int> degrees;         // per basis element (zeros when kind == none)
};

struct RootDatum {
    std::shared_ptr<const LieSuperalgebra> g;
    std::vector<SparseVec> cartan;
    GradingInfo grading;
    bool extra_coordinate = false;   // grading value appended to functionals
    Vec grading_in_cartan;           // internal grading element in Cartan coordinates
    std::vector<Root> roots;         // sorted by (height, functional)
    Subspace zero_weight;

    int rank() const { return static_cast<int>(cartan.size()); }
    int coord_dim() const { return rank() + (extra_coordinate ? 1 : 0); }
    // Index of the root with this functional, or -1.
    int find(const Vec& f) const;
    std::optional<Scalar> height_of(const Vec& f) const;
};

std::vector<SparseVec> cartan_subalgebra(const LieSuperalgebra& g);
GradingInfo grading_element(const LieSuperalgebra& g);

// Throws DomainError NON_DIAGONALIZABLE, ZERO_WEIGHT_MISMATCH, MIXED_PARITY_ROOT.
std::shared_ptr<const RootDatum> root_datum(const LieSuperalgebra& g);
std::shared_ptr<const RootDatum> root_datum(std::shared_ptr<const LieSuperalgebra> g);

// Joint eigenspace decomposition of commuting operators acting on span(start).
// Returns (eigenvalue vector, eigenspace basis) pairs in order of discovery.
std::vector<std::pair<Vec, std::vector<SparseVec>>> joint_eigenspaces(
    const std::vector<SparseMatrix>& ops, const std::vector<SparseVec>& start);

Vec functional_add(const Vec& a, const Vec& b);
Vec functional_neg(const Vec& a);
std::string functional_string(const Vec& f);

}  // namespace superlie
