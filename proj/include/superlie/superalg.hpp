#pragma once

#include "superlie/errors.hpp"
#include "superlie/qlinalg.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace superlie {

using Element = SparseVec;

struct LieSuperalgebra {
    std::vector<std::string> labels;
    std::vector<int> parity;       // 0 even, 1 odd
    std::vector<SparseVec> table;  // table[i * dim + j] = [x_i, x_j]
    nlohmann::json metadata = nlohmann::json::object();

    int dim() const { return static_cast<int>(labels.size()); }
    const SparseVec& br(int i, int j) const { return table[static_cast<std::size_t>(i) * labels.size() + j]; }
};

// Validates super skew-symmetry, parity of brackets and the super Jacobi identity
// exhaustively. Throws DomainError SKEW_VIOLATION / PARITY_VIOLATION / JACOBI_VIOLATION.
LieSuperalgebra make_superalgebra(std::vector<std::string> labels, std::vector<int> parity,
    std::vector<SparseVec> table, nlohmann::json metadata = nlohmann::json::object());
void validate(const LieSuperalgebra& g);

SparseVec bracket(const LieSuperalgebra& g, const SparseVec& a, const SparseVec& b);
// [x_i, v] for a basis element x_i.
SparseVec bracket_basis(const LieSuperalgebra& g, int i, const SparseVec& v);
// 0 or 1 for homogeneous nonzero elements, 0 for zero, -1 for mixed parity.
int parity_of(const LieSuperalgebra& g, const SparseVec& a);
// Row i, column j holds the x_i coefficient of [a, x_j].
SparseMatrix adjoint(const LieSuperalgebra& g, const SparseVec& a);
Scalar supertrace(const LieSuperalgebra& g, const SparseMatrix& m);

// A subspace stored by its canonical reduced echelon basis.
class Subspace {
public:
    Subspace() = default;
    Subspace(int ambient, const std::vector<SparseVec>& spanning);
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<SparseVec>& basis() const { return basis_; }
    bool contains(const SparseVec& v) const { return ech_.contains(v); }
    bool contains(const Subspace& other) const;
    SparseVec reduce(const SparseVec& v) const { return ech_.reduce(v); }
    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    int ambient_ = 0;
    std::vector<SparseVec> basis_;
    Echelon ech_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace derived_subalgebra(const LieSuperalgebra& g);
bool is_subalgebra(const LieSuperalgebra& g, const Subspace& s);
bool is_ideal(const LieSuperalgebra& g, const Subspace& s);
// Smallest subspace containing `start` and stable under ad(x) for every x in `acting`.
Subspace ad_closure(const LieSuperalgebra& g, const std::vector<SparseVec>& acting, const Subspace& start);

// The subalgebra spanned by `basis` (independent, homogeneous) with structure constants
// in that basis. Throws DomainError NOT_CLOSED.
LieSuperalgebra restrict_to(const LieSuperalgebra& g, const std::vector<SparseVec>& basis,
    std::vector<std::string> labels, nlohmann::json metadata = nlohmann::json::object(), bool check = true);
// Throws DomainError NOT_AN_IDEAL. Coset representatives are the non-pivot basis elements.
LieSuperalgebra quotient_by_ideal(const LieSuperalgebra& g, const Subspace& ideal);
// Indices of g's basis kept as coset representatives by quotient_by_ideal.
std::vector<int> quotient_representatives(const LieSuperalgebra& g, const Subspace& ideal);

// Human-readable expansion such as "x1d1-x2d2".
std::string expansion_label(const SparseVec& v, const std::vector<std::string>& labels);

}  // namespace superlie
