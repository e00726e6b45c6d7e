#pragma once

#include "superlie/roots.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace superlie {

struct TriangularDecomposition {
    std::shared_ptr<const RootDatum> datum;
    Vec witness;                 // over the functional coordinates; alpha(h) = alpha . witness
    std::vector<bool> positive;  // per root index
    Subspace n_plus, n_minus, borel;
    std::string provenance;

    std::vector<int> positive_roots() const;
    std::vector<int> negative_roots() const;
    Scalar value(int root) const;
};

// Throws DomainError NOT_REGULAR (detail names the vanishing root).
TriangularDecomposition positive_system(std::shared_ptr<const RootDatum> datum, const Vec& witness);
// The decomposition whose positive set is given by signs (+1/-1 per root), or nullopt when no
// regular element realizes it.
std::optional<TriangularDecomposition> realize_signs(std::shared_ptr<const RootDatum> datum,
    const std::vector<int>& signs);

// Weight in the realization (diagonal matrix position or exterior generator coefficients) and
// an optional height, converted to functional coordinates.
Vec functional_from_weight(const RootDatum& d, const Vec& weight, const Scalar& height = 0);

// variant: "distinguished" (for Cartan type equal to "bmax"), "bmax" or "bmin".
TriangularDecomposition distinguished_decomposition(std::shared_ptr<const RootDatum> datum,
    const std::string& variant = "distinguished");
TriangularDecomposition opposite(const TriangularDecomposition& dec);

struct SimpleRoot {
    int root = -1;
    SparseVec x, y, h;  // y and h are empty when -alpha is not a root
};

struct SimpleSystem {
    TriangularDecomposition dec;
    std::vector<SimpleRoot> simples;  // ordered by root index

    std::vector<int> roots() const;
    const SimpleRoot* find(int root) const;
};

SimpleSystem simple_system(const TriangularDecomposition& dec);
// Value of the functional on a Cartan element.
Scalar evaluate_on_cartan(const RootDatum& d, const Vec& functional, const SparseVec& h);
// Three-case formula on the simple set; throws NOT_SIMPLE, NOT_ISOTROPIC. The returned system
// is recomputed from the reflected positive set and checked against the formula.
SimpleSystem odd_reflection(const SimpleSystem& sys, int beta);
std::vector<Vec> odd_reflection_formula(const SimpleSystem& sys, int beta);
// (R+ \ {alpha}) u {-alpha if a root}; throws NOT_SIMPLE_FOR_BOREL.
TriangularDecomposition serganova_reflection(const TriangularDecomposition& dec, int alpha);
std::vector<int> serganova_simples(const TriangularDecomposition& dec);

bool is_cartan_type(const RootDatum& d);
// Roots of the reductive part r: height-0 roots for Cartan type, even roots otherwise.
std::vector<bool> reductive_roots(const RootDatum& d);
Subspace reductive_part(const RootDatum& d);

// Index of the root whose space meets ker ad(n-) (lowest) or ker ad(n+) (highest).
// Throws NOT_UNIQUE for non-simple input outside the sl(n|n) / A(n,n) relaxation.
int extremal_root(const TriangularDecomposition& dec, const std::string& direction);

struct Conditions {
    bool c1 = false;
    bool c2 = false;
    bool parabolic = false;
    int lowest_root = -1;  // -theta
};
Conditions check_conditions(const TriangularDecomposition& dec);

struct ChainResult {
    std::vector<TriangularDecomposition> steps;  // starting decomposition first
    std::vector<Vec> reflected;                  // functionals reflected at, in order
    bool completed = false;
    bool endpoint_c2 = false;
    std::string failure;
};
// The explicit family chain (odd reflections for sl/A/C, Serganova chains for W/S/H/p).
ChainResult family_chain(std::shared_ptr<const RootDatum> datum);

// Distinguished when already C2, then the family chain, then a linear-programming search over
// candidate lowest roots of r. Throws SEARCH_EXHAUSTED.
TriangularDecomposition find_c2_decomposition(std::shared_ptr<const RootDatum> datum);

// All triangular decompositions (chambers), by DFS over root signs pruned with solve_strict.
std::vector<TriangularDecomposition> enumerate_chambers(std::shared_ptr<const RootDatum> datum,
    std::size_t limit = 100000);

}  // namespace superlie
