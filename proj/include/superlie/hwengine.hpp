#pragma once

#include "superlie/pbw.hpp"
#include "superlie/triangular.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace superlie {

// A cyclic module U(L) w presented by
//   raising block . w = 0,  z . w = psi(z) w on the Cartan-like block,  r . w = 0 for r in relations.
// The basis of L must be adapted: every basis element is a weight vector in exactly one block.
struct Presentation {
    std::shared_ptr<const LieSuperalgebra> L;
    std::vector<int> block;   // -1 lowering, 0 Cartan-like, +1 raising
    std::vector<Vec> weight;  // per basis element, in weight coordinates
    std::vector<int> depth;   // per basis element; positive exactly on the lowering block
    Vec psi;                  // per basis element; read on the Cartan-like block only
    bool cartan_diagonal = true;  // the Cartan-like block acts by psi on every weight space
    // Each relation is a product u_1 ... u_k (elements of L), applied to w as u_1(...(u_k w)).
    std::vector<std::vector<SparseVec>> relations;
    Vec highest;  // weight of w
};

struct WeightSpace {
    Vec weight;
    int depth = 0;
    int dim = 0;
};

struct ModuleEngine;

// Weight spaces are listed when nonzero, sorted by (depth, weight).
// Certificates: FINITE (band of vanishing depths), INFINITE (structural), TRUNCATED (cutoff reached).
struct WeightModule {
    std::string certificate;
    std::string reason;
    int cutoff = 0;
    int max_depth = 0;  // deepest depth computed
    Vec highest;
    std::vector<WeightSpace> spaces;
    std::shared_ptr<ModuleEngine> engine;  // absent for structural certificates

    long long total_dim() const;
    std::map<Vec, int> dims() const;
    int dim_at(const Vec& weight) const;
    bool has_action() const { return engine != nullptr; }
    // Index into `spaces` of a weight, or -1.
    int space_index(const Vec& weight) const;
    // z . v for v given by coordinates in spaces[s]; returns (target index or -1 when zero, coordinates).
    // Throws DomainError OUT_OF_RANGE when the target lies beyond the computed depth of a
    // module that is not certified finite.
    std::pair<int, SparseVec> act(int z, int s, const SparseVec& coords) const;
    // Labels of the PBW monomials representing the basis of spaces[s].
    std::vector<std::string> basis_labels(int s) const;
    const Presentation& presentation() const;
};

// cutoff <= 0 selects the default depth budget.
WeightModule cyclic_module(const Presentation& p, int cutoff = 0);

// Quotient by the maximal submodule avoiding the generator, computed top-down; the result carries
// no action. Throws DomainError NOT_FINITE unless m is certified finite.
WeightModule irreducible_quotient(const WeightModule& m);

std::string finiteness_status(const WeightModule& m);

// g in a basis adapted to dec: lowering (negative root vectors), Cartan, raising. Roots outside
// `keep` are dropped (pass an empty vector to keep everything).
struct AdaptedAlgebra {
    std::shared_ptr<const LieSuperalgebra> L;
    std::vector<SparseVec> basis;  // the adapted basis over g's basis
    std::vector<int> root_of;      // per adapted element: root index, or -1 for Cartan
    std::vector<int> cartan_index; // per adapted element: Cartan index, or -1
    std::vector<bool> reductive;   // per adapted element: lies in r (Cartan included)
    std::vector<int> block;
    std::vector<Vec> weight;
    std::vector<int> depth;
    SpanCoordinates coords;        // g-basis vector -> adapted coordinates
};
AdaptedAlgebra adapt(const TriangularDecomposition& dec, const std::vector<bool>& keep = {});

// Integer depth of each root: -alpha(h) scaled to coprime integers (positive on negative roots).
std::vector<int> root_depths(const TriangularDecomposition& dec);

// Simple roots of the even (or degree-zero) reductive part with respect to dec, with sl(2) triples.
struct ReductiveSimple {
    int root = -1;
    SparseVec x, y, h;  // over g's basis; alpha(h) = 2
};
std::vector<ReductiveSimple> reductive_simples(const TriangularDecomposition& dec);

// lambda gives values on the Cartan basis. Throws DomainError INVALID_LAMBDA when lambda(h_alpha)
// is not a non-negative integer for a simple root of r.
WeightModule kac_module(const TriangularDecomposition& dec, const Vec& lambda, int cutoff = 0);
WeightModule r_highest_weight_module(const TriangularDecomposition& dec, const Vec& lambda, int cutoff = 0);

// Full weight (appends the grading coordinate when the datum has one).
Vec full_weight(const RootDatum& d, const Vec& lambda);
// Default depth budget: (4 sum_{alpha in Delta_r} lambda(h_alpha) + #odd lowering + 1) * max depth.
int default_cutoff(int lambda_sum, int odd_lowering, int max_depth);

}  // namespace superlie
