#pragma once

#include "superlie/superalg.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace superlie {

// Role of a basis element of L in an induced module U(L) (x)_{U(P)} k_chi.
//   Free:         PBW variable of the module (ordered by free position)
//   Annihilating: kills the generator
//   Character:    acts on the generator by the scalar chi
// P (the span of the last two kinds) must be a subalgebra and chi a character of P; the caller
// guarantees this. With every element Free the space is U(L) itself.
enum class Role { Free, Annihilating, Character };

class PBWSpace {
public:
    PBWSpace(std::shared_ptr<const LieSuperalgebra> L, std::vector<Role> role, std::vector<int> free_order,
        Vec character);

    const LieSuperalgebra& algebra() const { return *L_; }
    int free_count() const { return static_cast<int>(free_.size()); }
    int free_element(int pos) const { return free_[pos]; }  // algebra index
    int free_position(int z) const { return pos_[z]; }      // -1 if not free
    Role role(int z) const { return role_[z]; }

    // Monomial 0 is the generator (empty word).
    int intern(const std::vector<int>& exps);
    const std::vector<int>& exponents(int mono) const { return monos_[mono]; }
    int monomial_count() const { return static_cast<int>(monos_.size()); }
    int length(int mono) const;
    std::string label(int mono) const;

    // z . m for a basis element z of L, in normal form.
    SparseVec act(int z, int mono);
    SparseVec act(int z, const SparseVec& x);
    SparseVec act(const SparseVec& u, const SparseVec& x);
    // u_1 u_2 ... u_k . x (u_k applied first).
    SparseVec act_word(const std::vector<SparseVec>& word, const SparseVec& x);

private:
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const;
    };

    std::shared_ptr<const LieSuperalgebra> L_;
    std::vector<Role> role_;
    std::vector<int> free_;
    std::vector<int> pos_;
    Vec chi_;
    std::vector<std::vector<int>> monos_;
    std::unordered_map<std::vector<int>, int, VecHash> index_;
    std::unordered_map<unsigned long long, SparseVec> memo_;
};

// Normal form of the word x_{w_1} ... x_{w_k} in U(L) for the PBW order given by `order`
// (a permutation of the basis; defaults to basis order). Returns (exponents over `order`, coefficient).
std::vector<std::pair<std::vector<int>, Scalar>> pbw_straighten(std::shared_ptr<const LieSuperalgebra> L,
    const std::vector<int>& word, std::vector<int> order = {});

}  // namespace superlie
