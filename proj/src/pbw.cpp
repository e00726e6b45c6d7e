#include "superlie/pbw.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superlie {

std::size_t PBWSpace::VecHash::operator()(const std::vector<int>& v) const
{
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

PBWSpace::PBWSpace(std::shared_ptr<const LieSuperalgebra> L, std::vector<Role> role, std::vector<int> free_order,
    Vec character)
    : L_(std::move(L)), role_(std::move(role)), free_(std::move(free_order)), chi_(std::move(character))
{
    const int n = L_->dim();
    if (static_cast<int>(role_.size()) != n)
        throw std::invalid_argument("PBWSpace: role vector has wrong size");
    chi_.resize(n, 0);
    pos_.assign(n, -1);
    for (int p = 0; p < static_cast<int>(free_.size()); ++p) {
        if (role_[free_[p]] != Role::Free || pos_[free_[p]] != -1)
            throw std::invalid_argument("PBWSpace: free order must list each free element once");
        pos_[free_[p]] = p;
    }
    for (int z = 0; z < n; ++z)
        if (role_[z] == Role::Free && pos_[z] == -1)
            throw std::invalid_argument("PBWSpace: free element missing from the order");
    intern(std::vector<int>(free_.size(), 0));
}

int PBWSpace::intern(const std::vector<int>& exps)
{
    auto it = index_.find(exps);
    if (it != index_.end())
        return it->second;
    const int id = static_cast<int>(monos_.size());
    monos_.push_back(exps);
    index_.emplace(exps, id);
    return id;
}

int PBWSpace::length(int mono) const
{
    const auto& e = monos_[mono];
    return std::accumulate(e.begin(), e.end(), 0);
}

std::string PBWSpace::label(int mono) const
{
    const auto& e = monos_[mono];
    std::ostringstream os;
    bool any = false;
    for (std::size_t p = 0; p < e.size(); ++p) {
        if (e[p] == 0)
            continue;
        if (any)
            os << "*";
        os << L_->labels[free_[p]];
        if (e[p] > 1)
            os << "^" << e[p];
        any = true;
    }
    return any ? os.str() : "1";
}

SparseVec PBWSpace::act(int z, int mono)
{
    const unsigned long long key = (static_cast<unsigned long long>(z) << 32) | static_cast<unsigned>(mono);
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;

    SparseVec out;
    const std::vector<int> e = monos_[mono];
    int first = -1;
    for (std::size_t p = 0; p < e.size(); ++p)
        if (e[p]) {
            first = static_cast<int>(p);
            break;
        }

    if (first < 0) {
        // z acting on the generator
        if (role_[z] == Role::Free) {
            std::vector<int> f = e;
            f[pos_[z]] = 1;
            out = SparseVec::unit(intern(f));
        } else if (role_[z] == Role::Character && chi_[z] != 0) {
            out = SparseVec::unit(0, chi_[z]);
        }
    } else {
        const int pz = pos_[z];
        const int c = free_[first];
        std::vector<int> rest = e;
        rest[first] -= 1;
        const int rest_id = intern(rest);
        if (pz >= 0 && pz < first) {
            std::vector<int> f = e;
            f[pz] = 1;
            out = SparseVec::unit(intern(f));
        } else if (pz == first) {
            if (L_->parity[z] == 1) {
                // y y = (1/2)[y, y] for odd y
                SparseVec b = L_->br(z, z);
                out = act(b, SparseVec::unit(rest_id));
                out.scale(Scalar(1, 2));
            } else {
                std::vector<int> f = e;
                f[pz] += 1;
                out = SparseVec::unit(intern(f));
            }
        } else {
            // z c rest = [z, c] rest + (-1)^{|z||c|} c (z rest)
            out = act(L_->br(z, c), SparseVec::unit(rest_id));
            SparseVec tail = act(c, act(z, rest_id));
            if (L_->parity[z] == 1 && L_->parity[c] == 1)
                tail.scale(-1);
            out = out + tail;
        }
    }
    memo_.emplace(key, out);
    return out;
}

SparseVec PBWSpace::act(int z, const SparseVec& x)
{
    std::vector<SparseVec::Entry> terms;
    for (const auto& [m, a] : x) {
        SparseVec r = act(z, m);
        for (const auto& [k, b] : r)
            terms.emplace_back(k, a * b);
    }
    return SparseVec::from_terms(std::move(terms));
}

SparseVec PBWSpace::act(const SparseVec& u, const SparseVec& x)
{
    std::vector<SparseVec::Entry> terms;
    for (const auto& [z, a] : u) {
        SparseVec r = act(z, x);
        for (const auto& [k, b] : r)
            terms.emplace_back(k, a * b);
    }
    return SparseVec::from_terms(std::move(terms));
}

SparseVec PBWSpace::act_word(const std::vector<SparseVec>& word, const SparseVec& x)
{
    SparseVec v = x;
    for (auto it = word.rbegin(); it != word.rend() && !v.empty(); ++it)
        v = act(*it, v);
    return v;
}

std::vector<std::pair<std::vector<int>, Scalar>> pbw_straighten(std::shared_ptr<const LieSuperalgebra> L,
    const std::vector<int>& word, std::vector<int> order)
{
    const int n = L->dim();
    if (order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
    }
    PBWSpace U(L, std::vector<Role>(n, Role::Free), order, Vec(n, 0));
    SparseVec v = SparseVec::unit(0);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= n)
            throw DomainError("BAD_WORD", "word letter " + std::to_string(*it) + " is not a basis index");
        v = U.act(*it, v);
    }
    std::vector<std::pair<std::vector<int>, Scalar>> out;
    for (const auto& [m, a] : v)
        out.emplace_back(U.exponents(m), a);
    return out;
}

}  // namespace superlie
