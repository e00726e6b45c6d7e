#include "superlie/family.hpp"
#include "superlie/realizations.hpp"
#include "superlie/serialize.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <random>

using namespace superlie;

namespace {

using Operator = std::map<std::pair<int, int>, Scalar>;  // sparse matrix or operator on monomial masks

// Sign of xi_A xi_B: one factor -1 per pair a in A, b in B with a > b.
int wedge_sign(unsigned a, unsigned b)
{
    if (a & b)
        return 0;
    int inv = 0;
    for (int i = 0; i < 32; ++i)
        if (a >> i & 1u)
            inv += std::popcount(b & ((1u << i) - 1));
    return inv % 2 ? -1 : 1;
}

// xi_K d_j applied to xi_M, as (mask, sign) or sign 0.
std::pair<unsigned, int> apply_term(unsigned k, int j, unsigned m)
{
    if (!(m >> j & 1u))
        return {0, 0};
    int sign = std::popcount(m & ((1u << j) - 1)) % 2 ? -1 : 1;
    unsigned rest = m & ~(1u << j);
    int s2 = wedge_sign(k, rest);
    return {k | rest, sign * s2};
}

// Operator of a basis element: entries (output mask, input mask) for derivations,
// (row, column) for matrices.
Operator realize(const LieSuperalgebra& g, int x)
{
    const auto& r = g.metadata.at("realization");
    Operator op;
    for (const auto& t : r.at("terms").at(x)) {
        Scalar c = parse_scalar(t.at(2).get<std::string>());
        if (r.at("kind") == "matrix") {
            op[{t.at(0).get<int>(), t.at(1).get<int>()}] += c;
        } else {
            int n = r.at("n").get<int>();
            unsigned k = t.at(0).get<unsigned>();
            for (unsigned m = 0; m < (1u << n); ++m) {
                auto [out, s] = apply_term(k, t.at(1).get<int>(), m);
                if (s)
                    op[{static_cast<int>(out), static_cast<int>(m)}] += s * c;
            }
        }
    }
    for (auto it = op.begin(); it != op.end();)
        it = it->second == 0 ? op.erase(it) : std::next(it);
    return op;
}

Operator compose(const Operator& a, const Operator& b)
{
    Operator out;
    for (const auto& [ab, x] : a)
        for (const auto& [bc, y] : b)
            if (ab.second == bc.first)
                out[{ab.first, bc.second}] += x * y;
    return out;
}

Operator combine(const Operator& a, const Scalar& s, const Operator& b)
{
    Operator out = a;
    for (const auto& [k, v] : b)
        out[k] += s * v;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

void expect_faithful(const std::string& spec)
{
    auto g = build_family(spec);
    std::vector<Operator> ops;
    for (int i = 0; i < g.dim(); ++i)
        ops.push_back(realize(g, i));
    for (int i = 0; i < g.dim(); ++i) {
        for (int j = i; j < g.dim(); ++j) {
            Scalar s = (g.parity[i] && g.parity[j]) ? 1 : -1;
            Operator lhs = combine(compose(ops[i], ops[j]), s, compose(ops[j], ops[i]));
            Operator rhs;
            for (const auto& [k, c] : g.br(i, j))
                rhs = combine(rhs, c, ops[k]);
            ASSERT_EQ(lhs, rhs) << spec << " [" << g.labels[i] << ", " << g.labels[j] << "]";
        }
    }
}

}  // namespace

TEST(Realization, MatrixFamiliesAreFaithful)
{
    for (const char* spec : {"sl:2,1", "sl:1,2", "sl:2,2", "gl:2,1", "osp:1,2", "osp:3,2", "osp:2,2", "p:2", "p:3"})
        expect_faithful(spec);
}

TEST(Realization, CartanFamiliesAreFaithful)
{
    for (const char* spec : {"W:2", "W:3", "S:3", "S:4", "S~:4", "H:4"})
        expect_faithful(spec);
}

TEST(Realization, CartanElementsAreSuperderivations)
{
    // D(ab) = D(a) b + (-1)^{|D||a|} a D(b) on random exterior elements.
    std::mt19937_64 rng(31);
    auto g = build_family("W:3");
    auto ext = build_exterior(3);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int x = 0; x < g.dim(); ++x) {
        auto D = as_superderivation(ext, g, SparseVec::unit(x));
        EXPECT_EQ(D.parity, g.parity[x]);
        for (int trial = 0; trial < 4; ++trial) {
            int ia = rng() % ext.dim(), ib = rng() % ext.dim();
            auto a = SparseVec::unit(ia, coef(rng) | 1), b = SparseVec::unit(ib, coef(rng) | 1);
            int pa = std::popcount(ext.mono[ia]) % 2;
            auto lhs = apply(ext, D, ext.mul(a, b));
            auto rhs = ext.mul(apply(ext, D, a), b);
            rhs.axpy((D.parity && pa) ? -1 : 1, ext.mul(a, apply(ext, D, b)));
            EXPECT_EQ(lhs, rhs) << g.labels[x];
        }
    }
}

TEST(Realization, SpecialAlgebrasAreDivergenceFree)
{
    for (int n : {3, 4}) {
        auto g = build_family("S:" + std::to_string(n));
        auto ext = build_exterior(n);
        for (int x = 0; x < g.dim(); ++x)
            EXPECT_TRUE(divergence(ext, as_superderivation(ext, g, SparseVec::unit(x))).empty()) << g.labels[x];
    }
}

TEST(Realization, TwistedSpecialCondition)
{
    // (1 + xi_1...xi_n) div D + D(xi_1...xi_n) = 0
    const int n = 4;
    auto g = build_family("S~:4");
    auto ext = build_exterior(n);
    auto top = SparseVec::unit(ext.index_of[(1u << n) - 1]);
    auto one_plus_top = SparseVec::unit(0) + top;
    for (int x = 0; x < g.dim(); ++x) {
        auto D = as_superderivation(ext, g, SparseVec::unit(x));
        auto lhs = ext.mul(one_plus_top, divergence(ext, D)) + apply(ext, D, top);
        EXPECT_TRUE(lhs.empty()) << g.labels[x];
    }
}

TEST(Realization, HamiltonianElementsPreserveTheForm)
{
    // Elements of H(n) are spanned by D_f; the bracket closes in a space of dimension 2^n - 2.
    for (int n : {4, 5}) {
        auto g = build_family("H:" + std::to_string(n));
        EXPECT_EQ(g.dim(), (1 << n) - 2);
        EXPECT_NO_THROW(validate(g));
    }
}

TEST(Realization, GradingDegreesAreAdditive)
{
    for (const char* spec : {"W:3", "S:3", "H:4", "sl:2,1", "p:2"}) {
        auto g = build_family(spec);
        const auto& deg = g.metadata.at("grading").at("degrees");
        for (int i = 0; i < g.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j)
                for (const auto& [k, c] : g.br(i, j))
                    EXPECT_EQ(deg[k].get<int>(), deg[i].get<int>() + deg[j].get<int>()) << spec;
    }
}

TEST(Realization, ExteriorAlgebraIsGradedCommutative)
{
    auto ext = build_exterior(4);
    for (int a = 0; a < ext.dim(); ++a) {
        for (int b = 0; b < ext.dim(); ++b) {
            auto ab = ext.mul(SparseVec::unit(a), SparseVec::unit(b));
            auto ba = ext.mul(SparseVec::unit(b), SparseVec::unit(a));
            int pa = std::popcount(ext.mono[a]) % 2, pb = std::popcount(ext.mono[b]) % 2;
            EXPECT_EQ(ab, Scalar((pa && pb) ? -1 : 1) * ba);
            EXPECT_EQ(ab.empty() ? 0 : ab.get(ext.index_of[ext.mono[a] | ext.mono[b]]),
                Scalar(wedge_sign(ext.mono[a], ext.mono[b])));
        }
    }
}
