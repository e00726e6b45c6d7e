#include "superlie/qlinalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace superlie;

namespace {

// Small integer matrices with a controllable rank: a product of random n x r and r x m factors.
std::vector<Vec> random_matrix(std::mt19937_64& rng, int n, int m, int r)
{
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<Vec> a(n, Vec(r)), b(r, Vec(m)), out(n, Vec(m, 0));
    for (auto& row : a)
        for (auto& x : row)
            x = d(rng);
    for (auto& row : b)
        for (auto& x : row)
            x = d(rng);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < m; ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

// Leibniz expansion; independent of elimination.
Scalar leibniz_det(const std::vector<Vec>& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Scalar total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inversions += p[i] > p[j];
        Scalar term = inversions % 2 ? -1 : 1;
        for (int i = 0; i < n; ++i)
            term *= m[i][p[i]];
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Rank as the size of the largest nonzero minor (n, m <= 4).
int minor_rank(const std::vector<Vec>& m)
{
    const int n = static_cast<int>(m.size()), c = static_cast<int>(m[0].size());
    for (int k = std::min(n, c); k > 0; --k) {
        std::vector<bool> rs(n, false), cs(c, false);
        std::fill(rs.begin(), rs.begin() + k, true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + k, true);
            do {
                std::vector<Vec> sub;
                for (int i = 0; i < n; ++i) {
                    if (!rs[i])
                        continue;
                    Vec row;
                    for (int j = 0; j < c; ++j)
                        if (cs[j])
                            row.push_back(m[i][j]);
                    sub.push_back(row);
                }
                if (leibniz_det(sub) != 0)
                    return k;
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
    }
    return 0;
}

}  // namespace

TEST(Scalar, ParsesExactForms)
{
    EXPECT_EQ(parse_scalar("3/6"), Scalar(1, 2));
    EXPECT_EQ(parse_scalar("-0.25"), Scalar(-1, 4));
    EXPECT_EQ(parse_scalar("7"), Scalar(7));
    EXPECT_EQ(to_string(parse_scalar("-4/6")), "-2/3");
    EXPECT_THROW(parse_scalar(""), std::invalid_argument);
    EXPECT_THROW(parse_scalar("1.5e3"), std::invalid_argument);
}

TEST(SparseVec, ArithmeticDropsZeros)
{
    auto a = SparseVec::from_terms({{3, 1}, {1, 2}, {3, -1}});
    EXPECT_EQ(a.size(), 1u);
    EXPECT_EQ(a.get(1), 2);
    auto b = a - a;
    EXPECT_TRUE(b.empty());
    auto c = SparseVec::from_dense({0, Scalar(2, 3), 0, Scalar(-4, 9)});
    c.make_primitive();
    EXPECT_EQ(c, SparseVec::from_dense({0, 3, 0, -2}));
}

TEST(Rref, RankMatchesMinorOracle)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 4, m = 1 + (trial / 4) % 4, r = trial % 3 + 1;
        auto dense = random_matrix(rng, n, m, r);
        auto M = SparseMatrix::from_dense(dense);
        EXPECT_EQ(rank(M), minor_rank(dense)) << "trial " << trial;
    }
}

TEST(Rref, KernelIsAnnihilatedAndHasComplementaryDimension)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 4, m = 2 + (trial / 3) % 5, r = 1 + trial % 3;
        auto M = SparseMatrix::from_dense(random_matrix(rng, n, m, r));
        auto ker = kernel(M);
        EXPECT_EQ(static_cast<int>(ker.size()) + rank(M), m);
        for (const auto& k : ker)
            EXPECT_TRUE(M.apply(k).empty());
        EXPECT_EQ(static_cast<int>(span_basis(ker).size()), static_cast<int>(ker.size()));
    }
}

TEST(Echelon, MembershipAgreesWithRankIncrease)
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        Echelon e;
        std::vector<SparseVec> seen;
        for (int k = 0; k < 6; ++k) {
            Vec v(5);
            for (auto& x : v)
                x = d(rng);
            auto sv = SparseVec::from_dense(v);
            int before = static_cast<int>(span_basis(seen).size());
            seen.push_back(sv);
            int after = static_cast<int>(span_basis(seen).size());
            EXPECT_EQ(e.add(sv), after > before);
        }
        for (const auto& v : seen)
            EXPECT_TRUE(e.contains(v));
    }
}

TEST(SpanCoordinates, ReconstructsVectors)
{
    std::vector<SparseVec> basis = {SparseVec::from_dense({1, 1, 0}), SparseVec::from_dense({0, 1, 1})};
    SpanCoordinates sc(basis);
    auto c = sc.coords(SparseVec::from_dense({2, 5, 3}));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->get(0), 2);
    EXPECT_EQ(c->get(1), 3);
    EXPECT_FALSE(sc.coords(SparseVec::from_dense({1, 0, 0})).has_value());
    EXPECT_THROW(SpanCoordinates({basis[0], basis[0]}), std::invalid_argument);
}

TEST(Charpoly, CayleyHamiltonAndInvariants)
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + trial % 4;
        auto m = random_matrix(rng, n, n, n);
        auto c = charpoly(m);
        ASSERT_EQ(static_cast<int>(c.size()), n + 1);
        EXPECT_EQ(c[n], 1);
        Scalar tr = 0;
        for (int i = 0; i < n; ++i)
            tr += m[i][i];
        EXPECT_EQ(c[n - 1], -tr);
        EXPECT_EQ(c[0], (n % 2 ? -1 : 1) * leibniz_det(m));
        // sum_k c_k M^k = 0
        auto M = SparseMatrix::from_dense(m);
        SparseMatrix power = SparseMatrix::identity(n), acc(n, n);
        for (int k = 0; k <= n; ++k) {
            for (int i = 0; i < n; ++i)
                acc.row[i].axpy(c[k], power.row[i]);
            power = power * M;
        }
        for (int i = 0; i < n; ++i)
            EXPECT_TRUE(acc.row[i].empty());
    }
}

TEST(SolveStrict, WitnessRealizesSigns)
{
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> d(-3, 3);
    int feasible = 0;
    for (int trial = 0; trial < 80; ++trial) {
        // Signs taken from a hidden point are always feasible.
        Vec hidden(3);
        for (auto& x : hidden)
            x = d(rng);
        std::vector<Vec> fs;
        std::vector<int> signs;
        for (int k = 0; k < 5; ++k) {
            Vec f(3);
            for (auto& x : f)
                x = d(rng);
            Scalar v = dot(f, hidden);
            if (v == 0)
                continue;
            fs.push_back(f);
            signs.push_back(v > 0 ? 1 : -1);
        }
        auto h = solve_strict(fs, signs);
        ASSERT_TRUE(h.has_value()) << "trial " << trial;
        for (std::size_t i = 0; i < fs.size(); ++i)
            EXPECT_EQ(sgn(dot(fs[i], *h)), signs[i]);
        ++feasible;
    }
    EXPECT_EQ(feasible, 80);
}

TEST(SolveStrict, DetectsInfeasibility)
{
    // x > 0, y > 0, x + y < 0
    EXPECT_FALSE(solve_strict({{1, 0}, {0, 1}, {1, 1}}, {1, 1, -1}).has_value());
    // f and -f with the same sign
    EXPECT_FALSE(solve_strict({{1, 2}, {-1, -2}}, {1, 1}).has_value());
}

TEST(PrimitiveInteger, CoprimeIntegers)
{
    auto v = primitive_integer({Scalar(1, 2), Scalar(-3, 4), 0});
    EXPECT_EQ(v, (Vec{2, -3, 0}));
}
