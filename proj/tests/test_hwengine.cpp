#include "superlie/family.hpp"
#include "superlie/hwengine.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace superlie;

namespace {

std::shared_ptr<const RootDatum> datum(const std::string& spec)
{
    return root_datum(std::make_shared<const LieSuperalgebra>(build_family(spec)));
}

using Dense = std::vector<Vec>;

// Matrices of the defining representation read from the realization metadata.
std::vector<Dense> defining_rep(const LieSuperalgebra& g)
{
    const auto& r = g.metadata.at("realization");
    const int n = r.at("size").get<int>();
    std::vector<Dense> out;
    for (const auto& terms : r.at("terms")) {
        Dense m(n, Vec(n, 0));
        for (const auto& t : terms)
            m[t.at(0).get<int>()][t.at(1).get<int>()] += parse_scalar(t.at(2).get<std::string>());
        out.push_back(m);
    }
    return out;
}

Dense mul(const Dense& a, const Dense& b)
{
    const std::size_t n = a.size();
    Dense c(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

Dense identity(std::size_t n)
{
    Dense m(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

// Vectors of a module as (space index -> coordinates).
using ModVec = std::map<int, SparseVec>;

ModVec act(const WeightModule& m, const SparseVec& z, const ModVec& v)
{
    ModVec out;
    for (const auto& [s, coords] : v) {
        for (const auto& [zi, c] : z) {
            auto [t, w] = m.act(zi, s, coords);
            if (t >= 0)
                out[t].axpy(c, w);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

ModVec combine(ModVec a, const Scalar& s, const ModVec& b)
{
    for (const auto& [k, v] : b)
        a[k].axpy(s, v);
    for (auto it = a.begin(); it != a.end();)
        it = it->second.empty() ? a.erase(it) : std::next(it);
    return a;
}

// [z1, z2] v = z1 z2 v - (-1)^{|z1||z2|} z2 z1 v on every basis vector.
void expect_representation(const WeightModule& m)
{
    ASSERT_TRUE(m.has_action());
    const auto& L = *m.presentation().L;
    for (std::size_t s = 0; s < m.spaces.size(); ++s) {
        for (int b = 0; b < m.spaces[s].dim; ++b) {
            ModVec v = {{static_cast<int>(s), SparseVec::unit(b)}};
            for (int i = 0; i < L.dim(); ++i) {
                for (int j = i; j < L.dim(); ++j) {
                    auto zi = SparseVec::unit(i), zj = SparseVec::unit(j);
                    Scalar sign = (L.parity[i] && L.parity[j]) ? -1 : 1;
                    auto lhs = act(m, L.br(i, j), v);
                    auto rhs = combine(act(m, zi, act(m, zj, v)), -sign, act(m, zj, act(m, zi, v)));
                    ASSERT_EQ(lhs, rhs) << "space " << s << " basis " << b << " pair " << i << "," << j;
                }
            }
        }
    }
}

// Weight multiset of Lambda(g_-1) (x) L_0(lambda) for sl(2|1) distinguished: L_0 is the
// (n+1)-dimensional gl(2)-module with weights hw - k alpha.
std::map<Vec, int> induced_oracle(const TriangularDecomposition& dec, const Vec& hw, int n)
{
    const auto& d = *dec.datum;
    std::vector<Vec> odd_neg;
    Vec alpha;
    for (int r : dec.negative_roots())
        if (d.roots[r].parity == 1)
            odd_neg.push_back(d.roots[r].functional);
    for (int r : dec.positive_roots())
        if (d.roots[r].parity == 0)
            alpha = d.roots[r].functional;
    std::map<Vec, int> out;
    for (int k = 0; k <= n; ++k) {
        for (unsigned mask = 0; mask < (1u << odd_neg.size()); ++mask) {
            Vec w = hw;
            for (std::size_t i = 0; i < w.size(); ++i) {
                w[i] -= k * alpha[i];
                for (std::size_t j = 0; j < odd_neg.size(); ++j)
                    if (mask >> j & 1u)
                        w[i] += odd_neg[j][i];
            }
            ++out[w];
        }
    }
    return out;
}

}  // namespace

TEST(Straighten, AgreesWithTheDefiningRepresentation)
{
    // A normal form is correct iff it evaluates to the same operator as the word in a faithful
    // representation of the enveloping algebra's degree <= 4 part (checked on many words).
    std::mt19937_64 rng(51);
    for (const char* spec : {"sl:2,1", "osp:1,2", "p:2"}) {
        auto g = std::make_shared<const LieSuperalgebra>(build_family(spec));
        auto rep = defining_rep(*g);
        const std::size_t n = rep[0].size();
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<int> word(1 + trial % 4);
            for (auto& w : word)
                w = static_cast<int>(rng() % g->dim());
            Dense lhs = identity(n);
            for (int w : word)
                lhs = mul(lhs, rep[w]);
            Dense rhs(n, Vec(n, 0));
            for (const auto& [exps, c] : pbw_straighten(g, word)) {
                Dense term = identity(n);
                for (int x = 0; x < g->dim(); ++x)
                    for (int e = 0; e < exps[x]; ++e)
                        term = mul(term, rep[x]);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        rhs[i][j] += c * term[i][j];
            }
            EXPECT_EQ(lhs, rhs) << spec << " trial " << trial;
        }
    }
}

TEST(Straighten, NormalFormsAreOrderedAndOddSquareFree)
{
    auto g = std::make_shared<const LieSuperalgebra>(build_family("sl:2,1"));
    std::vector<int> order(g->dim());
    for (int i = 0; i < g->dim(); ++i)
        order[i] = g->dim() - 1 - i;
    auto nf = pbw_straighten(g, {4, 4, 2, 3}, order);
    for (const auto& [exps, c] : nf) {
        EXPECT_NE(c, 0);
        for (int k = 0; k < g->dim(); ++k)
            if (g->parity[order[k]])
                EXPECT_LE(exps[k], 1);
    }
    EXPECT_THROW(pbw_straighten(g, {0, 99}), DomainError);
}

TEST(KacModule, Sl2MatchesClassicalDimensions)
{
    auto d = datum("sl:2,0");
    auto dec = distinguished_decomposition(d);
    for (int lam = 0; lam <= 6; ++lam) {
        auto m = kac_module(dec, {lam});
        EXPECT_EQ(m.certificate, "FINITE");
        EXPECT_EQ(m.total_dim(), lam + 1);
        for (const auto& s : m.spaces)
            EXPECT_EQ(s.dim, 1);
    }
}

TEST(KacModule, Osp12IsTheIrreducibleOfDimension2LambdaPlus1)
{
    auto d = datum("osp:1,2");
    for (const auto& dec : {distinguished_decomposition(d), opposite(distinguished_decomposition(d))}) {
        for (int lam = 0; lam <= 3; ++lam) {
            // The coroot changes sign with the decomposition.
            Scalar l = dec.provenance.rfind("opposite", 0) == 0 ? -lam : lam;
            auto m = kac_module(dec, {l});
            EXPECT_EQ(m.certificate, "FINITE");
            EXPECT_EQ(m.total_dim(), 2 * lam + 1);
            EXPECT_EQ(irreducible_quotient(m).total_dim(), 2 * lam + 1);
        }
    }
}

TEST(KacModule, Sl21DistinguishedMatchesInducedOracle)
{
    auto d = datum("sl:2,1");
    auto dec = distinguished_decomposition(d);
    auto simples = reductive_simples(dec);
    ASSERT_EQ(simples.size(), 1u);
    for (int a = 0; a <= 2; ++a) {
        for (int b = -1; b <= 1; ++b) {
            // Choose lambda with lambda(h_alpha) = a by solving on the Cartan basis.
            Vec lambda = {0, b};
            const Scalar at = evaluate_on_cartan(*d, full_weight(*d, lambda), simples[0].h);
            const Scalar unit = evaluate_on_cartan(*d, full_weight(*d, {1, 0}), simples[0].h);
            lambda[0] = (a - at) / unit;
            auto m = kac_module(dec, lambda);
            ASSERT_EQ(m.certificate, "FINITE");
            EXPECT_EQ(m.dims(), induced_oracle(dec, full_weight(*d, lambda), a)) << a << "," << b;
            EXPECT_EQ(m.total_dim(), 4 * (a + 1));
        }
    }
}

TEST(KacModule, ActionIsARepresentation)
{
    auto sl = datum("sl:2,1");
    expect_representation(kac_module(distinguished_decomposition(sl), {1, 0}));
    auto osp = datum("osp:1,2");
    expect_representation(kac_module(distinguished_decomposition(osp), {2}));
    auto w = datum("W:2");
    expect_representation(kac_module(distinguished_decomposition(w, "bmax"), {1, 0}));
}

TEST(KacModule, CartanTypeCertificates)
{
    auto w2 = datum("W:2");
    for (const char* v : {"bmax", "bmin"}) {
        auto dec = distinguished_decomposition(w2, v);
        auto c = check_conditions(dec);
        ASSERT_TRUE(c.c1);
        // dim n^-_1 = 2, dim L_0(0) = 1
        auto m = kac_module(dec, {0, 0});
        EXPECT_EQ(m.certificate, "FINITE") << v;
        EXPECT_LE(m.total_dim(), 4);
    }
    auto w3 = datum("W:3");
    auto m = kac_module(distinguished_decomposition(w3, "bmin"), {0, 0, 0});
    EXPECT_EQ(m.certificate, "INFINITE");
    EXPECT_EQ(m.reason, "parabolic_even_complement");
    EXPECT_FALSE(m.has_action());
    EXPECT_THROW(irreducible_quotient(m), DomainError);
}

TEST(KacModule, RejectsNonIntegralLambda)
{
    auto dec = distinguished_decomposition(datum("sl:2,0"));
    for (Scalar bad : {Scalar(-1), Scalar(1, 2)}) {
        try {
            kac_module(dec, {bad});
            FAIL();
        } catch (const DomainError& e) {
            EXPECT_EQ(e.code(), "INVALID_LAMBDA");
        }
    }
    EXPECT_THROW(kac_module(dec, {1, 2}), DomainError);
}

TEST(IrreducibleQuotient, AtypicalSl21)
{
    auto dec = distinguished_decomposition(datum("sl:2,1"));
    EXPECT_EQ(irreducible_quotient(kac_module(dec, {0, 0})).total_dim(), 1);
    EXPECT_EQ(irreducible_quotient(kac_module(dec, {1, 0})).total_dim(), 3);
    // r-highest weight module: the even part alone.
    EXPECT_EQ(r_highest_weight_module(dec, {1, 0}).total_dim(), 2);
}

TEST(IrreducibleQuotient, SubmoduleFreeForSl2)
{
    auto dec = distinguished_decomposition(datum("sl:2,0"));
    for (int lam = 0; lam <= 4; ++lam) {
        auto m = kac_module(dec, {lam});
        EXPECT_EQ(irreducible_quotient(m).dims(), m.dims());
    }
}

namespace {

// sl(2) Verma presentation at highest weight 2; y is the lowering element.
Presentation sl2_verma(int& y)
{
    auto g = std::make_shared<const LieSuperalgebra>(build_family("sl:2,0"));
    auto dec = distinguished_decomposition(root_datum(g));
    auto a = adapt(dec);
    Presentation p;
    p.L = a.L;
    p.block = a.block;
    p.weight = a.weight;
    p.depth = a.depth;
    p.highest = {2};
    for (std::size_t z = 0; z < a.basis.size(); ++z)
        p.psi.push_back(a.cartan_index[z] >= 0 ? Scalar(2) : Scalar(0));
    for (std::size_t z = 0; z < a.basis.size(); ++z)
        if (a.block[z] < 0)
            y = static_cast<int>(z);
    return p;
}

}  // namespace

TEST(CyclicModule, VermaModuleIsTruncated)
{
    int y = -1;
    auto m = cyclic_module(sl2_verma(y), 5);
    EXPECT_EQ(m.certificate, "TRUNCATED");
    for (const auto& s : m.spaces)
        EXPECT_EQ(s.dim, 1);
    EXPECT_GE(m.max_depth, 5);
    try {
        irreducible_quotient(m);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.code(), "NOT_FINITE");
    }
    const int last = static_cast<int>(m.spaces.size()) - 1;
    EXPECT_THROW(m.act(y, last, SparseVec::unit(0)), DomainError);
}

TEST(CyclicModule, RelationsCutTheVerma)
{
    // The relation y^3 w = 0 leaves the 3-dimensional module.
    int y = -1;
    auto p = sl2_verma(y);
    p.relations.push_back({SparseVec::unit(y), SparseVec::unit(y), SparseVec::unit(y)});
    auto m = cyclic_module(p, 10);
    EXPECT_EQ(m.certificate, "FINITE");
    EXPECT_EQ(m.total_dim(), 3);
    expect_representation(m);
}

TEST(Cutoff, DefaultFormula)
{
    EXPECT_EQ(default_cutoff(0, 0, 1), 1);
    EXPECT_EQ(default_cutoff(2, 2, 1), 11);
    EXPECT_EQ(default_cutoff(1, 3, 2), 16);
}
