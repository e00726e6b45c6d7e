#include "superlie/roots.hpp"

#include "superlie/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace superlie {

Vec functional_add(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec functional_neg(const Vec& a)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

std::string functional_string(const Vec& f)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < f.size(); ++i)
        os << (i ? "," : "") << to_string(f[i]);
    os << ")";
    return os.str();
}

int RootDatum::find(const Vec& f) const
{
    auto it = std::find_if(roots.begin(), roots.end(), [&](const Root& r) { return r.functional == f; });
    return it == roots.end() ? -1 : static_cast<int>(it - roots.begin());
}

std::optional<Scalar> RootDatum::height_of(const Vec& f) const
{
    if (extra_coordinate)
        return f.back();
    if (grading.kind == "internal")
        return dot(grading_in_cartan, Vec(f.begin(), f.begin() + rank()));
    return std::nullopt;
}

std::vector<SparseVec> cartan_subalgebra(const LieSuperalgebra& g)
{
    if (!g.metadata.contains("cartan"))
        throw DomainError("UNKNOWN_FAMILY", "algebra carries no Cartan metadata");
    std::vector<SparseVec> out;
    for (const auto& h : g.metadata.at("cartan"))
        out.push_back(sparse_from_json(h));
    return out;
}

GradingInfo grading_element(const LieSuperalgebra& g)
{
    GradingInfo info;
    info.kind = "none";
    info.degrees.assign(g.dim(), 0);
    if (!g.metadata.contains("grading"))
        return info;
    const auto& gr = g.metadata.at("grading");
    info.kind = gr.at("kind").get<std::string>();
    if (gr.contains("degrees"))
        info.degrees = gr.at("degrees").get<std::vector<int>>();
    if (info.kind == "internal")
        info.element = sparse_from_json(gr.at("element"));
    return info;
}

namespace {

// Rational eigenvalues of a square matrix, by integer candidates for the scaled matrix.
std::vector<Scalar> rational_eigenvalues(const std::vector<Vec>& m)
{

    mpz_class den = 1;
    for (const auto& row : m)
        for (const auto& x : row)
            den = lcm(den, x.get_den());
    std::vector<Vec> scaled = m;
    mpz_class bound = 0;
    for (auto& row : scaled) {
        mpz_class s = 0;
        for (auto& x : row) {
            x *= den;
            s += abs(x.get_num());
        }
        bound = std::max(bound, s);
    }
    Vec cp = charpoly(scaled);
    std::vector<Scalar> out;
    // eigenvalues of an integer matrix that are rational are integers bounded by the max row sum
    for (mpz_class c = -bound; c <= bound; ++c)
        if (eval_poly(cp, Scalar(c)) == 0)
            out.push_back(Scalar(c) / den);
    return out;
}

}  // namespace

std::vector<std::pair<Vec, std::vector<SparseVec>>> joint_eigenspaces(
    const std::vector<SparseMatrix>& ops, const std::vector<SparseVec>& start)
{
    std::vector<std::pair<Vec, std::vector<SparseVec>>> blocks{{Vec{}, start}};
    for (const auto& op : ops) {
        std::vector<std::pair<Vec, std::vector<SparseVec>>> next;
        for (auto& [vals, basis] : blocks) {
            const int k = static_cast<int>(basis.size());
            SpanCoordinates sc(basis);
            std::vector<Vec> m(k, Vec(k, 0));
            bool diagonal = true;
            for (int j = 0; j < k; ++j) {
                auto c = sc.coords(op.apply(basis[j]));
                if (!c)
                    throw DomainError("NON_DIAGONALIZABLE", "operator does not preserve a joint eigenspace");
                for (const auto& [i, x] : *c) {
                    m[i][j] = x;
                    if (i != j)
                        diagonal = false;
                }
            }
            std::vector<Scalar> eig;
            if (diagonal) {
                for (int j = 0; j < k; ++j)
                    if (std::find(eig.begin(), eig.end(), m[j][j]) == eig.end())
                        eig.push_back(m[j][j]);
                std::sort(eig.begin(), eig.end());
            } else {
                eig = rational_eigenvalues(m);
            }
            int found = 0;
            for (const auto& c : eig) {
                SparseMatrix shifted = SparseMatrix::from_dense(m);
                for (int i = 0; i < k; ++i)
                    shifted.set(i, i, m[i][i] - c);
                auto ker = kernel(shifted);
                if (ker.empty())
                    continue;
                std::vector<SparseVec> sub;
                for (const auto& v : ker) {
                    std::vector<SparseVec::Entry> t;
                    for (const auto& [i, x] : v)
                        for (const auto& [a, y] : basis[i])
                            t.emplace_back(a, x * y);
                    sub.push_back(SparseVec::from_terms(std::move(t)));
                }
                found += static_cast<int>(sub.size());
                Vec nv = vals;
                nv.push_back(c);
                next.emplace_back(std::move(nv), span_basis(sub));
            }
            if (found != k)
                throw DomainError("NON_DIAGONALIZABLE", "operator is not diagonalizable over Q on a joint eigenspace",
                    {{"block_dim", k}, {"eigenvector_dim", found}});
        }
        blocks = std::move(next);
    }
    return blocks;
}

std::shared_ptr<const RootDatum> root_datum(const LieSuperalgebra& g)
{
    return root_datum(std::make_shared<const LieSuperalgebra>(g));
}

std::shared_ptr<const RootDatum> root_datum(std::shared_ptr<const LieSuperalgebra> gp)
{
    const LieSuperalgebra& g = *gp;
    auto d = std::make_shared<RootDatum>();
    d->g = gp;
    d->cartan = cartan_subalgebra(g);
    d->grading = grading_element(g);
    d->extra_coordinate = d->grading.kind == "external" || d->grading.kind == "height_only";
    const int n = g.dim();
    std::vector<SparseMatrix> ops;
    for (const auto& h : d->cartan)
        ops.push_back(adjoint(g, h));
    if (d->extra_coordinate) {
        SparseMatrix e(n, n);
        for (int i = 0; i < n; ++i)
            e.set(i, i, d->grading.degrees[i]);
        ops.push_back(e);
    }
    if (d->grading.kind == "internal") {
        SpanCoordinates sc(d->cartan);
        auto c = sc.coords(*d->grading.element);
        if (!c)
            throw std::logic_error("root_datum: internal grading element outside the Cartan subalgebra");
        d->grading_in_cartan = c->to_dense(d->rank());
    }
    std::vector<SparseVec> all;
    for (int i = 0; i < n; ++i)
        all.push_back(SparseVec::unit(i));
    auto blocks = joint_eigenspaces(ops, all);
    int zero_dim = 0;
    for (auto& [vals, basis] : blocks) {
        const bool zero = std::all_of(vals.begin(), vals.end(), [](const Scalar& x) { return x == 0; });
        if (zero) {
            zero_dim = static_cast<int>(basis.size());
            d->zero_weight = Subspace(n, basis);
            continue;
        }
        Root r;
        r.functional = vals;
        r.multiplicity = static_cast<int>(basis.size());
        r.parity = parity_of(g, basis.front());
        for (const auto& v : basis)
            if (parity_of(g, v) != r.parity || r.parity < 0)
                throw DomainError("MIXED_PARITY_ROOT", "root space " + functional_string(vals) + " is not homogeneous");
        r.space = basis;
        auto h = d->height_of(vals);
        if (h) {
            if (h->get_den() != 1)
                throw std::logic_error("root_datum: non-integral height");
            r.height = static_cast<int>(h->get_num().get_si());
        }
        d->roots.push_back(std::move(r));
    }
    if (zero_dim != d->rank())
        throw DomainError("ZERO_WEIGHT_MISMATCH", "zero weight space has dimension " + std::to_string(zero_dim)
                + " but the Cartan subalgebra has dimension " + std::to_string(d->rank()));
    std::sort(d->roots.begin(), d->roots.end(), [](const Root& a, const Root& b) {
        const int ha = a.height.value_or(0), hb = b.height.value_or(0);
        if (ha != hb)
            return ha < hb;
        return a.functional < b.functional;
    });
    return d;
}

}  // namespace superlie
