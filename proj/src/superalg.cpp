#include "superlie/superalg.hpp"

#include <sstream>

namespace superlie {

namespace {

nlohmann::json residual_json(const SparseVec& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, x] : v)
        out.push_back({k, to_string(x)});
    return out;
}

int sign_of(int pa, int pb)
{
    return (pa & pb) ? -1 : 1;
}

}  // namespace

void validate(const LieSuperalgebra& g)
{
    const int n = g.dim();
    if (static_cast<int>(g.parity.size()) != n || static_cast<int>(g.table.size()) != n * n)
        throw std::invalid_argument("superalgebra: inconsistent sizes");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, x] : g.br(i, j)) {
                if (k < 0 || k >= n)
                    throw std::invalid_argument("superalgebra: bracket index out of range");
                if (g.parity[k] != (g.parity[i] ^ g.parity[j]))
                    throw DomainError("PARITY_VIOLATION", "bracket of " + g.labels[i] + " and " + g.labels[j] + " is not homogeneous of the expected parity",
                        {{"i", i}, {"j", j}});
            }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            SparseVec r = g.br(i, j);
            r.axpy(sign_of(g.parity[i], g.parity[j]), g.br(j, i));
            if (!r.empty())
                throw DomainError("SKEW_VIOLATION", "super skew-symmetry fails for (" + g.labels[i] + ", " + g.labels[j] + ")",
                    {{"i", i}, {"j", j}, {"residual", residual_json(r)}});
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                const int pi = g.parity[i], pj = g.parity[j], pk = g.parity[k];
                SparseVec r = bracket_basis(g, i, g.br(j, k));
                r.scale(sign_of(pi, pk));
                r.axpy(sign_of(pj, pi), bracket_basis(g, j, g.br(k, i)));
                r.axpy(sign_of(pk, pj), bracket_basis(g, k, g.br(i, j)));
                if (!r.empty())
                    throw DomainError("JACOBI_VIOLATION",
                        "super Jacobi identity fails for (" + g.labels[i] + ", " + g.labels[j] + ", " + g.labels[k] + ")",
                        {{"i", i}, {"j", j}, {"k", k}, {"residual", residual_json(r)}});
            }
}

LieSuperalgebra make_superalgebra(std::vector<std::string> labels, std::vector<int> parity,
    std::vector<SparseVec> table, nlohmann::json metadata)
{
    LieSuperalgebra g{std::move(labels), std::move(parity), std::move(table), std::move(metadata)};
    validate(g);
    return g;
}

SparseVec bracket_basis(const LieSuperalgebra& g, int i, const SparseVec& v)
{
    std::vector<SparseVec::Entry> terms;
    for (const auto& [l, c] : v)
        for (const auto& [k, x] : g.br(i, l))
            terms.emplace_back(k, c * x);
    return SparseVec::from_terms(std::move(terms));
}

SparseVec bracket(const LieSuperalgebra& g, const SparseVec& a, const SparseVec& b)
{
    if (a.max_index() >= g.dim() || b.max_index() >= g.dim())
        throw std::invalid_argument("bracket: element does not belong to the algebra");
    std::vector<SparseVec::Entry> terms;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            for (const auto& [k, z] : g.br(i, j))
                terms.emplace_back(k, x * y * z);
    return SparseVec::from_terms(std::move(terms));
}

int parity_of(const LieSuperalgebra& g, const SparseVec& a)
{
    int p = -2;
    for (const auto& [i, x] : a) {
        if (p == -2)
            p = g.parity[i];
        else if (p != g.parity[i])
            return -1;
    }
    return p == -2 ? 0 : p;
}

SparseMatrix adjoint(const LieSuperalgebra& g, const SparseVec& a)
{
    if (a.max_index() >= g.dim())
        throw std::invalid_argument("adjoint: element does not belong to the algebra");
    const int n = g.dim();
    SparseMatrix cols(n, n);
    for (int j = 0; j < n; ++j)
        cols.row[j] = bracket(g, a, SparseVec::unit(j));
    return cols.transpose();
}

Scalar supertrace(const LieSuperalgebra& g, const SparseMatrix& m)
{
    Scalar s = 0;
    for (int i = 0; i < m.rows; ++i)
        s += (g.parity[i] ? -1 : 1) * m.at(i, i);
    return s;
}

// ----------------------------------------------------------------- Subspace

Subspace::Subspace(int ambient, const std::vector<SparseVec>& spanning) : ambient_(ambient)
{
    for (const auto& v : spanning) {
        if (v.max_index() >= ambient)
            throw std::invalid_argument("Subspace: vector outside the ambient space");
        ech_.add(v);
    }
    basis_ = ech_.basis();
}

bool Subspace::contains(const Subspace& other) const
{
    for (const auto& v : other.basis())
        if (!contains(v))
            return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b)
{
    std::vector<SparseVec> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace(a.ambient(), all);
}

Subspace derived_subalgebra(const LieSuperalgebra& g)
{
    return Subspace(g.dim(), g.table);
}

bool is_subalgebra(const LieSuperalgebra& g, const Subspace& s)
{
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j)
            if (!s.contains(bracket(g, b[i], b[j])))
                return false;
    return true;
}

bool is_ideal(const LieSuperalgebra& g, const Subspace& s)
{
    for (int i = 0; i < g.dim(); ++i)
        for (const auto& v : s.basis())
            if (!s.contains(bracket_basis(g, i, v)))
                return false;
    return true;
}

Subspace ad_closure(const LieSuperalgebra& g, const std::vector<SparseVec>& acting, const Subspace& start)
{
    Echelon e;
    std::vector<SparseVec> work;
    for (const auto& v : start.basis())
        if (e.add(v))
            work.push_back(v);
    while (!work.empty()) {
        SparseVec v = std::move(work.back());
        work.pop_back();
        for (const auto& x : acting) {
            SparseVec w = bracket(g, x, v);
            SparseVec r = e.reduce(w);
            if (!r.empty()) {
                e.add(r);
                work.push_back(r);
            }
        }
    }
    return Subspace(g.dim(), e.basis());
}

LieSuperalgebra restrict_to(const LieSuperalgebra& g, const std::vector<SparseVec>& basis,
    std::vector<std::string> labels, nlohmann::json metadata, bool check)
{
    const int n = static_cast<int>(basis.size());
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("restrict_to: label count mismatch");
    SpanCoordinates sc(basis);
    std::vector<int> par(n);
    for (int i = 0; i < n; ++i) {
        par[i] = parity_of(g, basis[i]);
        if (par[i] < 0)
            throw DomainError("NOT_HOMOGENEOUS", "basis element " + labels[i] + " has mixed parity");
    }
    std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto c = sc.coords(bracket(g, basis[i], basis[j]));
            if (!c)
                throw DomainError("NOT_CLOSED", "bracket of " + labels[i] + " and " + labels[j] + " leaves the span",
                    {{"i", i}, {"j", j}});
            table[static_cast<std::size_t>(i) * n + j] = std::move(*c);
        }
    LieSuperalgebra h{std::move(labels), std::move(par), std::move(table), std::move(metadata)};
    if (check)
        validate(h);
    return h;
}

std::vector<int> quotient_representatives(const LieSuperalgebra& g, const Subspace& ideal)
{
    std::vector<int> keep;
    std::vector<bool> piv(g.dim(), false);
    for (const auto& v : ideal.basis())
        piv[v.lead()] = true;
    for (int i = 0; i < g.dim(); ++i)
        if (!piv[i])
            keep.push_back(i);
    return keep;
}

LieSuperalgebra quotient_by_ideal(const LieSuperalgebra& g, const Subspace& ideal)
{
    for (int i = 0; i < g.dim(); ++i)
        for (const auto& v : ideal.basis())
            if (!ideal.contains(bracket_basis(g, i, v)))
                throw DomainError("NOT_AN_IDEAL", "[" + g.labels[i] + ", " + expansion_label(v, g.labels) + "] leaves the subspace",
                    {{"i", i}});
    std::vector<int> keep = quotient_representatives(g, ideal);
    std::vector<int> pos(g.dim(), -1);
    for (std::size_t a = 0; a < keep.size(); ++a)
        pos[keep[a]] = static_cast<int>(a);
    const int n = static_cast<int>(keep.size());
    std::vector<std::string> labels;
    std::vector<int> par;
    for (int k : keep) {
        labels.push_back(g.labels[k]);
        par.push_back(g.parity[k]);
    }
    std::vector<SparseVec> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            SparseVec r = ideal.reduce(g.br(keep[a], keep[b]));
            std::vector<SparseVec::Entry> terms;
            for (const auto& [k, x] : r)
                terms.emplace_back(pos[k], x);
            table[static_cast<std::size_t>(a) * n + b] = SparseVec::from_terms(std::move(terms));
        }
    return make_superalgebra(std::move(labels), std::move(par), std::move(table), g.metadata);
}

std::string expansion_label(const SparseVec& v, const std::vector<std::string>& labels)
{
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, x] : v) {
        Scalar a = abs(x);
        if (x < 0)
            os << "-";
        else if (!first)
            os << "+";
        if (a != 1)
            os << to_string(a) << "*";
        os << labels.at(i);
        first = false;
    }
    return os.str();
}

}  // namespace superlie
