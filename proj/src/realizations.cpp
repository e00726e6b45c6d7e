#include "superlie/realizations.hpp"

#include "superlie/serialize.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace superlie {

// ---------------------------------------------------------------- exterior algebra

int monomial_sign(unsigned a, unsigned b)
{
    if (a & b)
        return 0;
    // count pairs (i in a, j in b) with i > j
    int inversions = 0;
    for (unsigned rest = b; rest; rest &= rest - 1) {
        const unsigned low = rest & -rest;
        inversions += std::popcount(a & ~(low | (low - 1)));
    }
    return (inversions & 1) ? -1 : 1;
}

int partial_sign(unsigned k, int j)
{
    const unsigned bit = 1u << j;
    if (!(k & bit))
        return 0;
    return (std::popcount(k & (bit - 1)) & 1) ? -1 : 1;
}

std::string monomial_label(unsigned mask)
{
    std::string s;
    for (int k = 0; mask >> k; ++k)
        if (mask & (1u << k))
            s += "x" + std::to_string(k + 1);
    return s;
}

std::string ExteriorAlgebra::label(int i) const
{
    return mono[i] == 0 ? "1" : monomial_label(mono[i]);
}

SparseVec ExteriorAlgebra::mul(const SparseVec& a, const SparseVec& b) const
{
    std::vector<SparseVec::Entry> terms;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            const int s = monomial_sign(mono[i], mono[j]);
            if (s != 0)
                terms.emplace_back(index_of[mono[i] | mono[j]], s * x * y);
        }
    return SparseVec::from_terms(std::move(terms));
}

ExteriorAlgebra build_exterior(int n)
{
    if (n < 1 || n > 16)
        throw std::invalid_argument("build_exterior: n out of range");
    ExteriorAlgebra e;
    e.n = n;
    const unsigned total = 1u << n;
    for (unsigned m = 0; m < total; ++m)
        e.mono.push_back(m);
    // (degree, lexicographic index set); index sets compare by their sorted element lists
    std::sort(e.mono.begin(), e.mono.end(), [](unsigned a, unsigned b) {
        if (std::popcount(a) != std::popcount(b))
            return std::popcount(a) < std::popcount(b);
        for (unsigned x = a, y = b; x && y; x &= x - 1, y &= y - 1) {
            const int ia = std::countr_zero(x), ib = std::countr_zero(y);
            if (ia != ib)
                return ia < ib;
        }
        return false;
    });
    e.index_of.assign(total, -1);
    for (int i = 0; i < e.dim(); ++i)
        e.index_of[e.mono[i]] = i;
    return e;
}

SparseVec apply(const ExteriorAlgebra& ext, const Superderivation& d, const SparseVec& x)
{
    std::vector<SparseVec::Entry> terms;
    for (const auto& [i, c] : x) {
        // D(xi_k1 xi_k2 ...) by the signed Leibniz rule, peeling generators from the left
        unsigned left = 0;
        for (unsigned rest = ext.mono[i]; rest; rest &= rest - 1) {
            const int k = std::countr_zero(rest);
            const unsigned right = rest & ~(1u << k);
            const int sgn = (d.parity && (std::popcount(left) & 1)) ? -1 : 1;
            SparseVec part = ext.mul(SparseVec::unit(ext.index_of[left]),
                ext.mul(d.images[k], SparseVec::unit(ext.index_of[right])));
            for (const auto& [m, y] : part)
                terms.emplace_back(m, sgn * c * y);
            left |= 1u << k;
        }
    }
    return SparseVec::from_terms(std::move(terms));
}

SparseVec divergence(const ExteriorAlgebra& ext, const Superderivation& d)
{
    std::vector<SparseVec::Entry> terms;
    for (int i = 0; i < ext.n; ++i)
        for (const auto& [m, c] : d.images[i]) {
            const int s = partial_sign(ext.mono[m], i);
            if (s != 0)
                terms.emplace_back(ext.index_of[ext.mono[m] & ~(1u << i)], s * c);
        }
    return SparseVec::from_terms(std::move(terms));
}

Superderivation as_superderivation(const ExteriorAlgebra& ext, const LieSuperalgebra& g, const SparseVec& x)
{
    const auto& real = g.metadata.at("realization");
    if (real.at("kind") != "derivation" || real.at("n").get<int>() != ext.n)
        throw std::invalid_argument("as_superderivation: algebra is not realized on this exterior algebra");
    Superderivation d;
    d.parity = parity_of(g, x);
    if (d.parity < 0)
        throw std::invalid_argument("as_superderivation: element is not homogeneous");
    std::vector<std::vector<SparseVec::Entry>> img(ext.n);
    for (const auto& [b, c] : x)
        for (const auto& t : real.at("terms").at(b)) {
            const unsigned mask = t.at(0).get<unsigned>();
            const int j = t.at(1).get<int>();
            img[j].emplace_back(ext.index_of[mask], c * parse_scalar(t.at(2).get<std::string>()));
        }
    for (auto& v : img)
        d.images.push_back(SparseVec::from_terms(std::move(v)));
    return d;
}

// ---------------------------------------------------------------- ambient algebras

LieSuperalgebra gl_ambient(const std::vector<int>& row_parity)
{
    const int t = static_cast<int>(row_parity.size());
    LieSuperalgebra g;
    g.labels.resize(t * t);
    g.parity.resize(t * t);
    g.table.assign(static_cast<std::size_t>(t) * t * t * t, SparseVec());
    auto idx = [t](int i, int j) { return i * t + j; };
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            g.labels[idx(i, j)] = "E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            g.parity[idx(i, j)] = row_parity[i] ^ row_parity[j];
        }
    const int n2 = t * t;
    // [E_ij, E_kl] = d_jk E_il - (-1)^{p p'} d_li E_kj
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b) {
            const int i = a / t, j = a % t, k = b / t, l = b % t;
            std::vector<SparseVec::Entry> terms;
            if (j == k)
                terms.emplace_back(idx(i, l), 1);
            if (l == i)
                terms.emplace_back(idx(k, j), (g.parity[a] & g.parity[b]) ? 1 : -1);
            g.table[static_cast<std::size_t>(a) * n2 + b] = SparseVec::from_terms(std::move(terms));
        }
    return g;
}

LieSuperalgebra w_ambient(int n)
{
    if (n < 1 || n > 8)
        throw std::invalid_argument("w_ambient: n out of range");
    const int total = (1 << n) * n;
    LieSuperalgebra g;
    g.labels.resize(total);
    g.parity.resize(total);
    g.table.assign(static_cast<std::size_t>(total) * total, SparseVec());
    for (int a = 0; a < total; ++a) {
        const unsigned mask = a / n;
        g.labels[a] = monomial_label(mask) + "d" + std::to_string(a % n + 1);
        g.parity[a] = (std::popcount(mask) + 1) & 1;
    }
    // [xi_I d_i, xi_J d_j] = xi_I d_i(xi_J) d_j - (-1)^{p p'} xi_J d_j(xi_I) d_i
    for (int a = 0; a < total; ++a)
        for (int b = 0; b < total; ++b) {
            const unsigned mi = a / n, mj = b / n;
            const int i = a % n, j = b % n;
            std::vector<SparseVec::Entry> terms;
            if (int s = partial_sign(mj, i)) {
                const unsigned rest = mj & ~(1u << i);
                if (int t = monomial_sign(mi, rest))
                    terms.emplace_back(static_cast<int>((mi | rest) * n + j), s * t);
            }
            if (int s = partial_sign(mi, j)) {
                const unsigned rest = mi & ~(1u << j);
                if (int t = monomial_sign(mj, rest)) {
                    const int sign = (g.parity[a] & g.parity[b]) ? 1 : -1;
                    terms.emplace_back(static_cast<int>((mj | rest) * n + i), sign * s * t);
                }
            }
            g.table[static_cast<std::size_t>(a) * total + b] = SparseVec::from_terms(std::move(terms));
        }
    return g;
}

namespace {

struct Candidate {
    SparseVec v;  // over the ambient basis
    std::string label;
    int degree = 0;
    bool cartan = false;
};

struct Assembly {
    std::string family;
    std::vector<int> params;
    std::string type;
    std::string grading_kind;  // internal, external, height_only, none
    SparseVec grading_element; // ambient coordinates when internal
    bool matrix = true;
    int size = 0;               // matrix size or exterior n
    std::vector<int> row_parity;
    bool zn = false;
};

nlohmann::json realization_terms(const Assembly& a, const SparseVec& v)
{
    nlohmann::json terms = nlohmann::json::array();
    // matrix entry (i, j) or derivation term (mask, j); both are index / size, index % size
    for (const auto& [k, c] : v)
        terms.push_back({k / a.size, k % a.size, to_string(c)});
    return terms;
}

// Sorts candidates (even before odd, then degree, Cartan elements first, then label), restricts
// the ambient algebra to them and attaches metadata.
LieSuperalgebra assemble(const LieSuperalgebra& ambient, std::vector<Candidate> cands, const Assembly& a)
{
    std::vector<SparseVec> cartan_amb;
    for (const auto& c : cands)
        if (c.cartan)
            cartan_amb.push_back(c.v);
    std::vector<int> par(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
        par[i] = parity_of(ambient, cands[i].v);
        if (par[i] < 0)
            throw std::logic_error("assemble: inhomogeneous candidate " + cands[i].label);
    }
    std::vector<std::size_t> order(cands.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::make_tuple(par[x], cands[x].degree, !cands[x].cartan, cands[x].label)
            < std::make_tuple(par[y], cands[y].degree, !cands[y].cartan, cands[y].label);
    });
    std::vector<SparseVec> basis;
    std::vector<std::string> labels;
    nlohmann::json degrees = nlohmann::json::array();
    nlohmann::json real = nlohmann::json::array();
    nlohmann::json zn = nlohmann::json::array();
    for (std::size_t i : order) {
        basis.push_back(cands[i].v);
        labels.push_back(cands[i].label);
        degrees.push_back(cands[i].degree);
        real.push_back(realization_terms(a, cands[i].v));
        if (a.zn)
            zn.push_back(((cands[i].degree % a.size) + a.size) % a.size);
    }
    SpanCoordinates sc(basis);
    nlohmann::json meta;
    meta["family"] = a.family;
    meta["params"] = a.params;
    meta["type"] = a.type;
    nlohmann::json cart = nlohmann::json::array();
    for (const auto& h : cartan_amb)
        cart.push_back(sparse_to_json(*sc.coords(h)));
    meta["cartan"] = cart;
    nlohmann::json grading;
    grading["kind"] = a.grading_kind;
    grading["degrees"] = degrees;
    if (a.grading_kind == "internal") {
        auto e = sc.coords(a.grading_element);
        if (!e)
            throw std::logic_error("assemble: grading element outside the algebra");
        grading["element"] = sparse_to_json(*e);
    }
    meta["grading"] = grading;
    nlohmann::json r;
    if (a.matrix) {
        r["kind"] = "matrix";
        r["size"] = a.size;
        r["row_parity"] = a.row_parity;
    } else {
        r["kind"] = "derivation";
        r["n"] = a.size;
    }
    r["terms"] = real;
    meta["realization"] = r;
    if (a.zn)
        meta["zn_class"] = zn;
    return restrict_to(ambient, basis, std::move(labels), std::move(meta), true);
}

// Greedy basis of span(spanning): preferred vectors first (kept when they lie in the span and
// are new), then the canonical basis of the span fills the rest.
std::vector<Candidate> complete(std::vector<Candidate> preferred, const std::vector<SparseVec>& spanning,
    const LieSuperalgebra& ambient)
{
    Subspace target(ambient.dim(), spanning);
    Echelon ech;
    std::vector<Candidate> out;
    for (auto& c : preferred)
        if (target.contains(c.v) && ech.add(c.v))
            out.push_back(std::move(c));
    for (const auto& v : target.basis())
        if (ech.add(v)) {
            Candidate c;
            c.v = v;
            c.label = expansion_label(v, ambient.labels);
            out.push_back(std::move(c));
        }
    if (static_cast<int>(out.size()) != target.dim())
        throw std::logic_error("complete: basis size mismatch");
    return out;
}

// Lowest W-degree among the terms of v.
int lowest_w_degree(const SparseVec& v, int n)
{
    int d = 1 << 20;
    for (const auto& [k, c] : v)
        d = std::min(d, std::popcount(static_cast<unsigned>(k / n)) - 1);
    return d;
}

int w_index(unsigned mask, int j, int n)
{
    return static_cast<int>(mask) * n + j;
}

std::vector<Candidate> w_cartan(int n, bool differences)
{
    std::vector<Candidate> out;
    if (!differences) {
        for (int k = 0; k < n; ++k) {
            Candidate c;
            c.v = SparseVec::unit(w_index(1u << k, k, n));
            c.label = monomial_label(1u << k) + "d" + std::to_string(k + 1);
            c.cartan = true;
            out.push_back(c);
        }
    } else {
        for (int k = 0; k + 1 < n; ++k) {
            Candidate c;
            c.v = SparseVec::from_terms({{w_index(1u << k, k, n), 1}, {w_index(1u << (k + 1), k + 1, n), -1}});
            c.label = "x" + std::to_string(k + 1) + "d" + std::to_string(k + 1) + "-x" + std::to_string(k + 2) + "d"
                + std::to_string(k + 2);
            c.cartan = true;
            out.push_back(c);
        }
    }
    return out;
}

SparseVec euler_element(int n)
{
    std::vector<SparseVec::Entry> t;
    for (int k = 0; k < n; ++k)
        t.emplace_back(w_index(1u << k, k, n), 1);
    return SparseVec::from_terms(std::move(t));
}

std::vector<Candidate> w_units_in(const Subspace& s, const LieSuperalgebra& w)
{
    std::vector<Candidate> out;
    for (int a = 0; a < w.dim(); ++a) {
        SparseVec u = SparseVec::unit(a);
        if (s.contains(u)) {
            Candidate c;
            c.v = u;
            c.label = w.labels[a];
            out.push_back(c);
        }
    }
    return out;
}

void set_w_degrees(std::vector<Candidate>& cands, int n)
{
    for (auto& c : cands)
        c.degree = lowest_w_degree(c.v, n);
}

}  // namespace

// ---------------------------------------------------------------- Cartan type

LieSuperalgebra superderivation_algebra(int n)
{
    if (n < 2 || n > 6)
        throw DomainError("INVALID_PARAMETERS", "W(n) requires 2 <= n <= 6");
    LieSuperalgebra w = w_ambient(n);
    std::vector<Candidate> cands;
    for (int a = 0; a < w.dim(); ++a) {
        Candidate c;
        c.v = SparseVec::unit(a);
        c.label = w.labels[a];
        const unsigned mask = a / n;
        c.cartan = (mask == (1u << (a % n)));
        cands.push_back(c);
    }
    set_w_degrees(cands, n);
    // Cartan elements keep the order xi_1 d_1, ..., xi_n d_n in metadata
    std::stable_partition(cands.begin(), cands.end(), [](const Candidate& c) { return c.cartan; });
    std::sort(cands.begin(), cands.begin() + n, [](const Candidate& x, const Candidate& y) { return x.v < y.v; });
    Assembly a;
    a.family = "W";
    a.params = {n};
    a.type = "cartan";
    a.grading_kind = "internal";
    a.grading_element = euler_element(n);
    a.matrix = false;
    a.size = n;
    return assemble(w, cands, a);
}

LieSuperalgebra build_cartan_family(const std::string& family, int n)
{
    if (family == "W")
        return superderivation_algebra(n);
    LieSuperalgebra w = w_ambient(std::max(n, 1));
    ExteriorAlgebra ext;
    Assembly a;
    a.family = family;
    a.params = {n};
    a.type = "cartan";
    a.matrix = false;
    a.size = n;
    std::vector<Candidate> cands;
    if (family == "S" || family == "S~") {
        if (family == "S" && (n < 3 || n > 6))
            throw DomainError("INVALID_PARAMETERS", "S(n) requires 3 <= n <= 6");
        if (family == "S~" && (n < 4 || n > 6 || n % 2 != 0))
            throw DomainError("INVALID_PARAMETERS", "S~(n) requires even n with 4 <= n <= 6");
        ext = build_exterior(n);
        const unsigned top = (1u << n) - 1;
        // the linear map whose kernel is the algebra, one row per exterior basis element
        SparseMatrix m(ext.dim(), w.dim());
        std::vector<std::vector<SparseVec::Entry>> rows(ext.dim());
        for (int b = 0; b < w.dim(); ++b) {
            const unsigned mask = b / n;
            const int j = b % n;
            if (int s = partial_sign(mask, j))
                rows[ext.index_of[mask & ~(1u << j)]].emplace_back(b, s);
            if (family == "S~" && mask == 0)
                rows[ext.index_of[top & ~(1u << j)]].emplace_back(b, partial_sign(top, j));
        }
        for (int r = 0; r < ext.dim(); ++r)
            m.row[r] = SparseVec::from_terms(std::move(rows[r]));
        std::vector<SparseVec> ker = kernel(m);
        Subspace target(w.dim(), ker);
        std::vector<Candidate> pref = w_cartan(n, true);
        auto units = w_units_in(target, w);
        pref.insert(pref.end(), units.begin(), units.end());
        cands = complete(pref, ker, w);
        set_w_degrees(cands, n);
        if (family == "S") {
            a.grading_kind = "external";
        } else {
            a.grading_kind = "height_only";
            a.zn = true;
        }
        const int expect = (n - 1) * (1 << n) + 1;
        if (static_cast<int>(cands.size()) != expect)
            throw std::logic_error(family + ": dimension mismatch");
    } else if (family == "H") {
        if (n < 4 || n > 6)
            throw DomainError("INVALID_PARAMETERS", "H(n) requires 4 <= n <= 6");
        const int r = n / 2;
        auto partner = [r](int k) { return k < r ? k + r : (k < 2 * r ? k - r : k); };
        // D_x for x = xi_K in split Hamiltonian form
        auto d_of = [&](unsigned mask) {
            std::vector<SparseVec::Entry> t;
            for (int k = 0; k < n; ++k)
                if (int s = partial_sign(mask, k))
                    t.emplace_back(w_index(mask & ~(1u << k), partner(k), n), s);
            return SparseVec::from_terms(std::move(t));
        };
        std::vector<SparseVec> htilde;
        for (unsigned mask = 1; mask < (1u << n); ++mask)
            htilde.push_back(d_of(mask));
        std::vector<SparseVec> derived;
        for (std::size_t i = 0; i < htilde.size(); ++i)
            for (std::size_t j = i; j < htilde.size(); ++j) {
                SparseVec b = bracket(w, htilde[i], htilde[j]);
                if (!b.empty())
                    derived.push_back(std::move(b));
            }
        std::vector<Candidate> pref;
        for (int k = 0; k < r; ++k) {
            Candidate c;
            c.v = SparseVec::from_terms({{w_index(1u << k, k, n), 1}, {w_index(1u << (k + r), k + r, n), -1}});
            c.label = "x" + std::to_string(k + 1) + "d" + std::to_string(k + 1) + "-x" + std::to_string(k + r + 1) + "d"
                + std::to_string(k + r + 1);
            c.cartan = true;
            pref.push_back(c);
        }
        ext = build_exterior(n);
        for (int i = 0; i < ext.dim(); ++i) {
            const unsigned mask = ext.mono[i];
            const int deg = std::popcount(mask);
            if (deg < 1 || deg > n - 1)
                continue;
            Candidate c;
            c.v = d_of(mask);
            c.label = "D(" + monomial_label(mask) + ")";
            pref.push_back(c);
        }
        cands = complete(pref, derived, w);
        set_w_degrees(cands, n);
        if (static_cast<int>(cands.size()) != (1 << n) - 2)
            throw std::logic_error("H: dimension mismatch");
        a.grading_kind = "external";
    } else {
        throw DomainError("UNKNOWN_FAMILY", "unknown Cartan-type family " + family);
    }
    return assemble(w, cands, a);
}

// ---------------------------------------------------------------- matrix families

namespace {

std::string ij(int i, int j)
{
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Eigenvalue of ad(e) on v inside the ambient algebra; throws if v is not an eigenvector.
int eigen_degree(const LieSuperalgebra& amb, const SparseVec& e, const SparseVec& v)
{
    SparseVec w = bracket(amb, e, v);
    if (w.empty())
        return 0;
    const Scalar c = w.get(v.lead()) / v.entries().front().second;
    SparseVec r = w;
    r.axpy(-c, v);
    if (!r.empty() || c.get_den() != 1)
        throw std::logic_error("eigen_degree: not an integral eigenvector");
    return static_cast<int>(c.get_num().get_si());
}

LieSuperalgebra build_sl(int m, int n)
{
    const int t = m + n;
    std::vector<int> rp(t, 0);
    for (int i = m; i < t; ++i)
        rp[i] = 1;
    LieSuperalgebra gl = gl_ambient(rp);
    auto idx = [t](int i, int j) { return i * t + j; };
    std::vector<Candidate> cands;
    for (int k = 0; k + 1 < t; ++k) {
        Candidate c;
        const int sgn = (rp[k] == rp[k + 1]) ? 1 : -1;
        c.v = SparseVec::from_terms({{idx(k, k), 1}, {idx(k + 1, k + 1), -sgn}});
        c.label = "h" + std::to_string(k + 1);
        c.cartan = true;
        cands.push_back(c);
    }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j) {
                Candidate c;
                c.v = SparseVec::unit(idx(i, j));
                c.label = "E" + ij(i, j);
                c.degree = (i < m && j >= m) ? 1 : ((i >= m && j < m) ? -1 : 0);
                cands.push_back(c);
            }
    Assembly a;
    a.family = "sl";
    a.params = {m, n};
    a.size = t;
    a.row_parity = rp;
    if (m == 0 || n == 0) {
        a.type = "lie";
        a.grading_kind = "none";
        for (auto& c : cands)
            c.degree = 0;
    } else if (m == n) {
        a.type = "sl_nn";
        a.grading_kind = "external";
    } else {
        a.type = "basic_I";
        a.grading_kind = "internal";
        Scalar b(m, n - m);
        b.canonicalize();
        const Scalar av = b + 1;
        std::vector<SparseVec::Entry> e;
        for (int i = 0; i < t; ++i)
            e.emplace_back(idx(i, i), i < m ? av : b);
        a.grading_element = SparseVec::from_terms(std::move(e));
    }
    return assemble(gl, cands, a);
}

LieSuperalgebra build_gl(int m, int n)
{
    const int t = m + n;
    std::vector<int> rp(t, 0);
    for (int i = m; i < t; ++i)
        rp[i] = 1;
    LieSuperalgebra gl = gl_ambient(rp);
    std::vector<Candidate> cands;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            Candidate c;
            c.v = SparseVec::unit(i * t + j);
            c.label = "E" + ij(i, j);
            c.cartan = (i == j);
            c.degree = (i < m && j >= m) ? 1 : ((i >= m && j < m) ? -1 : 0);
            cands.push_back(c);
        }
    Assembly a;
    a.family = "gl";
    a.params = {m, n};
    a.type = "gl";
    a.size = t;
    a.row_parity = rp;
    if (m == 0 || n == 0) {
        a.grading_kind = "none";
        for (auto& c : cands)
            c.degree = 0;
    } else {
        a.grading_kind = "internal";
        std::vector<SparseVec::Entry> e;
        for (int i = 0; i < m; ++i)
            e.emplace_back(i * t + i, 1);
        a.grading_element = SparseVec::from_terms(std::move(e));
    }
    return assemble(gl, cands, a);
}

LieSuperalgebra build_a_nn(int n)
{
    LieSuperalgebra sl = build_sl(n, n);
    const int t = 2 * n;
    // the identity matrix in sl(n|n) coordinates
    std::vector<SparseVec> basis_amb;
    const auto& terms = sl.metadata["realization"]["terms"];
    for (const auto& tm : terms) {
        std::vector<SparseVec::Entry> e;
        for (const auto& x : tm)
            e.emplace_back(x.at(0).get<int>() * t + x.at(1).get<int>(), parse_scalar(x.at(2).get<std::string>()));
        basis_amb.push_back(SparseVec::from_terms(std::move(e)));
    }
    SpanCoordinates sc(basis_amb);
    std::vector<SparseVec::Entry> id;
    for (int i = 0; i < t; ++i)
        id.emplace_back(i * t + i, 1);
    SparseVec ident = *sc.coords(SparseVec::from_terms(std::move(id)));
    Subspace ideal(sl.dim(), {ident});
    LieSuperalgebra q = quotient_by_ideal(sl, ideal);
    std::vector<int> keep = quotient_representatives(sl, ideal);
    std::vector<int> pos(sl.dim(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        pos[keep[i]] = static_cast<int>(i);
    nlohmann::json meta = sl.metadata;
    meta["family"] = "A";
    meta["type"] = "basic_I";
    nlohmann::json cart = nlohmann::json::array();
    Echelon seen;
    for (const auto& h : sl.metadata["cartan"]) {
        SparseVec r = ideal.reduce(sparse_from_json(h));
        std::vector<SparseVec::Entry> e;
        for (const auto& [k, c] : r)
            e.emplace_back(pos[k], c);
        SparseVec v = SparseVec::from_terms(std::move(e));
        if (seen.add(v))
            cart.push_back(sparse_to_json(v));
    }
    meta["cartan"] = cart;
    nlohmann::json deg = nlohmann::json::array(), real = nlohmann::json::array();
    for (int k : keep) {
        deg.push_back(sl.metadata["grading"]["degrees"][k]);
        real.push_back(terms[k]);
    }
    meta["grading"]["degrees"] = deg;
    meta["realization"]["terms"] = real;
    meta["realization"]["modulo_identity"] = true;
    q.metadata = meta;
    return q;
}

LieSuperalgebra build_osp(int big_m, int two_n)
{
    if (big_m < 1 || two_n < 2 || two_n % 2 != 0)
        throw DomainError("INVALID_PARAMETERS", "osp(M|2n) requires M >= 1 and n >= 1");
    const int n = two_n / 2;
    const int t = big_m + two_n;
    std::vector<int> rp(t, 0);
    for (int i = big_m; i < t; ++i)
        rp[i] = 1;
    LieSuperalgebra gl = gl_ambient(rp);
    // supersymmetric Gram matrix: antidiagonal ones on the even block, standard J on the odd block
    std::vector<Vec> gram(t, Vec(t, 0));
    for (int i = 0; i < big_m; ++i)
        gram[i][big_m - 1 - i] = 1;
    for (int a = 0; a < two_n; ++a)
        gram[big_m + a][big_m + two_n - 1 - a] = (a < n) ? 1 : -1;
    auto idx = [t](int i, int j) { return i * t + j; };
    std::vector<SparseVec> spanning;
    for (int px = 0; px < 2; ++px) {
        // B(Xu, v) + (-1)^{p(X)p(u)} B(u, Xv) = 0 on basis vectors u = e_a, v = e_b
        std::vector<SparseVec> eqs;
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b) {
                std::vector<SparseVec::Entry> e;
                const int sgn = (px & rp[a]) ? -1 : 1;
                for (int k = 0; k < t; ++k) {
                    if (gram[k][b] != 0)
                        e.emplace_back(idx(k, a), gram[k][b]);
                    if (gram[a][k] != 0)
                        e.emplace_back(idx(k, b), sgn * gram[a][k]);
                }
                eqs.push_back(SparseVec::from_terms(std::move(e)));
            }
        for (int v = 0; v < t * t; ++v)
            if (gl.parity[v] != px)
                eqs.push_back(SparseVec::unit(v));
        SparseMatrix m(static_cast<int>(eqs.size()), t * t);
        m.row = eqs;
        auto ker = kernel(m);
        spanning.insert(spanning.end(), ker.begin(), ker.end());
    }
    const int expect = big_m * (big_m - 1) / 2 + n * (2 * n + 1) + 2 * big_m * n;
    if (static_cast<int>(spanning.size()) != expect)
        throw std::logic_error("osp: dimension mismatch");
    std::vector<Candidate> pref;
    int hk = 0;
    for (int i = 0; i < big_m / 2; ++i) {
        Candidate c;
        c.v = SparseVec::from_terms({{idx(i, i), 1}, {idx(big_m - 1 - i, big_m - 1 - i), -1}});
        c.label = "h" + std::to_string(++hk);
        c.cartan = true;
        pref.push_back(c);
    }
    for (int i = 0; i < n; ++i) {
        Candidate c;
        const int a = big_m + i, b = big_m + two_n - 1 - i;
        c.v = SparseVec::from_terms({{idx(a, a), 1}, {idx(b, b), -1}});
        c.label = "h" + std::to_string(++hk);
        c.cartan = true;
        pref.push_back(c);
    }
    auto cands = complete(pref, spanning, gl);
    Assembly asmb;
    asmb.family = "osp";
    asmb.params = {big_m, two_n};
    asmb.size = t;
    asmb.row_parity = rp;
    if (big_m == 2) {
        asmb.type = "basic_I";
        asmb.grading_kind = "internal";
        asmb.grading_element = pref.front().v;
        for (auto& c : cands)
            c.degree = eigen_degree(gl, asmb.grading_element, c.v);
    } else {
        asmb.type = "basic_II";
        asmb.grading_kind = "none";
    }
    return assemble(gl, cands, asmb);
}

LieSuperalgebra build_p(int n)
{
    if (n < 2 || n > 5)
        throw DomainError("INVALID_PARAMETERS", "p(n) requires 2 <= n <= 5");
    const int nn = n + 1, t = 2 * nn;
    std::vector<int> rp(t, 0);
    for (int i = nn; i < t; ++i)
        rp[i] = 1;
    LieSuperalgebra gl = gl_ambient(rp);
    auto idx = [t](int i, int j) { return i * t + j; };
    std::vector<Candidate> cands;
    for (int k = 0; k + 1 < nn; ++k) {
        Candidate c;
        c.v = SparseVec::from_terms({{idx(k, k), 1}, {idx(k + 1, k + 1), -1}, {idx(nn + k, nn + k), -1},
            {idx(nn + k + 1, nn + k + 1), 1}});
        c.label = "h" + std::to_string(k + 1);
        c.cartan = true;
        cands.push_back(c);
    }
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) {
            if (i != j) {
                Candidate c;
                c.v = SparseVec::from_terms({{idx(i, j), 1}, {idx(nn + j, nn + i), -1}});
                c.label = "a" + ij(i, j);
                cands.push_back(c);
            }
            if (i <= j) {
                Candidate c;
                if (i == j)
                    c.v = SparseVec::unit(idx(i, nn + i));
                else
                    c.v = SparseVec::from_terms({{idx(i, nn + j), 1}, {idx(j, nn + i), 1}});
                c.label = "b" + ij(i, j);
                c.degree = 1;
                cands.push_back(c);
            }
            if (i < j) {
                Candidate c;
                c.v = SparseVec::from_terms({{idx(nn + i, j), 1}, {idx(nn + j, i), -1}});
                c.label = "c" + ij(i, j);
                c.degree = -1;
                cands.push_back(c);
            }
        }
    Assembly a;
    a.family = "p";
    a.params = {n};
    a.type = "strange";
    a.grading_kind = "external";
    a.size = t;
    a.row_parity = rp;
    return assemble(gl, cands, a);
}

}  // namespace

LieSuperalgebra build_matrix_family(const std::string& family, const std::vector<int>& params)
{
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw DomainError("INVALID_PARAMETERS", family + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (family == "gl") {
        need(2);
        if (params[0] < 0 || params[1] < 0 || params[0] + params[1] < 1 || params[0] + params[1] > 8)
            throw DomainError("INVALID_PARAMETERS", "gl(m|n) requires 1 <= m+n <= 8");
        return build_gl(params[0], params[1]);
    }
    if (family == "sl") {
        need(2);
        const int m = params[0], n = params[1];
        if (m < 0 || n < 0 || m + n < 2 || m + n > 8)
            throw DomainError("INVALID_PARAMETERS", "sl(m|n) requires 2 <= m+n <= 8");
        return build_sl(m, n);
    }
    if (family == "A") {
        // A(m,n) = sl(m+1|n+1) for m != n and sl(n+1|n+1)/kI for m = n
        need(2);
        const int m = params[0], n = params[1];
        if (m < 0 || n < 0 || m + n > 6 || (m == n && m < 1))
            throw DomainError("INVALID_PARAMETERS", "A(m,n) requires m+n <= 6 and m = n >= 1 in the quotient case");
        LieSuperalgebra g = (m == n) ? build_a_nn(n + 1) : build_sl(m + 1, n + 1);
        g.metadata["family"] = "A";
        g.metadata["params"] = params;
        return g;
    }
    if (family == "osp") {
        need(2);
        return build_osp(params[0], params[1]);
    }
    if (family == "B") {
        need(2);
        if (params[0] < 0 || params[1] < 1)
            throw DomainError("INVALID_PARAMETERS", "B(m,n) requires m >= 0, n >= 1");
        return build_osp(2 * params[0] + 1, 2 * params[1]);
    }
    if (family == "C") {
        need(1);
        if (params[0] < 2)
            throw DomainError("INVALID_PARAMETERS", "C(n) requires n >= 2");
        return build_osp(2, 2 * (params[0] - 1));
    }
    if (family == "D") {
        need(2);
        if (params[0] < 2 || params[1] < 1)
            throw DomainError("INVALID_PARAMETERS", "D(m,n) requires m >= 2, n >= 1");
        return build_osp(2 * params[0], 2 * params[1]);
    }
    if (family == "p") {
        need(1);
        return build_p(params[0]);
    }
    throw DomainError("UNKNOWN_FAMILY", "unknown matrix family " + family);
}

}  // namespace superlie
