#include "superlie/weyl.hpp"

#include "superlie/family.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace superlie {

int JetAlgebra::dim() const
{
    int d = 0;
    for (int n : orders)
        d += n;
    return d;
}

int JetAlgebra::index(int point, int k) const
{
    int base = 0;
    for (int i = 0; i < point; ++i)
        base += orders[i];
    return base + k;
}

std::pair<int, int> JetAlgebra::position(int basis_index) const
{
    int i = 0;
    while (basis_index >= orders[i]) {
        basis_index -= orders[i];
        ++i;
    }
    return {i, basis_index};
}

SparseVec JetAlgebra::mul(const SparseVec& a, const SparseVec& b) const
{
    std::vector<SparseVec::Entry> t;
    for (const auto& [i, x] : a) {
        const auto [pi, ki] = position(i);
        for (const auto& [j, y] : b) {
            const auto [pj, kj] = position(j);
            if (pi != pj || ki + kj >= orders[pi])
                continue;
            t.emplace_back(index(pi, ki + kj), x * y);
        }
    }
    return SparseVec::from_terms(std::move(t));
}

SparseVec JetAlgebra::pow(const SparseVec& a, int k) const
{
    SparseVec r = unit();
    for (int i = 0; i < k; ++i)
        r = mul(r, a);
    return r;
}

SparseVec JetAlgebra::unit() const
{
    std::vector<SparseVec::Entry> t;
    for (std::size_t i = 0; i < points.size(); ++i)
        t.emplace_back(index(static_cast<int>(i), 0), 1);
    return SparseVec::from_terms(std::move(t));
}

SparseVec JetAlgebra::t() const
{
    return polynomial({0, 1});
}

SparseVec JetAlgebra::polynomial(const Vec& coeffs) const
{
    // f(c + u) = sum_k f_k sum_j binom(k, j) c^{k-j} u^j, truncated at u^{N}
    std::vector<SparseVec::Entry> t;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Scalar& c = points[i];
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0)
                continue;
            Scalar binom = 1;
            for (int j = 0; j <= static_cast<int>(k); ++j) {
                if (j > 0)
                    binom = binom * (static_cast<int>(k) - j + 1) / j;
                if (j >= orders[i])
                    break;
                Scalar cp = 1;
                for (int e = 0; e < static_cast<int>(k) - j; ++e)
                    cp *= c;
                t.emplace_back(index(static_cast<int>(i), j), coeffs[k] * binom * cp);
            }
        }
    }
    return SparseVec::from_terms(std::move(t));
}

std::string JetAlgebra::label(int basis_index) const
{
    const auto [p, k] = position(basis_index);
    const Scalar& c = points[p];
    std::string u = c == 0 ? "t" : "(t-" + to_string(c) + ")";
    if (c < 0)
        u = "(t+" + to_string(-c) + ")";
    std::string s = k == 0 ? "1" : (k == 1 ? u : u + "^" + std::to_string(k));
    if (points.size() > 1)
        s += "@" + to_string(c);
    return s;
}

std::string JetAlgebra::spec() const
{
    std::string s = "jet:";
    for (std::size_t i = 0; i < points.size(); ++i)
        s += (i ? "," : "") + to_string(points[i]) + "^" + std::to_string(orders[i]);
    return s;
}

JetAlgebra jet_algebra(const std::vector<std::pair<Scalar, int>>& points)
{
    if (points.empty())
        throw DomainError("BAD_JET_SPEC", "a jet algebra needs at least one point");
    JetAlgebra A;
    for (const auto& [c, n] : points) {
        if (n < 1)
            throw DomainError("BAD_JET_SPEC", "jet order must be at least 1", {{"point", to_string(c)}});
        if (std::find(A.points.begin(), A.points.end(), c) != A.points.end())
            throw DomainError("BAD_JET_SPEC", "repeated point " + to_string(c));
        A.points.push_back(c);
        A.orders.push_back(n);
    }
    return A;
}

JetAlgebra parse_jet(const std::string& spec)
{
    // "jet:c^N,c^N" or "jet:c^N+jet:c^N"
    static const std::regex item(R"(^\s*(?:jet\s*:\s*)?(-?[0-9]+(?:/[0-9]+|\.[0-9]+)?)\s*\^\s*([0-9]+)\s*$)");
    static const std::regex head(R"(^\s*jet\s*:.*$)");
    if (!std::regex_match(spec, head))
        throw DomainError("BAD_JET_SPEC", "expected jet:c^N(+jet:c^N)*, got '" + spec + "'");
    std::string flat = spec;
    std::replace(flat.begin(), flat.end(), '+', ',');
    std::vector<std::pair<Scalar, int>> pts;
    std::stringstream ss(flat);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::smatch im;
        if (!std::regex_match(part, im, item))
            throw DomainError("BAD_JET_SPEC", "cannot parse jet point '" + part + "'");
        int n = 0;
        try {
            n = std::stoi(im[2]);
        } catch (const std::out_of_range&) {
            throw DomainError("BAD_JET_SPEC", "jet order out of range in '" + part + "'");
        }
        pts.emplace_back(parse_scalar(im[1]), n);
    }
    return jet_algebra(pts);
}

JetAlgebra direct_sum(const JetAlgebra& a, const JetAlgebra& b)
{
    std::vector<std::pair<Scalar, int>> pts;
    for (std::size_t i = 0; i < a.points.size(); ++i)
        pts.emplace_back(a.points[i], a.orders[i]);
    for (std::size_t i = 0; i < b.points.size(); ++i) {
        if (std::find(a.points.begin(), a.points.end(), b.points[i]) != a.points.end())
            throw DomainError("SUPPORT_OVERLAP", "both algebras are supported at " + to_string(b.points[i]));
        pts.emplace_back(b.points[i], b.orders[i]);
    }
    return jet_algebra(pts);
}

namespace {

LieSuperalgebra tensor_table(const LieSuperalgebra& g, const JetAlgebra& A)
{
    const int n = g.dim(), m = A.dim();
    std::vector<SparseVec> prod(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            prod[i * m + j] = A.mul(SparseVec::unit(i), SparseVec::unit(j));
    LieSuperalgebra L;
    for (int x = 0; x < n; ++x)
        for (int j = 0; j < m; ++j) {
            L.labels.push_back(g.labels[x] + "(x)" + A.label(j));
            L.parity.push_back(g.parity[x]);
        }
    const int N = n * m;
    L.table.resize(static_cast<std::size_t>(N) * N);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const SparseVec& b = g.br(x, y);
            if (b.empty())
                continue;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    const SparseVec& p = prod[i * m + j];
                    if (p.empty())
                        continue;
                    std::vector<SparseVec::Entry> t;
                    for (const auto& [z, c] : b)
                        for (const auto& [k, d] : p)
                            t.emplace_back(z * m + k, c * d);
                    L.table[static_cast<std::size_t>(x * m + i) * N + (y * m + j)] = SparseVec::from_terms(std::move(t));
                }
        }
    L.metadata["jet"] = A.spec();
    return L;
}

}  // namespace

SparseVec MapAlgebra::element(const SparseVec& x, const SparseVec& a) const
{
    std::vector<SparseVec::Entry> t;
    for (const auto& [i, c] : x)
        for (const auto& [j, d] : a)
            t.emplace_back(index(i, j), c * d);
    return SparseVec::from_terms(std::move(t));
}

MapAlgebra map_superalgebra(const TriangularDecomposition& dec, const JetAlgebra& A)
{
    MapAlgebra out{adapt(dec), A, nullptr};
    out.L = std::make_shared<const LieSuperalgebra>(tensor_table(*out.g.L, A));
    return out;
}

LieSuperalgebra map_superalgebra(const LieSuperalgebra& g, const JetAlgebra& A)
{
    return tensor_table(g, A);
}

PsiValues psi_from_pattern(const std::vector<Vec>& pattern, const JetAlgebra& A)
{
    if (A.points.size() != 1 || A.points[0] != 0)
        throw DomainError("INVALID_PSI", "a psi pattern in powers of t needs the jet algebra at the single point 0");
    PsiValues p;
    for (const auto& row : pattern) {
        Vec v(A.dim(), 0);
        for (int k = 0; k < A.dim() && k < static_cast<int>(row.size()); ++k)
            v[k] = row[k];
        p.values.push_back(v);
    }
    return p;
}

LocalWeyl local_weyl(const TriangularDecomposition& dec, const JetAlgebra& A, const PsiValues& psi, int cutoff)
{
    const auto& d = *dec.datum;
    const int m = A.dim();
    if (static_cast<int>(psi.values.size()) != d.rank())
        throw DomainError("INVALID_PSI", "psi needs one row per Cartan basis element",
            {{"expected", d.rank()}, {"got", psi.values.size()}});
    for (const auto& row : psi.values)
        if (static_cast<int>(row.size()) != m)
            throw DomainError("INVALID_PSI", "psi rows need one value per jet basis element",
                {{"expected", m}, {"got", row.size()}});
    LocalWeyl out{map_superalgebra(dec, A), psi, Vec(d.rank(), 0), {}};
    const SparseVec one = A.unit();
    for (int i = 0; i < d.rank(); ++i)
        for (const auto& [j, c] : one)
            out.lambda[i] += c * psi.values[i][j];
    const Vec hw = full_weight(d, out.lambda);
    const auto& a = out.map.g;
    Presentation p;
    p.L = out.map.L;
    p.highest = hw;
    p.cartan_diagonal = m == 1;
    int W = 1, odd = 0;
    for (std::size_t x = 0; x < a.basis.size(); ++x)
        for (int j = 0; j < m; ++j) {
            p.block.push_back(a.block[x]);
            p.weight.push_back(a.weight[x]);
            p.depth.push_back(a.depth[x]);
            p.psi.push_back(a.cartan_index[x] >= 0 ? psi.values[a.cartan_index[x]][j] : Scalar(0));
            if (a.block[x] < 0) {
                W = std::max(W, a.depth[x]);
                odd += a.L->parity[x];
            }
        }
    int lambda_sum = 0;
    for (const auto& s : reductive_simples(dec)) {
        const Scalar k = evaluate_on_cartan(d, hw, s.h);
        if (k < 0 || k.get_den() != 1)
            throw DomainError("INVALID_PSI", "psi(h_alpha (x) 1) must be a non-negative integer",
                {{"root", functional_string(d.roots[s.root].functional)}, {"value", to_string(k)}});
        const int ki = static_cast<int>(k.get_num().get_si());
        lambda_sum += ki;
        p.relations.emplace_back(ki + 1, out.map.element(*a.coords.coords(s.y), one));
    }
    if (cutoff <= 0)
        cutoff = default_cutoff(lambda_sum, odd, W);
    out.module = cyclic_module(p, cutoff);
    return out;
}

ThetaResult theta_criterion(const TriangularDecomposition& dec)
{
    const auto& d = *dec.datum;
    ThetaResult r;
    r.lowest_root = extremal_root(dec, "lowest");
    Subspace closure = ad_closure(*d.g, reductive_part(d).basis(), dec.n_plus);
    r.closure_dim = closure.dim();
    r.holds = true;
    for (const auto& v : d.roots[r.lowest_root].space)
        r.holds = r.holds && closure.contains(v);
    return r;
}

ScanResult truncation_scan(const TriangularDecomposition& dec, const std::vector<Vec>& pattern, int max_n, int cutoff)
{
    if (max_n < 1)
        throw DomainError("INVALID_PARAMETERS", "truncation scan needs N >= 1");
    ScanResult out;
    out.theta = theta_criterion(dec);
    std::vector<LocalWeyl> mods;
    bool all_finite = true;
    for (int N = 1; N <= max_n; ++N) {
        JetAlgebra A = jet_algebra({{0, N}});
        mods.push_back(local_weyl(dec, A, psi_from_pattern(pattern, A), cutoff));
        const auto& m = mods.back().module;
        out.entries.push_back({N, m.total_dim(), m.certificate});
        all_finite = all_finite && m.certificate == "FINITE";
    }
    if (!all_finite) {
        out.verdict = "INCONCLUSIVE";
        return out;
    }
    bool increasing = max_n > 1;
    for (int i = 1; i < max_n; ++i)
        increasing = increasing && out.entries[i].dim > out.entries[i - 1].dim;
    if (increasing) {
        out.verdict = "UNBOUNDED_EVIDENCE";
        return out;
    }
    int n0 = max_n;
    while (n0 > 1 && out.entries[n0 - 2].dim == out.entries[max_n - 1].dim)
        --n0;
    if (n0 >= max_n) {
        out.verdict = "INCONCLUSIVE";
        return out;
    }
    out.stabilized_at = n0;
    // certificate: g (x) t^{n0} kills the module for A = k[t]/(t^{n0+1})
    const LocalWeyl& next = mods[n0];
    const auto& mod = next.module;
    bool killed = true;
    for (std::size_t x = 0; x < next.map.g.basis.size() && killed; ++x) {
        const int z = next.map.index(static_cast<int>(x), n0);
        for (std::size_t s = 0; s < mod.spaces.size() && killed; ++s)
            for (int j = 0; j < mod.spaces[s].dim && killed; ++j)
                killed = mod.act(z, static_cast<int>(s), SparseVec::unit(j)).first < 0;
    }
    out.verdict = killed ? "STABILIZED" : "STABILIZED_UNCERTIFIED";
    return out;
}

std::vector<Polynomial> garland_coefficients(int N)
{
    // k p_k = -sum_{i=1}^{k} s_i p_{k-i}
    std::vector<Polynomial> p(N + 1);
    p[0][std::vector<int>(N, 0)] = 1;
    for (int k = 1; k <= N; ++k) {
        for (int i = 1; i <= k; ++i)
            for (const auto& [e, c] : p[k - i]) {
                auto f = e;
                f[i - 1] += 1;
                p[k][f] -= c / k;
            }
        for (auto it = p[k].begin(); it != p[k].end();)
            it = it->second == 0 ? p[k].erase(it) : std::next(it);
    }
    return p;
}

std::string polynomial_string(const Polynomial& p)
{
    if (p.empty())
        return "0";
    std::string s;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                mono += (mono.empty() ? "" : "*") + ("s" + std::to_string(i + 1))
                    + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
        std::string coef = to_string(c < 0 ? Scalar(-c) : c);
        std::string term = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
        s += s.empty() ? (c < 0 ? "-" : "") + term : (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

namespace {

std::string poly_label(const Vec& a)
{
    std::string s;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0)
            continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        std::string coef = to_string(a[k] < 0 ? Scalar(-a[k]) : a[k]);
        std::string term = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
        s += s.empty() ? (a[k] < 0 ? "-" : "") + term : (a[k] < 0 ? "-" : "+") + term;
    }
    return s.empty() ? "0" : s;
}

Scalar factorial(int n)
{
    Scalar f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

}  // namespace

GarlandCheck garland_verify(const JetAlgebra& A, const Vec& a_poly, int m)
{
    if (m < 0)
        throw DomainError("INVALID_PARAMETERS", "Garland degree must be non-negative");
    auto sl2 = root_datum(build_family("sl:2,0"));
    auto dec = distinguished_decomposition(sl2);
    MapAlgebra map = map_superalgebra(dec, A);
    const auto s = reductive_simples(dec).at(0);
    const SparseVec x = *map.g.coords.coords(s.x), y = *map.g.coords.coords(s.y), h = *map.g.coords.coords(s.h);
    const int xi = x.lead(), yi = y.lead(), hi = h.lead();
    const int dA = A.dim();
    std::vector<Role> role(map.L->dim(), Role::Free);
    std::vector<int> order;
    for (int j = 0; j < dA; ++j) {
        role[map.index(xi, j)] = Role::Annihilating;
        order.push_back(map.index(yi, j));
    }
    for (int j = 0; j < dA; ++j)
        order.push_back(map.index(hi, j));
    PBWSpace V(map.L, role, order, Vec(map.L->dim(), 0));
    const SparseVec a = A.polynomial(a_poly);
    auto X = [&](const SparseVec& b) { return map.element(x, b); };
    auto Y = [&](const SparseVec& b) { return map.element(y, b); };
    auto H = [&](const SparseVec& b) { return map.element(h, b); };
    const SparseVec v = SparseVec::unit(0);

    std::vector<SparseVec> word(m, X(a));
    word.insert(word.end(), m + 1, Y(A.unit()));
    SparseVec literal = V.act_word(word, v);
    SparseVec lhs = literal;
    lhs.scale(1 / (factorial(m) * factorial(m + 1)));

    const auto p = garland_coefficients(m);
    SparseVec rhs;
    for (int i = 0; i <= m; ++i)
        for (const auto& [e, c] : p[i]) {
            std::vector<SparseVec> w{Y(A.pow(a, m - i))};
            for (int j = 0; j < m; ++j)
                w.insert(w.end(), e[j], H(A.pow(a, j + 1)));
            rhs.axpy(m % 2 ? Scalar(-c) : c, V.act_word(w, v));
        }
    GarlandCheck g;
    g.m = m;
    g.a = poly_label(a_poly);
    g.holds = lhs == rhs;
    g.literal_holds = literal == rhs;
    return g;
}

namespace {

// Largest ideal of A inside the subspace spanned by `s`.
std::vector<SparseVec> largest_ideal(const JetAlgebra& A, const std::vector<SparseVec>& s)
{
    Echelon es;
    for (const auto& v : s)
        es.add(v);
    const int m = A.dim();
    std::map<std::pair<int, int>, int> row_of;
    std::vector<std::vector<SparseVec::Entry>> rows;
    for (int j = 0; j < m; ++j)
        for (int b = 0; b < m; ++b)
            for (const auto& [k, c] : es.reduce(A.mul(SparseVec::unit(j), SparseVec::unit(b)))) {
                auto key = std::make_pair(b, k);
                auto it = row_of.find(key);
                if (it == row_of.end()) {
                    it = row_of.emplace(key, static_cast<int>(rows.size())).first;
                    rows.emplace_back();
                }
                rows[it->second].emplace_back(j, c);
            }
    // a must also lie in s itself: a = a * 1 is covered by the products with the basis
    SparseMatrix M(static_cast<int>(rows.size()), m);
    for (std::size_t r = 0; r < rows.size(); ++r)
        M.row[r] = SparseVec::from_terms(rows[r]);
    return span_basis(kernel(M));
}

IdealInfo ideal_info(const JetAlgebra& A, std::vector<SparseVec> basis)
{
    IdealInfo info;
    info.basis = std::move(basis);
    for (std::size_t i = 0; i < A.points.size(); ++i) {
        SparseVec e = SparseVec::unit(A.index(static_cast<int>(i), 0));
        std::vector<SparseVec> local;
        for (const auto& v : info.basis)
            local.push_back(A.mul(e, v));
        const int k = A.orders[i] - static_cast<int>(span_basis(local).size());
        info.order_at_point.push_back(k);
        if (k > 0)
            info.support.push_back(A.points[i]);
    }
    return info;
}

// Kernel of a -> (rows built by `image`), columns indexed by the jet basis.
template <typename F>
std::vector<SparseVec> kernel_over_jets(int m, F image)
{
    std::map<std::vector<int>, int> row_of;
    std::vector<std::vector<SparseVec::Entry>> rows;
    for (int j = 0; j < m; ++j)
        image(j, [&](const std::vector<int>& key, const Scalar& c) {
            auto it = row_of.find(key);
            if (it == row_of.end()) {
                it = row_of.emplace(key, static_cast<int>(rows.size())).first;
                rows.emplace_back();
            }
            rows[it->second].emplace_back(j, c);
        });
    SparseMatrix M(static_cast<int>(rows.size()), m);
    for (std::size_t r = 0; r < rows.size(); ++r)
        M.row[r] = SparseVec::from_terms(rows[r]);
    return kernel(M);
}

}  // namespace

AnnihilatorResult annihilating_ideals(const LocalWeyl& w)
{
    const auto& mod = w.module;
    const auto& a = w.map.g;
    const auto& A = w.map.A;
    const int m = A.dim();
    if (mod.certificate != "FINITE")
        throw DomainError("NOT_FINITE", "the annihilator of the whole module needs a finite module",
            {{"certificate", mod.certificate}});
    const int s0 = mod.space_index(mod.highest);
    AnnihilatorResult out;
    // I: (y (x) a) w = 0 for every lowering y of r
    std::vector<SparseVec> ann_i = kernel_over_jets(m, [&](int j, auto emit) {
        if (s0 < 0)
            return;
        for (std::size_t x = 0; x < a.basis.size(); ++x) {
            if (a.block[x] >= 0 || !a.reductive[x])
                continue;
            auto [t, c] = mod.act(w.map.index(static_cast<int>(x), j), s0, SparseVec::unit(0));
            for (const auto& [k, v] : c)
                emit({static_cast<int>(x), t, k}, v);
        }
    });
    // J: (x (x) a) M = 0 for every x in g
    std::vector<SparseVec> ann_j = kernel_over_jets(m, [&](int j, auto emit) {
        for (std::size_t x = 0; x < a.basis.size(); ++x)
            for (std::size_t s = 0; s < mod.spaces.size(); ++s)
                for (int b = 0; b < mod.spaces[s].dim; ++b) {
                    auto [t, c] = mod.act(w.map.index(static_cast<int>(x), j), static_cast<int>(s), SparseVec::unit(b));
                    for (const auto& [k, v] : c)
                        emit({static_cast<int>(x), static_cast<int>(s), b, t, k}, v);
                }
    });
    out.I = ideal_info(A, largest_ideal(A, ann_i));
    out.J = ideal_info(A, largest_ideal(A, ann_j));
    out.supports_equal = out.I.support == out.J.support;
    return out;
}

TensorCheck tensor_check(const TriangularDecomposition& dec, const JetAlgebra& A, const PsiValues& psi,
    const JetAlgebra& B, const PsiValues& phi, int cutoff)
{
    JetAlgebra C = direct_sum(A, B);
    PsiValues chi;
    for (std::size_t i = 0; i < psi.values.size() && i < phi.values.size(); ++i) {
        Vec row = psi.values[i];
        row.insert(row.end(), phi.values[i].begin(), phi.values[i].end());
        chi.values.push_back(row);
    }
    if (psi.values.size() != phi.values.size())
        throw DomainError("INVALID_PSI", "psi and phi need the same number of Cartan rows");
    const auto ma = local_weyl(dec, A, psi, cutoff).module;
    const auto mb = local_weyl(dec, B, phi, cutoff).module;
    const auto mc = local_weyl(dec, C, chi, cutoff).module;
    TensorCheck t;
    t.dim_a = ma.total_dim();
    t.dim_b = mb.total_dim();
    t.dim_sum = mc.total_dim();
    const bool finite = ma.certificate == "FINITE" && mb.certificate == "FINITE" && mc.certificate == "FINITE";
    t.total_holds = finite && t.dim_sum == t.dim_a * t.dim_b;
    std::map<Vec, long long> conv;
    for (const auto& sa : ma.spaces)
        for (const auto& sb : mb.spaces) {
            Vec w(sa.weight.size());
            for (std::size_t k = 0; k < w.size(); ++k)
                w[k] = sa.weight[k] + sb.weight[k];
            conv[w] += static_cast<long long>(sa.dim) * sb.dim;
        }
    std::map<Vec, long long> direct;
    for (const auto& s : mc.spaces)
        direct[s.weight] = s.dim;
    t.weights_hold = finite && conv == direct;
    return t;
}

}  // namespace superlie
