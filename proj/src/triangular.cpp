#include "superlie/triangular.hpp"

#include "superlie/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace superlie {

using json = nlohmann::json;

std::vector<int> TriangularDecomposition::positive_roots() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < positive.size(); ++i)
        if (positive[i])
            out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> TriangularDecomposition::negative_roots() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < positive.size(); ++i)
        if (!positive[i])
            out.push_back(static_cast<int>(i));
    return out;
}

Scalar TriangularDecomposition::value(int root) const
{
    return dot(datum->roots[root].functional, witness);
}

namespace {

const json& realization(const RootDatum& d)
{
    return d.g->metadata.at("realization");
}

bool is_matrix(const RootDatum& d)
{
    return realization(d).at("kind") == "matrix";
}

int realization_size(const RootDatum& d)
{
    const auto& r = realization(d);
    return is_matrix(d) ? r.at("size").get<int>() : r.at("n").get<int>();
}

std::string meta_string(const RootDatum& d, const char* key)
{
    const auto& m = d.g->metadata;
    return m.contains(key) ? m.at(key).get<std::string>() : std::string();
}

std::vector<int> meta_params(const RootDatum& d)
{
    const auto& m = d.g->metadata;
    return m.contains("params") ? m.at("params").get<std::vector<int>>() : std::vector<int>{};
}

// Diagonal of each Cartan element in the realization: matrix diagonal, or the coefficient of
// xi_j d_j for derivations.
std::vector<Vec> cartan_diagonals(const RootDatum& d)
{
    const auto& terms = realization(d).at("terms");
    const bool matrix = is_matrix(d);
    const int size = realization_size(d);
    std::vector<Vec> out;
    for (const auto& h : d.cartan) {
        Vec diag(size, 0);
        for (const auto& [b, c] : h)
            for (const auto& t : terms.at(b)) {
                const int i = t.at(0).get<int>();
                const int j = t.at(1).get<int>();
                const Scalar v = parse_scalar(t.at(2).get<std::string>());
                if (matrix ? i == j : static_cast<unsigned>(i) == (1u << j))
                    diag[j] += c * v;
            }
        out.push_back(std::move(diag));
    }
    return out;
}

// Realization weight of a root: e_i - e_j for the first off-diagonal matrix unit E_ij of its
// root vector, e_K - e_j for the lowest-degree term xi_K d_j of a derivation.
Vec realization_weight(const RootDatum& d, int root)
{
    const auto& terms = realization(d).at("terms");
    const int size = realization_size(d);
    std::map<std::pair<int, int>, Scalar> acc;
    for (const auto& [b, c] : d.roots[root].space.front())
        for (const auto& t : terms.at(b))
            acc[{t.at(0).get<int>(), t.at(1).get<int>()}] += c * parse_scalar(t.at(2).get<std::string>());
    Vec w(size, 0);
    if (is_matrix(d)) {
        for (const auto& [ij, c] : acc)
            if (c != 0 && ij.first != ij.second) {
                w[ij.first] += 1;
                w[ij.second] -= 1;
                return w;
            }
        throw std::logic_error("realization_weight: root vector has no off-diagonal entry");
    }
    int best = -1;
    std::pair<int, int> pick;
    for (const auto& [mj, c] : acc) {
        const int deg = std::popcount(static_cast<unsigned>(mj.first));
        if (c != 0 && (best < 0 || deg < best)) {
            best = deg;
            pick = mj;
        }
    }
    if (best < 0)
        throw std::logic_error("realization_weight: zero root vector");
    for (int i = 0; i < size; ++i)
        if (static_cast<unsigned>(pick.first) >> i & 1u)
            w[i] += 1;
    w[pick.second] -= 1;
    return w;
}

// Decomposition from values d . weight + hw * height on every root.
TriangularDecomposition from_realization_values(std::shared_ptr<const RootDatum> datum, const Vec& dvec,
    const Scalar& hw, const std::string& provenance)
{
    const auto& d = *datum;
    std::vector<Vec> fs;
    std::vector<int> signs;
    for (int r = 0; r < static_cast<int>(d.roots.size()); ++r) {
        Scalar v = dot(realization_weight(d, r), dvec) + hw * d.roots[r].height.value_or(0);
        if (v == 0)
            throw std::logic_error("distinguished witness vanishes on " + functional_string(d.roots[r].functional));
        fs.push_back(d.roots[r].functional);
        signs.push_back(v > 0 ? 1 : -1);
    }
    auto dec = realize_signs(datum, signs);
    if (!dec)
        throw std::logic_error("distinguished sign pattern is not realizable");
    dec->provenance = provenance;
    return *dec;
}

std::vector<int> block_sizes(const RootDatum& d)
{
    const auto rp = realization(d).at("row_parity").get<std::vector<int>>();
    const int m = static_cast<int>(std::count(rp.begin(), rp.end(), 0));
    return {m, static_cast<int>(rp.size()) - m};
}

bool is_periplectic(const RootDatum& d)
{
    return meta_string(d, "family") == "p";
}

bool is_osp_family(const std::string& f)
{
    return f == "osp" || f == "B" || f == "C" || f == "D";
}

std::vector<int> signs_of(const TriangularDecomposition& dec)
{
    std::vector<int> s;
    for (bool p : dec.positive)
        s.push_back(p ? 1 : -1);
    return s;
}

std::vector<Vec> all_functionals(const RootDatum& d)
{
    std::vector<Vec> fs;
    for (const auto& r : d.roots)
        fs.push_back(r.functional);
    return fs;
}

int negative_index(const RootDatum& d, int root)
{
    return d.find(functional_neg(d.roots[root].functional));
}

std::vector<Vec> sorted_functionals(const SimpleSystem& sys)
{
    std::vector<Vec> out;
    for (const auto& s : sys.simples)
        out.push_back(sys.dec.datum->roots[s.root].functional);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TriangularDecomposition positive_system(std::shared_ptr<const RootDatum> datum, const Vec& witness)
{
    const auto& d = *datum;
    if (static_cast<int>(witness.size()) != d.coord_dim())
        throw std::invalid_argument("positive_system: witness has the wrong length");
    TriangularDecomposition dec;
    dec.datum = datum;
    dec.witness = witness;
    std::vector<SparseVec> plus, minus, borel = d.cartan;
    for (const auto& r : d.roots) {
        const Scalar v = dot(r.functional, witness);
        if (v == 0)
            throw DomainError("NOT_REGULAR", "witness vanishes on root " + functional_string(r.functional),
                {{"root", functional_string(r.functional)}});
        dec.positive.push_back(v > 0);
        auto& side = v > 0 ? plus : minus;
        side.insert(side.end(), r.space.begin(), r.space.end());
        if (v > 0)
            borel.insert(borel.end(), r.space.begin(), r.space.end());
    }
    // Closed under brackets because root values add; the tests check it independently.
    const int n = d.g->dim();
    dec.n_plus = Subspace(n, plus);
    dec.n_minus = Subspace(n, minus);
    dec.borel = Subspace(n, borel);
    return dec;
}

std::optional<TriangularDecomposition> realize_signs(std::shared_ptr<const RootDatum> datum,
    const std::vector<int>& signs)
{
    auto h = solve_strict(all_functionals(*datum), signs);
    if (!h)
        return std::nullopt;
    return positive_system(datum, primitive_integer(*h));
}

Vec functional_from_weight(const RootDatum& d, const Vec& weight, const Scalar& height)
{
    Vec f;
    for (const auto& diag : cartan_diagonals(d))
        f.push_back(dot(weight, diag));
    if (d.extra_coordinate)
        f.push_back(height);
    return f;
}

TriangularDecomposition distinguished_decomposition(std::shared_ptr<const RootDatum> datum,
    const std::string& variant)
{
    const auto& d = *datum;
    const std::string family = meta_string(d, "family");
    const auto params = meta_params(d);
    if (variant != "distinguished" && variant != "bmax" && variant != "bmin")
        throw DomainError("BAD_VARIANT", "unknown decomposition variant '" + variant + "'");

    if (is_cartan_type(d)) {
        const int n = realization_size(d);
        const Scalar big = n * n + 1;
        const Scalar sign = variant == "bmin" ? -1 : 1;
        Vec a(n);
        if (family == "H") {
            const int r = n / 2;
            for (int k = 0; k < r; ++k) {
                a[k] = r - k;
                a[r + k] = -(r - k);
            }
        } else {
            for (int k = 0; k < n; ++k)
                a[k] = n - k;
        }
        for (auto& x : a)
            x += sign * big;
        return from_realization_values(datum, a, 0, variant == "distinguished" ? "bmax" : variant);
    }
    if (variant != "distinguished")
        throw DomainError("BAD_VARIANT", "variant '" + variant + "' applies to Cartan type only");

    const int size = realization_size(d);
    Vec dv(size, 0);
    Scalar hw = 0;
    if (is_periplectic(d)) {
        const int big_n = size / 2;
        for (int i = 0; i < big_n; ++i) {
            dv[i] = big_n - 1 - i;
            dv[big_n + i] = -dv[i];
        }
        hw = 4 * big_n;
    } else if (is_osp_family(family)) {
        const int big_m = params.at(0);
        const int n = params.at(1) / 2;
        const int m = big_m / 2;
        std::vector<Scalar> eps(m), del(n);
        if (big_m == 2) {
            eps[0] = n + 1;
            for (int i = 0; i < n; ++i)
                del[i] = n - i;
        } else {
            // B: eps_i = m+1-i; D: eps_i = m-i+1; both with delta_i = m+n+1-i (1-based)
            for (int i = 0; i < m; ++i)
                eps[i] = m - i;
            for (int i = 0; i < n; ++i)
                del[i] = m + n - i;
        }
        for (int i = 0; i < m; ++i) {
            dv[i] = eps[i];
            dv[big_m - 1 - i] = -eps[i];
        }
        for (int i = 0; i < n; ++i) {
            dv[big_m + i] = del[i];
            dv[big_m + 2 * n - 1 - i] = -del[i];
        }
    } else {
        const auto rp = realization(d).at("row_parity").get<std::vector<int>>();
        const auto bs = block_sizes(d);
        int e = 0, o = 0;
        for (int i = 0; i < size; ++i)
            dv[i] = rp[i] == 0 ? Scalar(bs[0] + bs[1] - e++) : Scalar(bs[1] - o++);
    }
    return from_realization_values(datum, dv, hw, "distinguished");
}

TriangularDecomposition opposite(const TriangularDecomposition& dec)
{
    auto out = positive_system(dec.datum, functional_neg(dec.witness));
    out.provenance = "opposite(" + dec.provenance + ")";
    return out;
}

std::vector<int> SimpleSystem::roots() const
{
    std::vector<int> out;
    for (const auto& s : simples)
        out.push_back(s.root);
    return out;
}

const SimpleRoot* SimpleSystem::find(int root) const
{
    for (const auto& s : simples)
        if (s.root == root)
            return &s;
    return nullptr;
}

Scalar evaluate_on_cartan(const RootDatum& d, const Vec& functional, const SparseVec& h)
{
    SpanCoordinates sc(d.cartan);
    auto c = sc.coords(h);
    if (!c)
        throw std::invalid_argument("evaluate_on_cartan: element is not in the Cartan subalgebra");
    Scalar v = 0;
    for (const auto& [k, x] : *c)
        v += x * functional[k];
    return v;
}

std::vector<int> serganova_simples(const TriangularDecomposition& dec)
{
    const auto& d = *dec.datum;
    const auto fs = all_functionals(d);
    const auto base = signs_of(dec);
    std::vector<int> out;
    for (int a : dec.positive_roots()) {
        auto s = base;
        s[a] = -1;
        const int na = negative_index(d, a);
        if (na >= 0)
            s[na] = 1;
        if (solve_strict(fs, s))
            out.push_back(a);
    }
    return out;
}

SimpleSystem simple_system(const TriangularDecomposition& dec)
{
    const auto& d = *dec.datum;
    const auto& g = *d.g;
    std::vector<int> simple;
    if (is_cartan_type(d) || is_periplectic(d)) {
        simple = serganova_simples(dec);
    } else {
        const auto pos = dec.positive_roots();
        std::map<Vec, int> positive_index;
        for (int a : pos)
            positive_index[d.roots[a].functional] = a;
        std::vector<bool> decomposable(d.roots.size(), false);
        for (std::size_t i = 0; i < pos.size(); ++i)
            for (std::size_t j = i; j < pos.size(); ++j) {
                auto it = positive_index.find(functional_add(d.roots[pos[i]].functional, d.roots[pos[j]].functional));
                if (it != positive_index.end())
                    decomposable[it->second] = true;
            }
        for (int a : pos)
            if (!decomposable[a])
                simple.push_back(a);
    }
    SimpleSystem sys;
    sys.dec = dec;
    for (int a : simple) {
        SimpleRoot s;
        s.root = a;
        s.x = d.roots[a].space.front();
        const int na = negative_index(d, a);
        if (na >= 0) {
            for (const auto& y : d.roots[na].space) {
                SparseVec h = bracket(g, s.x, y);
                if (h.empty())
                    continue;
                s.y = y;
                s.h = h;
                break;
            }
            if (!s.h.empty() && d.roots[a].parity == 0) {
                const Scalar v = evaluate_on_cartan(d, d.roots[a].functional, s.h);
                if (v != 0) {
                    s.y.scale(Scalar(2) / v);
                    s.h.scale(Scalar(2) / v);
                }
            }
        }
        sys.simples.push_back(std::move(s));
    }
    return sys;
}

std::vector<Vec> odd_reflection_formula(const SimpleSystem& sys, int beta)
{
    const auto& d = *sys.dec.datum;
    const SimpleRoot* sb = sys.find(beta);
    if (!sb)
        throw DomainError("NOT_SIMPLE", "root " + functional_string(d.roots[beta].functional) + " is not simple");
    const Vec& fb = d.roots[beta].functional;
    std::vector<Vec> out;
    for (const auto& s : sys.simples) {
        const Vec& f = d.roots[s.root].functional;
        if (s.root == beta) {
            out.push_back(functional_neg(fb));
            continue;
        }
        const bool orthogonal = !s.h.empty() && !sb->h.empty() && evaluate_on_cartan(d, fb, s.h) == 0
            && evaluate_on_cartan(d, f, sb->h) == 0;
        out.push_back(orthogonal ? f : functional_add(f, fb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

TriangularDecomposition serganova_reflection(const TriangularDecomposition& dec, int alpha)
{
    const auto& d = *dec.datum;
    const std::string name = functional_string(d.roots[alpha].functional);
    if (!dec.positive[alpha])
        throw DomainError("NOT_SIMPLE_FOR_BOREL", "root " + name + " is not positive");
    auto s = signs_of(dec);
    s[alpha] = -1;
    const int na = negative_index(d, alpha);
    if (na >= 0)
        s[na] = 1;
    auto out = realize_signs(dec.datum, s);
    if (!out)
        throw DomainError("NOT_SIMPLE_FOR_BOREL", "reflecting at " + name + " gives no triangular decomposition",
            {{"root", name}});
    out->provenance = dec.provenance + " > r" + name;
    return *out;
}

SimpleSystem odd_reflection(const SimpleSystem& sys, int beta)
{
    const auto& d = *sys.dec.datum;
    const std::string name = functional_string(d.roots[beta].functional);
    const SimpleRoot* sb = sys.find(beta);
    if (!sb)
        throw DomainError("NOT_SIMPLE", "root " + name + " is not simple", {{"root", name}});
    if (d.roots[beta].parity != 1 || sb->h.empty()
        || evaluate_on_cartan(d, d.roots[beta].functional, sb->h) != 0)
        throw DomainError("NOT_ISOTROPIC", "root " + name + " is not an isotropic odd root", {{"root", name}});
    auto expected = odd_reflection_formula(sys, beta);
    auto out = simple_system(serganova_reflection(sys.dec, beta));
    if (sorted_functionals(out) != expected)
        throw std::logic_error("odd reflection at " + name + " disagrees with the recomputed simple system");
    return out;
}

bool is_cartan_type(const RootDatum& d)
{
    return meta_string(d, "type") == "cartan";
}

std::vector<bool> reductive_roots(const RootDatum& d)
{
    std::vector<bool> out;
    const bool cartan = is_cartan_type(d);
    for (const auto& r : d.roots)
        out.push_back(cartan ? r.height.value_or(0) == 0 : r.parity == 0);
    return out;
}

Subspace reductive_part(const RootDatum& d)
{
    std::vector<SparseVec> span = d.cartan;
    const auto rr = reductive_roots(d);
    for (std::size_t i = 0; i < d.roots.size(); ++i)
        if (rr[i])
            span.insert(span.end(), d.roots[i].space.begin(), d.roots[i].space.end());
    return Subspace(d.g->dim(), span);
}

int extremal_root(const TriangularDecomposition& dec, const std::string& direction)
{
    if (direction != "lowest" && direction != "highest")
        throw std::invalid_argument("extremal_root: direction must be lowest or highest");
    const bool lowest = direction == "lowest";
    const auto& d = *dec.datum;
    const auto& g = *d.g;
    const auto& acting = lowest ? dec.n_minus.basis() : dec.n_plus.basis();
    const int n = g.dim();
    std::vector<int> found;
    for (int r = 0; r < static_cast<int>(d.roots.size()); ++r) {
        if (dec.positive[r] == lowest)
            continue;
        const auto& space = d.roots[r].space;
        SparseMatrix m(static_cast<int>(space.size()), static_cast<int>(acting.size()) * n);
        for (std::size_t i = 0; i < space.size(); ++i) {
            std::vector<SparseVec::Entry> t;
            for (std::size_t a = 0; a < acting.size(); ++a)
                for (const auto& [k, c] : bracket(g, acting[a], space[i]))
                    t.emplace_back(static_cast<int>(a) * n + k, c);
            m.row[i] = SparseVec::from_terms(std::move(t));
        }
        if (rank(m) < static_cast<int>(space.size()))
            found.push_back(r);
    }
    if (found.size() == 1)
        return found.front();
    const bool relaxed = meta_string(d, "type") == "sl_nn" || meta_string(d, "family") == "A";
    if (relaxed && !found.empty()) {
        auto better = [&](int a, int b) { return lowest ? dec.value(a) < dec.value(b) : dec.value(a) > dec.value(b); };
        return *std::min_element(found.begin(), found.end(), better);
    }
    throw DomainError("NOT_UNIQUE", "the " + direction + " root is not unique",
        {{"candidates", static_cast<int>(found.size())}});
}

Conditions check_conditions(const TriangularDecomposition& dec)
{
    const auto& d = *dec.datum;
    const auto rr = reductive_roots(d);
    Conditions c;
    c.c1 = true;
    for (std::size_t i = 0; i < d.roots.size(); ++i)
        if (d.roots[i].parity == 0 && !dec.positive[i] && !rr[i])
            c.c1 = false;
    // -theta is the lowest weight of the adjoint module; it need not be minus the highest root
    // (p(n), and Cartan type with degree >= 2).
    c.lowest_root = extremal_root(dec, "lowest");
    c.c2 = c.c1 && rr[c.lowest_root];
    Subspace rn = sum(reductive_part(d), dec.n_plus);
    c.parabolic = rn.dim() < d.g->dim() && is_subalgebra(*d.g, rn);
    return c;
}

namespace {

Vec unit_weight(int size, int i, int j)
{
    Vec w(size, 0);
    w[i] += 1;
    w[j] -= 1;
    return w;
}

struct ChainStep {
    Vec functional;
    bool odd_reflection;  // three-case formula on simple systems; otherwise a Serganova reflection
};

}  // namespace

ChainResult family_chain(std::shared_ptr<const RootDatum> datum)
{
    const auto& d = *datum;
    const std::string family = meta_string(d, "family");
    const std::string type = meta_string(d, "type");
    ChainResult res;
    std::vector<ChainStep> plan;
    bool take_opposite = false;

    if (is_cartan_type(d)) {
        res.steps.push_back(distinguished_decomposition(datum, "bmin"));
        const int n = realization_size(d);
        Vec w(n, 0);
        if (family == "H") {
            for (int k = 0; k < 2; ++k) {
                // -eps_k - delta is the root of d_k, degree -1
                Vec v(n, 0);
                v[k] = -1;
                plan.push_back({functional_from_weight(d, v, -1), false});
            }
        } else {
            w[0] = -1;
            plan.push_back({functional_from_weight(d, w, -1), false});
        }
        take_opposite = true;
    } else {
        res.steps.push_back(distinguished_decomposition(datum));
        const int size = realization_size(d);
        if (is_periplectic(d)) {
            const int big_n = size / 2;
            for (int k = big_n - 1; k >= 0; --k)
                plan.push_back({functional_from_weight(d, unit_weight(size, k, 2 * big_n - 1), 1), false});
        } else if (type == "basic_I" && is_osp_family(family)) {
            const int big_m = meta_params(d).at(0);
            plan.push_back({functional_from_weight(d, unit_weight(size, 0, big_m)), true});
        } else if (type == "basic_I" || type == "sl_nn" || type == "gl") {
            const auto bs = block_sizes(d);
            const int m = bs[0];
            // With a block of size one the single reflection at the odd simple root already
            // makes the highest root even; the longer chain is needed only for two larger blocks.
            const int last = (bs[0] == 1 || bs[1] == 1) ? m - 1 : 0;
            for (int k = m - 1; k >= last; --k)
                plan.push_back({functional_from_weight(d, unit_weight(size, k, m), 1), true});
        }
    }

    for (const auto& step : plan) {
        const int idx = d.find(step.functional);
        res.reflected.push_back(step.functional);
        if (idx < 0) {
            res.failure = "no root " + functional_string(step.functional);
            return res;
        }
        try {
            if (step.odd_reflection)
                res.steps.push_back(odd_reflection(simple_system(res.steps.back()), idx).dec);
            else
                res.steps.push_back(serganova_reflection(res.steps.back(), idx));
        } catch (const DomainError& e) {
            res.failure = e.code() + ": " + e.what();
            return res;
        }
    }
    if (take_opposite)
        res.steps.push_back(opposite(res.steps.back()));
    res.completed = true;
    try {
        res.endpoint_c2 = check_conditions(res.steps.back()).c2;
    } catch (const DomainError& e) {
        res.failure = e.code() + ": " + e.what();
    }
    return res;
}

TriangularDecomposition find_c2_decomposition(std::shared_ptr<const RootDatum> datum)
{
    const auto& d = *datum;
    if (!is_cartan_type(d)) {
        auto dist = distinguished_decomposition(datum);
        if (check_conditions(dist).c2)
            return dist;
    }
    auto chain = family_chain(datum);
    if (chain.completed && chain.endpoint_c2)
        return chain.steps.back();

    // beta (a root of r) is forced to be the unique minimal root, and every even root outside r
    // positive.
    const auto rr = reductive_roots(d);
    const int nr = static_cast<int>(d.roots.size());
    for (int beta = 0; beta < nr; ++beta) {
        if (!rr[beta])
            continue;
        std::vector<Vec> fs;
        std::vector<int> signs;
        bool clash = false;
        for (int a = 0; a < nr; ++a) {
            if (d.roots[a].parity == 0 && !rr[a]) {
                if (a == beta)
                    clash = true;
                fs.push_back(d.roots[a].functional);
                signs.push_back(1);
            }
            if (a != beta) {
                fs.push_back(functional_add(d.roots[a].functional, functional_neg(d.roots[beta].functional)));
                signs.push_back(1);
            }
        }
        if (clash)
            continue;
        auto h = solve_strict(fs, signs);
        if (!h)
            continue;
        bool ok = true;
        for (int a = 0; a < nr && ok; ++a) {
            if (dot(d.roots[a].functional, *h) != 0)
                continue;
            fs.push_back(d.roots[a].functional);
            signs.push_back(1);
            auto h2 = solve_strict(fs, signs);
            if (!h2) {
                signs.back() = -1;
                h2 = solve_strict(fs, signs);
            }
            if (!h2)
                ok = false;
            else
                h = h2;
        }
        if (!ok)
            continue;
        auto dec = positive_system(datum, primitive_integer(*h));
        dec.provenance = "search(lowest=" + functional_string(d.roots[beta].functional) + ")";
        if (check_conditions(dec).c2)
            return dec;
    }
    throw DomainError("SEARCH_EXHAUSTED", "no triangular decomposition satisfying C2 was found");
}

std::vector<TriangularDecomposition> enumerate_chambers(std::shared_ptr<const RootDatum> datum, std::size_t limit)
{
    const auto& d = *datum;
    const int nr = static_cast<int>(d.roots.size());
    std::vector<int> neg(nr);
    for (int r = 0; r < nr; ++r)
        neg[r] = negative_index(d, r);
    std::vector<TriangularDecomposition> out;
    std::vector<int> signs(nr, 0);
    std::vector<Vec> fs;
    std::vector<int> fsigns;

    auto dfs = [&](auto&& self, int r) -> void {
        if (out.size() >= limit)
            return;
        if (r == nr) {
            auto h = solve_strict(fs, fsigns);
            auto dec = positive_system(datum, primitive_integer(*h));
            dec.provenance = "chamber " + std::to_string(out.size());
            out.push_back(std::move(dec));
            return;
        }
        if (neg[r] >= 0 && neg[r] < r) {
            // sign forced by the opposite root; no new constraint
            signs[r] = -signs[neg[r]];
            self(self, r + 1);
            return;
        }
        for (int s : {1, -1}) {
            fs.push_back(d.roots[r].functional);
            fsigns.push_back(s);
            if (solve_strict(fs, fsigns)) {
                signs[r] = s;
                self(self, r + 1);
            }
            fs.pop_back();
            fsigns.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace superlie
