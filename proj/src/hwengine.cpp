#include "superlie/hwengine.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace superlie {

namespace {

Vec add(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

constexpr int kMaxDoublings = 3;

}  // namespace

int default_cutoff(int lambda_sum, int odd_lowering, int max_depth)
{
    return (4 * lambda_sum + odd_lowering + 1) * std::max(1, max_depth);
}

// One pass of the two-phase closure over the induced space V = U(L) (x)_{U(P)} k_psi, where P is
// spanned by the Cartan-like block, the raising block and the lowering elements marked annihilating.
// Invariant after processing depth d: every weight space of depth <= d holds Sub_mu = (U(n-) T)_mu
// with T = U(b) S, so dim M_mu = |monomials of weight mu| - rank Sub_mu.
struct ModuleEngine {
    struct Space {
        Vec weight;
        int depth = 0;
        std::vector<int> monos;
        Echelon sub;
        std::vector<int> standard;
        std::map<int, int> coord;
        int dim = 0;
    };

    Presentation pres;                 // engine basis
    std::vector<bool> annihilating;    // per engine basis element (lowering ones killed by w)
    std::vector<SparseVec> from_user;  // user basis index -> engine coordinates
    Presentation user;                 // the presentation as given
    std::unique_ptr<PBWSpace> V;
    std::vector<int> lowering, raising, cartan_like;
    int W = 1;
    std::map<Vec, Space> spaces;
    std::map<int, std::vector<Vec>> by_depth;
    std::map<Vec, Echelon> T;
    std::vector<int> free_depth;
    int processed = -1;
    int zero_run = 0;
    bool finite = false;

    ModuleEngine(Presentation p, std::vector<bool> ann, std::vector<SparseVec> map_from_user, Presentation given)
        : pres(std::move(p)), annihilating(std::move(ann)), from_user(std::move(map_from_user)), user(std::move(given))
    {
        const int n = pres.L->dim();
        std::vector<Role> role(n);
        std::vector<int> free;
        for (int z = 0; z < n; ++z) {
            if (pres.block[z] < 0) {
                lowering.push_back(z);
                W = std::max(W, pres.depth[z]);
                if (pres.depth[z] <= 0)
                    throw std::logic_error("ModuleEngine: lowering element with non-positive depth");
                role[z] = annihilating[z] ? Role::Annihilating : Role::Free;
                if (!annihilating[z])
                    free.push_back(z);
            } else if (pres.block[z] == 0) {
                cartan_like.push_back(z);
                role[z] = Role::Character;
            } else {
                raising.push_back(z);
                role[z] = Role::Annihilating;
            }
        }
        // deepest first, odd before even at equal depth
        std::stable_sort(free.begin(), free.end(), [&](int a, int b) {
            if (pres.depth[a] != pres.depth[b])
                return pres.depth[a] > pres.depth[b];
            return pres.L->parity[a] > pres.L->parity[b];
        });
        Vec chi(n, 0);
        for (int z : cartan_like)
            chi[z] = pres.psi[z];
        V = std::make_unique<PBWSpace>(pres.L, role, free, chi);
        for (int z : free)
            free_depth.push_back(pres.depth[z]);
        close_relations();
    }

    Vec mono_weight(int m) const
    {
        Vec w = pres.highest;
        const auto& e = V->exponents(m);
        for (std::size_t p = 0; p < e.size(); ++p)
            if (e[p])
                for (std::size_t k = 0; k < w.size(); ++k)
                    w[k] += e[p] * pres.weight[V->free_element(static_cast<int>(p))][k];
        return w;
    }

    // Phase 1: T = U(b) S, stored per weight.
    void close_relations()
    {
        std::vector<SparseVec> work;
        auto push = [&](const SparseVec& v) {
            if (v.empty())
                return;
            Vec w = mono_weight(v.lead());
            if (T[w].add(v))
                work.push_back(v);
        };
        for (const auto& rel : pres.relations)
            push(V->act_word(rel, SparseVec::unit(0)));
        while (!work.empty()) {
            SparseVec v = std::move(work.back());
            work.pop_back();
            for (int z : raising)
                push(V->act(z, v));
            if (!pres.cartan_diagonal)
                for (int z : cartan_like)
                    push(V->act(z, v));
        }
    }

    void generate(std::vector<int>& e, std::size_t p, int left, std::vector<int>& out)
    {
        if (left == 0) {
            out.push_back(V->intern(e));
            return;
        }
        if (p == e.size())
            return;
        const int dp = free_depth[p];
        const int odd = pres.L->parity[V->free_element(static_cast<int>(p))];
        const int top = odd ? 1 : left / dp;
        for (int k = std::min(top, left / dp); k >= 0; --k) {
            e[p] = k;
            generate(e, p + 1, left - k * dp, out);
        }
        e[p] = 0;
    }

    // Phase 2 at one depth.
    void step()
    {
        const int d = ++processed;
        std::vector<int> monos;
        std::vector<int> e(V->free_count(), 0);
        generate(e, 0, d, monos);
        std::map<Vec, std::vector<int>> groups;
        for (int m : monos)
            groups[mono_weight(m)].push_back(m);
        bool all_zero = true;
        for (auto& [w, ms] : groups) {
            Space sp;
            sp.weight = w;
            sp.depth = d;
            sp.monos = ms;
            auto t = T.find(w);
            if (t != T.end())
                for (const auto& r : t->second.basis())
                    sp.sub.add(r);
            for (int y : lowering) {
                if (sp.sub.rank() == static_cast<int>(ms.size()))
                    break;
                if (pres.depth[y] > d)
                    continue;
                auto it = spaces.find(sub(w, pres.weight[y]));
                if (it == spaces.end())
                    continue;
                for (const auto& r : it->second.sub.basis()) {
                    sp.sub.add(V->act(y, r));
                    if (sp.sub.rank() == static_cast<int>(ms.size()))
                        break;
                }
            }
            for (int m : ms)
                if (!sp.sub.is_pivot(m)) {
                    sp.coord[m] = static_cast<int>(sp.standard.size());
                    sp.standard.push_back(m);
                }
            sp.dim = static_cast<int>(sp.standard.size());
            if (sp.dim)
                all_zero = false;
            by_depth[d].push_back(w);
            spaces.emplace(w, std::move(sp));
        }
        if (d > 0) {
            zero_run = all_zero ? zero_run + 1 : 0;
            if (zero_run >= W)
                finite = true;
        }
    }

    // Coordinates (over the standard monomials of the space at weight w) of a vector of V.
    std::optional<SparseVec> reduce_at(const Vec& w, const SparseVec& v) const
    {
        auto it = spaces.find(w);
        if (it == spaces.end())
            return std::nullopt;
        SparseVec r = it->second.sub.reduce(v);
        std::vector<SparseVec::Entry> t;
        for (const auto& [m, a] : r)
            t.emplace_back(it->second.coord.at(m), a);
        return SparseVec::from_terms(std::move(t));
    }

    SparseVec lift(const Vec& w, const SparseVec& coords) const
    {
        const auto& sp = spaces.at(w);
        std::vector<SparseVec::Entry> t;
        for (const auto& [i, a] : coords)
            t.emplace_back(sp.standard.at(i), a);
        return SparseVec::from_terms(std::move(t));
    }
};

namespace {

// Lowering elements that annihilate the generator, found from the spaces of depth <= W.
std::vector<SparseVec> annihilator_in_lowering(ModuleEngine& eng)
{
    const int big = 1 << 28;
    std::map<Vec, std::vector<int>> by_weight;
    for (int y : eng.lowering)
        by_weight[eng.pres.weight[y]].push_back(y);
    std::vector<SparseVec> out;
    for (const auto& [beta, gens] : by_weight) {
        Vec w = add(eng.pres.highest, beta);
        auto it = eng.spaces.find(w);
        if (it == eng.spaces.end())
            continue;
        std::map<int, int> single;  // monomial id -> algebra index
        for (int y : gens) {
            std::vector<int> e(eng.V->free_count(), 0);
            e[eng.V->free_position(y)] = 1;
            single[eng.V->intern(e)] = y;
        }
        Echelon ech;
        for (const auto& r : it->second.sub.basis()) {
            std::vector<SparseVec::Entry> t;
            for (const auto& [m, a] : r)
                t.emplace_back(single.count(m) ? big + m : m, a);
            ech.add(SparseVec::from_terms(std::move(t)));
        }
        for (const auto& r : ech.basis()) {
            if (r.lead() < big)
                continue;
            std::vector<SparseVec::Entry> t;
            for (const auto& [m, a] : r)
                t.emplace_back(single.at(m - big), a);
            out.push_back(SparseVec::from_terms(std::move(t)));
        }
    }
    return out;
}

std::shared_ptr<ModuleEngine> plain_engine(const Presentation& p)
{
    const int n = p.L->dim();
    std::vector<SparseVec> id;
    for (int z = 0; z < n; ++z)
        id.push_back(SparseVec::unit(z));
    return std::make_shared<ModuleEngine>(p, std::vector<bool>(n, false), id, p);
}

// Re-express the presentation in a basis where the annihilator K of the generator inside the
// lowering block is spanned by basis elements, so that U(L) (x)_{U(K + h + n+)} k_psi is the
// smaller space to work in. K + h + n+ is a subalgebra and psi extends by zero to a character of it.
std::shared_ptr<ModuleEngine> reduced_engine(const Presentation& p, const std::vector<SparseVec>& K)
{
    const int n = p.L->dim();
    Echelon kech;
    for (const auto& k : K)
        kech.add(k);
    std::vector<SparseVec> basis;
    std::vector<std::string> labels;
    Presentation q;
    std::vector<bool> ann;
    auto push = [&](const SparseVec& v, int block, const Vec& w, int depth, const Scalar& psi, bool a) {
        basis.push_back(v);
        labels.push_back(v.size() == 1 && v.entries()[0].second == 1 ? p.L->labels[v.lead()]
                                                                     : expansion_label(v, p.L->labels));
        q.block.push_back(block);
        q.weight.push_back(w);
        q.depth.push_back(depth);
        q.psi.push_back(psi);
        ann.push_back(a);
    };
    for (int z = 0; z < n; ++z)
        if (p.block[z] < 0 && !kech.is_pivot(z))
            push(SparseVec::unit(z), -1, p.weight[z], p.depth[z], 0, false);
    for (const auto& k : kech.basis())
        push(k, -1, p.weight[k.lead()], p.depth[k.lead()], 0, true);
    for (int z = 0; z < n; ++z)
        if (p.block[z] >= 0)
            push(SparseVec::unit(z), p.block[z], p.weight[z], p.depth[z], p.psi[z], false);
    auto L = std::make_shared<const LieSuperalgebra>(restrict_to(*p.L, basis, labels, nlohmann::json::object(), false));
    SpanCoordinates sc(basis);
    std::vector<SparseVec> from_user;
    for (int z = 0; z < n; ++z)
        from_user.push_back(*sc.coords(SparseVec::unit(z)));
    q.L = L;
    q.cartan_diagonal = p.cartan_diagonal;
    q.highest = p.highest;
    for (const auto& rel : p.relations) {
        std::vector<SparseVec> r;
        for (const auto& u : rel)
            r.push_back(*sc.coords(u));
        q.relations.push_back(std::move(r));
    }
    // P = K + h + n+ must be a subalgebra on which psi is a character.
    const int m = L->dim();
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            const bool in_a = q.block[a] >= 0 || ann[a], in_b = q.block[b] >= 0 || ann[b];
            if (!in_a || !in_b)
                continue;
            Scalar chi = 0;
            for (const auto& [c, x] : L->br(a, b)) {
                if (q.block[c] < 0 && !ann[c])
                    throw std::logic_error("annihilator extraction: parabolic part is not a subalgebra");
                if (q.block[c] == 0)
                    chi += x * q.psi[c];
            }
            if (chi != 0)
                throw std::logic_error("annihilator extraction: psi is not a character of the parabolic part");
        }
    return std::make_shared<ModuleEngine>(q, ann, from_user, p);
}

WeightModule snapshot(const std::shared_ptr<ModuleEngine>& eng, int cutoff)
{
    WeightModule m;
    m.engine = eng;
    m.highest = eng->pres.highest;
    m.max_depth = eng->processed;
    m.cutoff = cutoff;
    m.certificate = eng->finite ? "FINITE" : "TRUNCATED";
    m.reason = eng->finite ? "vanishing_band" : "cutoff_reached";
    for (const auto& [d, ws] : eng->by_depth)
        for (const auto& w : ws) {
            const auto& sp = eng->spaces.at(w);
            if (sp.dim)
                m.spaces.push_back({w, d, sp.dim});
        }
    return m;
}

}  // namespace

WeightModule cyclic_module(const Presentation& p, int cutoff)
{
    const int n = p.L->dim();
    if (static_cast<int>(p.block.size()) != n || static_cast<int>(p.weight.size()) != n
        || static_cast<int>(p.depth.size()) != n || static_cast<int>(p.psi.size()) != n)
        throw std::invalid_argument("cyclic_module: presentation vectors have the wrong size");
    auto eng = plain_engine(p);
    if (cutoff <= 0) {
        int odd = 0;
        for (int z = 0; z < n; ++z)
            odd += p.block[z] < 0 && p.L->parity[z] == 1;
        cutoff = default_cutoff(0, odd, eng->W);
    }
    while (eng->processed < eng->W && !eng->finite)
        eng->step();
    if (!eng->finite) {
        auto K = annihilator_in_lowering(*eng);
        if (!K.empty()) {
            eng = reduced_engine(p, K);
            while (eng->processed < eng->W && !eng->finite)
                eng->step();
        }
    }
    int budget = cutoff;
    for (int k = 0; !eng->finite; ++k) {
        while (eng->processed < budget && !eng->finite)
            eng->step();
        if (eng->finite || k == kMaxDoublings)
            break;
        budget *= 2;
    }
    return snapshot(eng, budget);
}

long long WeightModule::total_dim() const
{
    long long t = 0;
    for (const auto& s : spaces)
        t += s.dim;
    return t;
}

std::map<Vec, int> WeightModule::dims() const
{
    std::map<Vec, int> out;
    for (const auto& s : spaces)
        out[s.weight] = s.dim;
    return out;
}

int WeightModule::dim_at(const Vec& weight) const
{
    const int s = space_index(weight);
    return s < 0 ? 0 : spaces[s].dim;
}

int WeightModule::space_index(const Vec& weight) const
{
    for (std::size_t i = 0; i < spaces.size(); ++i)
        if (spaces[i].weight == weight)
            return static_cast<int>(i);
    return -1;
}

const Presentation& WeightModule::presentation() const
{
    if (!engine)
        throw DomainError("NO_ACTION", "module carries no presentation (structural certificate)");
    return engine->user;
}

std::pair<int, SparseVec> WeightModule::act(int z, int s, const SparseVec& coords) const
{
    if (!engine)
        throw DomainError("NO_ACTION", "module carries no action (structural certificate)");
    const auto& eng = *engine;
    const Vec& w = spaces.at(s).weight;
    SparseVec v = eng.V->act(eng.from_user.at(z), eng.lift(w, coords));
    if (v.empty())
        return {-1, {}};
    const Vec target = add(w, eng.user.weight[z]);
    auto r = eng.reduce_at(target, v);
    if (!r) {
        if (eng.finite)
            return {-1, {}};
        throw DomainError("OUT_OF_RANGE", "action leaves the computed depth range of a truncated module",
            {{"max_depth", max_depth}});
    }
    if (r->empty())
        return {-1, {}};
    return {space_index(target), *r};
}

std::vector<std::string> WeightModule::basis_labels(int s) const
{
    std::vector<std::string> out;
    if (!engine)
        return out;
    for (int m : engine->spaces.at(spaces.at(s).weight).standard)
        out.push_back(engine->V->label(m));
    return out;
}

std::string finiteness_status(const WeightModule& m)
{
    return m.certificate;
}

WeightModule irreducible_quotient(const WeightModule& m)
{
    if (m.certificate != "FINITE" || !m.engine)
        throw DomainError("NOT_FINITE", "the irreducible quotient needs a module certified finite",
            {{"certificate", m.certificate}});
    const Presentation& p = m.presentation();
    std::vector<int> raising, cartan_like;
    for (int z = 0; z < p.L->dim(); ++z) {
        if (p.block[z] > 0)
            raising.push_back(z);
        else if (p.block[z] == 0 && !p.cartan_diagonal)
            cartan_like.push_back(z);
    }
    const int ns = static_cast<int>(m.spaces.size());
    std::vector<Echelon> J(ns);
    WeightModule out;
    out.highest = m.highest;
    out.max_depth = m.max_depth;
    out.cutoff = m.cutoff;
    for (int s = 0; s < ns; ++s) {
        const int k = m.spaces[s].dim;
        if (m.spaces[s].depth > 0) {
            // raising conditions: x v in J_target for all raising x
            std::map<std::pair<int, int>, int> row_of;
            std::vector<std::vector<SparseVec::Entry>> rows;
            for (int z : raising)
                for (int j = 0; j < k; ++j) {
                    auto [t, c] = m.act(z, s, SparseVec::unit(j));
                    if (t < 0)
                        continue;
                    for (const auto& [i, a] : J[t].reduce(c)) {
                        auto key = std::make_pair(z * ns + t, i);
                        auto it = row_of.find(key);
                        if (it == row_of.end()) {
                            it = row_of.emplace(key, static_cast<int>(rows.size())).first;
                            rows.emplace_back();
                        }
                        rows[it->second].emplace_back(j, a);
                    }
                }
            SparseMatrix A(static_cast<int>(rows.size()), k);
            for (std::size_t r = 0; r < rows.size(); ++r)
                A.row[r] = SparseVec::from_terms(rows[r]);
            std::vector<SparseVec> S = kernel(A);
            // largest Cartan-stable subspace
            for (bool changed = !cartan_like.empty(); changed && !S.empty();) {
                changed = false;
                Echelon es;
                for (const auto& v : S)
                    es.add(v);
                std::map<int, int> rmap;
                std::vector<std::vector<SparseVec::Entry>> cr;
                for (int z : cartan_like)
                    for (std::size_t i = 0; i < S.size(); ++i) {
                        auto [t, c] = m.act(z, s, S[i]);
                        if (t < 0)
                            continue;
                        for (const auto& [col, a] : es.reduce(c)) {
                            const int key = z * (k + 1) + col;
                            auto it = rmap.find(key);
                            if (it == rmap.end()) {
                                it = rmap.emplace(key, static_cast<int>(cr.size())).first;
                                cr.emplace_back();
                            }
                            cr[it->second].emplace_back(static_cast<int>(i), a);
                        }
                    }
                if (cr.empty())
                    break;
                SparseMatrix B(static_cast<int>(cr.size()), static_cast<int>(S.size()));
                for (std::size_t r = 0; r < cr.size(); ++r)
                    B.row[r] = SparseVec::from_terms(cr[r]);
                std::vector<SparseVec> next;
                for (const auto& c : kernel(B)) {
                    SparseVec v;
                    for (const auto& [i, a] : c)
                        v.axpy(a, S[i]);
                    next.push_back(v);
                }
                changed = next.size() != S.size();
                S = std::move(next);
            }
            for (const auto& v : S)
                J[s].add(v);
        }
        const int dim = k - J[s].rank();
        if (dim)
            out.spaces.push_back({m.spaces[s].weight, m.spaces[s].depth, dim});
    }
    out.certificate = "FINITE";
    out.reason = m.reason;
    return out;
}

std::vector<int> root_depths(const TriangularDecomposition& dec)
{
    const auto& d = *dec.datum;
    Vec vals;
    mpz_class den = 1;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        vals.push_back(dec.value(static_cast<int>(i)));
        den = lcm(den, vals.back().get_den());
    }
    mpz_class g = 0;
    for (auto& v : vals) {
        v *= den;
        g = gcd(g, v.get_num());
    }
    std::vector<int> out;
    for (const auto& v : vals)
        out.push_back(static_cast<int>(mpz_class(-v.get_num() / g).get_si()));
    return out;
}

Vec full_weight(const RootDatum& d, const Vec& lambda)
{
    Vec w = lambda;
    w.resize(d.coord_dim(), 0);
    return w;
}

AdaptedAlgebra adapt(const TriangularDecomposition& dec, const std::vector<bool>& keep)
{
    const auto& d = *dec.datum;
    const auto depths = root_depths(dec);
    AdaptedAlgebra a;
    std::vector<std::string> labels;
    auto add_root = [&](int r, int block) {
        for (const auto& v : d.roots[r].space) {
            a.basis.push_back(v);
            labels.push_back(expansion_label(v, d.g->labels));
            a.root_of.push_back(r);
            a.cartan_index.push_back(-1);
            a.block.push_back(block);
            a.weight.push_back(d.roots[r].functional);
            a.depth.push_back(depths[r]);
        }
    };
    const int nr = static_cast<int>(d.roots.size());
    const auto rr = reductive_roots(d);
    for (int r = 0; r < nr; ++r)
        if (!dec.positive[r] && (keep.empty() || keep[r]))
            add_root(r, -1);
    for (int i = 0; i < d.rank(); ++i) {
        a.basis.push_back(d.cartan[i]);
        labels.push_back(expansion_label(d.cartan[i], d.g->labels));
        a.root_of.push_back(-1);
        a.cartan_index.push_back(i);
        a.block.push_back(0);
        a.weight.push_back(Vec(d.coord_dim(), 0));
        a.depth.push_back(0);
    }
    for (int r = 0; r < nr; ++r)
        if (dec.positive[r] && (keep.empty() || keep[r]))
            add_root(r, 1);
    a.L = std::make_shared<const LieSuperalgebra>(
        restrict_to(*d.g, a.basis, labels, nlohmann::json::object(), !keep.empty()));
    a.coords = SpanCoordinates(a.basis);
    for (int r : a.root_of)
        a.reductive.push_back(r < 0 || rr[r]);
    return a;
}

std::vector<ReductiveSimple> reductive_simples(const TriangularDecomposition& dec)
{
    const auto& d = *dec.datum;
    const auto rr = reductive_roots(d);
    std::vector<int> pos;
    for (int r : dec.positive_roots())
        if (rr[r])
            pos.push_back(r);
    std::set<Vec> sums;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            sums.insert(functional_add(d.roots[pos[i]].functional, d.roots[pos[j]].functional));
    std::vector<ReductiveSimple> out;
    for (int r : pos) {
        if (sums.count(d.roots[r].functional))
            continue;
        const int nr = d.find(functional_neg(d.roots[r].functional));
        if (nr < 0 || d.roots[r].multiplicity != 1 || d.roots[nr].multiplicity != 1)
            throw DomainError("UNSUPPORTED", "reductive root " + functional_string(d.roots[r].functional)
                    + " does not span an sl(2) triple with one-dimensional root spaces");
        ReductiveSimple s;
        s.root = r;
        s.x = d.roots[r].space[0];
        s.y = d.roots[nr].space[0];
        s.h = bracket(*d.g, s.x, s.y);
        const Scalar v = evaluate_on_cartan(d, d.roots[r].functional, s.h);
        if (v == 0)
            throw std::logic_error("reductive_simples: degenerate sl(2) triple");
        s.y.scale(Scalar(2) / v);
        s.h.scale(Scalar(2) / v);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

WeightModule highest_weight_module(const TriangularDecomposition& dec, const Vec& lambda, int cutoff,
    bool reductive_only)
{
    const auto& d = *dec.datum;
    if (static_cast<int>(lambda.size()) != d.rank())
        throw DomainError("INVALID_LAMBDA", "lambda must have one value per Cartan basis element",
            {{"expected", d.rank()}, {"got", lambda.size()}});
    const Vec hw = full_weight(d, lambda);
    const auto simples = reductive_simples(dec);
    std::vector<std::pair<SparseVec, int>> powers;
    int lambda_sum = 0;
    for (const auto& s : simples) {
        const Scalar k = evaluate_on_cartan(d, hw, s.h);
        if (k < 0 || k.get_den() != 1)
            throw DomainError("INVALID_LAMBDA", "lambda(h_alpha) must be a non-negative integer",
                {{"root", functional_string(d.roots[s.root].functional)}, {"value", to_string(k)}});
        const int ki = static_cast<int>(k.get_num().get_si());
        lambda_sum += ki;
        powers.emplace_back(s.y, ki + 1);
    }
    if (!reductive_only && is_cartan_type(d)) {
        const auto c = check_conditions(dec);
        if (c.parabolic && !c.c1) {
            WeightModule m;
            m.certificate = "INFINITE";
            m.reason = "parabolic_even_complement";
            m.highest = hw;
            return m;
        }
    }
    std::vector<bool> keep;
    if (reductive_only)
        keep = reductive_roots(d);
    AdaptedAlgebra a = adapt(dec, keep);
    Presentation p;
    p.L = a.L;
    p.block = a.block;
    p.weight = a.weight;
    p.depth = a.depth;
    p.highest = hw;
    p.cartan_diagonal = true;
    for (std::size_t z = 0; z < a.basis.size(); ++z)
        p.psi.push_back(a.cartan_index[z] >= 0 ? lambda[a.cartan_index[z]] : Scalar(0));
    for (const auto& [y, k] : powers) {
        SparseVec ya = *a.coords.coords(y);
        p.relations.emplace_back(k, ya);
    }
    if (cutoff <= 0) {
        int odd = 0, W = 1;
        for (std::size_t z = 0; z < a.basis.size(); ++z)
            if (a.block[z] < 0) {
                odd += a.L->parity[z];
                W = std::max(W, a.depth[z]);
            }
        cutoff = default_cutoff(lambda_sum, odd, W);
    }
    return cyclic_module(p, cutoff);
}

}  // namespace

WeightModule kac_module(const TriangularDecomposition& dec, const Vec& lambda, int cutoff)
{
    return highest_weight_module(dec, lambda, cutoff, false);
}

WeightModule r_highest_weight_module(const TriangularDecomposition& dec, const Vec& lambda, int cutoff)
{
    return highest_weight_module(dec, lambda, cutoff, true);
}

}  // namespace superlie
