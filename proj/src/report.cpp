#include "superlie/report.hpp"

#include "superlie/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace superlie {

using json = nlohmann::json;

namespace {

json root_entry(const RootDatum& d, int r)
{
    const auto& root = d.roots[r];
    json j = {{"functional", vec_to_json(root.functional)}, {"parity", root.parity},
        {"multiplicity", root.multiplicity}};
    j["height"] = root.height ? json(*root.height) : json(nullptr);
    return j;
}

json root_list(const RootDatum& d, std::vector<int> roots)
{
    std::sort(roots.begin(), roots.end(),
        [&](int a, int b) { return d.roots[a].functional < d.roots[b].functional; });
    json out = json::array();
    for (int r : roots)
        out.push_back(vec_to_json(d.roots[r].functional));
    return out;
}

}  // namespace

json roots_json(const RootDatum& d)
{
    json roots = json::array();
    for (std::size_t r = 0; r < d.roots.size(); ++r)
        roots.push_back(root_entry(d, static_cast<int>(r)));
    return {{"rank", d.rank()}, {"coordinates", d.coord_dim()}, {"grading", d.grading.kind},
        {"extra_coordinate", d.extra_coordinate}, {"roots", roots}, {"dim", d.g->dim()}};
}

json decomposition_json(const TriangularDecomposition& dec)
{
    const auto& d = *dec.datum;
    return {{"kind", "decomposition"}, {"provenance", dec.provenance}, {"witness", vec_to_json(dec.witness)},
        {"positive", root_list(d, dec.positive_roots())}, {"n_plus_dim", dec.n_plus.dim()},
        {"n_minus_dim", dec.n_minus.dim()}};
}

json conditions_json(const Conditions& c, const RootDatum& d)
{
    json j = {{"C1", c.c1}, {"C2", c.c2}, {"parabolic", c.parabolic}};
    j["lowest_root"] = c.lowest_root >= 0 ? vec_to_json(d.roots[c.lowest_root].functional) : json(nullptr);
    return j;
}

json simple_system_json(const SimpleSystem& s)
{
    const auto& d = *s.dec.datum;
    json out = json::array();
    for (const auto& sr : s.simples)
        out.push_back({{"root", vec_to_json(d.roots[sr.root].functional)}, {"parity", d.roots[sr.root].parity}});
    return out;
}

json module_json(const WeightModule& m, const Vec& lambda)
{
    json dims = json::array();
    for (const auto& s : m.spaces)
        dims.push_back({{"weight", vec_to_json(s.weight)}, {"depth", s.depth}, {"dim", s.dim}});
    json j = {{"lambda", vec_to_json(lambda)}, {"highest_weight", vec_to_json(m.highest)},
        {"certificate", m.certificate}, {"reason", m.reason}, {"cutoff", m.cutoff}, {"max_depth", m.max_depth},
        {"dims", dims}};
    j["total_dim"] = m.certificate == "FINITE" ? json(m.total_dim()) : json(nullptr);
    return j;
}

json scan_json(const ScanResult& s)
{
    json dims = json::array();
    for (const auto& e : s.entries)
        dims.push_back({{"N", e.N}, {"dim", e.dim}, {"certificate", e.certificate}});
    json j = {{"verdict", s.verdict}, {"dims_by_N", dims}, {"theta_criterion", s.theta.holds}};
    j["stabilized_at"] = s.verdict.rfind("STABILIZED", 0) == 0 ? json(s.stabilized_at) : json(nullptr);
    return j;
}

json garland_json(const GarlandCheck& g)
{
    return {{"m", g.m}, {"a", g.a}, {"holds", g.holds}, {"literal_holds", g.literal_holds}};
}

json ideal_json(const IdealInfo& info, const JetAlgebra& A)
{
    json basis = json::array();
    for (const auto& v : info.basis)
        basis.push_back(sparse_to_json(v));
    json orders = json::array();
    for (std::size_t i = 0; i < A.points.size(); ++i)
        orders.push_back({{"point", to_string(A.points[i])}, {"order", A.orders[i]},
            {"vanishing_order", info.order_at_point[i]}});
    json support = json::array();
    for (const auto& c : info.support)
        support.push_back(to_string(c));
    return {{"basis", basis}, {"dim", info.basis.size()}, {"local", orders}, {"support", support}};
}

json tensor_json(const TensorCheck& t)
{
    return {{"dim_A", t.dim_a}, {"dim_B", t.dim_b}, {"dim_sum", t.dim_sum}, {"total_holds", t.total_holds},
        {"weights_hold", t.weights_hold}};
}

TriangularDecomposition decomposition_from_json(std::shared_ptr<const RootDatum> datum, const json& j)
{
    if (!j.is_object() || j.value("kind", "") != "decomposition" || !j.contains("witness"))
        throw DomainError("BAD_DECOMPOSITION", "expected a decomposition document with a witness");
    Vec w = vec_from_json(j.at("witness"));
    if (static_cast<int>(w.size()) != datum->coord_dim())
        throw DomainError("BAD_DECOMPOSITION", "witness has the wrong number of coordinates",
            {{"expected", datum->coord_dim()}, {"got", w.size()}});
    auto dec = positive_system(datum, w);
    dec.provenance = j.value("provenance", "file");
    return dec;
}

namespace {

std::vector<std::tuple<int, int, Scalar>> psi_entries(const json& j)
{
    const json& table = j.is_object() && j.contains("psi") ? j.at("psi") : j;
    if (!table.is_array())
        throw DomainError("INVALID_PSI", "psi must be an array of [cartan_index, jet_index, value]");
    std::vector<std::tuple<int, int, Scalar>> out;
    for (const auto& e : table) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw DomainError("INVALID_PSI", "malformed psi entry " + e.dump());
        if (!e[2].is_string() && !e[2].is_number_integer())
            throw DomainError("INVALID_PSI", "psi values must be integers or rational strings");
        Scalar v = e[2].is_string() ? parse_scalar(e[2].get<std::string>()) : Scalar(e[2].get<long>());
        out.emplace_back(e[0].get<int>(), e[1].get<int>(), v);
    }
    return out;
}

}  // namespace

PsiValues psi_from_json(const json& j, int rank, int jet_dim)
{
    PsiValues p;
    p.values.assign(rank, Vec(jet_dim, 0));
    for (const auto& [i, k, v] : psi_entries(j)) {
        if (i < 0 || i >= rank || k < 0 || k >= jet_dim)
            throw DomainError("INVALID_PSI", "psi entry out of range", {{"cartan_index", i}, {"jet_index", k}});
        p.values[i][k] += v;
    }
    return p;
}

std::vector<Vec> pattern_from_json(const json& j, int rank)
{
    std::vector<Vec> p(rank);
    for (const auto& [i, k, v] : psi_entries(j)) {
        if (i < 0 || i >= rank || k < 0)
            throw DomainError("INVALID_PSI", "psi entry out of range", {{"cartan_index", i}, {"jet_index", k}});
        if (static_cast<int>(p[i].size()) <= k)
            p[i].resize(k + 1, 0);
        p[i][k] += v;
    }
    return p;
}

Vec parse_vector(const std::string& s)
{
    Vec out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
        if (part.empty())
            throw DomainError("BAD_VECTOR", "empty entry in '" + s + "'");
        out.push_back(parse_scalar(part));
    }
    return out;
}

}  // namespace superlie
