#include "superlie/serialize.hpp"


namespace superlie {

namespace {

nlohmann::json integer_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return static_cast<std::int64_t>(z.get_si());
    return z.get_str(10);
}

mpz_class integer_from_json(const nlohmann::json& j)
{
    if (j.is_string())
        return mpz_class(j.get<std::string>(), 10);
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<std::int64_t>()), 10);
    throw std::invalid_argument("expected an integer");
}

Scalar scalar_from_json(const nlohmann::json& j)
{
    if (j.is_string())
        return parse_scalar(j.get<std::string>());
    if (j.is_number_integer())
        return Scalar(integer_from_json(j));
    throw std::invalid_argument("expected a rational");
}

}  // namespace

nlohmann::json sparse_to_json(const SparseVec& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, x] : v)
        out.push_back({k, to_string(x)});
    return out;
}

SparseVec sparse_from_json(const nlohmann::json& j)
{
    std::vector<SparseVec::Entry> terms;
    for (const auto& e : j)
        terms.emplace_back(e.at(0).get<int>(), scalar_from_json(e.at(1)));
    return SparseVec::from_terms(std::move(terms));
}

nlohmann::json vec_to_json(const Vec& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

Vec vec_from_json(const nlohmann::json& j)
{
    Vec v;
    for (const auto& e : j)
        v.push_back(scalar_from_json(e));
    return v;
}

nlohmann::json algebra_to_json(const LieSuperalgebra& g)
{
    nlohmann::json br = nlohmann::json::array();
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const auto& v = g.br(i, j);
            if (v.empty())
                continue;
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [k, x] : v)
                terms.push_back({k, integer_json(x.get_num()), integer_json(x.get_den())});
            br.push_back({i, j, terms});
        }
    nlohmann::json out;
    out["labels"] = g.labels;
    out["parities"] = g.parity;
    out["bracket"] = br;
    out["metadata"] = g.metadata;
    return out;
}

LieSuperalgebra algebra_from_json(const nlohmann::json& j, bool validate_algebra)
{
    LieSuperalgebra g;
    g.labels = j.at("labels").get<std::vector<std::string>>();
    g.parity = j.at("parities").get<std::vector<int>>();
    const int n = g.dim();
    if (static_cast<int>(g.parity.size()) != n)
        throw std::invalid_argument("algebra json: parity count mismatch");
    for (int p : g.parity)
        if (p != 0 && p != 1)
            throw std::invalid_argument("algebra json: parities must be 0 or 1");
    g.table.assign(static_cast<std::size_t>(n) * n, SparseVec());
    for (const auto& e : j.at("bracket")) {
        const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a < 0 || b < 0 || a >= n || b >= n || a > b)
            throw std::invalid_argument("algebra json: bracket index out of range");
        std::vector<SparseVec::Entry> terms;
        for (const auto& t : e.at(2)) {
            Scalar q(integer_from_json(t.at(1)), integer_from_json(t.at(2)));
            if (t.at(2) == 0)
                throw std::invalid_argument("algebra json: zero denominator");
            q.canonicalize();
            const int k = t.at(0).get<int>();
            if (k < 0 || k >= n)
                throw std::invalid_argument("algebra json: bracket index out of range");
            terms.emplace_back(k, q);
        }
        SparseVec v = SparseVec::from_terms(std::move(terms));
        SparseVec w = v;
        w.scale((g.parity[a] & g.parity[b]) ? 1 : -1);
        g.table[static_cast<std::size_t>(a) * n + b] = v;
        g.table[static_cast<std::size_t>(b) * n + a] = w;
    }
    if (j.contains("metadata"))
        g.metadata = j.at("metadata");
    if (validate_algebra)
        validate(g);
    return g;
}

std::string dump_canonical(const nlohmann::json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace superlie
