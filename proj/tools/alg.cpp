// alg: command-line front end over the superlie library.
//
// Every command writes one JSON report (canonical key order, two-space indent) to --out or stdout.
// Exit status: 0 success, 2 domain or usage error, 1 internal failure.

#include "superlie/family.hpp"
#include "superlie/report.hpp"
#include "superlie/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace superlie;

namespace {

const char* kGrammar = R"(grammar:
  algebra   --alg   W:n | S:n | S~:n | H:n | p:n | sl:m,n | gl:m,n | A:m,n | osp:M,2n | B:m,n | C:n | D:m,n
                    or a file written by `alg build`
  borel     --borel distinguished | bmax | bmin | find-c2 | witness:q1,...,qk | opposite:<borel>
                    or a file written by a `borel` command
  vectors   q1,q2,... with exact rationals such as 1, -2, 3/4, 0.5
  jets      jet:c^N(+jet:c^N)*      e.g. jet:0^4, jet:0^2+jet:1^2
  psi file  JSON [[cartan_index, jet_index, "p/q"], ...]; absent entries are zero
)";

struct Options {
    std::string alg, borel = "distinguished", out, family, witness, variant = "distinguished";
    std::string roots, kind = "serganova", lambda, jet, jet_b, psi, phi, a = "0,1";
    int cutoff = 0, nmax = 4, m = 0;
    std::size_t limit = 100000;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("BAD_INPUT", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DomainError("BAD_INPUT", path + ": " + e.what());
    }
}

// Files written by this tool wrap their payload in a report; plain payloads are accepted too.
json payload(const json& j)
{
    return j.is_object() && j.contains("result") && j.contains("tool") ? j.at("result") : j;
}

std::shared_ptr<const LieSuperalgebra> load_algebra(const std::string& spec)
{
    if (spec.empty())
        throw UsageError("--alg is required");
    if (std::filesystem::is_regular_file(spec)) {
        json j = payload(read_json_file(spec));
        try {
            return std::make_shared<const LieSuperalgebra>(algebra_from_json(j));
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception& e) {
            throw DomainError("BAD_ALGEBRA_FILE", e.what());
        }
    }
    return std::make_shared<const LieSuperalgebra>(build_family(spec));
}

Vec vector_arg(const std::string& s, const char* what)
{
    try {
        return parse_vector(s);
    } catch (const std::invalid_argument& e) {
        throw DomainError("BAD_VECTOR", std::string(what) + ": " + e.what());
    }
}

TriangularDecomposition resolve_borel(std::shared_ptr<const RootDatum> d, const std::string& spec)
{
    if (spec == "distinguished" || spec == "bmax" || spec == "bmin")
        return distinguished_decomposition(d, spec);
    if (spec == "find-c2")
        return find_c2_decomposition(d);
    if (spec.rfind("opposite:", 0) == 0)
        return opposite(resolve_borel(d, spec.substr(9)));
    if (spec.rfind("witness:", 0) == 0) {
        auto dec = positive_system(d, vector_arg(spec.substr(8), "witness"));
        dec.provenance = "witness";
        return dec;
    }
    if (std::filesystem::is_regular_file(spec))
        return decomposition_from_json(d, payload(read_json_file(spec)));
    throw DomainError("BAD_BOREL", "unknown decomposition source '" + spec + "'");
}

PsiValues load_psi(const std::string& path, int rank, int jet_dim)
{
    if (path.empty())
        return psi_from_json(json::array(), rank, jet_dim);
    return psi_from_json(read_json_file(path), rank, jet_dim);
}

int find_root(const RootDatum& d, const Vec& f)
{
    int r = d.find(f);
    if (r < 0)
        throw DomainError("NOT_A_ROOT", functional_string(f) + " is not a root");
    return r;
}

json decomposition_report(const TriangularDecomposition& dec)
{
    json j = decomposition_json(dec);
    j["conditions"] = conditions_json(check_conditions(dec), *dec.datum);
    j["simple_roots"] = simple_system_json(simple_system(dec));
    return j;
}

json run(const std::string& command, const Options& o)
{
    if (command == "build") {
        auto g = build_family(o.family);
        json j = algebra_to_json(g);
        j["kind"] = "algebra";
        j["dimension"] = g.dim();
        return j;
    }
    auto g = load_algebra(o.alg);
    if (command == "validate") {
        validate(*g);
        return {{"valid", true}, {"dimension", g->dim()}};
    }
    auto d = root_datum(g);
    if (command == "roots compute")
        return roots_json(*d);
    if (command == "borel distinguished")
        return decomposition_report(distinguished_decomposition(d, o.variant));
    if (command == "borel from-witness") {
        auto dec = positive_system(d, vector_arg(o.witness, "witness"));
        dec.provenance = "witness";
        return decomposition_report(dec);
    }
    if (command == "borel find-c2")
        return decomposition_report(find_c2_decomposition(d));
    if (command == "borel enumerate") {
        json list = json::array();
        for (const auto& dec : enumerate_chambers(d, o.limit))
            list.push_back(decomposition_report(dec));
        return {{"count", list.size()}, {"decompositions", list}};
    }

    auto dec = resolve_borel(d, o.borel);
    if (command == "borel check")
        return conditions_json(check_conditions(dec), *d);
    if (command == "borel reflect") {
        json steps = json::array();
        std::stringstream ss(o.roots);
        std::string part;
        while (std::getline(ss, part, ';')) {
            int r = find_root(*d, vector_arg(part, "root"));
            if (o.kind == "odd")
                dec = odd_reflection(simple_system(dec), r).dec;
            else
                dec = serganova_reflection(dec, r);
            steps.push_back(vec_to_json(d->roots[r].functional));
        }
        dec.provenance = "reflection";
        json j = decomposition_report(dec);
        j["reflected"] = steps;
        return j;
    }
    if (command == "module kac" || command == "module irreducible") {
        Vec lambda = o.lambda.empty() ? Vec(d->rank(), 0) : vector_arg(o.lambda, "lambda");
        if (static_cast<int>(lambda.size()) != d->rank())
            throw DomainError("INVALID_LAMBDA", "lambda needs one value per Cartan basis element",
                {{"rank", d->rank()}, {"got", lambda.size()}});
        auto m = kac_module(dec, lambda, o.cutoff);
        if (command == "module irreducible")
            m = irreducible_quotient(m);
        json j = module_json(m, lambda);
        j["decomposition"] = decomposition_json(dec);
        return j;
    }
    if (command == "weyl scan") {
        auto pattern = o.psi.empty() ? std::vector<Vec>(d->rank()) : pattern_from_json(read_json_file(o.psi), d->rank());
        auto s = truncation_scan(dec, pattern, o.nmax, o.cutoff);
        json j = scan_json(s);
        j["flags"] = {{"parabolic", check_conditions(dec).parabolic}, {"theta_closure_dim", s.theta.closure_dim}};
        return j;
    }
    if (command == "weyl local" || command == "weyl ideals") {
        auto A = parse_jet(o.jet);
        auto lw = local_weyl(dec, A, load_psi(o.psi, d->rank(), A.dim()), o.cutoff);
        if (command == "weyl local") {
            json j = module_json(lw.module, lw.lambda);
            j["jet"] = A.spec();
            return j;
        }
        auto res = annihilating_ideals(lw);
        json I = ideal_json(res.I, A), J = ideal_json(res.J, A);
        return {{"I_psi_basis", I["basis"]}, {"J_psi_basis", J["basis"]}, {"I_psi", I}, {"J_psi", J},
            {"supports", {{"I_psi", I["support"]}, {"J_psi", J["support"]}, {"equal", res.supports_equal}}}};
    }
    if (command == "weyl tensor-check") {
        auto A = parse_jet(o.jet);
        auto B = parse_jet(o.jet_b);
        auto t = tensor_check(dec, A, load_psi(o.psi, d->rank(), A.dim()), B, load_psi(o.phi, d->rank(), B.dim()),
            o.cutoff);
        return tensor_json(t);
    }
    throw UsageError("unknown command '" + command + "'");
}

json run_garland(const Options& o)
{
    auto A = parse_jet(o.jet.empty() ? "jet:0^4" : o.jet);
    auto check = garland_verify(A, vector_arg(o.a, "a"), o.m);
    json coeffs = json::array();
    for (const auto& p : garland_coefficients(o.m))
        coeffs.push_back(polynomial_string(p));
    json j = garland_json(check);
    j["coefficients"] = coeffs;
    j["jet"] = A.spec();
    return j;
}

json config_json(const std::string& command, const Options& o)
{
    return {{"command", command}, {"alg", o.alg}, {"family", o.family}, {"borel", o.borel}, {"variant", o.variant},
        {"witness", o.witness}, {"roots", o.roots}, {"kind", o.kind}, {"lambda", o.lambda}, {"jet", o.jet},
        {"jet_b", o.jet_b}, {"psi", o.psi}, {"phi", o.phi}, {"a", o.a}, {"m", o.m}, {"cutoff", o.cutoff},
        {"nmax", o.nmax}, {"limit", o.limit}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"alg: exact computations with Lie superalgebras, triangular decompositions and weight modules"};
    app.footer(kGrammar);
    app.require_subcommand(1);
    Options o;
    std::string command;

    auto alg_opt = [&](CLI::App* c) { c->add_option("--alg", o.alg, "family spec or algebra file")->required(); };
    auto borel_opt = [&](CLI::App* c) { c->add_option("--borel", o.borel, "decomposition source"); };
    auto common = [&](CLI::App* c, const std::string& name) {
        c->add_option("--out", o.out, "report path (default stdout)");
        c->callback([&command, name] { command = name; });
    };

    auto* build = app.add_subcommand("build", "build an algebra from a family spec");
    build->add_option("--family", o.family, "family spec")->required();
    common(build, "build");
    auto* val = app.add_subcommand("validate", "check super skew-symmetry and super Jacobi");
    alg_opt(val);
    common(val, "validate");

    // `alg alg build` and `alg alg validate` spell the same commands as a group.
    auto* group = app.add_subcommand("alg", "algebra files")->require_subcommand(1);
    auto* gbuild = group->add_subcommand("build", "build an algebra from a family spec");
    gbuild->add_option("--family", o.family, "family spec")->required();
    common(gbuild, "build");
    auto* gval = group->add_subcommand("validate", "check super skew-symmetry and super Jacobi");
    alg_opt(gval);
    common(gval, "validate");

    auto* roots = app.add_subcommand("roots", "root data")->require_subcommand(1);
    auto* rc = roots->add_subcommand("compute", "roots, parities, heights, multiplicities");
    alg_opt(rc);
    common(rc, "roots compute");

    auto* borel = app.add_subcommand("borel", "triangular decompositions")->require_subcommand(1);
    auto* bd = borel->add_subcommand("distinguished", "distinguished, bmax or bmin");
    alg_opt(bd);
    bd->add_option("--variant", o.variant)->check(CLI::IsMember({"distinguished", "bmax", "bmin"}));
    common(bd, "borel distinguished");
    auto* bw = borel->add_subcommand("from-witness", "positive system of a regular element");
    alg_opt(bw);
    bw->add_option("--witness", o.witness, "values on the functional coordinates")->required();
    common(bw, "borel from-witness");
    auto* br = borel->add_subcommand("reflect", "apply reflections at roots, left to right");
    alg_opt(br);
    borel_opt(br);
    br->add_option("--roots", o.roots, "roots separated by ';'")->required();
    br->add_option("--kind", o.kind)->check(CLI::IsMember({"odd", "serganova"}));
    common(br, "borel reflect");
    auto* bf = borel->add_subcommand("find-c2", "a decomposition satisfying C1 and C2");
    alg_opt(bf);
    common(bf, "borel find-c2");
    auto* bc = borel->add_subcommand("check", "conditions C1, C2 and parabolicity");
    alg_opt(bc);
    borel_opt(bc);
    common(bc, "borel check");
    auto* be = borel->add_subcommand("enumerate", "all triangular decompositions");
    alg_opt(be);
    be->add_option("--limit", o.limit);
    common(be, "borel enumerate");

    auto* mod = app.add_subcommand("module", "highest weight modules")->require_subcommand(1);
    for (const char* name : {"kac", "irreducible"}) {
        auto* c = mod->add_subcommand(name, std::string(name) == "kac" ? "generalized Kac module" : "its irreducible quotient");
        alg_opt(c);
        borel_opt(c);
        c->add_option("--lambda", o.lambda, "values on the Cartan basis (default 0)");
        c->add_option("--cutoff", o.cutoff, "depth budget (default automatic)");
        common(c, std::string("module ") + name);
    }

    auto* weyl = app.add_subcommand("weyl", "map superalgebras and local Weyl modules")->require_subcommand(1);
    auto* wl = weyl->add_subcommand("local", "local Weyl module over g (x) A");
    auto* wi = weyl->add_subcommand("ideals", "annihilating ideals I_psi and J_psi");
    for (auto* c : {wl, wi}) {
        alg_opt(c);
        borel_opt(c);
        c->add_option("--jet", o.jet, "jet algebra")->required();
        c->add_option("--psi", o.psi, "psi file");
        c->add_option("--cutoff", o.cutoff);
    }
    common(wl, "weyl local");
    common(wi, "weyl ideals");
    auto* ws = weyl->add_subcommand("scan", "truncations k[t]/(t^N), N = 1..nmax");
    alg_opt(ws);
    borel_opt(ws);
    ws->add_option("--psi", o.psi, "psi file over (cartan index, power of t)");
    ws->add_option("--nmax", o.nmax)->check(CLI::Range(1, 12));
    ws->add_option("--cutoff", o.cutoff);
    common(ws, "weyl scan");
    auto* wg = weyl->add_subcommand("garland", "divided-power identity in U(sl(2) (x) A)");
    wg->add_option("--jet", o.jet, "jet algebra (default jet:0^4)");
    wg->add_option("--a", o.a, "coefficients of a in t, constant first");
    wg->add_option("--m", o.m)->check(CLI::Range(0, 8));
    common(wg, "weyl garland");
    auto* wt = weyl->add_subcommand("tensor-check", "W(psi + phi) against W(psi) (x) W(phi)");
    alg_opt(wt);
    borel_opt(wt);
    wt->add_option("--jet", o.jet)->required();
    wt->add_option("--psi", o.psi);
    wt->add_option("--jet-b", o.jet_b)->required();
    wt->add_option("--phi", o.phi);
    wt->add_option("--cutoff", o.cutoff);
    common(wt, "weyl tensor-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << kGrammar;
        return 2;
    }

    try {
        json result = command == "weyl garland" ? run_garland(o) : run(command, o);
        json report = {{"tool", {{"name", "alg"}, {"version", kToolVersion}}}, {"config", config_json(command, o)},
            {"result", result}};
        std::string text = dump_canonical(report);
        if (o.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(o.out, std::ios::binary);
            if (!(f << text))
                throw DomainError("BAD_OUTPUT", "cannot write " + o.out);
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << kGrammar;
        return 2;
    } catch (const DomainError& e) {
        json err = {{"error", e.code()}, {"message", e.what()}, {"detail", e.detail()}};
        std::cerr << dump_canonical(err);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
