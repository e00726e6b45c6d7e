#include "superlie/family.hpp"

#include "superlie/realizations.hpp"

#include <regex>

namespace superlie {

FamilySpec parse_family(const std::string& spec)
{
    static const std::regex re(R"(^\s*(W|S~|S|H|p|sl|gl|A|osp|B|C|D)\s*:\s*(\d+)\s*(?:,\s*(\d+)\s*)?$)");
    std::smatch m;
    if (!std::regex_match(spec, m, re))
        throw DomainError("BAD_FAMILY_SPEC", "cannot parse family spec '" + spec
                + "'; expected W:n | S:n | S~:n | H:n | p:n | sl:m,n | gl:m,n | A:m,n | osp:M,2n | B:m,n | C:n | D:m,n");
    FamilySpec f;
    f.family = m[1];
    try {
        f.params.push_back(std::stoi(m[2]));
        if (m[3].matched)
            f.params.push_back(std::stoi(m[3]));
    } catch (const std::out_of_range&) {
        throw DomainError("BAD_FAMILY_SPEC", "parameter out of range in '" + spec + "'");
    }
    const bool one = f.family == "W" || f.family == "S" || f.family == "S~" || f.family == "H" || f.family == "p"
        || f.family == "C";
    if (one != (f.params.size() == 1))
        throw DomainError("BAD_FAMILY_SPEC", "wrong number of parameters in '" + spec + "'");
    return f;
}

LieSuperalgebra build_family(const FamilySpec& spec)
{
    const auto& f = spec.family;
    if (f == "W")
        return superderivation_algebra(spec.params[0]);
    if (f == "S" || f == "S~" || f == "H")
        return build_cartan_family(f, spec.params[0]);
    return build_matrix_family(f, spec.params);
}

LieSuperalgebra build_family(const std::string& spec)
{
    return build_family(parse_family(spec));
}

}  // namespace superlie
