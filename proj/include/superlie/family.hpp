#pragma once

#include "superlie/superalg.hpp"

#include <string>
#include <vector>

namespace superlie {

struct FamilySpec {
    std::string family;  // W, S, S~, H, p, sl, gl, A, osp, B, C, D
    std::vector<int> params;
};

// Grammar: "W:n | S:n | S~:n | H:n | p:n | sl:m,n | gl:m,n | A:m,n | osp:M,2n | B:m,n | C:n | D:m,n".
// Throws DomainError BAD_FAMILY_SPEC.
FamilySpec parse_family(const std::string& spec);
LieSuperalgebra build_family(const FamilySpec& spec);
LieSuperalgebra build_family(const std::string& spec);

}  // namespace superlie
