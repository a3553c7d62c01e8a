#pragma once

#include "equik/groups.hpp"

#include <string>
#include <vector>

namespace equik::battery {

struct NamedGroup {
    std::string name;
    Group group;
};

/// From 1-based (perm, signs) pairs.
inline Group from_one_based(std::size_t n, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& gens) {
    std::vector<SignedPerm> out;
    for (const auto& [perm, signs] : gens)
        out.push_back(SignedPerm::from_one_based(perm, signs));
    return Group::from_generators(n, std::move(out));
}

/// Signed-permutation groups beyond the symmetric and sign families.
inline std::vector<NamedGroup> handpicked() {
    std::vector<NamedGroup> out;
    out.push_back({"B_2", Group::hyperoctahedral(2)});
    out.push_back({"B_3", Group::hyperoctahedral(3)});
    out.push_back({"C_4 rotations in SO(2)", from_one_based(2, {{{2, 1}, {1, -1}}})});
    out.push_back({"signed 4-cycle in R^4", from_one_based(4, {{{2, 3, 4, 1}, {1, 1, 1, -1}}})});
    out.push_back({"Klein four-group in SO(4)",
                   from_one_based(4, {{{2, 1, 4, 3}, {1, 1, 1, 1}}, {{3, 4, 1, 2}, {1, 1, 1, 1}}})});
    out.push_back({"A_4 on R^4", from_one_based(4, {{{2, 3, 1, 4}, {1, 1, 1, 1}}, {{1, 3, 4, 2}, {1, 1, 1, 1}}})});
    out.push_back({"diagonal Klein group in SO(3)",
                   from_one_based(3, {{{1, 2, 3}, {-1, -1, 1}}, {{1, 2, 3}, {1, -1, -1}}})});
    out.push_back({"-I in R^3", from_one_based(3, {{{1, 2, 3}, {-1, -1, -1}}})});
    out.push_back({"7-cycle in R^7", from_one_based(7, {{{2, 3, 4, 5, 6, 7, 1}, {1, 1, 1, 1, 1, 1, 1}}})});
    return out;
}

/// S_1..S_max_sym, {+-1}^1..{+-1}^max_sign, Z/2 x S_1..S_max_ext, then the handpicked groups.
inline std::vector<NamedGroup> builtin(std::size_t max_sym = 6, std::size_t max_sign = 5, std::size_t max_ext = 5) {
    std::vector<NamedGroup> out;
    for (std::size_t n = 1; n <= max_sym; ++n)
        out.push_back({"S_" + std::to_string(n), Group::symmetric(n)});
    for (std::size_t n = 1; n <= max_sign; ++n)
        out.push_back({"{+-1}^" + std::to_string(n), Group::sign_group(n)});
    for (std::size_t n = 1; n <= max_ext; ++n)
        out.push_back({"Z/2 x S_" + std::to_string(n), extend_with_reflection(Group::symmetric(n))});
    for (NamedGroup& g : handpicked())
        out.push_back(std::move(g));
    return out;
}

} // namespace equik::battery
