// Finite Weyl groups of del Pezzo surfaces as permutation groups on their
// root systems, with exact group orders by Schreier-Sims.
#pragma once

#include "dpz/surface.hpp"

#include <cstdint>
#include <vector>

namespace dpz {

using Permutation = std::vector<std::uint16_t>;

// All roots: the closure of the simple roots under the simple reflections.
std::vector<Vec> root_system(const Surface& s);

// The permutation of root_system(s) induced by applying the reflections of
// `word` left to right (indices as accepted by weyl_apply).
Permutation word_permutation(const Surface& s, const std::vector<Vec>& roots, const std::vector<int>& word, int offset = 0);

// Order of the permutation group generated by `gens` (all of the same degree).
BigInt group_order(const std::vector<Permutation>& gens);

// Order of the group generated by the simple reflections.
BigInt weyl_group_order(const Surface& s);

}  // namespace dpz
