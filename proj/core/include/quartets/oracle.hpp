#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "quartets/search.hpp"

namespace quartets {

// Brute-force enumerator used to certify the fast search on small domains.
// Walks every unordered pair of nonzero vectors in [0,d]^2, groups pairs by
// momentum sum alone, and asks verify_quartet about every pair-of-pairs in a
// group. No class table, no weight bucketing: a defect in the class machinery
// cannot hide in both enumerators. Output is canonical, deduplicated, sorted
// the same way as find_case1_quartets, and filtered to the requested kinds.
// Quartets whose vectors span two classes carry no class_index.
// d > 64 is rejected (the scan is quartic in d and meant for certification).
std::vector<Quartet> brute_force_quartets(int64_t d,
                                          const std::set<ResonanceKind>& kinds,
                                          int workers = 1);

}  // namespace quartets
