#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "quartets/class_table.hpp"

namespace quartets {

// Exclusive classification, most specific label wins:
//   Trivial    {k1,k2} and {k3,k4} are equal as vector multisets
//   Symmetric  the norm multisets match pairwise, vectors do not
//   Asymmetric the norms change across the interaction
enum class ResonanceKind { Trivial, Symmetric, Asymmetric };

std::string_view kind_name(ResonanceKind kind);

struct Quartet {
    std::array<WaveVector, 4> k;
    std::array<int64_t, 4> weights;       // gamma of each vector
    std::optional<int64_t> class_index;   // q shared by all four vectors, when single-class
    ResonanceKind kind;
};

// Two pairs from the same class and the same bucket satisfy both the
// resonance and the momentum condition when cross-combined.
struct PairBucketKey {
    int64_t sum_m;
    int64_t sum_n;
    int64_t weight_sum;

    friend auto operator<=>(const PairBucketKey&, const PairBucketKey&) = default;
};

PairBucketKey pair_bucket_key(const ClassedVector& a, const ClassedVector& b);

enum class SearchMode { AsymmetricOnly, AllKinds };

// All quadruples (g1,g2,g3,g4) over the given weight set with
// g1+g2 = g3+g4, up to the canonical symmetry g1<=g2, g3<=g4,
// (g1,g2) <= (g3,g4); lexicographically ordered.
std::vector<std::array<int64_t, 4>> weight_equation_solutions(std::vector<int64_t> weights);

// Complete enumeration of single-class resonant quartets over the table's
// domain: within each class, unordered vector pairs (repetition allowed) are
// bucketed by PairBucketKey and every cross-combination of two pairs sharing
// a key is emitted. Output is canonical, deduplicated, and sorted by
// (q, k1, k2, k3, k4). max_index, when set, restricts the search to classes
// with q <= max_index.
std::vector<Quartet> find_case1_quartets(const ClassTable& table,
                                         SearchMode mode = SearchMode::AllKinds,
                                         std::optional<int64_t> max_index = std::nullopt,
                                         int workers = 1);

// Re-derives the kind from the quartet's vectors. Throws when the vectors do
// not satisfy the resonance and momentum conditions.
ResonanceKind classify_quartet(const Quartet& qt);

struct VerifyReport {
    bool resonance_ok = false;
    bool momentum_ok = false;
    std::optional<ResonanceKind> kind;     // present iff both conditions hold
    std::array<ClassedVector, 4> vectors;  // per-vector (q, gamma) and norms
};

// Exact resonance decision for arbitrary nonzero integer vectors: each side
// reduces to a map q -> sum of gammas (combining like indexes); the sides are
// equal iff the maps are identical. Momentum by integer comparison.
VerifyReport verify_quartet(WaveVector k1, WaveVector k2, WaveVector k3, WaveVector k4);

struct TridentRanges {
    int64_t s_min;
    int64_t s_max;
    int64_t t_min;
    int64_t t_max;
};

// Two-parameter series of solutions shaped (a,0),(-b,0),(c,d),(c,-d) with
//   a = (s^2+t^2+st)^2, b = (s^2+t^2-st)^2, c = 2st(s^2+t^2), d = s^4-t^4.
// All four vectors land in class 1 with weights
// (s^2+t^2+st, s^2+t^2-st, s^2+t^2, s^2+t^2), so the weight sums agree for
// any s,t >= 1. One quartet per (s,t), s-major order, no deduplication.
std::vector<Quartet> generate_tridents(const TridentRanges& ranges);

// Canonical representative under the 8 symmetries generated by swapping
// vectors within each pair and swapping the two pairs: vectors sorted
// lexicographically within pairs, pairs sorted lexicographically. Weights
// travel with their vectors. Idempotent.
Quartet canonicalize_quartet(Quartet qt);

}  // namespace quartets
