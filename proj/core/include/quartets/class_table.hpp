#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "quartets/numtheory.hpp"

namespace quartets {

// Integer lattice wave vector. Ordering is lexicographic by (m, n).
struct WaveVector {
    int64_t m;
    int64_t n;

    friend auto operator<=>(const WaveVector&, const WaveVector&) = default;
};

// Squared norm m^2 + n^2, with overflow guarded. Throws when a coordinate is
// too large for the sum to fit in 64 bits.
int64_t norm_sq(WaveVector v);

struct ClassedVector {
    WaveVector vector;
    int64_t norm_sq;
    IndexWeight index_weight;
};

// (q, gamma) assignment for a nonzero vector: norm_sq = gamma^4 * q with q
// fourth-power-free. Throws on the zero vector.
ClassedVector classify_vector(WaveVector v);

// All nonzero vectors of the quadrant 0 <= m,n <= d grouped by index q, then
// weight gamma, vectors in lexicographic (m, n) order. Immutable once built;
// shared read-only by the search.
class ClassTable {
  public:
    using WeightCells = std::map<int64_t, std::vector<WaveVector>>;
    using ClassMap = std::map<int64_t, WeightCells>;

    ClassTable(int64_t domain_bound, ClassMap classes)
        : domain_bound_(domain_bound), classes_(std::move(classes)) {}

    int64_t domain_bound() const { return domain_bound_; }
    const ClassMap& classes() const { return classes_; }

    // Total number of stored vectors; equals (d+1)^2 - 1 by construction.
    int64_t vector_count() const;

  private:
    int64_t domain_bound_;
    ClassMap classes_;
};

// Scans the whole domain and classes every vector. Deterministic content and
// ordering for a given d, independent of the worker count.
ClassTable build_class_table(int64_t d, int workers = 1);

struct ClassStats {
    int64_t num_classes = 0;
    int64_t largest_class_size = 0;
    int64_t total_vectors = 0;
    std::map<int64_t, int64_t> weight_histogram;  // gamma -> vector count
};

ClassStats class_stats(const ClassTable& table);

// CSV dump, columns m,n,norm_sq,q,gamma, one row per vector, header included.
// Rows ordered by (q, gamma, m, n).
void write_class_table_csv(const ClassTable& table, std::ostream& out);

}  // namespace quartets
