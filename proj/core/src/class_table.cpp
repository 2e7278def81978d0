#include "quartets/class_table.hpp"

#include <future>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace quartets {

namespace {

constexpr int64_t kCoordLimit = 2'000'000'000;  // keeps m^2 + n^2 inside int64

}  // namespace

int64_t norm_sq(WaveVector v) {
    if (v.m < -kCoordLimit || v.m > kCoordLimit || v.n < -kCoordLimit || v.n > kCoordLimit)
        throw std::invalid_argument("norm_sq: coordinate magnitude exceeds 2e9");
    return v.m * v.m + v.n * v.n;
}

ClassedVector classify_vector(WaveVector v) {
    if (v.m == 0 && v.n == 0)
        throw std::invalid_argument("classify_vector: zero vector has no index/weight");
    int64_t ns = norm_sq(v);
    return {v, ns, fourth_free_decompose(ns)};
}

ClassTable build_class_table(int64_t d, int workers) {
    if (d < 1) throw std::invalid_argument("build_class_table: d must be >= 1");
    if (workers < 1) workers = 1;

    // Each chunk owns a contiguous band of m rows, scanned in lexicographic
    // order; merging chunks in band order reproduces the serial scan exactly.
    int64_t rows = d + 1;
    auto n_chunks = static_cast<int64_t>(workers);
    if (n_chunks > rows) n_chunks = rows;

    auto scan_band = [d](int64_t m_begin, int64_t m_end) {
        ClassTable::ClassMap partial;
        for (int64_t m = m_begin; m < m_end; ++m) {
            for (int64_t n = 0; n <= d; ++n) {
                if (m == 0 && n == 0) continue;
                IndexWeight iw = fourth_free_decompose(m * m + n * n);
                partial[iw.q][iw.gamma].push_back({m, n});
            }
        }
        return partial;
    };

    std::vector<ClassTable::ClassMap> partials;
    if (n_chunks == 1) {
        partials.push_back(scan_band(0, rows));
    } else {
        std::vector<std::future<ClassTable::ClassMap>> futures;
        for (int64_t c = 0; c < n_chunks; ++c) {
            int64_t begin = rows * c / n_chunks;
            int64_t end = rows * (c + 1) / n_chunks;
            futures.push_back(std::async(std::launch::async, scan_band, begin, end));
        }
        for (auto& f : futures) partials.push_back(f.get());
    }

    ClassTable::ClassMap merged = std::move(partials.front());
    for (size_t c = 1; c < partials.size(); ++c) {
        for (auto& [q, cells] : partials[c]) {
            auto& target = merged[q];
            for (auto& [gamma, vecs] : cells) {
                auto& list = target[gamma];
                list.insert(list.end(), vecs.begin(), vecs.end());
            }
        }
    }
    return ClassTable(d, std::move(merged));
}

int64_t ClassTable::vector_count() const {
    int64_t count = 0;
    for (const auto& [q, cells] : classes_)
        for (const auto& [gamma, vecs] : cells) count += static_cast<int64_t>(vecs.size());
    return count;
}

ClassStats class_stats(const ClassTable& table) {
    ClassStats stats;
    for (const auto& [q, cells] : table.classes()) {
        ++stats.num_classes;
        int64_t size = 0;
        for (const auto& [gamma, vecs] : cells) {
            size += static_cast<int64_t>(vecs.size());
            stats.weight_histogram[gamma] += static_cast<int64_t>(vecs.size());
        }
        stats.total_vectors += size;
        if (size > stats.largest_class_size) stats.largest_class_size = size;
    }
    return stats;
}

void write_class_table_csv(const ClassTable& table, std::ostream& out) {
    out << "m,n,norm_sq,q,gamma\n";
    for (const auto& [q, cells] : table.classes()) {
        for (const auto& [gamma, vecs] : cells) {
            int64_t g4 = gamma * gamma * gamma * gamma;
            for (const WaveVector& v : vecs)
                out << v.m << ',' << v.n << ',' << g4 * q << ',' << q << ',' << gamma << '\n';
        }
    }
}

}  // namespace quartets
