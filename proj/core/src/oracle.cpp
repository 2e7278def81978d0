#include "quartets/oracle.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace quartets {

std::vector<Quartet> brute_force_quartets(int64_t d, const std::set<ResonanceKind>& kinds,
                                          int workers) {
    if (d < 1) throw std::invalid_argument("brute_force_quartets: d must be >= 1");
    if (d > 64) throw std::invalid_argument("brute_force_quartets: d exceeds 64");
    if (workers < 1) workers = 1;

    std::vector<WaveVector> vecs;
    vecs.reserve(static_cast<size_t>((d + 1) * (d + 1) - 1));
    for (int64_t m = 0; m <= d; ++m)
        for (int64_t n = 0; n <= d; ++n)
            if (m != 0 || n != 0) vecs.push_back({m, n});

    // Unordered pairs (repetition allowed) grouped by momentum sum alone.
    // Both sum components lie in [0, 2d], so they pack into one key.
    std::unordered_map<int64_t, std::vector<std::pair<uint32_t, uint32_t>>> groups;
    const int64_t base = 2 * d + 1;
    for (uint32_t i = 0; i < vecs.size(); ++i)
        for (uint32_t j = i; j < vecs.size(); ++j)
            groups[(vecs[i].m + vecs[j].m) * base + vecs[i].n + vecs[j].n].push_back({i, j});

    std::vector<const std::vector<std::pair<uint32_t, uint32_t>>*> group_list;
    {
        std::vector<int64_t> keys;
        keys.reserve(groups.size());
        for (const auto& [key, pairs] : groups) keys.push_back(key);
        std::sort(keys.begin(), keys.end());
        for (int64_t key : keys) group_list.push_back(&groups.at(key));
    }

    // Every pair-of-pairs inside a group conserves momentum by construction;
    // the verifier decides resonance and the kind.
    auto scan_group = [&](const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                          std::vector<Quartet>& local) {
        for (size_t p = 0; p < pairs.size(); ++p) {
            for (size_t r = p; r < pairs.size(); ++r) {
                WaveVector k1 = vecs[pairs[p].first];
                WaveVector k2 = vecs[pairs[p].second];
                WaveVector k3 = vecs[pairs[r].first];
                WaveVector k4 = vecs[pairs[r].second];
                VerifyReport report = verify_quartet(k1, k2, k3, k4);
                if (!report.resonance_ok || !report.momentum_ok) continue;
                if (kinds.find(*report.kind) == kinds.end()) continue;

                std::optional<int64_t> q = report.vectors[0].index_weight.q;
                for (const ClassedVector& cv : report.vectors)
                    if (cv.index_weight.q != *q) q = std::nullopt;

                local.push_back(canonicalize_quartet(
                    {{k1, k2, k3, k4},
                     {report.vectors[0].index_weight.gamma, report.vectors[1].index_weight.gamma,
                      report.vectors[2].index_weight.gamma, report.vectors[3].index_weight.gamma},
                     q, *report.kind}));
            }
        }
    };

    // Group sizes peak around central momentum sums; a strided assignment
    // spreads that bulge across workers. The final sort fixes the order, so
    // the assignment does not affect the output.
    size_t n_chunks = std::min<size_t>(workers, group_list.size());
    std::vector<Quartet> result;
    if (n_chunks <= 1) {
        for (const auto* pairs : group_list) scan_group(*pairs, result);
    } else {
        auto scan_strided = [&](size_t offset) {
            std::vector<Quartet> local;
            for (size_t g = offset; g < group_list.size(); g += n_chunks)
                scan_group(*group_list[g], local);
            return local;
        };
        std::vector<std::future<std::vector<Quartet>>> futures;
        for (size_t c = 0; c < n_chunks; ++c)
            futures.push_back(std::async(std::launch::async, scan_strided, c));
        for (auto& f : futures) {
            std::vector<Quartet> part = f.get();
            result.insert(result.end(), part.begin(), part.end());
        }
    }

    std::sort(result.begin(), result.end(), [](const Quartet& a, const Quartet& b) {
        if (a.class_index != b.class_index) return a.class_index < b.class_index;
        return a.k < b.k;
    });
    result.erase(std::unique(result.begin(), result.end(),
                             [](const Quartet& a, const Quartet& b) { return a.k == b.k; }),
                 result.end());
    return result;
}

}  // namespace quartets
