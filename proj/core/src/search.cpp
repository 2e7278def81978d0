#include "quartets/search.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace quartets {

std::string_view kind_name(ResonanceKind kind) {
    switch (kind) {
        case ResonanceKind::Trivial: return "trivial";
        case ResonanceKind::Symmetric: return "symmetric";
        case ResonanceKind::Asymmetric: return "asymmetric";
    }
    throw std::logic_error("kind_name: bad enum value");
}

PairBucketKey pair_bucket_key(const ClassedVector& a, const ClassedVector& b) {
    return {a.vector.m + b.vector.m, a.vector.n + b.vector.n,
            a.index_weight.gamma + b.index_weight.gamma};
}

namespace {

// Kind of a quartet already known to resonate and conserve momentum.
ResonanceKind kind_of(const std::array<WaveVector, 4>& k, const std::array<int64_t, 4>& ns) {
    auto [lo1, hi1] = std::minmax(k[0], k[1]);
    auto [lo2, hi2] = std::minmax(k[2], k[3]);
    if (lo1 == lo2 && hi1 == hi2) return ResonanceKind::Trivial;
    auto [na1, nb1] = std::minmax(ns[0], ns[1]);
    auto [na2, nb2] = std::minmax(ns[2], ns[3]);
    if (na1 == na2 && nb1 == nb2) return ResonanceKind::Symmetric;
    return ResonanceKind::Asymmetric;
}

}  // namespace

Quartet canonicalize_quartet(Quartet qt) {
    auto swap_entries = [&qt](int i, int j) {
        std::swap(qt.k[i], qt.k[j]);
        std::swap(qt.weights[i], qt.weights[j]);
    };
    if (qt.k[1] < qt.k[0]) swap_entries(0, 1);
    if (qt.k[3] < qt.k[2]) swap_entries(2, 3);
    if (std::pair(qt.k[2], qt.k[3]) < std::pair(qt.k[0], qt.k[1])) {
        swap_entries(0, 2);
        swap_entries(1, 3);
    }
    return qt;
}

std::vector<std::array<int64_t, 4>> weight_equation_solutions(std::vector<int64_t> weights) {
    if (weights.empty())
        throw std::invalid_argument("weight_equation_solutions: weight set is empty");
    for (int64_t w : weights)
        if (w < 1) throw std::invalid_argument("weight_equation_solutions: weights must be >= 1");

    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

    std::map<int64_t, std::vector<std::pair<int64_t, int64_t>>> by_sum;
    for (size_t i = 0; i < weights.size(); ++i)
        for (size_t j = i; j < weights.size(); ++j)
            by_sum[weights[i] + weights[j]].push_back({weights[i], weights[j]});

    std::vector<std::array<int64_t, 4>> solutions;
    for (const auto& [sum, pairs] : by_sum) {
        for (size_t p = 0; p < pairs.size(); ++p)
            for (size_t r = p; r < pairs.size(); ++r)
                solutions.push_back({pairs[p].first, pairs[p].second,
                                     pairs[r].first, pairs[r].second});
    }
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

namespace {

struct ClassMember {
    WaveVector v;
    int64_t gamma;
    int64_t norm_sq;
};

// Quartets of one class: bucket all unordered pairs (repetition allowed) by
// (sum_m, sum_n, weight_sum), then cross-combine every two pairs sharing a
// bucket. Distinct unordered pair-of-pairs give distinct canonical quartets,
// so no dedup pass is needed.
void search_class(int64_t q, const ClassTable::WeightCells& cells, SearchMode mode,
                  std::vector<Quartet>& out) {
    std::vector<ClassMember> members;
    for (const auto& [gamma, vecs] : cells) {
        int64_t ns = gamma * gamma * gamma * gamma * q;
        for (const WaveVector& v : vecs) members.push_back({v, gamma, ns});
    }

    size_t s = members.size();
    std::unordered_map<int64_t, std::vector<std::pair<uint32_t, uint32_t>>> buckets;
    // Encode (sum_m, sum_n, weight_sum) into one key; all components are
    // bounded by 2d and 2*(2d^2)^(1/4) respectively, far below the packing base.
    constexpr int64_t kBase = int64_t{1} << 21;
    for (uint32_t i = 0; i < s; ++i) {
        for (uint32_t j = i; j < s; ++j) {
            int64_t key = (members[i].v.m + members[j].v.m) * kBase * kBase +
                          (members[i].v.n + members[j].v.n) * kBase +
                          (members[i].gamma + members[j].gamma);
            buckets[key].push_back({i, j});
        }
    }

    for (const auto& [key, pairs] : buckets) {
        size_t b = pairs.size();
        for (size_t p = 0; p < b; ++p) {
            const ClassMember& a1 = members[pairs[p].first];
            const ClassMember& a2 = members[pairs[p].second];
            for (size_t r = p; r < b; ++r) {
                const ClassMember& b1 = members[pairs[r].first];
                const ClassMember& b2 = members[pairs[r].second];
                std::array<WaveVector, 4> k{a1.v, a2.v, b1.v, b2.v};
                std::array<int64_t, 4> ns{a1.norm_sq, a2.norm_sq, b1.norm_sq, b2.norm_sq};
                ResonanceKind kind = kind_of(k, ns);
                if (mode == SearchMode::AsymmetricOnly && kind != ResonanceKind::Asymmetric)
                    continue;
                out.push_back(canonicalize_quartet(
                    {k, {a1.gamma, a2.gamma, b1.gamma, b2.gamma}, q, kind}));
            }
        }
    }
}

}  // namespace

std::vector<Quartet> find_case1_quartets(const ClassTable& table, SearchMode mode,
                                         std::optional<int64_t> max_index, int workers) {
    if (workers < 1) workers = 1;

    std::vector<const ClassTable::ClassMap::value_type*> classes;
    for (const auto& entry : table.classes()) {
        if (max_index && entry.first > *max_index) continue;
        classes.push_back(&entry);
    }

    auto search_range = [&](size_t begin, size_t end) {
        std::vector<Quartet> local;
        for (size_t i = begin; i < end; ++i)
            search_class(classes[i]->first, classes[i]->second, mode, local);
        return local;
    };

    std::vector<Quartet> result;
    if (workers == 1 || classes.size() < 2) {
        result = search_range(0, classes.size());
    } else {
        size_t n_chunks = std::min<size_t>(workers, classes.size());
        std::vector<std::future<std::vector<Quartet>>> futures;
        for (size_t c = 0; c < n_chunks; ++c) {
            size_t begin = classes.size() * c / n_chunks;
            size_t end = classes.size() * (c + 1) / n_chunks;
            futures.push_back(std::async(std::launch::async, search_range, begin, end));
        }
        for (auto& f : futures) {
            std::vector<Quartet> part = f.get();
            result.insert(result.end(), part.begin(), part.end());
        }
    }

    std::sort(result.begin(), result.end(), [](const Quartet& a, const Quartet& b) {
        if (a.class_index != b.class_index) return a.class_index < b.class_index;
        return a.k < b.k;
    });
    return result;
}

namespace {

// Sum of the two radicals gamma * q^(1/4) in canonical form: index -> total
// coefficient. Distinct fourth-power-free indexes have fourth roots that are
// linearly independent over the rationals, so two sides are equal exactly
// when their maps coincide.
using RadicalForm = std::vector<std::pair<int64_t, int64_t>>;

RadicalForm radical_form(const ClassedVector& a, const ClassedVector& b) {
    if (a.index_weight.q == b.index_weight.q)
        return {{a.index_weight.q, a.index_weight.gamma + b.index_weight.gamma}};
    RadicalForm form{{a.index_weight.q, a.index_weight.gamma},
                     {b.index_weight.q, b.index_weight.gamma}};
    if (form[1].first < form[0].first) std::swap(form[0], form[1]);
    return form;
}

}  // namespace

VerifyReport verify_quartet(WaveVector k1, WaveVector k2, WaveVector k3, WaveVector k4) {
    VerifyReport report;
    report.vectors = {classify_vector(k1), classify_vector(k2), classify_vector(k3),
                      classify_vector(k4)};

    report.resonance_ok =
        radical_form(report.vectors[0], report.vectors[1]) ==
        radical_form(report.vectors[2], report.vectors[3]);
    report.momentum_ok = (k1.m + k2.m == k3.m + k4.m) && (k1.n + k2.n == k3.n + k4.n);

    if (report.resonance_ok && report.momentum_ok) {
        report.kind = kind_of({k1, k2, k3, k4},
                              {report.vectors[0].norm_sq, report.vectors[1].norm_sq,
                               report.vectors[2].norm_sq, report.vectors[3].norm_sq});
    }
    return report;
}

ResonanceKind classify_quartet(const Quartet& qt) {
    VerifyReport report = verify_quartet(qt.k[0], qt.k[1], qt.k[2], qt.k[3]);
    if (!report.resonance_ok || !report.momentum_ok)
        throw std::invalid_argument("classify_quartet: vectors are not a resonant quartet");
    return *report.kind;
}

std::vector<Quartet> generate_tridents(const TridentRanges& ranges) {
    if (ranges.s_min < 1 || ranges.t_min < 1)
        throw std::invalid_argument("generate_tridents: s and t must be >= 1");
    if (ranges.s_max < ranges.s_min || ranges.t_max < ranges.t_min)
        throw std::invalid_argument("generate_tridents: empty parameter range");
    // Beyond this the leading coordinate (s^2+t^2+st)^2 leaves the range where
    // squared norms still fit in 64 bits, i.e. the quartet could not be verified.
    constexpr int64_t kParamLimit = 120;
    if (ranges.s_max > kParamLimit || ranges.t_max > kParamLimit)
        throw std::invalid_argument("generate_tridents: parameter exceeds 120");

    std::vector<Quartet> out;
    for (int64_t s = ranges.s_min; s <= ranges.s_max; ++s) {
        for (int64_t t = ranges.t_min; t <= ranges.t_max; ++t) {
            int64_t ss = s * s, tt = t * t;
            int64_t a = (ss + tt + s * t) * (ss + tt + s * t);
            int64_t b = (ss + tt - s * t) * (ss + tt - s * t);
            int64_t c = 2 * s * t * (ss + tt);
            int64_t d = ss * ss - tt * tt;
            std::array<WaveVector, 4> k{{{a, 0}, {-b, 0}, {c, d}, {c, -d}}};
            // All four vectors carry index 1, so norms compare as weights.
            std::array<int64_t, 4> w{ss + tt + s * t, ss + tt - s * t, ss + tt, ss + tt};
            out.push_back({k, w, int64_t{1}, kind_of(k, w)});
        }
    }
    return out;
}

}  // namespace quartets
