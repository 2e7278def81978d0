#include "quartets/report.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

#include "quartets/oracle.hpp"

namespace quartets {

std::string_view format_name(OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
    }
    throw std::logic_error("format_name: bad enum value");
}

std::string_view mode_name(SearchMode mode) {
    switch (mode) {
        case SearchMode::AsymmetricOnly: return "asymmetric";
        case SearchMode::AllKinds: return "all";
    }
    throw std::logic_error("mode_name: bad enum value");
}

int64_t paper_index_bound(int64_t d) {
    if (d < 1) throw std::invalid_argument("paper_index_bound: d must be >= 1");
    int64_t limit = 2 * d * d;
    int64_t q = isqrt64(isqrt64(limit));
    while ((q + 1) * (q + 1) * (q + 1) * (q + 1) <= limit) ++q;
    while (q > 1 && q * q * q * q > limit) --q;
    return q;
}

namespace {

bool quartet_less(const Quartet& a, const Quartet& b) {
    if (a.class_index != b.class_index) return a.class_index < b.class_index;
    return a.k < b.k;
}

void validate(const SearchConfig& config) {
    if (config.max && config.tridents)
        throw std::invalid_argument("max and tridents are mutually exclusive");
    if (!config.max && !config.tridents && !config.oracle_check)
        throw std::invalid_argument("nothing to do: need max, tridents, or oracle_check");
    if (config.max && *config.max < 1)
        throw std::invalid_argument("max must be >= 1");
    if (config.oracle_check && (*config.oracle_check < 1 || *config.oracle_check > 64))
        throw std::invalid_argument("oracle_check must lie in [1, 64]");
}

OracleCheckResult run_oracle_check(int64_t d, int workers) {
    OracleCheckResult check;
    check.d = d;
    ClassTable table = build_class_table(d, workers);
    std::vector<Quartet> fast =
        find_case1_quartets(table, SearchMode::AsymmetricOnly, std::nullopt, workers);
    std::vector<Quartet> brute =
        brute_force_quartets(d, {ResonanceKind::Asymmetric}, workers);
    check.fast_total = static_cast<int64_t>(fast.size());
    check.oracle_total = static_cast<int64_t>(brute.size());
    std::set_difference(fast.begin(), fast.end(), brute.begin(), brute.end(),
                        std::back_inserter(check.only_fast), quartet_less);
    std::set_difference(brute.begin(), brute.end(), fast.begin(), fast.end(),
                        std::back_inserter(check.only_oracle), quartet_less);
    return check;
}

}  // namespace

SearchReport run(const SearchConfig& config) {
    validate(config);
    int workers = std::max(1, config.workers);
    auto start = std::chrono::steady_clock::now();

    SearchReport report;
    report.config = config;

    if (config.max) {
        ClassTable table = build_class_table(*config.max, workers);
        std::optional<int64_t> bound;
        if (config.paper_filter) bound = paper_index_bound(*config.max);
        report.quartets = find_case1_quartets(table, config.mode, bound, workers);
        for (const auto& [q, cells] : table.classes()) {
            (void)cells;
            if (!bound || q <= *bound) ++report.classes_touched;
        }
    } else if (config.tridents) {
        // The map (s,t) -> quartet is symmetric in s and t, so overlapping
        // ranges repeat solutions; the payload is deduplicated here.
        for (Quartet& qt : generate_tridents(*config.tridents)) {
            if (config.mode == SearchMode::AsymmetricOnly &&
                qt.kind != ResonanceKind::Asymmetric)
                continue;
            report.quartets.push_back(canonicalize_quartet(qt));
        }
        std::sort(report.quartets.begin(), report.quartets.end(), quartet_less);
        report.quartets.erase(
            std::unique(report.quartets.begin(), report.quartets.end(),
                        [](const Quartet& a, const Quartet& b) { return a.k == b.k; }),
            report.quartets.end());
        report.classes_touched = report.quartets.empty() ? 0 : 1;
    }

    if (config.oracle_check)
        report.oracle = run_oracle_check(*config.oracle_check, workers);

    for (const Quartet& qt : report.quartets) {
        ++report.counts_by_kind[static_cast<size_t>(qt.kind)];
        if (qt.class_index) ++report.counts_by_class[*qt.class_index];
    }

    report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

namespace {

void write_csv_row(const Quartet& qt, std::ostream& os) {
    for (const WaveVector& v : qt.k) os << v.m << ',' << v.n << ',';
    if (qt.class_index)
        os << *qt.class_index;
    else
        os << '-';
    for (int64_t w : qt.weights) os << ',' << w;
    os << ',' << kind_name(qt.kind) << '\n';
}

using ordered_json = nlohmann::ordered_json;

ordered_json config_json(const SearchConfig& c) {
    ordered_json j;
    j["max"] = c.max ? ordered_json(*c.max) : ordered_json(nullptr);
    j["mode"] = std::string(mode_name(c.mode));
    j["format"] = std::string(format_name(c.format));
    j["paper_filter"] = c.paper_filter;
    j["oracle_check"] = c.oracle_check ? ordered_json(*c.oracle_check) : ordered_json(nullptr);
    if (c.tridents) {
        j["tridents"] = ordered_json{{"s_min", c.tridents->s_min},
                                     {"s_max", c.tridents->s_max},
                                     {"t_min", c.tridents->t_min},
                                     {"t_max", c.tridents->t_max}};
    } else {
        j["tridents"] = nullptr;
    }
    return j;
}

ordered_json quartet_json(const Quartet& qt) {
    ordered_json j;
    const char* names[] = {"k1", "k2", "k3", "k4"};
    for (int i = 0; i < 4; ++i) j[names[i]] = ordered_json::array({qt.k[i].m, qt.k[i].n});
    j["q"] = qt.class_index ? ordered_json(*qt.class_index) : ordered_json(nullptr);
    j["gammas"] = ordered_json::array(
        {qt.weights[0], qt.weights[1], qt.weights[2], qt.weights[3]});
    j["kind"] = std::string(kind_name(qt.kind));
    return j;
}

}  // namespace

void emit(const SearchReport& report, std::ostream& os) {
    if (report.config.format == OutputFormat::Csv) {
        os << "m1,n1,m2,n2,m3,n3,m4,n4,q,g1,g2,g3,g4,kind\n";
        for (const Quartet& qt : report.quartets) write_csv_row(qt, os);
        return;
    }

    ordered_json j;
    j["config"] = config_json(report.config);
    ordered_json counts;
    counts["total"] = report.quartets.size();
    counts["trivial"] = report.counts_by_kind[static_cast<size_t>(ResonanceKind::Trivial)];
    counts["symmetric"] = report.counts_by_kind[static_cast<size_t>(ResonanceKind::Symmetric)];
    counts["asymmetric"] = report.counts_by_kind[static_cast<size_t>(ResonanceKind::Asymmetric)];
    counts["classes_touched"] = report.classes_touched;
    ordered_json by_class = ordered_json::object();
    for (const auto& [q, count] : report.counts_by_class) by_class[std::to_string(q)] = count;
    counts["by_class"] = std::move(by_class);
    j["counts"] = std::move(counts);

    ordered_json quartets = ordered_json::array();
    for (const Quartet& qt : report.quartets) quartets.push_back(quartet_json(qt));
    j["quartets"] = std::move(quartets);

    if (report.config.stats) {
        // The duration lives only here; the default payload stays bit-stable.
        j["stats"] = ordered_json{{"duration_ms", report.duration.count()}};
    }
    os << j.dump(2) << '\n';
}

void write_stats(const SearchReport& report, std::ostream& os) {
    if (report.config.max)
        os << "domain bound: " << *report.config.max << '\n';
    if (report.config.tridents)
        os << "trident ranges: s " << report.config.tridents->s_min << ':'
           << report.config.tridents->s_max << ", t " << report.config.tridents->t_min << ':'
           << report.config.tridents->t_max << '\n';
    os << "classes touched: " << report.classes_touched << '\n';
    os << "quartets: " << report.quartets.size() << " (trivial "
       << report.counts_by_kind[static_cast<size_t>(ResonanceKind::Trivial)] << ", symmetric "
       << report.counts_by_kind[static_cast<size_t>(ResonanceKind::Symmetric)] << ", asymmetric "
       << report.counts_by_kind[static_cast<size_t>(ResonanceKind::Asymmetric)] << ")\n";
    if (report.oracle) {
        os << "oracle check d=" << report.oracle->d << ": "
           << (report.oracle->match() ? "sets agree" : "MISMATCH") << " (search "
           << report.oracle->fast_total << ", oracle " << report.oracle->oracle_total << ")\n";
    }
    os << "duration: " << report.duration.count() << " ms\n";
}

void write_oracle_diff(const OracleCheckResult& check, std::ostream& os) {
    os << "oracle check d=" << check.d << " mismatch: " << check.only_fast.size()
       << " only in fast search, " << check.only_oracle.size() << " only in oracle\n";
    for (const Quartet& qt : check.only_fast) {
        os << "only-fast: ";
        write_csv_row(qt, os);
    }
    for (const Quartet& qt : check.only_oracle) {
        os << "only-oracle: ";
        write_csv_row(qt, os);
    }
}

TridentRanges parse_trident_ranges(const std::string& text) {
    TridentRanges r{};
    int consumed = -1;
    int fields = std::sscanf(text.c_str(),
                             "%" SCNd64 ":%" SCNd64 ",%" SCNd64 ":%" SCNd64 "%n",
                             &r.s_min, &r.s_max, &r.t_min, &r.t_max, &consumed);
    if (fields != 4 || consumed != static_cast<int>(text.size()))
        throw std::invalid_argument("trident ranges must look like smin:smax,tmin:tmax");
    return r;
}

}  // namespace quartets
