#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quartets/search.hpp"

namespace quartets {

enum class OutputFormat { Csv, Json };

std::string_view format_name(OutputFormat format);
std::string_view mode_name(SearchMode mode);

// One run of the pipeline. Exactly one of max / tridents selects the payload
// (oracle_check may accompany max or stand alone, in which case there is no
// payload, only the comparison). workers only affects wall-clock time, never
// the output, so it is not part of the config echo.
struct SearchConfig {
    std::optional<int64_t> max;
    std::optional<TridentRanges> tridents;
    std::optional<int64_t> oracle_check;
    SearchMode mode = SearchMode::AsymmetricOnly;
    OutputFormat format = OutputFormat::Csv;
    bool paper_filter = false;
    bool stats = false;
    int workers = 1;
};

struct OracleCheckResult {
    int64_t d = 0;
    int64_t fast_total = 0;
    int64_t oracle_total = 0;
    std::vector<Quartet> only_fast;    // found by the search, missed by the oracle
    std::vector<Quartet> only_oracle;  // found by the oracle, missed by the search
    bool match() const { return only_fast.empty() && only_oracle.empty(); }
};

struct SearchReport {
    SearchConfig config;
    std::vector<Quartet> quartets;               // canonical order
    std::array<int64_t, 3> counts_by_kind{};     // indexed by ResonanceKind
    std::map<int64_t, int64_t> counts_by_class;  // classes with at least one quartet
    int64_t classes_touched = 0;                 // classes the run examined
    std::optional<OracleCheckResult> oracle;
    std::chrono::milliseconds duration{0};
};

// Largest class index admitted by the comparison filter at domain bound d,
// i.e. the largest q with q^4 <= 2 d^2.
int64_t paper_index_bound(int64_t d);

// Validates the config and runs the requested pipeline: class-table search
// for max, series generation for tridents (deduplicated), and the
// search-vs-brute-force comparison for oracle_check. Invalid configs throw
// std::invalid_argument.
SearchReport run(const SearchConfig& config);

// Result payload in the configured format. CSV: the fixed header
// m1,n1,m2,n2,m3,n3,m4,n4,q,g1,g2,g3,g4,kind plus one row per quartet,
// nothing else. JSON: config echo, counts, quartet list; a stats object
// (the only place the duration appears) is appended only when config.stats
// is set, so the default payload is reproducible byte for byte.
void emit(const SearchReport& report, std::ostream& os);

// Human-readable run statistics, intended for stderr.
void write_stats(const SearchReport& report, std::ostream& os);

// Oracle comparison diff, one quartet per line, intended for stderr.
void write_oracle_diff(const OracleCheckResult& check, std::ostream& os);

// Parses "smin:smax,tmin:tmax" (all bounds integers >= 1).
TridentRanges parse_trident_ranges(const std::string& text);

}  // namespace quartets
