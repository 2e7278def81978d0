#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "quartets/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of resonant quartets on the integer grid"};

    int64_t max = 0;
    std::string mode = "asymmetric";
    std::string format = "csv";
    std::string out = "-";
    int64_t oracle_check = 0;
    bool paper_filter = false;
    std::string tridents;
    bool stats = false;

    auto* max_opt = app.add_option("--max", max, "Domain bound d; search vectors in [0,d]^2");
    app.add_option("--mode", mode, "Kinds to report")
        ->check(CLI::IsMember({"asymmetric", "all"}))
        ->capture_default_str();
    app.add_option("--format", format, "Payload format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out, "Payload path, - for stdout")->capture_default_str();
    auto* oracle_opt = app.add_option(
        "--oracle-check", oracle_check,
        "Compare the search against the brute-force oracle at this bound (1..64)");
    app.add_flag("--paper-filter", paper_filter,
                 "Restrict the search to classes with q^4 <= 2*d^2");
    auto* trident_opt = app.add_option(
        "--tridents", tridents, "Generate the trident series for smin:smax,tmin:tmax");
    app.add_flag("--stats", stats, "Print run statistics to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    }

    quartets::SearchConfig config;
    config.mode = (mode == "all") ? quartets::SearchMode::AllKinds
                                  : quartets::SearchMode::AsymmetricOnly;
    config.format = (format == "json") ? quartets::OutputFormat::Json
                                       : quartets::OutputFormat::Csv;
    config.paper_filter = paper_filter;
    config.stats = stats;
    config.workers = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));

    quartets::SearchReport report;
    try {
        if (*max_opt) config.max = max;
        if (*oracle_opt) config.oracle_check = oracle_check;
        if (*trident_opt) config.tridents = quartets::parse_trident_ranges(tridents);
        report = quartets::run(config);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    // A pure --oracle-check run has no payload; the verdict goes to stderr.
    if (config.max || config.tridents) {
        if (out == "-") {
            quartets::emit(report, std::cout);
            if (!std::cout) {
                std::cerr << "error: writing to stdout failed\n";
                return 2;
            }
        } else {
            std::ofstream file(out);
            if (!file) {
                std::cerr << "error: cannot open " << out << '\n';
                return 2;
            }
            quartets::emit(report, file);
            file.flush();
            if (!file) {
                std::cerr << "error: writing " << out << " failed\n";
                return 2;
            }
        }
    }

    if (stats) quartets::write_stats(report, std::cerr);

    if (report.oracle && !report.oracle->match()) {
        quartets::write_oracle_diff(*report.oracle, std::cerr);
        return 2;
    }
    if (report.oracle)
        std::cerr << "oracle check d=" << report.oracle->d << ": sets agree ("
                  << report.oracle->fast_total << " asymmetric quartets)\n";
    return 0;
}
