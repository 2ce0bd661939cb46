#include "darboux/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

int main(int argc, char** argv) {
    CLI::App app{"Exact series verifier for Darboux evaluations of 3F2 hypergeometric functions"};
    app.set_version_flag("--version", darboux::kToolVersion);

    std::string suite = "all";
    std::optional<long> order;
    std::string format = "text";
    std::string spec, dump, output;
    bool list = false;
    unsigned threads = 0;

    app.add_option("suite", suite, "Suite to run")->check(CLI::IsMember(darboux::suite_ids()));
    app.add_option("--order,-n", order, "Comparison order N (default 64, or DARBOUX_ORDER)");
    app.add_option("--format,-f", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--spec", spec, "Run a single check by id");
    app.add_flag("--list", list, "List check ids with their anchors");
    app.add_option("--dump", dump, "Print a series: a catalog name, zero, or spec:<id>:left|right");
    app.add_option("--output,-o", output, "Write the report to a file as well");
    app.add_option("--threads,-j", threads, "Worker threads (0: hardware count)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version exit 0; usage errors share code 2
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (list) {
            std::cout << darboux::render_list();
            return 0;
        }
        long n = darboux::resolve_order(order);
        if (!dump.empty()) {
            std::cout << darboux::dump_series(dump, n) << "\n";
            return 0;
        }
        darboux::ReportDocument doc = spec.empty() ? darboux::run_suite(suite, n, threads) : darboux::run_check(spec, n);
        std::string text = format == "json" ? darboux::to_json(doc) + "\n" : darboux::render_text(doc);
        std::cout << text;
        if (!output.empty()) {
            std::ofstream out(output);
            if (!(out << text)) {
                std::cerr << "error: cannot write " << output << "\n";
                return 2;
            }
        }
        return darboux::exit_code(doc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
