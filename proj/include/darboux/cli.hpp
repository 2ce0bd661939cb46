#pragma once

#include "darboux/report.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace darboux {

class CliError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr long kMinOrder = 8;
inline constexpr long kDefaultOrder = 64;

// One runnable check: a series identity, a divisor, a covering, an audit.
struct Check {
    std::string id;
    std::string anchor;
    std::string suite;
    std::function<VerificationReport(long order)> run;
};

// genus0, genus0-omega, genus1-e7, genus1-e4, divisors, belyi,
// transformations, klein-invariants, modular-level5, modular-level7,
// modular-low-levels, and "all".
const std::vector<std::string>& suite_ids();
const std::vector<Check>& check_registry();
std::vector<const Check*> suite_checks(const std::string& suite);
const Check& find_check(const std::string& id);

struct ReportDocument {
    std::string version = kToolVersion;
    std::string suite;
    long order = kDefaultOrder;
    std::vector<VerificationReport> results;  // sorted by id
    long duration_ms = 0;
    Status status = Status::Pass;

    friend bool operator==(const ReportDocument& a, const ReportDocument& b) {
        return a.version == b.version && a.suite == b.suite && a.order == b.order && a.results == b.results &&
               a.duration_ms == b.duration_ms && a.status == b.status;
    }
};

// Runs the checks concurrently (threads = 0 picks the hardware count). A
// check that throws is reported with status "error" and the message.
ReportDocument run_suite(const std::string& suite, long order, unsigned threads = 0);
ReportDocument run_check(const std::string& id, long order);

std::string to_json(const ReportDocument& doc, int indent = 2);
ReportDocument from_json(const std::string& text);
// One aligned line per result, then a summary line.
std::string render_text(const ReportDocument& doc);
// "id  suite  anchor" per registered check.
std::string render_list();

// Exact exponent/coefficient listing below `order`: a q-series catalog name,
// "zero", or "spec:<id>:left" / "spec:<id>:right" (relative precision).
std::string dump_series(const std::string& what, long order);

// Flag value, else DARBOUX_ORDER, else the default; at least kMinOrder.
long resolve_order(std::optional<long> flag);

// 0 iff every result passed.
int exit_code(const ReportDocument& doc);

}  // namespace darboux
