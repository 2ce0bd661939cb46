#include "darboux/cli.hpp"

#include "darboux/belyi.hpp"
#include "darboux/curve.hpp"
#include "darboux/modular.hpp"
#include "darboux/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

namespace darboux {

namespace {

using json = nlohmann::json;

Check identity_check(const IdentitySpec& s) {
    return {s.id, s.anchor, s.suite, [&s](long order) { return verify_identity(s, order); }};
}

Check fixed(std::string id, std::string anchor, std::string suite, std::function<VerificationReport()> f) {
    return {id, anchor, suite, [f, id, anchor](long) {
                VerificationReport r = f();
                r.id = id;
                r.anchor = anchor;
                return r;
            }};
}

void divisor_checks(std::vector<Check>& out) {
    struct Table {
        CurveId curve;
        const char* prefix;
        const char* caption;
    };
    for (const Table& t : {Table{CurveId::E7, "div-e7-", "Divisors on the curve $v^2=u(1-11u+32u^2)$"},
                           Table{CurveId::E4, "div-e4-", "Divisors on the curve $w^2=p(1+22p-7p^2)$"}}) {
        const Curve& c = Curve::get(t.curve);
        for (const auto& row : divisor_table(c)) {
            std::string id = t.prefix + row.name;
            std::string anchor = std::string(t.caption) + ": " + row.name;
            out.push_back(fixed(id, anchor, "divisors",
                                [&row, id, anchor] { return verify_divisor(id, anchor, row.f, row.divisor); }));
        }
    }
    out.push_back(fixed("div-phi7", "The divisor of $\\Phi_7$ is", "divisors",
                        [] { return verify_divisor("div-phi7", "", phi7(), phi7_divisor()); }));
    out.push_back(fixed("div-phi4", "The divisor of $\\Phi_4$ on $E_4$ is computed to be", "divisors",
                        [] { return verify_divisor("div-phi4", "", phi4(), phi4_divisor()); }));
}

void belyi_checks(std::vector<Check>& out) {
    for (const auto& e : covering_catalog())
        out.push_back(fixed("covering-" + e.name, e.anchor, "belyi", [&e] { return verify_covering(e); }));
    for (const auto& r : cover_relations())
        out.push_back(fixed(r.id, r.anchor, "belyi", [&r] { return verify_cover_relation(r.id); }));
    const char* prop = "are Belyi maps with the following branching patterns (and genus $g$):";
    struct Rh {
        const char* id;
        const char* pattern;
        int genus;
    };
    for (const Rh& rh : {Rh{"rh-3ab", "7^3 1^3/3^8/2^12", 0}, Rh{"rh-4ab", "7^3 1^3/4^6/2^12", 1},
                         Rh{"rh-7ab", "7^3 1^3/7^3 1^3/2^12", 1}}) {
        out.push_back(fixed(rh.id, prop, "belyi", [rh] {
            int g = rh_genus(BranchingPattern::parse(rh.pattern));
            return make_report("", "", g == rh.genus,
                               std::string("[") + rh.pattern + "] has genus " + std::to_string(g));
        }));
    }
    out.push_back(fixed("phi3-pattern", prop, "belyi", [] {
        BranchingPattern p = branching_pattern(phi3_map());
        bool ok = p.equivalent(BranchingPattern::parse("7^3 1^3/3^8/2^12")) && rh_genus(p) == 0;
        return make_report("", "", ok, "extracted [" + p.str() + "], genus " + std::to_string(rh_genus(p)));
    }));
    out.push_back(fixed("phi3-belyi", "with the genus $g=0$ branching pattern was computed as such", "belyi",
                        [] { return belyi_certify(phi3_map()); }));
}

std::vector<Check> build_registry() {
    std::vector<Check> out;
    for (const auto& s : identity_catalog()) out.push_back(identity_check(s));
    for (const auto& s : modular_catalog()) out.push_back(identity_check(s));
    divisor_checks(out);
    belyi_checks(out);
    out.push_back(fixed("candidates-3A", "Candidates for radical solutions are constructed by picking up a local exponent",
                        "genus0", [] { return verify_radical_candidate_separation("3A"); }));
    out.push_back(fixed("candidates-3B", "The correct solution is $\\psi^\\star_4$ with $c=3$", "genus0",
                        [] { return verify_radical_candidate_separation("3B"); }));
    out.push_back({"omega-galois-stability", "The rational function $\\Phi_3^*(x)=1/\\Phi_3(\\mu(x))$ has the expression", "genus0-omega",
                   [](long order) { return verify_omega_stability(order); }});
    out.push_back(fixed("e4-torsion", "We see the point $(p,w)=(1,4)$ of order 6", "genus1-e4", [] {
        TorsionAudit a = torsion_audit(Curve::e4());
        return make_report("", "", a.torsion_order == 6 && a.order_of_1_4 == 6 && a.two_torsion_only_origin &&
                                       a.no_rational_four_torsion,
                           a.summary);
    }));
    out.push_back(fixed("klein-r21-congruence", "R_{21}^{\\,2} \\equiv R_{14}^{\\,3}-1728\\,R_{6}^{\\,7} \\quad \\mbox{mod} \\ R_4.", "klein-invariants",
                        [] { return klein_invariant_congruence(); }));
    out.push_back({"quotient-curve", "y^7=x\\,(x-1)^2.", "klein-invariants",
                   [](long order) { return verify_quotient_curve(order); }});
    out.push_back(fixed("genus-audit-level5", "The genus of the covering equals $55=1+\\frac12(12\\,(0-2)+12\\,(12-1))$", "modular-level5",
                        [] { return modular_genus_audit(5); }));
    out.push_back(fixed("genus-audit-level7", "thus the genus of the covering equals $73=1+\\frac12(6\\,(2\\cdot3-2)+24\\,(6-1))$", "modular-level7",
                        [] { return modular_genus_audit(7); }));
    out.push_back({"integrality-audit", "j(\\tau)=\\frac1q+744+196884q+21493760q^2+\\ldots", "modular-low-levels",
                   [](long order) { return integrality_audit(order); }});
    std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return out;
}

VerificationReport run_one(const Check& c, long order) {
    try {
        VerificationReport r = c.run(order);
        if (r.id.empty()) r.id = c.id;
        if (r.anchor.empty()) r.anchor = c.anchor;
        return r;
    } catch (const std::exception& e) {
        VerificationReport r;
        r.id = c.id;
        r.anchor = c.anchor;
        r.order = order;
        r.status = Status::Error;
        r.detail = e.what();
        return r;
    }
}

ReportDocument assemble(std::string suite, long order, std::vector<VerificationReport> results,
                        std::chrono::steady_clock::time_point start) {
    ReportDocument doc;
    doc.suite = std::move(suite);
    doc.order = order;
    std::sort(results.begin(), results.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
    doc.results = std::move(results);
    doc.status = Status::Pass;
    for (const auto& r : doc.results)
        if (!r.passed()) doc.status = r.status == Status::Error ? Status::Error : Status::Fail;
    doc.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return doc;
}

void check_order(long order) {
    if (order < kMinOrder)
        throw CliError("order " + std::to_string(order) + " is below the minimum " + std::to_string(kMinOrder));
}

json report_json(const VerificationReport& r) {
    json j{{"id", r.id}, {"anchor", r.anchor}, {"status", to_string(r.status)}, {"order", r.order}, {"detail", r.detail}};
    if (r.first_mismatch)
        j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent.get_str()},
                               {"left", r.first_mismatch->left.str()},
                               {"right", r.first_mismatch->right.str()}};
    return j;
}

VerificationReport report_from(const json& j) {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.anchor = j.at("anchor").get<std::string>();
    r.status = status_from_string(j.at("status").get<std::string>());
    r.order = j.value("order", 0L);
    r.detail = j.value("detail", std::string());
    if (j.contains("first_mismatch")) {
        const json& m = j.at("first_mismatch");
        r.first_mismatch = Mismatch{parse_rational(m.at("exponent").get<std::string>()),
                                    Scalar::parse(m.at("left").get<std::string>()),
                                    Scalar::parse(m.at("right").get<std::string>())};
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids{"genus0",         "genus0-omega",   "genus1-e7",          "genus1-e4",
                                              "divisors",       "belyi",          "transformations",    "klein-invariants",
                                              "modular-level5", "modular-level7", "modular-low-levels", "all"};
    return ids;
}

const std::vector<Check>& check_registry() {
    static const std::vector<Check> registry = build_registry();
    return registry;
}

std::vector<const Check*> suite_checks(const std::string& suite) {
    if (std::find(suite_ids().begin(), suite_ids().end(), suite) == suite_ids().end())
        throw CliError("unknown suite " + suite);
    std::vector<const Check*> v;
    for (const auto& c : check_registry())
        if (suite == "all" || c.suite == suite) v.push_back(&c);
    return v;
}

const Check& find_check(const std::string& id) {
    for (const auto& c : check_registry())
        if (c.id == id) return c;
    throw CliError("unknown spec " + id);
}

ReportDocument run_suite(const std::string& suite, long order, unsigned threads) {
    check_order(order);
    auto start = std::chrono::steady_clock::now();
    std::vector<const Check*> checks = suite_checks(suite);
    std::vector<VerificationReport> results(checks.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, checks.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < checks.size();) results[i] = run_one(*checks[i], order);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return assemble(suite, order, std::move(results), start);
}

ReportDocument run_check(const std::string& id, long order) {
    check_order(order);
    auto start = std::chrono::steady_clock::now();
    const Check& c = find_check(id);
    return assemble(c.suite, order, {run_one(c, order)}, start);
}

std::string to_json(const ReportDocument& doc, int indent) {
    json results = json::array();
    for (const auto& r : doc.results) results.push_back(report_json(r));
    json j{{"version", doc.version}, {"suite", doc.suite},           {"order", doc.order},
           {"results", results},     {"duration_ms", doc.duration_ms}, {"status", to_string(doc.status)}};
    return j.dump(indent);
}

ReportDocument from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
        ReportDocument doc;
        doc.version = j.at("version").get<std::string>();
        doc.suite = j.at("suite").get<std::string>();
        doc.order = j.at("order").get<long>();
        doc.duration_ms = j.at("duration_ms").get<long>();
        doc.status = status_from_string(j.at("status").get<std::string>());
        for (const auto& r : j.at("results")) doc.results.push_back(report_from(r));
        return doc;
    } catch (const json::exception& e) {
        throw CliError(std::string("malformed report: ") + e.what());
    }
}

std::string render_text(const ReportDocument& doc) {
    std::size_t w = 4;
    for (const auto& r : doc.results) w = std::max(w, r.id.size());
    std::ostringstream o;
    std::size_t passed = 0;
    for (const auto& r : doc.results) {
        o << std::left << std::setw(int(w) + 2) << r.id << std::setw(20) << to_string(r.status);
        if (r.first_mismatch)
            o << "first mismatch at " << r.first_mismatch->exponent.get_str() << ": " << r.first_mismatch->left.str()
              << " vs " << r.first_mismatch->right.str() << "  ";
        else if (!r.passed() && !r.detail.empty())
            o << r.detail << "  ";
        o << "[" << r.anchor << "]\n";
        passed += r.passed();
    }
    o << doc.suite << " at order " << doc.order << ": " << passed << "/" << doc.results.size() << " passed, "
      << to_string(doc.status) << " (" << doc.duration_ms << " ms)\n";
    return o.str();
}

std::string render_list() {
    std::size_t w = 0, ws = 0;
    for (const auto& c : check_registry()) {
        w = std::max(w, c.id.size());
        ws = std::max(ws, c.suite.size());
    }
    std::ostringstream o;
    for (const auto& c : check_registry())
        o << std::left << std::setw(int(w) + 2) << c.id << std::setw(int(ws) + 2) << c.suite << c.anchor << "\n";
    return o.str();
}

std::string dump_series(const std::string& what, long order) {
    if (what == "zero") return "";
    if (what.rfind("spec:", 0) == 0) {
        auto colon = what.rfind(':');
        std::string id = what.substr(5, colon - 5), side = what.substr(colon + 1);
        if (colon <= 5 || (side != "left" && side != "right")) throw CliError("expected spec:<id>:left or spec:<id>:right");
        const IdentitySpec* spec = nullptr;
        for (const auto* cat : {&identity_catalog(), &modular_catalog()})
            for (const auto& s : *cat)
                if (s.id == id) spec = &s;
        if (!spec) throw CliError("unknown spec " + id);
        const Expr& e = side == "left" ? spec->left : spec->right;
        Series s = expand_recipe(e, spec->chart, Rational(order), spec->resolver);
        s = s.truncated(s.lead() + order);
        return s.dump(spec->chart.kind == Chart::Kind::Q ? "q" : "t");
    }
    try {
        return qseries(what, Rational(order)).dump("q");
    } catch (const ModularError& e) {
        throw CliError(e.what());
    }
}

long resolve_order(std::optional<long> flag) {
    long order = kDefaultOrder;
    if (flag) {
        order = *flag;
    } else if (const char* env = std::getenv("DARBOUX_ORDER"); env && *env) {
        char* end = nullptr;
        order = std::strtol(env, &end, 10);
        if (*end) throw CliError(std::string("DARBOUX_ORDER is not an integer: ") + env);
    }
    check_order(order);
    return order;
}

int exit_code(const ReportDocument& doc) {
    for (const auto& r : doc.results)
        if (!r.passed()) return 1;
    return 0;
}

}  // namespace darboux
