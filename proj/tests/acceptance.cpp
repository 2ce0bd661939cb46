// One line per acceptance criterion; exit status 0 iff all of them pass.
#include "darboux/belyi.hpp"
#include "darboux/cli.hpp"
#include "darboux/curve.hpp"
#include "darboux/modular.hpp"
#include "darboux/verifier.hpp"

#include "property_checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace darboux;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

struct Tally {
    int run = 0;
    std::vector<std::string> bad;

    void add(const VerificationReport& r) {
        ++run;
        if (!r.passed()) bad.push_back(r.id + " (" + to_string(r.status) + (r.detail.empty() ? "" : ": " + r.detail) + ")");
    }
    void check(const std::string& id, long order) { add(run_check(id, order).results.at(0)); }
    Outcome outcome(const std::string& what) const {
        std::ostringstream o;
        o << run - int(bad.size()) << "/" << run << " " << what;
        for (const auto& b : bad) o << "; FAILED " << b;
        return {bad.empty(), o.str()};
    }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool timely = limit_s <= 0 || s < limit_s;
    if (!timely) out.note += "; over the time limit";
    bool ok = out.ok && timely;
    failures += !ok;
    std::printf("[%s] %2d. %s (%.2f s) - %s\n", ok ? "PASS" : "FAIL", n, title.c_str(), s, out.note.c_str());
    std::fflush(stdout);
}

Tally suite_by_prefix(const std::string& suite, long order, const std::vector<std::string>& prefixes) {
    Tally t;
    for (const Check* c : suite_checks(suite))
        for (const auto& p : prefixes)
            if (c->id.rfind(p, 0) == 0) {
                t.check(c->id, order);
                break;
            }
    return t;
}

}  // namespace

int main() {
    criterion(1, "branching patterns and Riemann-Hurwitz genera", 1, [] {
        Tally t;
        for (const char* id : {"phi3-pattern", "rh-3ab", "rh-4ab", "rh-7ab", "covering-Phi4", "covering-Phi7"}) t.check(id, kMinOrder);
        return t.outcome("pattern checks");
    });

    criterion(2, "covering relations on E7", 5, [] {
        Tally t;
        for (const char* id : {"rel-phi3-phi7", "rel-phi4-phi7"}) t.add(verify_cover_relation(id));
        return t.outcome("function-field identities");
    });

    criterion(3, "divisor tables and div(Phi7), div(Phi4)", 10, [] {
        Tally t;
        int e7 = 0, e4 = 0;
        for (const Check* c : suite_checks("divisors")) {
            e7 += c->id.rfind("div-e7-", 0) == 0;
            e4 += c->id.rfind("div-e4-", 0) == 0;
            t.check(c->id, kMinOrder);
        }
        Outcome o = t.outcome("divisors");
        o.note += " (E7 rows " + std::to_string(e7) + ", E4 rows " + std::to_string(e4) + ")";
        o.ok = o.ok && e7 == 13 && e4 == 12;
        return o;
    });

    criterion(4, "genus-0 evaluations (N=64) and Q(omega) combinations (N=48)", 30, [] {
        Tally t;
        for (const char* id : {"thm-3A-1", "thm-3A-2", "thm-3A-3", "thm-3B-1", "thm-3B-2", "thm-3B-3"}) t.check(id, 64);
        for (const char* id : {"thm-omega-1", "thm-omega-2", "thm-omega-3"}) t.check(id, 48);
        return t.outcome("identities");
    });

    criterion(5, "genus-1 evaluations on E7 and E4 (N=64)", 60, [] {
        Tally t7 = suite_by_prefix("genus1-e7", 64, {"thm-7A-", "thm-7B-", "thm-7C-"});
        Tally t4 = suite_by_prefix("genus1-e4", 64, {"thm-4A-", "thm-4B-"});
        for (const auto& b : t4.bad) t7.bad.push_back(b);
        t7.run += t4.run;
        Outcome o = t7.outcome("identities");
        o.ok = o.ok && t7.run >= 15;
        return o;
    });

    criterion(6, "quadratic/cubic, dihedral, tetrahedral and icosahedral transformations (N=64)", 0, [] {
        Tally t;
        for (const Check* c : suite_checks("transformations")) t.check(c->id, 64);
        return t.outcome("transformation identities");
    });

    criterion(7, "Klein invariant congruence and the degree 7 quotient", 30, [] {
        Tally t;
        t.check("klein-r21-congruence", kMinOrder);
        t.check("quotient-curve", 40);
        return t.outcome("reductions");
    });

    criterion(8, "level-7 modular chain (N=50)", 0, [] {
        Tally t;
        for (const char* id : {"r4-vanishes", "x7-coefficients", "x7-xyz", "h7-x7", "j-h7", "j-phi3", "h7-r6",
                               "K1-product", "K2-product", "K3-product"})
            t.check(id, 50);
        return t.outcome("q-series identities");
    });

    criterion(9, "level-5 chain and Rogers-Ramanujan (N=60)", 0, [] {
        Tally t;
        for (const char* id : {"h5-x5", "j-phi5", "rr1-product", "rr2-product", "rr1-sum", "rr2-sum"}) t.check(id, 60);
        return t.outcome("q-series identities");
    });

    criterion(10, "levels 2, 3, 4 (N=50)", 0, [] {
        Tally t;
        for (const Check* c : suite_checks("modular-low-levels")) t.check(c->id, 50);
        return t.outcome("q-series checks");
    });

    criterion(11, "Selberg sums, K-ratios and quintuple products (N=60)", 0, [] {
        Tally t;
        for (const char* id : {"K1-selberg", "K3-selberg", "K-ratio-32", "K-ratio-21", "K-ratio-13", "quintuple-y1",
                               "quintuple-y2", "quintuple-y3", "quintuple-denominators", "theta-numerator"})
            t.check(id, 60);
        return t.outcome("q-series identities");
    });

    criterion(12, "rational torsion of E4 is Z/6Z", 0, [] {
        TorsionAudit a = torsion_audit(Curve::e4());
        return Outcome{a.torsion_order == 6, a.summary};
    });

    criterion(13, "negative controls: every 1/42 exponent perturbation fails by order 20", 0, [] {
        int total = 0;
        std::vector<std::string> missed;
        for (const auto* cat : {&identity_catalog(), &modular_catalog()})
            for (const auto& spec : *cat)
                for (const auto& p : perturbations(spec, make_rational(1, 42))) {
                    ++total;
                    VerificationReport r = verify_identity(p, 20);
                    bool caught = r.status == Status::Fail && r.first_mismatch && r.first_mismatch->exponent < 20;
                    if (!caught) missed.push_back(p.id + " (" + to_string(r.status) + ")");
                }
        std::ostringstream o;
        o << total - int(missed.size()) << "/" << total << " perturbed specs rejected";
        for (const auto& m : missed) o << "; MISSED " << m;
        return Outcome{missed.empty() && total > 0, o.str()};
    });

    criterion(14, "property suites, 200 randomized cases each", 0, [] {
        std::vector<std::pair<const char*, props::Outcome>> runs{
            {"ring laws", props::ring_laws()},
            {"pow additivity", props::pow_additivity()},
            {"composition associativity", props::composition_associativity()},
            {"norm multiplicativity", props::norm_multiplicativity()},
            {"truncation soundness", props::truncation_soundness()}};
        Outcome o;
        for (const auto& [name, r] : runs) {
            o.ok = o.ok && r.failures == 0 && r.cases >= 200;
            if (!o.note.empty()) o.note += ", ";
            o.note += std::string(name) + " " + std::to_string(r.cases) + " cases/" + std::to_string(r.failures) + " failures";
        }
        return o;
    });

    auto start = std::chrono::steady_clock::now();
    ReportDocument all = run_suite("all", kDefaultOrder);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t passed = 0;
    for (const auto& r : all.results) passed += r.passed();
    bool ok = exit_code(all) == 0 && s < 300;
    failures += !ok;
    std::printf("[%s] end-to-end: run_suite(all, 64) %zu/%zu passed (%.2f s)\n", ok ? "PASS" : "FAIL", passed,
                all.results.size(), s);
    for (const auto& r : all.results)
        if (!r.passed()) std::printf("       %s: %s %s\n", r.id.c_str(), to_string(r.status).c_str(), r.detail.c_str());

    std::printf("%s\n", failures ? "ACCEPTANCE: FAILED" : "ACCEPTANCE: ALL PASSED");
    return failures ? 1 : 0;
}
