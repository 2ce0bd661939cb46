#pragma once

#include "darboux/curve.hpp"
#include "darboux/poly.hpp"
#include "darboux/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace darboux {

class BelyiError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ramification multisets over 0, 1 and infinity, each sorted descending.
struct BranchingPattern {
    std::array<std::vector<int>, 3> fibers;

    int degree() const;
    bool consistent() const;
    // Same three multisets up to a permutation of the fibers. Printed
    // passports list the fibers in varying order.
    bool equivalent(const BranchingPattern& o) const;

    // "7^3 1^3/2^12/3^8"; "6.3" and "6 3" both read as {6, 3}
    static BranchingPattern parse(const std::string& text);
    std::string str() const;
    friend bool operator==(const BranchingPattern& a, const BranchingPattern& b) { return a.fibers == b.fibers; }
};

BranchingPattern branching_pattern(const RationalMap& phi);

// Genus of the source of a covering of P^1 with this passport.
int rh_genus(const BranchingPattern& p, int extra_ramification = 0);
// 2g - 2 = degree (2 g_base - 2) + ramification
int rh_genus(int base_genus, int degree, int ramification);

// Pass iff every critical point of phi lies over 0, 1 or infinity.
VerificationReport belyi_certify(const RationalMap& phi, const std::string& id = "belyi");

enum class Domain { P1, E7, E4 };

struct CoveringEntry {
    std::string name;
    std::string anchor;
    Domain domain = Domain::P1;
    RationalMap map;          // P1 entries
    BranchingPattern pattern;  // over 0, 1, infinity
    int genus = 0;
    bool belyi = true;
};

const std::vector<CoveringEntry>& covering_catalog();
const CoveringEntry& find_covering(const std::string& name);

// Pattern and genus of one catalog entry. Curve entries read the fibers over
// 0 and infinity off the verified divisor; the fiber over 1 follows from a
// verified relation (even indices) and Riemann-Hurwitz on genus 1.
VerificationReport verify_covering(const CoveringEntry& e);

struct CoverRelation {
    std::string id;
    std::string anchor;
    std::string statement;
};
const std::vector<CoverRelation>& cover_relations();
VerificationReport verify_cover_relation(const std::string& id);

// Phi3* = 1/Phi3(mu) written through x^3: every exponent not divisible by 3
// vanishes in numerator and denominator.
bool cubic_decomposable(const RationalMap& f);

// Named maps used elsewhere.
RationalMap phi3_map();       // 1728 x (x-1) F1^7 / (G0^3 G1^3)
RationalMap phi3_star_map();  // (24w+8) x^3 G2^3 / ((1-x^3) F2^7)
RationalMap mu_map();         // (x + w + 1) / (w (1 - x))
UniPoly poly_F1();
UniPoly poly_G0();
UniPoly poly_G1();
UniPoly poly_F2();
UniPoly poly_G2();

}  // namespace darboux
