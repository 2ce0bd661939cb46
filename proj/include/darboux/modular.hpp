#pragma once

#include "darboux/poly.hpp"
#include "darboux/report.hpp"
#include "darboux/series.hpp"
#include "darboux/verifier.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace darboux {

class ModularError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// prod over k > 0 with k = residue (mod modulus) of (1 + sign * r^k)^exponent,
// where r = q^(1/grid).
struct ResidueProduct {
    long modulus = 1;
    long residue = 0;
    long exponent = 1;
    int sign = -1;
};

// q^extra_lead * prod eta(m tau)^e * residue products, on the grid 1/grid.
struct EtaQuotientSpec {
    int grid = 1;
    std::vector<std::pair<Rational, long>> eta;
    std::vector<ResidueProduct> products;
    Rational extra_lead = Rational(0);

    Rational lead() const;
};

// Exact expansion with every exponent below `order`.
Series eta_quotient(const EtaQuotientSpec& spec, const Rational& order);

// sum over all integers n of (-1)^n q^((a n^2 + b n + c)/2), exponents below order.
Series theta_sum(long a, long b, long c, const Rational& order);

// Catalog of named q-series. Besides the listed names, "q^(a/b)" is the monomial.
Series qseries(const std::string& name, const Rational& order);
Rational qseries_lead(const std::string& name);
const std::vector<std::string>& qseries_names();
// Resolver for Named atoms in the Q chart, backed by a synchronized cache.
Resolver qseries_resolver();

// Specs of the modular-level5, modular-level7 and modular-low-levels suites.
const std::vector<IdentitySpec>& modular_catalog();
const IdentitySpec& find_modular_spec(const std::string& id);
VerificationReport verify_modular_identity(const std::string& id, std::optional<long> order = std::nullopt);

// Klein's invariants in X, Y, Z.
MultiPoly klein_r4();
MultiPoly klein_r6();
MultiPoly klein_r14();
// det of the Jacobian of (R4, R6, R14), divided by 14
MultiPoly klein_r21();

// R21^2 - R14^3 + 1728 R6^7 reduces to 0 modulo R4.
VerificationReport klein_invariant_congruence();
// y^7 = x(x-1)^2 with x = -X^2Y/Z^3, y = -Y/Z, as a polynomial congruence
// modulo R4 and as q-series through the modular parametrization.
VerificationReport verify_quotient_curve(long order = 40);

// Riemann-Hurwitz genus of the curves z^12 = y(1-11y^5-y^10) (level 5, 55)
// and W^6 = R6 over Klein's quartic (level 7, 73).
VerificationReport modular_genus_audit(int level);

// Integer q-expansions (after removing the fractional lead) for the
// integral catalog entries, up to the given order.
VerificationReport integrality_audit(long order);

}  // namespace darboux
