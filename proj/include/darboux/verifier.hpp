#pragma once

#include "darboux/curve.hpp"
#include "darboux/hypergeom.hpp"
#include "darboux/poly.hpp"
#include "darboux/report.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace darboux {

class VerifierError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Where a recipe is expanded. Line: x = scale * t around x = 0, so that
// (-x), x/64, ... become t with lead coefficient 1. Curve: the local
// parameter t = y at the 2-torsion point (0, 0). Q: the variable is q.
struct Chart {
    enum class Kind { Line, Curve, Q };
    Kind kind = Kind::Line;
    Scalar scale = Scalar(1);
    CurveId curve = CurveId::E7;

    static Chart line(const Scalar& scale = Scalar(1));
    static Chart on_curve(CurveId c);
    static Chart q();
    std::string str() const;
};

struct Atom;
using AtomPtr = std::shared_ptr<const Atom>;

struct Factor {
    AtomPtr atom;
    Rational exponent;
};

struct Term {
    Scalar coeff = Scalar(1);
    std::vector<Factor> factors;
};

// Sum of scalar multiples of products of atoms raised to rational powers.
struct Expr {
    std::vector<Term> terms;

    static Expr one();
    // The chart's line variable: x on a line, u on a curve, q in the Q chart.
    static Expr variable();
    static Expr product(std::vector<Factor> factors, const Scalar& coeff = Scalar(1));

    Expr& operator+=(const Expr& o);
    Expr operator*(const Scalar& c) const;
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a += b * Scalar(-1); }
    std::string str() const;
};

// Every atom is expected to have lead coefficient 1 in its chart; scalars
// belong in the term coefficients. A fractional power of an atom whose lead
// coefficient is not 1 is an error, never a silent rescaling.
struct Atom {
    enum class Kind { Poly, Map, Curve, Hpg, Named, Group };
    Kind kind = Kind::Poly;
    std::string label;
    UniPoly poly;         // Poly, in the chart variable
    RationalMap map;      // Map: map(inner)
    CurveFraction curve;  // Curve
    HpgParams params;     // Hpg: pFq(params; inner)
    Expr inner;           // Map and Hpg argument, Group body
};

AtomPtr poly_atom(const std::string& label, const UniPoly& p);
AtomPtr map_atom(const std::string& label, const RationalMap& r, Expr inner = Expr::variable());
AtomPtr curve_atom(const std::string& label, const CurveFraction& f);
AtomPtr hpg_atom(const HpgParams& p, Expr arg);
AtomPtr named_atom(const std::string& name);
AtomPtr group_atom(const std::string& label, Expr body);

inline Factor pw(AtomPtr a, const Rational& e = Rational(1)) { return {std::move(a), e}; }

// Series for a named catalog entry, exact to at least lead + precision.
using Resolver = std::function<Series(const std::string& name, const Rational& precision)>;

struct IdentitySpec {
    std::string id;
    std::string anchor;
    std::string suite;
    Chart chart;
    Expr left, right;
    long order = 64;                  // default comparison order N
    std::optional<long> max_order;    // the identity is only printed to this many terms
    Resolver resolver;                // for Named atoms
};

// Expansion with every exponent below lead + precision exact. The lead used
// is the smallest lead among the terms, so cancellation shows up as lost
// relative precision rather than as a wrong lead.
Series expand_recipe(const Expr& e, const Chart& chart, const Rational& precision, const Resolver& resolver = {});

// Pass iff both sides agree at every exponent below base + N, where base is
// the smallest term lead on either side. Residual scalars are mismatches.
VerificationReport verify_identity(const IdentitySpec& spec, std::optional<long> order = std::nullopt);

// Specs of the genus0, genus0-omega, genus1-e7, genus1-e4 and
// transformations suites, plus the Klein parametrization relation.
const std::vector<IdentitySpec>& identity_catalog();
const IdentitySpec& find_identity(const std::string& id);

// One copy of the spec per top-level factor, with that exponent moved by delta.
std::vector<IdentitySpec> perturbations(const IdentitySpec& spec, const Rational& delta);

// The proof's choice between candidate radical solutions, per exponent slot.
VerificationReport verify_radical_candidate_separation(const std::string& class_id);

// Each radical three-term sum of the Q(omega) theorem is supported on one
// residue class of exponents mod 3 (0, 1, 2 respectively).
VerificationReport verify_omega_stability(long order = 48);

}  // namespace darboux
