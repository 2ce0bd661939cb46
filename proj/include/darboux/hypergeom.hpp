#pragma once

#include "darboux/series.hpp"

#include <array>
#include <string>
#include <vector>

namespace darboux {

class HypergeomError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters of pFq(upper; lower; z). Most of the library uses p = 3, q = 2,
// but 2F1 (and the occasional 1F0) go through the same code.
struct HpgParams {
    std::vector<Rational> upper;
    std::vector<Rational> lower;

    HpgParams() = default;
    HpgParams(std::vector<Rational> up, std::vector<Rational> low) : upper(std::move(up)), lower(std::move(low)) {}
    // "(-1/42, 13/42, 9/14; 4/7, 6/7)"
    static HpgParams parse(const std::string& text);

    // sum(upper) - sum(lower): the exponent difference at z = 1 (for 3F2).
    Rational gamma() const;
    std::string str() const;
    friend bool operator==(const HpgParams& a, const HpgParams& b) {
        return a.upper == b.upper && a.lower == b.lower;
    }
};

// Coefficients of z^0 .. z^(terms-1); the result is exact to order `terms`.
Series hpg_series(const HpgParams& p, long terms);

// prod(theta + a) F - d/dz prod(theta + b - 1) F. Vanishes to order
// F.order() - 1 exactly when F solves the hypergeometric equation there.
Series ode_residual(const Series& f, const HpgParams& p);
// Same operator written in w = 1/z, for local solutions at infinity.
Series ode_residual_at_infinity(const Series& g, const HpgParams& p);

struct LocalSolution {
    Rational exponent;  // z^exponent at 0, (1/z)^(-exponent) at infinity
    HpgParams params;
    bool at_infinity = false;
};

struct CompanionBasis {
    std::array<LocalSolution, 3> at_zero;
    std::array<LocalSolution, 3> at_infinity;
};

using MMatrix = std::array<std::array<Rational, 3>, 3>;
// Rows: alpha_i, alpha_i - beta_2 + 1, alpha_i - beta_1 + 1.
MMatrix m_matrix(const HpgParams& p);
// Throws HypergeomError for resonant exponents at 0 or at infinity.
CompanionBasis companion_basis(const HpgParams& p);
// z^e * pFq(params; z) at 0, or w^(-e) * pFq(params; w) in w = 1/z at infinity.
Series local_solution_series(const LocalSolution& s, long terms);

enum class ShiftKind {
    Identity,
    AlphaUp,        // alpha_i + 1
    BetaDown,       // beta_j - 1
    AlphaBetaDown,  // (alpha_1 - 1, beta_1 - 1), the second order form
    Derivative,     // all parameters + 1
};

struct ShiftDescriptor {
    ShiftKind kind = ShiftKind::Identity;
    int index = 0;  // which alpha (AlphaUp) or beta (BetaDown)
};

HpgParams shifted_params(const ShiftDescriptor& d, const HpgParams& p);
// Apply the contiguity operator to a solution F of the equation for p.
// The output is the contiguous function for shifted_params(d, p), exact to
// F.order() - 2 at worst.
Series contiguous_apply(const ShiftDescriptor& d, const HpgParams& p, const Series& f);

// Fractional parts of the upper parameters alternate with those of
// {beta_1, beta_2, 0} on the circle. Throws on an upper/lower coincidence.
bool interlacing(const HpgParams& p);

struct HpgClass {
    std::string label;
    HpgParams representative;
};
// The six classes with monodromy PSL(2, F7).
const std::vector<HpgClass>& class_catalog();
const HpgClass& find_class(const std::string& label);

}  // namespace darboux
