#ifndef X0CURVE_VERIFY_HPP
#define X0CURVE_VERIFY_HPP

#include <array>
#include <optional>
#include <string>

#include "x0curve/bipoly.hpp"
#include "x0curve/curvepoly.hpp"
#include "x0curve/qseries.hpp"

namespace x0 {

enum class Outcome { pass, fail, inconclusive };

std::string to_string(Outcome o);

// Result of a truncation-bounded identity check.
//
// required_lo..required_hi is the exponent range whose vanishing proves the
// claim; window_lo..window_hi is what the computation actually certified.
// A pass is only ever issued when the window covers the requirement.
struct VerificationReport {
    std::string claim;
    std::optional<int> n;
    Rational required_lo;
    Rational required_hi;
    Rational window_lo;
    Rational window_hi;
    Outcome outcome = Outcome::inconclusive;
    std::string detail;

    bool covers_requirement() const
    {
        return window_lo <= required_lo && window_hi >= required_hi;
    }
};

struct VerifyOptions {
    // Positive powers of q checked past the constant term.
    long margin = 10;
    // Truncation for x_n, y_n; below the derived bound the verdict can be at
    // best inconclusive.
    std::optional<long> trunc_override;
    int cap = kDefaultLevelCap;
};

// Examines every coefficient of f up to hi. Fails on the first nonzero one,
// is inconclusive if f is not certified through hi, passes otherwise.
VerificationReport check_vanishing(std::string claim, std::optional<int> n, const QExp& f,
                                   const Rational& lo, const Rational& hi);

// theta_2 = 2 eta(2t)^2/eta(t), theta_3 = eta(t)^5/(eta(t/2)^2 eta(2t)^2),
// theta_4 = eta(t/2)^2/eta(t), each through q^terms. The variant
// eta(t)^2/eta(t/2)^2 sometimes quoted for theta_4 is off by q^{1/24} and fails.
std::array<VerificationReport, 3> verify_theta_eta(long terms = 200);

// theta_3^4 = theta_2^4 + theta_4^4 through q^terms.
VerificationReport verify_jacobi_quartic(long terms = 200);

// x_{n-1}^2 x_n - x_n^2 - 4 = 0 and y_{n-1}^2 x_n - y_n^2 = 0 through
// q^{terms * 2^{n-4}}.
std::array<VerificationReport, 2> verify_recursion_identities(int n, long terms = 200);

// Smallest truncation for x_n, y_n that certifies P(x_n, y_n) through
// q^margin when every monomial has pole order at most rigor_bound.
long defining_equation_trunc(int n, long rigor_bound, long margin);

// P_n(x_n, y_n) = 0 for even n. Odd n throws NotApplicable naming the
// Newman condition y_n violates. Hitting the level cap yields inconclusive.
VerificationReport verify_defining_equation(int n, const VerifyOptions& opts = {});

// Same check for an arbitrary candidate polynomial at level n.
VerificationReport verify_defining_equation_for(const BiPoly& p, int n,
                                                const VerifyOptions& opts = {});

// Leading exponents of x_n, y_n against the cusp orders at infinity,
// holomorphy at every other cusp and zero divisor degree.
VerificationReport verify_pole_structure(int n);

// x^4 + y^4 = z^4 for the weight-2 eta products on Gamma_0(64).
VerificationReport verify_x0_64_quartic(long terms = 200);
VerificationReport check_quartic(const QExp& x, const QExp& y, const QExp& z, long terms);

// X = (x + shift)/(x + pole), Y = y_scale * y/(x + pole).
struct BirationalMap {
    long shift = -2;
    long pole = 2;
    long y_scale = 2;
};

// X^4 + Y^4 - 1 vanishes on y^4 = x^3 + 4x: the cleared numerator must be a
// constant multiple of y^4 - x^3 - 4x.
VerificationReport verify_fermat_birational(const BirationalMap& map = {});

// genus X_0(2^{2n+2}) = genus F_{2^n} for n = 1..n_max (n_max <= 30).
VerificationReport verify_genus_coincidence(int n_max);

} // namespace x0

#endif
