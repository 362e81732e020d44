#ifndef X0CURVE_IO_HPP
#define X0CURVE_IO_HPP

#include <cstddef>
#include <string>

#include <json.hpp>

#include "x0curve/bipoly.hpp"
#include "x0curve/modforms.hpp"
#include "x0curve/qseries.hpp"
#include "x0curve/verify.hpp"

// JSON, plain-text and LaTeX renderings. All JSON rationals are strings
// "p/q" and integers are decimal strings, so nothing passes through doubles.
namespace x0::io {

using nlohmann::json;

std::string rational_string(const Rational& r);
Rational parse_rational(const std::string& s);

// { "denom": D, "trunc": T, "terms": [[s, "p/q"], ...] }; an exact series
// has "trunc": null.
json to_json(const QExp& f);
QExp qexp_from_json(const json& j);

// { "n": n, "monomials": [[i, j, "c"], ...] } in graded lex order.
json to_json(const BiPoly& p, int n);
BiPoly bipoly_from_json(const json& j);

// { "n": n, "exps": {"k": e_k, ...} }
json to_json(const EtaQuotient& eq);
EtaQuotient eta_quotient_from_json(const json& j);

// [{ "a", "k", "width", "orders": {"x": "..", "y": ".."} }, ...]; orders are
// filled in for n >= 4, where x_n and y_n are defined as eta quotients.
json cusp_report(int n);

// { "claim", "n"?, "rigor_bound", "window": [lo, hi], "outcome", "detail" }
json to_json(const VerificationReport& r);

// "y^4 - x^3 - 4*x"
std::string format_text(const BiPoly& p);
// Expanded LaTeX.
std::string format_latex(const BiPoly& p);
// LaTeX with u = (x-2)^8, v = x(x+2)^4(x^2+4): the coefficient of each power
// of y is written as a homogeneous form in u, v when it is one, and expanded
// otherwise.
std::string format_latex_uv(const BiPoly& p);

// First max_terms nonzero terms, e.g. "q^-4 + 20 + 62*q^4 + ...".
std::string format_series(const QExp& f, std::size_t max_terms);

} // namespace x0::io

#endif
