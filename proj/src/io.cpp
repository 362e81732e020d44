#include "x0curve/io.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace x0::io {

namespace {

using Poly1 = std::vector<Integer>; // univariate in x, index = degree

Poly1 mul1(const Poly1& a, const Poly1& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly1 c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    return c;
}

Poly1 pow1(const Poly1& a, int k)
{
    Poly1 r{1};
    for (int i = 0; i < k; ++i)
        r = mul1(r, a);
    return r;
}

// " + c" / " - c" joiner shared by the text and LaTeX emitters.
void append_signed(std::string& out, const Integer& c, const std::string& body,
                   bool first, bool show_unit)
{
    const bool neg = sgn(c) < 0;
    const Integer mag = abs(c);
    if (first)
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    if (mag != 1 || show_unit || body.empty())
        out += mag.get_str();
    out += body;
}

std::string latex_power(const char* var, int e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return var;
    return std::string(var) + "^{" + std::to_string(e) + "}";
}

std::string latex_x_poly(const Poly1& c)
{
    std::string out;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0)
            continue;
        append_signed(out, c[i], latex_power("x", static_cast<int>(i)), first, false);
        first = false;
    }
    return out;
}

// Writes c as sum_s a_s u^s v^{m-s} if possible.
bool as_uv_form(Poly1 c, int m, const std::vector<Poly1>& u_pow, const std::vector<Poly1>& v_pow,
                std::vector<Integer>& a)
{
    a.assign(static_cast<std::size_t>(m) + 1, Integer{});
    if (c.size() > static_cast<std::size_t>(8 * m) + 1)
        return false;
    for (int s = m; s >= 0; --s) {
        // u^s v^{m-s} is monic of degree 7m + s.
        const auto deg = static_cast<std::size_t>(7 * m + s);
        if (deg >= c.size() || sgn(c[deg]) == 0)
            continue;
        a[static_cast<std::size_t>(s)] = c[deg];
        const Poly1 basis = mul1(u_pow[static_cast<std::size_t>(s)],
                                 v_pow[static_cast<std::size_t>(m - s)]);
        for (std::size_t i = 0; i < basis.size(); ++i)
            mpz_submul(c[i].get_mpz_t(), a[static_cast<std::size_t>(s)].get_mpz_t(),
                       basis[i].get_mpz_t());
    }
    for (const auto& v : c)
        if (sgn(v) != 0)
            return false;
    return true;
}

std::string uv_monomial(int s, int t)
{
    std::string out = latex_power("u", s);
    if (s && t)
        out += " ";
    out += latex_power("v", t);
    return out;
}

} // namespace

std::string rational_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + s + "'");
    if (sgn(r.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

json to_json(const QExp& f)
{
    json terms = json::array();
    for (const auto& t : f.terms())
        terms.push_back(json::array({t.s, rational_string(t.c)}));
    json j;
    j["denom"] = f.denom();
    j["trunc"] = f.exact() ? json(nullptr) : json(f.trunc());
    j["terms"] = std::move(terms);
    return j;
}

QExp qexp_from_json(const json& j)
{
    const auto denom = j.at("denom").get<std::int64_t>();
    const auto trunc =
        j.at("trunc").is_null() ? QExp::kExact : j.at("trunc").get<QExp::Exponent>();
    std::vector<QExp::Term> terms;
    for (const auto& t : j.at("terms"))
        terms.push_back({t.at(0).get<QExp::Exponent>(), parse_rational(t.at(1).get<std::string>())});
    return QExp(denom, trunc, std::move(terms));
}

json to_json(const BiPoly& p, int n)
{
    json mons = json::array();
    for (const auto& t : p.grlex_terms())
        mons.push_back(json::array({t.i, t.j, t.c.get_str()}));
    return {{"n", n}, {"monomials", std::move(mons)}};
}

BiPoly bipoly_from_json(const json& j)
{
    BiPoly p;
    for (const auto& m : j.at("monomials")) {
        Integer c;
        if (c.set_str(m.at(2).get<std::string>(), 10) != 0)
            throw std::invalid_argument("bad integer coefficient in polynomial JSON");
        p.add_term(m.at(0).get<int>(), m.at(1).get<int>(), c);
    }
    return p;
}

json to_json(const EtaQuotient& eq)
{
    json exps = json::object();
    for (const auto& [k, e] : eq.exps())
        exps[std::to_string(k)] = e;
    return {{"n", eq.level_exp()}, {"exps", std::move(exps)}};
}

EtaQuotient eta_quotient_from_json(const json& j)
{
    std::map<int, long> exps;
    for (const auto& [k, e] : j.at("exps").items())
        exps[std::stoi(k)] = e.get<long>();
    return EtaQuotient(j.at("n").get<int>(), exps);
}

json cusp_report(int n)
{
    json rows = json::array();
    std::optional<EtaQuotient> xq, yq;
    if (n >= 4) {
        xq = x_quotient(n);
        yq = y_quotient(n);
    }
    for (const Cusp& c : cusps_of(n)) {
        json row = {{"a", c.a}, {"k", c.k}, {"width", c.width}};
        json orders = json::object();
        if (xq) {
            orders["x"] = rational_string(order_at_cusp(*xq, c));
            orders["y"] = rational_string(order_at_cusp(*yq, c));
        }
        row["orders"] = std::move(orders);
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const VerificationReport& r)
{
    json j;
    j["claim"] = r.claim;
    if (r.n)
        j["n"] = *r.n;
    j["rigor_bound"] = "[" + r.required_lo.get_str() + ", " + r.required_hi.get_str() + "]";
    j["window"] = json::array({r.window_lo.get_str(), r.window_hi.get_str()});
    j["outcome"] = to_string(r.outcome);
    j["detail"] = r.detail;
    return j;
}

std::string format_text(const BiPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.grlex_terms()) {
        std::string body;
        auto factor = [&](const char* var, int e) {
            if (e == 0)
                return;
            body += "*";
            body += var;
            if (e > 1)
                body += "^" + std::to_string(e);
        };
        factor("x", t.i);
        factor("y", t.j);
        const bool unit = abs(t.c) == 1 && !body.empty();
        append_signed(out, t.c, unit ? body.substr(1) : body, first, false);
        first = false;
    }
    return out;
}

std::string format_latex(const BiPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.grlex_terms()) {
        std::string body = latex_power("x", t.i);
        if (t.i && t.j)
            body += " ";
        body += latex_power("y", t.j);
        append_signed(out, t.c, body, first, false);
        first = false;
    }
    return out;
}

std::string format_latex_uv(const BiPoly& p)
{
    if (p.is_zero())
        return "0";
    int g = 0;
    for (const auto& [k, c] : p.terms())
        g = std::gcd(g, k.second);
    if (g == 0)
        return format_latex(p);
    const int top = p.deg_y() / g;

    const Poly1 u{256, -1024, 1792, -1792, 1120, -448, 112, -16, 1}; // (x-2)^8
    const Poly1 v = mul1(mul1(Poly1{0, 1}, pow1(Poly1{2, 1}, 4)), Poly1{4, 0, 1});
    std::vector<Poly1> u_pow{Poly1{1}}, v_pow{Poly1{1}};
    for (int i = 1; i <= top; ++i) {
        u_pow.push_back(mul1(u_pow.back(), u));
        v_pow.push_back(mul1(v_pow.back(), v));
    }

    std::string out;
    bool first = true;
    for (int m = 0; m <= top; ++m) {
        const int j = g * (top - m);
        Poly1 c;
        for (const auto& [k, coef] : p.terms()) {
            if (k.second != j)
                continue;
            if (c.size() <= static_cast<std::size_t>(k.first))
                c.resize(static_cast<std::size_t>(k.first) + 1);
            c[static_cast<std::size_t>(k.first)] = coef;
        }
        if (c.empty())
            continue;
        const std::string ypart = latex_power("y", j);

        std::vector<Integer> a;
        if (!as_uv_form(c, m, u_pow, v_pow, a)) {
            std::string inner = latex_x_poly(c);
            out += first ? "" : " + ";
            out += "(" + inner + ")" + (ypart.empty() ? "" : " " + ypart);
            first = false;
            continue;
        }
        int s_min = m, s_max = 0;
        Integer content = 0;
        for (int s = 0; s <= m; ++s) {
            if (sgn(a[static_cast<std::size_t>(s)]) == 0)
                continue;
            s_min = std::min(s_min, s);
            s_max = std::max(s_max, s);
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                    a[static_cast<std::size_t>(s)].get_mpz_t());
        }
        if (sgn(a[static_cast<std::size_t>(s_max)]) < 0)
            content = -content;
        const int t_min = m - s_max;

        std::string inner;
        bool inner_first = true;
        int inner_terms = 0;
        for (int s = s_max; s >= s_min; --s) {
            const Integer& as = a[static_cast<std::size_t>(s)];
            if (sgn(as) == 0)
                continue;
            append_signed(inner, Integer(as / content), uv_monomial(s - s_min, m - s - t_min),
                          inner_first, false);
            inner_first = false;
            ++inner_terms;
        }
        std::string body = uv_monomial(s_min, t_min);
        if (inner_terms > 1)
            body += (body.empty() ? "(" : " (") + inner + ")";
        if (!ypart.empty())
            body += (body.empty() ? "" : " ") + ypart;
        append_signed(out, content, body, first, false);
        first = false;
    }
    return out;
}

std::string format_series(const QExp& f, std::size_t max_terms)
{
    std::string out;
    bool first = true;
    std::size_t shown = 0;
    for (const auto& t : f.terms()) {
        if (shown == max_terms)
            break;
        Rational e(Integer(static_cast<long>(t.s)), Integer(static_cast<long>(f.denom())));
        e.canonicalize();
        std::string body;
        if (sgn(e) != 0) {
            body = "q";
            if (e != 1)
                body += e.get_den() == 1 ? "^" + e.get_str() : "^(" + e.get_str() + ")";
        }
        std::string coef;
        const Rational mag = abs(t.c);
        if (mag != 1 || body.empty())
            coef = mag.get_str() + (body.empty() ? "" : "*");
        if (first)
            out += sgn(t.c) < 0 ? "-" : "";
        else
            out += sgn(t.c) < 0 ? " - " : " + ";
        out += coef + body;
        first = false;
        ++shown;
    }
    if (first)
        out = "0";
    if (shown < f.terms().size() || !f.exact()) {
        out += " + ";
        if (shown < f.terms().size()) {
            out += "...";
        } else {
            Rational e(Integer(static_cast<long>(f.trunc())), Integer(static_cast<long>(f.denom())));
            e.canonicalize();
            out += "O(q^" + (e.get_den() == 1 ? e.get_str() : "(" + e.get_str() + ")") + ")";
        }
    }
    return out;
}

} // namespace x0::io
