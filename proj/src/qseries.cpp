#include "x0curve/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "x0curve/kernels.hpp"

namespace x0 {

using Exponent = QExp::Exponent;

namespace {

Exponent scale_exponent(Exponent a, std::int64_t m)
{
    return a == QExp::kExact ? QExp::kExact : a * m;
}

// Exponent stride: gcd of all differences to the first term, 0 for <= 1 term.
std::int64_t stride_of(const std::vector<QExp::Term>& t)
{
    std::int64_t g = 0;
    for (const auto& term : t)
        g = std::gcd(g, term.s - t.front().s);
    return g;
}

Integer common_denominator(const std::vector<QExp::Term>& t)
{
    Integer l = 1;
    for (const auto& term : t)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.c.get_den_mpz_t());
    return l;
}

Integer scaled_numerator(const Rational& c, const Integer& l)
{
    return c.get_num() * (l / c.get_den());
}

std::pair<QExp, QExp> unify(const QExp& f, const QExp& g)
{
    if (f.denom() == g.denom())
        return {f, g};
    const std::int64_t d = std::lcm(f.denom(), g.denom());
    return {f.with_denom(d), g.with_denom(d)};
}

Exponent ceil_div(Exponent a, Exponent b)
{
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

} // namespace

Exponent exponent_add(Exponent a, Exponent b)
{
    if (a == QExp::kExact || b == QExp::kExact)
        return QExp::kExact;
    return a + b;
}

QExp::QExp(std::int64_t denom, Exponent trunc, std::vector<Term> terms)
    : denom_(denom), trunc_(trunc)
{
    if (denom < 1)
        throw std::invalid_argument("QExp: denominator must be positive");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.s < b.s; });
    for (auto& t : terms) {
        if (t.s >= trunc)
            break;
        if (!terms_.empty() && terms_.back().s == t.s)
            terms_.back().c += t.c;
        else
            terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const Term& t) { return sgn(t.c) == 0; });
}

QExp QExp::zero(std::int64_t denom, Exponent trunc)
{
    return QExp(denom, trunc, {});
}

QExp QExp::constant(const Rational& c, Exponent trunc)
{
    return QExp(1, trunc, {{0, c}});
}

QExp QExp::monomial(const Rational& c, Exponent s, std::int64_t denom, Exponent trunc)
{
    return QExp(denom, trunc, {{s, c}});
}

Rational QExp::truncation_exponent() const
{
    if (exact())
        throw PrecisionError("exact series has no truncation exponent");
    Rational r(Integer(static_cast<long>(trunc_)), Integer(static_cast<long>(denom_)));
    r.canonicalize();
    return r;
}

Rational QExp::coeff_scaled(Exponent s) const
{
    if (s >= trunc_)
        throw PrecisionError("coefficient of q^(" + std::to_string(s) + "/" +
                             std::to_string(denom_) + ") lies beyond the certified window");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, Exponent v) { return t.s < v; });
    if (it != terms_.end() && it->s == s)
        return it->c;
    return 0;
}

Rational QExp::coeff(const Rational& exponent) const
{
    const Rational scaled = exponent * static_cast<long>(denom_);
    if (!exact() && scaled >= static_cast<long>(trunc_))
        throw PrecisionError("coefficient of q^" + exponent.get_str() +
                             " lies beyond the certified window");
    if (scaled.get_den() != 1)
        return 0;
    return coeff_scaled(scaled.get_num().get_si());
}

Rational QExp::leading_exponent() const
{
    if (terms_.empty())
        throw PrecisionError("series vanishes throughout its certified window; "
                             "leading exponent undetermined");
    Rational r(Integer(static_cast<long>(terms_.front().s)), Integer(static_cast<long>(denom_)));
    r.canonicalize();
    return r;
}

Rational QExp::leading_coefficient() const
{
    if (terms_.empty())
        throw PrecisionError("series vanishes throughout its certified window; "
                             "leading coefficient undetermined");
    return terms_.front().c;
}

bool QExp::is_zero_through(const Rational& bound) const
{
    const Rational scaled = bound * static_cast<long>(denom_);
    if (!exact() && scaled >= static_cast<long>(trunc_))
        throw PrecisionError("bound q^" + bound.get_str() +
                             " is not inside the certified window");
    return terms_.empty() || Rational(static_cast<long>(terms_.front().s)) > scaled;
}

QExp QExp::with_denom(std::int64_t d) const
{
    if (d < 1 || d % denom_ != 0)
        throw std::invalid_argument("with_denom: target must be a positive multiple of " +
                                    std::to_string(denom_));
    const std::int64_t r = d / denom_;
    std::vector<Term> t = terms_;
    for (auto& term : t)
        term.s *= r;
    return QExp(Trusted{}, d, scale_exponent(trunc_, r), std::move(t));
}

QExp QExp::normalized() const
{
    std::int64_t g = denom_;
    for (const auto& t : terms_)
        g = std::gcd(g, t.s);
    if (!exact())
        g = std::gcd(g, trunc_);
    if (g == 1)
        return *this;
    std::vector<Term> t = terms_;
    for (auto& term : t)
        term.s /= g;
    return QExp(Trusted{}, denom_ / g, exact() ? kExact : trunc_ / g, std::move(t));
}

QExp QExp::truncated(Exponent t) const
{
    if (t >= trunc_)
        return *this;
    std::vector<Term> kept;
    for (const auto& term : terms_) {
        if (term.s >= t)
            break;
        kept.push_back(term);
    }
    return QExp(Trusted{}, denom_, t, std::move(kept));
}

QExp QExp::operator-() const
{
    std::vector<Term> t = terms_;
    for (auto& term : t)
        term.c = -term.c;
    return QExp(Trusted{}, denom_, trunc_, std::move(t));
}

QExp QExp::scaled(const Rational& c) const
{
    if (sgn(c) == 0)
        return QExp(Trusted{}, denom_, trunc_, {});
    std::vector<Term> t = terms_;
    for (auto& term : t)
        term.c *= c;
    return QExp(Trusted{}, denom_, trunc_, std::move(t));
}

QExp operator+(const QExp& f, const QExp& g) { return add(f, g); }
QExp operator-(const QExp& f, const QExp& g) { return add(f, -g); }
QExp operator*(const QExp& f, const QExp& g) { return mul(f, g); }

bool operator==(const QExp& f, const QExp& g)
{
    auto [a, b] = unify(f, g);
    return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

QExp add(const QExp& f, const QExp& g)
{
    if (f.denom_ != g.denom_) {
        auto [fu, gu] = unify(f, g);
        return add(fu, gu);
    }
    const QExp& a = f;
    const QExp& b = g;
    const Exponent t = std::min(a.trunc_, b.trunc_);
    std::vector<QExp::Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        QExp::Term term;
        if (j == b.terms_.end() || (i != a.terms_.end() && i->s < j->s)) {
            term = *i++;
        } else if (i == a.terms_.end() || j->s < i->s) {
            term = *j++;
        } else {
            term = {i->s, i->c + j->c};
            ++i;
            ++j;
        }
        if (term.s >= t)
            break;
        if (sgn(term.c) != 0)
            out.push_back(std::move(term));
    }
    return QExp(QExp::Trusted{}, a.denom_, t, std::move(out));
}

QExp mul(const QExp& f, const QExp& g)
{
    if (f.denom_ != g.denom_) {
        auto [fu, gu] = unify(f, g);
        return mul(fu, gu);
    }
    const QExp& a = f;
    const QExp& b = g;
    const std::int64_t d = a.denom_;
    const Exponent oa = a.order();
    const Exponent ob = b.order();
    const Exponent t = std::min(exponent_add(oa, b.trunc_), exponent_add(ob, a.trunc_));
    if (a.empty() || b.empty())
        return QExp(QExp::Trusted{}, d, t, {});
    const Exponent lo = oa + ob;
    if (t <= lo)
        return QExp(QExp::Trusted{}, d, t, {});

    std::int64_t stride = std::gcd(stride_of(a.terms_), stride_of(b.terms_));
    if (stride == 0)
        stride = 1;
    const std::size_t span_a = static_cast<std::size_t>((a.terms_.back().s - oa) / stride) + 1;
    const std::size_t span_b = static_cast<std::size_t>((b.terms_.back().s - ob) / stride) + 1;
    std::size_t out_len = kernels::full_length(span_a, span_b);
    if (t != QExp::kExact)
        out_len = std::min(out_len, static_cast<std::size_t>(ceil_div(t - lo, stride)));

    const Integer la = common_denominator(a.terms_);
    const Integer lb = common_denominator(b.terms_);

    auto nonzero_below = [&](const QExp& s, Exponent origin) {
        std::size_t n = 0;
        for (const auto& term : s.terms_)
            if (static_cast<std::size_t>((term.s - origin) / stride) < out_len)
                ++n;
        return n;
    };
    const std::size_t nnz_a = nonzero_below(a, oa);
    const std::size_t nnz_b = nonzero_below(b, ob);
    const std::size_t len_a = std::min(span_a, out_len);
    const std::size_t len_b = std::min(span_b, out_len);

    kernels::Coeffs acc;
    if (std::min(nnz_a, nnz_b) <= 8 || nnz_a * nnz_b <= 4 * (len_a + len_b)) {
        // Lacunary inputs: touch only the nonzero pairs.
        acc.assign(out_len, Integer{});
        std::vector<std::pair<std::size_t, Integer>> bs;
        for (const auto& term : b.terms_) {
            const auto k = static_cast<std::size_t>((term.s - ob) / stride);
            if (k < out_len)
                bs.emplace_back(k, scaled_numerator(term.c, lb));
        }
        for (const auto& term : a.terms_) {
            const auto i = static_cast<std::size_t>((term.s - oa) / stride);
            if (i >= out_len)
                break;
            const Integer ca = scaled_numerator(term.c, la);
            for (const auto& [j, cb] : bs) {
                if (i + j >= out_len)
                    break;
                mpz_addmul(acc[i + j].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            }
        }
    } else {
        auto dense = [&](const QExp& s, Exponent origin, std::size_t len, const Integer& l) {
            kernels::Coeffs v(len);
            for (const auto& term : s.terms_) {
                const auto k = static_cast<std::size_t>((term.s - origin) / stride);
                if (k >= len)
                    break;
                v[k] = scaled_numerator(term.c, l);
            }
            return v;
        };
        const kernels::Coeffs va = dense(a, oa, len_a, la);
        if (&f == &g) {
            acc = kernels::convolve(va, va, out_len);
        } else {
            const kernels::Coeffs vb = dense(b, ob, len_b, lb);
            acc = kernels::convolve(va, vb, out_len);
        }
    }

    const Integer scale = la * lb;
    std::vector<QExp::Term> out;
    for (std::size_t k = 0; k < acc.size(); ++k) {
        if (sgn(acc[k]) == 0)
            continue;
        Rational c(acc[k], scale);
        c.canonicalize();
        out.push_back({lo + static_cast<Exponent>(k) * stride, std::move(c)});
    }
    return QExp(QExp::Trusted{}, d, t, std::move(out));
}

QExp invert(const QExp& f)
{
    if (f.empty())
        throw NotInvertible("cannot invert a series with no known nonzero term");
    const Exponent o = f.order();
    const Rational lead = f.terms_.front().c;
    if (f.terms_.size() == 1 && f.exact())
        return QExp(QExp::Trusted{}, f.denom_, QExp::kExact, {{-o, 1 / lead}});
    if (f.exact())
        throw PrecisionError("inverse of an exact non-monomial is an infinite series; "
                             "truncate the input first");

    const Exponent t = f.trunc_ - 2 * o;
    std::int64_t stride = stride_of(f.terms_);
    if (stride == 0)
        stride = 1;
    const auto n = static_cast<std::size_t>(ceil_div(f.trunc_ - o, stride));

    // f = lead * q^o * (1 + h); invert 1 + h by the triangular recurrence,
    // touching only the nonzero coefficients of h.
    std::vector<std::pair<std::size_t, Rational>> h;
    for (std::size_t i = 1; i < f.terms_.size(); ++i) {
        Rational c = f.terms_[i].c / lead;
        h.emplace_back(static_cast<std::size_t>((f.terms_[i].s - o) / stride), std::move(c));
    }

    std::vector<QExp::Term> out;
    auto emit = [&](std::size_t k, Rational c) {
        if (sgn(c) != 0)
            out.push_back({-o + static_cast<Exponent>(k) * stride, std::move(c)});
    };

    Integer hden = 1;
    for (const auto& [k, c] : h)
        mpz_lcm(hden.get_mpz_t(), hden.get_mpz_t(), c.get_den_mpz_t());

    const Rational inv_lead = 1 / lead;
    if (hden == 1) {
        std::vector<std::pair<std::size_t, Integer>> hi;
        for (const auto& [k, c] : h)
            hi.emplace_back(k, c.get_num());
        std::vector<Integer> g(n);
        g[0] = 1;
        for (std::size_t k = 1; k < n; ++k) {
            Integer acc;
            for (const auto& [i, c] : hi) {
                if (i > k)
                    break;
                mpz_submul(acc.get_mpz_t(), c.get_mpz_t(), g[k - i].get_mpz_t());
            }
            g[k] = std::move(acc);
        }
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(g[k]) != 0)
                emit(k, Rational(g[k]) * inv_lead);
    } else {
        std::vector<Rational> g(n);
        g[0] = 1;
        for (std::size_t k = 1; k < n; ++k) {
            Rational acc;
            for (const auto& [i, c] : h) {
                if (i > k)
                    break;
                acc -= c * g[k - i];
            }
            g[k] = std::move(acc);
        }
        for (std::size_t k = 0; k < n; ++k)
            emit(k, g[k] * inv_lead);
    }
    return QExp(QExp::Trusted{}, f.denom_, t, std::move(out));
}

QExp pow(const QExp& f, long k)
{
    if (k == 0)
        return QExp::constant(1);
    QExp base = k < 0 ? invert(f) : f;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    bool have = false;
    QExp result;
    while (e != 0) {
        if (e & 1u) {
            result = have ? mul(result, base) : base;
            have = true;
        }
        e >>= 1;
        if (e != 0)
            base = mul(base, base);
    }
    return result;
}

QExp rescale_q(const QExp& f, std::int64_t m)
{
    if (m < 1)
        throw std::invalid_argument("rescale_q: factor must be positive");
    std::vector<QExp::Term> t = f.terms_;
    for (auto& term : t)
        term.s *= m;
    return QExp(QExp::Trusted{}, f.denom_, scale_exponent(f.trunc_, m), std::move(t));
}

QExp root_q(const QExp& f, std::int64_t m)
{
    if (m < 1)
        throw std::invalid_argument("root_q: factor must be positive");
    return QExp(QExp::Trusted{}, f.denom_ * m, f.trunc_, f.terms_);
}

bool agree_on_common_window(const QExp& f, const QExp& g)
{
    auto [a, b] = unify(f, g);
    const Exponent t = std::min(a.trunc(), b.trunc());
    return a.truncated(t).terms() == b.truncated(t).terms();
}

} // namespace x0
