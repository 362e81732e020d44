#include "x0curve/bipoly.hpp"

#include <algorithm>
#include <string>

namespace x0 {

namespace {

template <class Map, class K>
void accumulate(Map& m, const K& key, const Integer& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = m.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            m.erase(it);
    }
}

template <class Map, class K>
void accumulate_product(Map& m, const K& key, const Integer& a, const Integer& b)
{
    auto [it, inserted] = m.try_emplace(key);
    mpz_addmul(it->second.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(it->second) == 0)
        m.erase(it);
}

} // namespace

BiPoly BiPoly::constant(const Integer& c)
{
    return monomial(c, 0, 0);
}

BiPoly BiPoly::monomial(const Integer& c, int i, int j)
{
    BiPoly p;
    p.add_term(i, j, c);
    return p;
}

void BiPoly::add_term(int i, int j, const Integer& c)
{
    if (i < 0 || j < 0)
        throw std::invalid_argument("BiPoly: negative exponent");
    accumulate(terms_, Key{i, j}, c);
}

Integer BiPoly::coeff(int i, int j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Integer(0) : it->second;
}

int BiPoly::deg_x() const
{
    return terms_.empty() ? -1 : terms_.rbegin()->first.first;
}

int BiPoly::deg_y() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.second);
    return d;
}

int BiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.first + k.second);
    return d;
}

bool BiPoly::monic_in_y() const
{
    const int dy = deg_y();
    if (dy < 0)
        return false;
    for (const auto& [k, c] : terms_)
        if (k.second == dy && (k.first != 0 || c != 1))
            return false;
    return true;
}

BiPoly BiPoly::negate_x() const
{
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_)
        if (k.first % 2 != 0)
            c = -c;
    return r;
}

std::vector<BiPoly::Term> BiPoly::grlex_terms() const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        out.push_back({k.first, k.second, c});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        if (a.i + a.j != b.i + b.j)
            return a.i + a.j > b.i + b.j;
        return a.j > b.j;
    });
    return out;
}

BiPoly BiPoly::operator-() const
{
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_)
        c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        accumulate(terms_, k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        accumulate(terms_, k, Integer(-c));
    return *this;
}

BiPoly& BiPoly::operator*=(const Integer& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            accumulate_product(r.terms_, BiPoly::Key{ka.first + kb.first, ka.second + kb.second},
                               ca, cb);
    return r;
}

BiPoly pow(const BiPoly& p, unsigned k)
{
    BiPoly result = BiPoly::constant(1);
    BiPoly base = p;
    while (k != 0) {
        if (k & 1u)
            result = result * base;
        k >>= 1;
        if (k != 0)
            base = base * base;
    }
    return result;
}

std::pair<BiPoly, BiPoly> divide_monic_in_y(const BiPoly& num, const BiPoly& den)
{
    if (!den.monic_in_y())
        throw std::invalid_argument("divide_monic_in_y: divisor is not monic in y");
    const int dd = den.deg_y();
    BiPoly quot;
    BiPoly rem = num;
    while (!rem.is_zero() && rem.deg_y() >= dd) {
        const int shift = rem.deg_y() - dd;
        // Leading coefficient of rem in y, as a polynomial in x.
        BiPoly lead;
        for (const auto& [k, c] : rem.terms())
            if (k.second == rem.deg_y())
                lead.add_term(k.first, shift, c);
        quot += lead;
        rem -= lead * den;
    }
    return {quot, rem};
}

HalfExpPoly HalfExpPoly::from(const BiPoly& p)
{
    HalfExpPoly h;
    for (const auto& [k, c] : p.terms())
        h.add_term(2 * static_cast<std::int64_t>(k.first), k.second, c);
    return h;
}

HalfExpPoly HalfExpPoly::monomial(const Integer& c, std::int64_t i2, int j)
{
    HalfExpPoly h;
    h.add_term(i2, j, c);
    return h;
}

void HalfExpPoly::add_term(std::int64_t i2, int j, const Integer& c)
{
    accumulate(terms_, Key{i2, j}, c);
}

BiPoly HalfExpPoly::to_bipoly() const
{
    BiPoly p;
    for (const auto& [k, c] : terms_) {
        if (k.first < 0 || k.first % 2 != 0)
            throw IntegralityError("x-exponent " + std::to_string(k.first) +
                                   "/2 at y^" + std::to_string(k.second) +
                                   " is not a nonnegative integer");
        p.add_term(static_cast<int>(k.first / 2), k.second, c);
    }
    return p;
}

HalfExpPoly& HalfExpPoly::operator+=(const HalfExpPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        accumulate(terms_, k, c);
    return *this;
}

HalfExpPoly& HalfExpPoly::operator-=(const HalfExpPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        accumulate(terms_, k, Integer(-c));
    return *this;
}

HalfExpPoly operator*(const HalfExpPoly& a, const HalfExpPoly& b)
{
    HalfExpPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            accumulate_product(r.terms_,
                               HalfExpPoly::Key{ka.first + kb.first, ka.second + kb.second}, ca,
                               cb);
    return r;
}

} // namespace x0
