#include "qha/laurent.hpp"

#include <cstdint>
#include <sstream>

namespace qha {

LaurentPoly LaurentPoly::q_power(long e, BigInt c) {
    LaurentPoly p;
    if (!qha::is_zero(c))
        p.terms_[e] = std::move(c);
    return p;
}

BigInt LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty())
        throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty())
        throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(long e, const BigInt& c) {
    if (qha::is_zero(c))
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (qha::is_zero(it->second))
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly r;
    if (qha::is_zero(c))
        return r;
    for (const auto& [e, t] : terms_)
        r.terms_[e] = t * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long delta) const {
    LaurentPoly r;
    for (const auto& [e, t] : terms_)
        r.terms_[e + delta] = t;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
    LaurentPoly r = one();
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1)
            r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, t] : terms_)
        r.terms_[-e] = t;
    return r;
}

LaurentPoly LaurentPoly::substitute_power(long s) const {
    if (s == 0)
        throw std::invalid_argument("substitute_power: s must be nonzero");
    LaurentPoly r;
    for (const auto& [e, t] : terms_)
        r.terms_[e * s] = t;
    return r;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
    if (qha::is_zero(x) && !terms_.empty() && min_exp() < 0)
        throw std::domain_error("evaluate: q=0 with negative exponents present");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational pw(1);
        Rational base = e >= 0 ? x : Rational(x.get_den(), x.get_num());
        if (e < 0)
            base.canonicalize();
        for (long k = 0; k < (e >= 0 ? e : -e); ++k)
            pw *= base;
        acc += Rational(c) * pw;
    }
    return acc;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero())
        throw std::logic_error("divide_exact: division by zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const long dexp = divisor.max_exp();
    const BigInt& dlead = divisor.terms_.rbegin()->second;
    while (!rem.is_zero()) {
        long rexp = rem.max_exp();
        const BigInt& rlead = rem.terms_.rbegin()->second;
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rlead.get_mpz_t(), dlead.get_mpz_t());
        if (!qha::is_zero(r))
            throw std::logic_error("divide_exact: leading coefficient not divisible");
        LaurentPoly piece = q_power(rexp - dexp, q);
        quot += piece;
        rem -= piece * divisor;
        if (!rem.is_zero() && rem.max_exp() >= rexp)
            throw std::logic_error("divide_exact: no progress (division not exact)");
    }
    return quot;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? "-" : "+");
            if (sgn(a) < 0)
                a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1)
                os << a.get_str() << "*";
            os << "q";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

static nlohmann::json coeff_json(const BigInt& c) {
    if (c.fits_slong_p())
        return static_cast<std::int64_t>(c.get_si());
    return c.get_str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        arr.push_back({e, coeff_json(c)});
    return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw std::invalid_argument("LaurentPoly::from_json: expected array");
    LaurentPoly p;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("LaurentPoly::from_json: expected [exp, coeff] pairs");
        long e = pair[0].get<long>();
        BigInt c = pair[1].is_string() ? BigInt(pair[1].get<std::string>())
                                       : BigInt(pair[1].get<std::int64_t>());
        p.add_term(e, c);
    }
    return p;
}

}  // namespace qha
