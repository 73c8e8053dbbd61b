#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qha/rational.hpp"

namespace qha {

/// Integer-coefficient Laurent polynomial in the single variable q.
///
/// Terms are kept in a sorted exponent -> coefficient map with no zero
/// coefficients stored, so equality, hashing of the string form and
/// serialization are all canonical.  This is the carrier for gradings,
/// graded characters, quantum integers and point counts.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return q_power(0); }

    /// c * q^e
    static LaurentPoly q_power(long e, BigInt c = 1);

    static LaurentPoly constant(BigInt c) { return q_power(0, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, BigInt>& terms() const { return terms_; }
    BigInt coeff(long e) const;

    /// Lowest/highest exponent with nonzero coefficient; throws on zero poly.
    long min_exp() const;
    long max_exp() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const BigInt& c) const;
    /// Multiply by q^delta.
    LaurentPoly shifted(long delta) const;
    LaurentPoly pow(unsigned long k) const;

    /// The bar involution q -> q^{-1} (exponent negation).
    LaurentPoly bar() const;

    /// Substitute q -> q^s for s != 0 (exponents scale by s).
    LaurentPoly substitute_power(long s) const;

    /// Exact evaluation at a rational point.  x = 0 is allowed only when no
    /// negative exponents are present; otherwise a domain error is thrown.
    Rational evaluate(const Rational& x) const;

    /// Quotient of an exact division; a nonzero remainder means the caller
    /// violated an algebraic identity, so it throws logic_error.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Canonical string form, terms in increasing exponent order, e.g.
    /// "q^-2+2+3*q^2".  The zero polynomial prints as "0".
    std::string to_string() const;

    /// Machine form: [[exponent, coefficient], ...] in increasing exponent
    /// order.  Coefficients are JSON integers when they fit in 64 bits and
    /// decimal strings otherwise.
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    void add_term(long e, const BigInt& c);

    std::map<long, BigInt> terms_;
};

}  // namespace qha
