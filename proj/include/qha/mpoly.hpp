#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qha/rational.hpp"

namespace qha {

using Exponents = std::vector<std::uint8_t>;

/// Multivariate polynomial in x_1..x_n with integer coefficients: the
/// carrier of the divided-difference (Demazure) representation.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly monomial(int nvars, const Exponents& e, BigInt c = 1);
    static MPoly one(int nvars) { return monomial(nvars, Exponents(nvars, 0)); }
    static MPoly variable(int nvars, int k);
    /// Elementary symmetric polynomial e_k(x_1..x_n).
    static MPoly elementary_symmetric(int nvars, int k);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    long total_degree() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    MPoly scaled(const BigInt& c) const;
    /// Multiply by the monomial x^e.
    MPoly shifted(const Exponents& e) const;

    /// Swap the variables x_k, x_{k+1}.
    MPoly swapped(int k) const;

    /// Divided difference (f - s_k f)/(x_k - x_{k+1}); always exact, computed
    /// term by term from the telescoping expansion of monomials.
    MPoly divided_difference(int k) const;

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const BigInt& c);

    int nvars_ = 0;
    std::map<Exponents, BigInt> terms_;
};

}  // namespace qha
