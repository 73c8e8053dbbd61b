#pragma once

#include <map>

#include "qha/laurent.hpp"

namespace qha {

/// Truncated power series: Laurent coefficients kept only for exponents at
/// most the cutoff.  The cutoff propagates as the minimum of the operands'
/// cutoffs, so arithmetic never reads coefficients it does not know.
/// Used for graded dimensions of infinite-dimensional graded algebras.
class SeriesTrunc {
public:
    explicit SeriesTrunc(long cutoff) : cutoff_(cutoff) {}

    static SeriesTrunc from_poly(const LaurentPoly& p, long cutoff);

    /// 1 + q^r + q^{2r} + ... truncated at the cutoff (r >= 1).
    static SeriesTrunc geometric(long ratio_exponent, long cutoff);

    long cutoff() const { return cutoff_; }
    BigInt coeff(long e) const;
    const std::map<long, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SeriesTrunc operator+(const SeriesTrunc& o) const;
    SeriesTrunc operator*(const SeriesTrunc& o) const;
    SeriesTrunc operator*(const LaurentPoly& p) const;
    SeriesTrunc pow(unsigned long k) const;
    SeriesTrunc truncated(long cutoff) const;

    /// Equality compares the common window (min of the two cutoffs).
    bool agrees_with(const SeriesTrunc& o) const;
    bool operator==(const SeriesTrunc& o) const {
        return cutoff_ == o.cutoff_ && terms_ == o.terms_;
    }

    std::string to_string() const;

private:
    void add_term(long e, const BigInt& c);

    long cutoff_;
    std::map<long, BigInt> terms_;
};

}  // namespace qha
