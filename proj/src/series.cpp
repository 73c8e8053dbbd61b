#include "qha/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qha {

void SeriesTrunc::add_term(long e, const BigInt& c) {
    if (e > cutoff_ || qha::is_zero(c))
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

SeriesTrunc SeriesTrunc::from_poly(const LaurentPoly& p, long cutoff) {
    SeriesTrunc s(cutoff);
    for (const auto& [e, c] : p.terms())
        s.add_term(e, c);
    return s;
}

SeriesTrunc SeriesTrunc::geometric(long ratio_exponent, long cutoff) {
    if (ratio_exponent < 1)
        throw std::invalid_argument("geometric: ratio exponent must be positive");
    if (cutoff < 0)
        throw std::invalid_argument("geometric: cutoff must be >= 0");
    SeriesTrunc s(cutoff);
    for (long e = 0; e <= cutoff; e += ratio_exponent)
        s.terms_[e] = 1;
    return s;
}

BigInt SeriesTrunc::coeff(long e) const {
    if (e > cutoff_)
        throw std::logic_error("SeriesTrunc::coeff beyond cutoff");
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

SeriesTrunc SeriesTrunc::operator+(const SeriesTrunc& o) const {
    SeriesTrunc r(std::min(cutoff_, o.cutoff_));
    for (const auto& [e, c] : terms_)
        r.add_term(e, c);
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

SeriesTrunc SeriesTrunc::operator*(const SeriesTrunc& o) const {
    SeriesTrunc r(std::min(cutoff_, o.cutoff_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            if (ea + eb > r.cutoff_)
                break;
            r.add_term(ea + eb, ca * cb);
        }
    return r;
}

SeriesTrunc SeriesTrunc::operator*(const LaurentPoly& p) const {
    SeriesTrunc r(cutoff_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : p.terms())
            r.add_term(ea + eb, ca * cb);
    return r;
}

SeriesTrunc SeriesTrunc::pow(unsigned long k) const {
    SeriesTrunc r = from_poly(LaurentPoly::one(), cutoff_);
    for (unsigned long t = 0; t < k; ++t)
        r = r * *this;
    return r;
}

SeriesTrunc SeriesTrunc::truncated(long cutoff) const {
    SeriesTrunc r(std::min(cutoff, cutoff_));
    for (const auto& [e, c] : terms_)
        r.add_term(e, c);
    return r;
}

bool SeriesTrunc::agrees_with(const SeriesTrunc& o) const {
    long window = std::min(cutoff_, o.cutoff_);
    for (const auto& [e, c] : terms_)
        if (e <= window && o.coeff(e) != c)
            return false;
    for (const auto& [e, c] : o.terms_)
        if (e <= window && coeff(e) != c)
            return false;
    return true;
}

std::string SeriesTrunc::to_string() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_)
        p += LaurentPoly::q_power(e, c);
    std::ostringstream os;
    os << p.to_string() << "+O(q^" << cutoff_ + 1 << ")";
    return os.str();
}

}  // namespace qha
