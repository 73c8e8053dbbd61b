#include "qha/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qha {

MPoly MPoly::monomial(int nvars, const Exponents& e, BigInt c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("MPoly::monomial: exponent vector has wrong arity");
    MPoly p(nvars);
    if (!qha::is_zero(c))
        p.terms_[e] = std::move(c);
    return p;
}

MPoly MPoly::variable(int nvars, int k) {
    Exponents e(nvars, 0);
    e.at(k) = 1;
    return monomial(nvars, e);
}

MPoly MPoly::elementary_symmetric(int nvars, int k) {
    if (k < 0 || k > nvars)
        throw std::invalid_argument("elementary_symmetric: need 0 <= k <= nvars");
    MPoly p(nvars);
    std::vector<int> idx(k);
    // iterate k-subsets of {0..nvars-1}
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        Exponents e(nvars, 0);
        for (int i : idx)
            e[i] = 1;
        p.add_term(e, 1);
        if (k == 0)
            break;
        int t = k - 1;
        while (t >= 0 && idx[t] == nvars - k + t)
            --t;
        if (t < 0)
            break;
        ++idx[t];
        for (int s = t + 1; s < k; ++s)
            idx[s] = idx[s - 1] + 1;
    }
    return p;
}

long MPoly::total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        long t = 0;
        for (auto x : e)
            t += x;
        d = std::max(d, t);
    }
    return d;
}

void MPoly::add_term(const Exponents& e, const BigInt& c) {
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

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.nvars_);
    Exponents e(a.nvars_, 0);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < a.nvars_; ++k)
                e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

MPoly MPoly::scaled(const BigInt& c) const {
    MPoly r(nvars_);
    if (qha::is_zero(c))
        return r;
    for (const auto& [e, t] : terms_)
        r.terms_[e] = t * c;
    return r;
}

MPoly MPoly::shifted(const Exponents& e) const {
    MPoly r(nvars_);
    Exponents f(nvars_, 0);
    for (const auto& [t, c] : terms_) {
        for (int k = 0; k < nvars_; ++k)
            f[k] = static_cast<std::uint8_t>(t[k] + e[k]);
        r.terms_[f] = c;
    }
    return r;
}

MPoly MPoly::swapped(int k) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        std::swap(f.at(k), f.at(k + 1));
        r.add_term(f, c);
    }
    return r;
}

MPoly MPoly::divided_difference(int k) const {
    // On a monomial with x_k^a x_{k+1}^b:
    //   a > b:  sum_{j=b}^{a-1} x_k^j x_{k+1}^{a+b-1-j}
    //   a < b: -sum_{j=a}^{b-1} x_k^j x_{k+1}^{a+b-1-j}
    //   a = b:  0
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        int a = e.at(k), b = e.at(k + 1);
        if (a == b)
            continue;
        Exponents f = e;
        if (a > b) {
            for (int j = b; j <= a - 1; ++j) {
                f[k] = static_cast<std::uint8_t>(j);
                f[k + 1] = static_cast<std::uint8_t>(a + b - 1 - j);
                r.add_term(f, c);
            }
        } else {
            for (int j = a; j <= b - 1; ++j) {
                f[k] = static_cast<std::uint8_t>(j);
                f[k + 1] = static_cast<std::uint8_t>(a + b - 1 - j);
                r.add_term(f, -c);
            }
        }
    }
    return r;
}

std::string MPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        BigInt a = abs(c);
        bool printed = false;
        if (a != 1) {
            os << a.get_str();
            printed = true;
        }
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0)
                continue;
            if (printed)
                os << "*";
            os << "x" << k + 1;
            if (e[k] > 1)
                os << "^" << static_cast<int>(e[k]);
            printed = true;
        }
        if (!printed)
            os << "1";
    }
    return os.str();
}

}  // namespace qha
