#include "qha/nilhecke.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace qha {

long NilMonomial::degree() const {
    long d = 0;
    for (auto a : dots)
        d += 2l * a;
    return d - 2l * w.length();
}

NilElement NilElement::one(int n) {
    return monomial(n, Perm::identity(n), Exponents(n, 0));
}

NilElement NilElement::x(int n, int k) {
    Exponents d(n, 0);
    d.at(k) = 1;
    return monomial(n, Perm::identity(n), d);
}

NilElement NilElement::t(int n, int k) {
    return monomial(n, Perm::transposition(n, k), Exponents(n, 0));
}

NilElement NilElement::monomial(int n, const Perm& w, const Exponents& dots, BigInt c) {
    if (w.n() != n || static_cast<int>(dots.size()) != n)
        throw std::invalid_argument("NilElement::monomial: arity mismatch");
    NilElement e(n);
    e.add_term(w, dots, c);
    return e;
}

NilElement NilElement::elementary_symmetric(int n, int k) {
    NilElement e(n);
    MPoly p = MPoly::elementary_symmetric(n, k);
    for (const auto& [exps, c] : p.terms())
        e.add_term(Perm::identity(n), exps, c);
    return e;
}

void NilElement::add_term(const Perm& w, const Exponents& dots, const BigInt& c) {
    if (qha::is_zero(c))
        return;
    NilMonomial m{w, dots};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (qha::is_zero(it->second))
            terms_.erase(it);
    }
}

NilElement& NilElement::operator+=(const NilElement& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m.w, m.dots, c);
    return *this;
}

NilElement& NilElement::operator-=(const NilElement& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m.w, m.dots, -c);
    return *this;
}

NilElement NilElement::scaled(const BigInt& c) const {
    NilElement e(n_);
    if (qha::is_zero(c))
        return e;
    for (const auto& [m, t] : terms_)
        e.terms_[m] = t * c;
    return e;
}

bool NilElement::homogeneous_degree(long& deg) const {
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        long d = m.degree();
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            return false;
        }
    }
    return true;
}

std::string NilElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str() << "*t" << m.w.to_string() << "*x(";
        for (int k = 0; k < n_; ++k)
            os << (k ? "," : "") << static_cast<int>(m.dots[k]);
        os << ")";
    }
    return os.str();
}

nlohmann::json NilElement::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json term;
        nlohmann::json perm = nlohmann::json::array();
        for (int k = 0; k < n_; ++k)
            perm.push_back(m.w(k) + 1);  // one-line notation, 1-based
        nlohmann::json dots = nlohmann::json::array();
        for (int k = 0; k < n_; ++k)
            dots.push_back(static_cast<int>(m.dots[k]));
        term["perm"] = perm;
        term["dots"] = dots;
        term["coeff"] = c.fits_slong_p() ? nlohmann::json(c.get_si()) : nlohmann::json(c.get_str());
        arr.push_back(term);
    }
    return arr;
}

NilElement nil_right_mul_x(const NilElement& a, int k) {
    NilElement out(a.n());
    for (const auto& [m, c] : a.terms()) {
        Exponents d = m.dots;
        d.at(k) = static_cast<std::uint8_t>(d.at(k) + 1);
        out.add_term(m.w, d, c);
    }
    return out;
}

NilElement nil_right_mul_t(const NilElement& a, int k) {
    const int n = a.n();
    NilElement out(n);
    for (const auto& [m, c] : a.terms()) {
        // t_w x^a t_k = t_w t_k x^{s_k a} + t_w d_k(x^a)
        Perm wsk = m.w * Perm::transposition(n, k);
        if (wsk.length() > m.w.length()) {
            Exponents d = m.dots;
            std::swap(d.at(k), d.at(k + 1));
            out.add_term(wsk, d, c);
        }
        MPoly dd = MPoly::monomial(n, m.dots).divided_difference(k);
        for (const auto& [exps, cd] : dd.terms())
            out.add_term(m.w, exps, c * cd);
    }
    return out;
}

NilElement nil_multiply(const NilElement& a, const NilElement& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("nil_multiply: mismatched strand counts");
    NilElement out(a.n());
    for (const auto& [m, c] : b.terms()) {
        NilElement cur = a;
        for (std::uint8_t letter : lexmin_word(m.w))
            cur = nil_right_mul_t(cur, letter);
        for (const auto& [ma, ca] : cur.terms()) {
            Exponents d = ma.dots;
            for (int k = 0; k < a.n(); ++k)
                d[k] = static_cast<std::uint8_t>(d[k] + m.dots[k]);
            out.add_term(ma.w, d, ca * c);
        }
    }
    return out;
}

MPoly nil_act(const NilElement& a, const MPoly& f) {
    if (a.n() != f.nvars())
        throw std::invalid_argument("nil_act: arity mismatch");
    MPoly out(a.n());
    for (const auto& [m, c] : a.terms()) {
        MPoly g = f.shifted(m.dots).scaled(c);
        Word w = lexmin_word(m.w);
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            g = g.divided_difference(*it);
        out += g;
    }
    return out;
}

NilElement divided_power_idempotent(int n) {
    if (n < 1)
        throw std::invalid_argument("divided_power_idempotent: n must be >= 1");
    Exponents delta(n);
    for (int k = 0; k < n; ++k)
        delta[k] = static_cast<std::uint8_t>(n - 1 - k);
    return NilElement::monomial(n, Perm::longest(n), delta);
}

namespace {

NilElement random_element(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), dotv(0, 2), coeff(-3, 3);
    auto perms = all_perms(n);
    std::uniform_int_distribution<size_t> pidx(0, perms.size() - 1);
    NilElement e(n);
    for (int t = 0, m = nterms(rng); t < m; ++t) {
        Exponents d(n);
        for (int k = 0; k < n; ++k)
            d[k] = static_cast<std::uint8_t>(dotv(rng));
        int c = coeff(rng);
        if (c == 0)
            c = 1;
        e += NilElement::monomial(n, perms[pidx(rng)], d, c);
    }
    return e;
}

std::vector<MPoly> monomial_inputs(int n, int maxdeg) {
    std::vector<MPoly> out;
    Exponents e(n, 0);
    while (true) {
        int total = 0;
        for (auto v : e)
            total += v;
        if (total <= maxdeg)
            out.push_back(MPoly::monomial(n, e));
        int k = 0;
        while (k < n) {
            if (e[k] < maxdeg) {
                ++e[k];
                break;
            }
            e[k] = 0;
            ++k;
        }
        if (k == n)
            break;
    }
    return out;
}

}  // namespace

OracleReport nil_equality_oracle_check(int n, int trials, unsigned seed) {
    OracleReport rep;
    std::mt19937 rng(seed);
    auto inputs = monomial_inputs(n, 2 * n);
    for (int t = 0; t < trials; ++t) {
        NilElement a = random_element(n, rng);
        NilElement b = random_element(n, rng);
        NilElement ab = nil_multiply(a, b);
        for (const MPoly& f : inputs) {
            MPoly composed = nil_act(a, nil_act(b, f));
            MPoly direct = nil_act(ab, f);
            ++rep.checked;
            if (composed != direct) {
                std::ostringstream os;
                os << "trial " << t << ": product and composed action differ on "
                   << f.to_string() << " (a=" << a.to_string() << ", b=" << b.to_string() << ")";
                rep.witness = os.str();
                rep.passed = false;
                return rep;
            }
        }
    }
    rep.passed = true;
    return rep;
}

}  // namespace qha
