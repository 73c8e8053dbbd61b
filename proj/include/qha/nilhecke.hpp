#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "qha/mpoly.hpp"
#include "qha/perm.hpp"

namespace qha {

/// Normal-form monomial t_w x^a of the nil affine Hecke algebra H_n:
/// crossings strictly left of dots, the crossing part realized by the
/// lexicographically smallest reduced word of w.
struct NilMonomial {
    Perm w;
    Exponents dots;

    bool operator<(const NilMonomial& o) const {
        if (w.img() != o.w.img())
            return w.img() < o.w.img();
        return dots < o.dots;
    }
    bool operator==(const NilMonomial& o) const { return w == o.w && dots == o.dots; }

    /// deg x = 2, deg t = -2.
    long degree() const;
};

class NilElement {
public:
    NilElement() = default;
    explicit NilElement(int n) : n_(n) {}

    static NilElement zero(int n) { return NilElement(n); }
    static NilElement one(int n);
    static NilElement x(int n, int k);
    static NilElement t(int n, int k);
    static NilElement monomial(int n, const Perm& w, const Exponents& dots, BigInt c = 1);
    /// e_k(x_1..x_n) as an element with identity crossing part.
    static NilElement elementary_symmetric(int n, int k);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<NilMonomial, BigInt>& terms() const { return terms_; }

    NilElement& operator+=(const NilElement& o);
    NilElement& operator-=(const NilElement& o);
    friend NilElement operator+(NilElement a, const NilElement& b) { return a += b; }
    friend NilElement operator-(NilElement a, const NilElement& b) { return a -= b; }
    NilElement scaled(const BigInt& c) const;
    bool operator==(const NilElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// True when every stored monomial has the same degree (reported in deg).
    bool homogeneous_degree(long& deg) const;

    void add_term(const Perm& w, const Exponents& dots, const BigInt& c);

    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    int n_ = 0;
    std::map<NilMonomial, BigInt> terms_;
};

/// Right multiplication by single generators; the rewrite engine's core.
/// x^a t_k = t_k x^{s_k a} + d_k(x^a) with d_k the divided difference, and
/// t_w t_k = t_{w s_k} when the length goes up, 0 otherwise.
NilElement nil_right_mul_x(const NilElement& a, int k);
NilElement nil_right_mul_t(const NilElement& a, int k);

NilElement nil_multiply(const NilElement& a, const NilElement& b);

/// Polynomial-representation oracle: x_i acts by multiplication, t_i by the
/// divided difference; t_w applies its fixed reduced word right-to-left.
MPoly nil_act(const NilElement& a, const MPoly& f);

/// e_n = t_{w0} x^{(n-1, n-2, ..., 0)}; satisfies e_n^2 = e_n.
NilElement divided_power_idempotent(int n);

struct OracleReport {
    bool passed = false;
    long checked = 0;
    std::string witness;
};

/// Normal-form products vs composed polynomial action on random pairs,
/// compared on every monomial of total degree <= 2n.
OracleReport nil_equality_oracle_check(int n, int trials, unsigned seed = 0);

}  // namespace qha
