#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "qha/cartan.hpp"
#include "qha/mpoly.hpp"
#include "qha/perm.hpp"
#include "qha/series.hpp"

namespace qha {

/// Sign data resolving the orientation dependence of the defining relations.
/// For each ordered connected pair (i, j): Q_{ij}(u, v) is u - v when
/// q_sign = +1 and v - u when q_sign = -1 (always Q_{ij} = -Q_{ji}), and
/// braid_sign is the correction in
///   psi_k psi_{k+1} psi_k e(i) = psi_{k+1} psi_k psi_{k+1} e(i) + braid * e(i)
/// for the strand pattern (i, j, i).
///
/// The braid sign is not a free choice: the polynomial representation forces
/// braid = (Q_{ij}(x_k,x_{k+1}) - Q_{ij}(x_{k+2},x_{k+1}))/(x_k - x_{k+2}),
/// which for linear Q is the constant q_sign.  The standard() convention
/// picks Q_{ij} = v - u across an oriented edge i -> j (so braid = -1 for
/// the pattern (i, j, i) with i -> j); flipped_braid() deliberately breaks
/// the pairing and must fail validation.
struct RelationConvention {
    std::map<std::pair<int, int>, int> q_sign;
    std::map<std::pair<int, int>, int> braid_sign;

    static RelationConvention standard(const CartanDatum& datum);
    RelationConvention flipped_braid() const;

    int q_at(int i, int j) const { return q_sign.at({i, j}); }
    int braid_at(int i, int j) const { return braid_sign.at({i, j}); }
};

/// Normal-form monomial psi_w x^a e(i): crossing part along the fixed
/// lex-smallest reduced word of w, dots to the right, source idempotent i.
/// The target idempotent is w(i).
struct KLRMonomial {
    Perm w;
    Exponents dots;
    Sequence idem;

    Sequence target() const { return apply_perm(w, idem); }
    bool operator<(const KLRMonomial& o) const {
        if (idem != o.idem)
            return idem < o.idem;
        if (w.img() != o.w.img())
            return w.img() < o.w.img();
        return dots < o.dots;
    }
    bool operator==(const KLRMonomial& o) const {
        return w == o.w && dots == o.dots && idem == o.idem;
    }
};

class KLRElement {
public:
    KLRElement() = default;
    explicit KLRElement(int m) : m_(m) {}

    int strands() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<KLRMonomial, BigInt>& terms() const { return terms_; }

    KLRElement& operator+=(const KLRElement& o);
    KLRElement& operator-=(const KLRElement& o);
    friend KLRElement operator+(KLRElement a, const KLRElement& b) { return a += b; }
    friend KLRElement operator-(KLRElement a, const KLRElement& b) { return a -= b; }
    KLRElement scaled(const BigInt& c) const;
    bool operator==(const KLRElement& o) const { return m_ == o.m_ && terms_ == o.terms_; }

    void add_term(const Perm& w, const Exponents& dots, const Sequence& idem, const BigInt& c);

    std::string to_string() const;
    nlohmann::json to_json(const CartanDatum& datum, const RootVector& nu) const;

private:
    int m_ = 0;
    std::map<KLRMonomial, BigInt> terms_;
};

/// Oracle state: the faithful polynomial module, one polynomial summand per
/// sequence in Seq_nu.
using PolyState = std::map<Sequence, MPoly>;

struct RelationReport {
    bool passed = false;
    long checked = 0;
    std::vector<std::string> failures;
};

/// The rewriting engine and polynomial oracle for R_nu over a fixed quiver
/// and relation convention.  Normal forms are computed by replaying braid
/// move paths between reduced words, with the local relations (psi^2,
/// dot slides, braid corrections) applied as the spliced rewrite rules;
/// results are memoized per (crossing word, source sequence).
class KLRAlgebra {
public:
    KLRAlgebra(CartanDatum datum, RelationConvention conv, bool validate = true);

    const CartanDatum& datum() const { return datum_; }
    const RelationConvention& convention() const { return conv_; }

    // -- generators (source idempotent i) --
    KLRElement e(const Sequence& i) const;
    KLRElement x(int k, const Sequence& i) const;
    KLRElement psi(int k, const Sequence& i) const;
    KLRElement identity(const RootVector& nu) const;

    /// deg(dot) = 2, deg of a crossing of labels a, b = -<alpha_a, alpha_b>.
    long degree(const KLRMonomial& m) const;
    long psi_degree(const Perm& w, const Sequence& i) const;

    /// Normal-form product a*b (b acts first; terms with mismatched
    /// idempotents vanish).  Throws on strand-count mismatch.
    KLRElement multiply(const KLRElement& a, const KLRElement& b) const;

    // -- polynomial oracle --
    PolyState oracle_project(const PolyState& s, const Sequence& i) const;
    PolyState oracle_apply_x(const PolyState& s, int k) const;
    PolyState oracle_apply_psi(const PolyState& s, int k) const;
    PolyState oracle_act(const KLRElement& a, const PolyState& s) const;

    /// Every defining relation instance over Seq_nu, reduced to zero under
    /// the rewriting engine and, independently, under the polynomial oracle.
    RelationReport verify_relations(const RootVector& nu) const;

    /// Graded dimension of Hom(e(i), e(j)) from the spanning family
    /// psi_w x^a e(i), w(i) = j.
    SeriesTrunc graded_dim_hom(const Sequence& i, const Sequence& j, long cutoff) const;

    /// Per-degree (monomial count, oracle rank) for Hom(e(i), e(j)) up to
    /// maxdeg; the rank is computed from images in the polynomial module.
    std::map<long, std::pair<long, long>> hom_rank_by_degree(const Sequence& i, const Sequence& j,
                                                             long maxdeg) const;

    /// All normal-form monomials with source in Seq_nu and degree <= maxdeg.
    std::vector<KLRMonomial> monomials_up_to_degree(const RootVector& nu, long maxdeg) const;
    /// Count of such monomials of one exact degree, computed combinatorially.
    BigInt monomial_count_of_degree(const RootVector& nu, long d) const;
    long min_monomial_degree(const RootVector& nu) const;

private:
    KLRElement cross_normal(const Word& u, const Sequence& i) const;
    struct SlideTerm {
        Word word;
        Exponents dots;
        BigInt coeff;
    };
    std::vector<SlideTerm> slide_dots(const Word& c, const Exponents& dots,
                                      const Sequence& i) const;
    void self_validate() const;

    CartanDatum datum_;
    RelationConvention conv_;
    mutable std::unordered_map<std::string, KLRElement> memo_;
    mutable std::mutex memo_mutex_;
};

/// Horizontal concatenation R_mu x R_nu -> R_{mu+nu}: sequences concatenate,
/// crossings and dots of the right factor shift by the left strand count.
KLRElement concat_embed(const KLRElement& a, const KLRElement& b);

struct OracleAgreementReport {
    bool passed = false;
    long checked = 0;
    std::string witness;
};

/// Engine/oracle agreement: act(a*b) == act(a) . act(b) over basis monomial
/// pairs (dot degree <= dot_bound) and monomial inputs (degree <= input_bound).
OracleAgreementReport oracle_agreement_check(const KLRAlgebra& alg, const RootVector& nu,
                                             int dot_bound, int input_bound);

/// Single-vertex specialization: the generator map x_k -> x_k, psi_k -> t_k
/// must intertwine KLR multiplication with the nil Hecke engine.
OracleAgreementReport a1_specialization_check(int n, int random_trials, unsigned seed = 0);

}  // namespace qha
