#pragma once

#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "qha/klr.hpp"

namespace qha {

struct CyclotomicPresentation {
    WeightVec lambda;  // dominant
    RootVector nu;
};

/// One generator per sequence: x_1^{<lambda, alpha_{i_1}>} e(i).  Empty for
/// nu = 0 (the quotient is the ground ring).  Throws on non-dominant lambda.
std::vector<KLRElement> cyclotomic_generators(const KLRAlgebra& alg,
                                              const CyclotomicPresentation& p);

/// Graded/total dimension data for a cyclotomic quotient at a cutoff
/// schedule.  A zero quotient is certified by ideal membership of the
/// identity (conclusive); otherwise stabilization evidence is required:
/// two consecutive cutoffs agreeing on the common window, an all-zero
/// extension window, and a zero tail at least 4 degrees deep (the grading is
/// even, so a shorter tail can be a parity artifact).  Without that evidence
/// the status is "inconclusive", never a silent answer.
struct QuotientReport {
    std::string status = "inconclusive";  // "ok" or "inconclusive"
    bool stabilized = false;
    bool is_zero = false;
    std::map<long, long> graded;  // degree -> dimension (nonzero entries)
    long long total = 0;          // sum of graded dims (q = 1), when stabilized
    std::vector<long> cutoffs;
    long stabilized_at = 0;

    bool conclusive() const { return status == "ok"; }
    nlohmann::json to_json() const;
};

QuotientReport quotient_dims(const KLRAlgebra& alg, const CyclotomicPresentation& p,
                             const std::vector<long>& cutoff_schedule);

/// Whether each element lies in the cyclotomic ideal, decided by one
/// degree-bounded closure run (used for the dot-nilpotence checks).
std::vector<bool> ideal_membership(const KLRAlgebra& alg, const CyclotomicPresentation& p,
                                   long cutoff, const std::vector<KLRElement>& elements);

/// Weight multiplicities of the irreducible V(lambda) by Freudenthal's
/// recursion, keyed by weight in omega-coordinates.  Total dimension is
/// capped at 200.
std::map<WeightVec, long> weight_support_oracle(const CartanDatum& datum, const WeightVec& lambda,
                                                long dim_bound = 200);

/// dim V(lambda) by the Weyl dimension formula (sanity cross-check for the
/// Freudenthal table).
long weyl_dimension(const CartanDatum& datum, const WeightVec& lambda);

struct VanishingResult {
    QuotientReport quotient;
    bool weight_in_support = false;
    /// set when the quotient computation was conclusive: true iff
    /// (quotient nonzero) == (lambda - nu is a weight of V(lambda))
    std::optional<bool> consistent;
};

VanishingResult vanishing_check(const KLRAlgebra& alg, const WeightVec& lambda,
                                const RootVector& nu, const std::vector<long>& cutoff_schedule);

}  // namespace qha
