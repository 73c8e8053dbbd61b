#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qha/laurent.hpp"
#include "qha/ratmatrix.hpp"

namespace qha {

/// Rational-coefficient formal combination of subsets of {1..n}, the basis
/// of the 2^n-dimensional sl2 module on subsets of an n-element set.
/// Subsets are bitmasks; a size-k subset sits in the weight space
/// V_r with r = 2k - n.
class SubsetVector {
public:
    SubsetVector() = default;
    explicit SubsetVector(int n) : n_(n) {}
    static SubsetVector basis(int n, std::uint32_t subset);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
    Rational coeff(std::uint32_t subset) const;

    SubsetVector& operator+=(const SubsetVector& o);
    SubsetVector& operator-=(const SubsetVector& o);
    friend SubsetVector operator+(SubsetVector a, const SubsetVector& b) { return a += b; }
    friend SubsetVector operator-(SubsetVector a, const SubsetVector& b) { return a -= b; }
    SubsetVector scaled(const Rational& c) const;

    bool operator==(const SubsetVector& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string to_string() const;

    void add_term(std::uint32_t subset, const Rational& c);

private:
    int n_ = 0;
    std::map<std::uint32_t, Rational> terms_;
};

/// Raising operator: each subset goes to the sum of its one-larger supersets.
SubsetVector e_subset(const SubsetVector& v);
/// Lowering operator: each subset goes to the sum of its one-smaller subsets.
SubsetVector f_subset(const SubsetVector& v);
/// op applied p times, divided by p!, in exact rational arithmetic.
SubsetVector divided_power(char op, int p, const SubsetVector& v);

struct CommutatorReport {
    bool passed = false;
    long checked = 0;
    std::string first_failure;
};

/// Checks (ef - fe)(S) = (2|S| - n) S on every basis subset.
CommutatorReport commutator_report(int n);

/// Matrix of a weight-homogeneous operator V_r -> V_{r'}; rows and columns
/// are indexed by the size-k subsets in increasing bitmask order.
struct WeightMatrix {
    int n = 0;
    int source_r = 0;
    int target_r = 0;
    RatMatrix mat;
};

/// The Weyl element sum_{p >= max(0,-r)} (-1)^p E^{(p)} F^{(r+p)} restricted
/// to V_r, landing in V_{-r}.  Requires |r| <= n and r = n (mod 2).
WeightMatrix weyl_s(int n, int r);

struct WeylReport {
    bool passed = false;
    std::vector<std::string> failures;
    /// Observed sign of S^2 on each weight space, keyed by r (S^2 is +/- id
    /// per weight space; recorded, not asserted against a closed form).
    std::map<int, int> s_squared_signs;
};

/// Invertibility of every block, the conjugation identities
/// S e S^{-1} = -f and S f S^{-1} = -e on the full model, and the S^2 signs.
WeylReport weyl_report(int n);

/// Gaussian binomial in point-count normalization: sum over partitions in a
/// k x (n-k) box of q^{|partition|} (lowest exponent 0).
LaurentPoly gaussian_binomial(long n, long k);

/// Centering transform connecting the two pictures: substitute q -> q^2 and
/// shift by q^{-k(n-k)}.  The result is bar-symmetric and equals
/// quantum_binomial(n, k).
LaurentPoly centered_gaussian(long n, long k);

/// Exact count of k-dimensional subspaces of F_q^n by brute-force
/// enumeration of row-reduced echelon representatives.  q in {2,3,4,5};
/// the representative count must stay below 2^24.
long long grassmannian_count(int k, int n, int q);

/// dim H*(P^{k-1}) - dim H*(P^{n-k-1}) via Poincare polynomials evaluated at
/// q = 1; equals 2k - n.
long projective_space_defect(int k, int n);

}  // namespace qha
