#pragma once

#include <cstdint>
#include <vector>

namespace qha {

/// Arithmetic tables for the small finite fields F_2, F_3, F_4, F_5.
/// Elements are 0..q-1; F_4 is F_2[w]/(w^2+w+1) with 2 = w, 3 = w+1, the
/// prime fields use modular arithmetic.  Any other size is rejected.
class Gf {
public:
    explicit Gf(int q);

    int q() const { return q_; }
    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg_[b]); }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const;

private:
    int q_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

using GfMatrix = std::vector<std::uint8_t>;  // row-major, caller tracks shape

/// Rank of an r x c matrix over the field, by Gaussian elimination.
int gf_rank(const Gf& gf, GfMatrix m, int rows, int cols);

bool gf_invertible(const Gf& gf, const GfMatrix& m, int n);

/// c = a (r x s) times b (s x t).
GfMatrix gf_mul(const Gf& gf, const GfMatrix& a, const GfMatrix& b, int r, int s, int t);

GfMatrix gf_identity(int n);

/// Inverse of an invertible n x n matrix (Gauss-Jordan); throws if singular.
GfMatrix gf_inverse(const Gf& gf, GfMatrix m, int n);

}  // namespace qha
