#include "qha/gf.hpp"

#include <stdexcept>

namespace qha {

Gf::Gf(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 4 && q != 5)
        throw std::invalid_argument("unsupported field size q=" + std::to_string(q) +
                                    " (supported: 2, 3, 4, 5)");
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    if (q == 4) {
        // bit 0 = coefficient of 1, bit 1 = coefficient of w; w^2 = w + 1
        for (int a = 0; a < 4; ++a) {
            neg_[a] = static_cast<std::uint8_t>(a);  // characteristic 2
            for (int b = 0; b < 4; ++b) {
                add_[a * 4 + b] = static_cast<std::uint8_t>(a ^ b);
                int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
                int c0 = (a0 & b0) ^ (a1 & b1);
                int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
                mul_[a * 4 + b] = static_cast<std::uint8_t>(c0 | (c1 << 1));
            }
        }
    } else {
        for (int a = 0; a < q; ++a) {
            neg_[a] = static_cast<std::uint8_t>((q - a) % q);
            for (int b = 0; b < q; ++b) {
                add_[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
                mul_[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
            }
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1)
                inv_[a] = static_cast<std::uint8_t>(b);
}

std::uint8_t Gf::inv(std::uint8_t a) const {
    if (a == 0)
        throw std::domain_error("Gf::inv(0)");
    return inv_[a];
}

int gf_rank(const Gf& gf, GfMatrix m, int rows, int cols) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r * cols + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        for (int c = 0; c < cols; ++c)
            std::swap(m[pivot * cols + c], m[rank * cols + c]);
        std::uint8_t pinv = gf.inv(m[rank * cols + col]);
        for (int c = 0; c < cols; ++c)
            m[rank * cols + c] = gf.mul(m[rank * cols + c], pinv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r * cols + col] == 0)
                continue;
            std::uint8_t f = m[r * cols + col];
            for (int c = 0; c < cols; ++c)
                m[r * cols + c] = gf.sub(m[r * cols + c], gf.mul(f, m[rank * cols + c]));
        }
        ++rank;
    }
    return rank;
}

bool gf_invertible(const Gf& gf, const GfMatrix& m, int n) {
    return gf_rank(gf, m, n, n) == n;
}

GfMatrix gf_mul(const Gf& gf, const GfMatrix& a, const GfMatrix& b, int r, int s, int t) {
    GfMatrix c(static_cast<size_t>(r) * t, 0);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < s; ++k) {
            std::uint8_t aik = a[i * s + k];
            if (aik == 0)
                continue;
            for (int j = 0; j < t; ++j)
                c[i * t + j] = gf.add(c[i * t + j], gf.mul(aik, b[k * t + j]));
        }
    return c;
}

GfMatrix gf_identity(int n) {
    GfMatrix m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        m[i * n + i] = 1;
    return m;
}

GfMatrix gf_inverse(const Gf& gf, GfMatrix m, int n) {
    GfMatrix inv = gf_identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r * n + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw std::invalid_argument("gf_inverse: singular matrix");
        for (int c = 0; c < n; ++c) {
            std::swap(m[pivot * n + c], m[col * n + c]);
            std::swap(inv[pivot * n + c], inv[col * n + c]);
        }
        std::uint8_t pinv = gf.inv(m[col * n + col]);
        for (int c = 0; c < n; ++c) {
            m[col * n + c] = gf.mul(m[col * n + c], pinv);
            inv[col * n + c] = gf.mul(inv[col * n + c], pinv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r * n + col] == 0)
                continue;
            std::uint8_t f = m[r * n + col];
            for (int c = 0; c < n; ++c) {
                m[r * n + c] = gf.sub(m[r * n + c], gf.mul(f, m[col * n + c]));
                inv[r * n + c] = gf.sub(inv[r * n + c], gf.mul(f, inv[col * n + c]));
            }
        }
    }
    return inv;
}

}  // namespace qha
