#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qha {

/// Permutation of {0..n-1} in one-line notation (img[k] = w(k)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {}
    static Perm identity(int n);
    /// Transposition of positions k, k+1.
    static Perm transposition(int n, int k);
    static Perm longest(int n);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_.at(k); }
    const std::vector<std::uint8_t>& img() const { return img_; }

    /// Function composition: (a*b)(x) = a(b(x)), i.e. b acts first.
    friend Perm operator*(const Perm& a, const Perm& b);
    Perm inverse() const;

    int length() const;  // inversion count
    bool is_identity() const;
    /// l(s_k w) < l(w)
    bool left_descent(int k) const;
    /// l(w s_k) < l(w)
    bool right_descent(int k) const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    std::string to_string() const;

private:
    std::vector<std::uint8_t> img_;
};

std::vector<Perm> all_perms(int n);

/// Word in the Coxeter generators s_0 .. s_{n-2} (values are positions).
using Word = std::vector<std::uint8_t>;

/// s_{u_1} * s_{u_2} * ... * s_{u_t} (rightmost letter acts first).
Perm perm_of_word(int n, const Word& u);

bool word_is_reduced(int n, const Word& u);

/// Lexicographically smallest reduced word of w (greedy on left descents).
Word lexmin_word(const Perm& w);

/// Apply the word to a sequence of labels: rightmost letter swaps first.
/// Equivalent to entries picked through the inverse permutation.
template <typename T>
std::vector<T> apply_word(const Word& u, std::vector<T> s) {
    for (auto it = u.rbegin(); it != u.rend(); ++it)
        std::swap(s.at(*it), s.at(*it + 1));
    return s;
}

template <typename T>
std::vector<T> apply_perm(const Perm& w, const std::vector<T>& s) {
    std::vector<T> out(s.size());
    for (int k = 0; k < w.n(); ++k)
        out[w(k)] = s[k];
    return out;
}

/// One move connecting braid-equivalent words: a commutation swap of two
/// distant letters at [pos, pos+1], or a braid move on the pattern
/// (a, b, a) <-> (b, a, b) at [pos, pos+2] with |a-b| = 1.
struct WordMove {
    int pos = 0;
    bool braid = false;
};

struct WordStep {
    WordMove move;
    Word result;
};

/// Path of moves from one reduced word to another reduced word of the same
/// permutation (exists by Tits' theorem); BFS over the braid class.
std::vector<WordStep> reduced_word_path(int n, const Word& from, const Word& to);

}  // namespace qha
