#include "qha/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qha {

Perm Perm::identity(int n) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::transposition(int n, int k) {
    if (k < 0 || k + 1 >= n)
        throw std::invalid_argument("transposition index out of range");
    Perm p = identity(n);
    std::swap(p.img_[k], p.img_[k + 1]);
    return p;
}

Perm Perm::longest(int n) {
    std::vector<std::uint8_t> img(n);
    for (int k = 0; k < n; ++k)
        img[k] = static_cast<std::uint8_t>(n - 1 - k);
    return Perm(std::move(img));
}

Perm operator*(const Perm& a, const Perm& b) {
    std::vector<std::uint8_t> img(b.n());
    for (int x = 0; x < b.n(); ++x)
        img[x] = static_cast<std::uint8_t>(a(b(x)));
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<std::uint8_t> img(img_.size());
    for (int x = 0; x < n(); ++x)
        img[img_[x]] = static_cast<std::uint8_t>(x);
    return Perm(std::move(img));
}

int Perm::length() const {
    int inv = 0;
    for (int p = 0; p < n(); ++p)
        for (int q = p + 1; q < n(); ++q)
            if (img_[p] > img_[q])
                ++inv;
    return inv;
}

bool Perm::is_identity() const {
    for (int k = 0; k < n(); ++k)
        if (img_[k] != k)
            return false;
    return true;
}

bool Perm::left_descent(int k) const {
    // position of value k vs value k+1
    int pk = -1, pk1 = -1;
    for (int x = 0; x < n(); ++x) {
        if (img_[x] == k)
            pk = x;
        if (img_[x] == k + 1)
            pk1 = x;
    }
    return pk > pk1;
}

bool Perm::right_descent(int k) const { return img_.at(k) > img_.at(k + 1); }

std::string Perm::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k < n(); ++k)
        os << (k ? "," : "") << static_cast<int>(img_[k]) + 1;
    os << "]";
    return os.str();
}

std::vector<Perm> all_perms(int n) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Perm perm_of_word(int n, const Word& u) {
    Perm p = Perm::identity(n);
    for (std::uint8_t l : u)
        p = p * Perm::transposition(n, l);
    return p;
}

bool word_is_reduced(int n, const Word& u) {
    return perm_of_word(n, u).length() == static_cast<int>(u.size());
}

Word lexmin_word(const Perm& w) {
    Word out;
    Perm cur = w;
    while (!cur.is_identity()) {
        int d = -1;
        for (int k = 0; k + 1 < cur.n(); ++k)
            if (cur.left_descent(k)) {
                d = k;
                break;
            }
        out.push_back(static_cast<std::uint8_t>(d));
        cur = Perm::transposition(cur.n(), d) * cur;
    }
    return out;
}

namespace {

std::vector<WordStep> word_neighbors(const Word& u) {
    std::vector<WordStep> out;
    for (size_t p = 0; p + 1 < u.size(); ++p) {
        int a = u[p], b = u[p + 1];
        if (std::abs(a - b) >= 2) {
            Word v = u;
            std::swap(v[p], v[p + 1]);
            out.push_back({{static_cast<int>(p), false}, std::move(v)});
        }
    }
    for (size_t p = 0; p + 2 < u.size(); ++p) {
        int a = u[p], b = u[p + 1], c = u[p + 2];
        if (a == c && std::abs(a - b) == 1) {
            Word v = u;
            v[p] = static_cast<std::uint8_t>(b);
            v[p + 1] = static_cast<std::uint8_t>(a);
            v[p + 2] = static_cast<std::uint8_t>(b);
            out.push_back({{static_cast<int>(p), true}, std::move(v)});
        }
    }
    return out;
}

}  // namespace

std::vector<WordStep> reduced_word_path(int n, const Word& from, const Word& to) {
    if (!(perm_of_word(n, from) == perm_of_word(n, to)))
        throw std::logic_error("reduced_word_path: words represent different permutations");
    if (from == to)
        return {};
    std::map<Word, std::pair<Word, WordMove>> parent;  // word -> (previous, move)
    std::queue<Word> bfs;
    bfs.push(from);
    parent[from] = {from, {}};
    while (!bfs.empty()) {
        Word cur = bfs.front();
        bfs.pop();
        for (auto& [move, nxt] : word_neighbors(cur)) {
            if (parent.count(nxt))
                continue;
            parent[nxt] = {cur, move};
            if (nxt == to) {
                std::vector<WordStep> path;
                Word walk = to;
                while (walk != from) {
                    auto& [prev, mv] = parent[walk];
                    path.push_back({mv, walk});
                    walk = prev;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            bfs.push(nxt);
        }
    }
    throw std::logic_error("reduced_word_path: words not connected by moves");
}

}  // namespace qha
