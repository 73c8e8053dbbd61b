#include "qha/sl2_model.hpp"

#include <sstream>
#include <stdexcept>

#include "qha/gf.hpp"

namespace qha {

SubsetVector SubsetVector::basis(int n, std::uint32_t subset) {
    SubsetVector v(n);
    v.add_term(subset, 1);
    return v;
}

Rational SubsetVector::coeff(std::uint32_t subset) const {
    auto it = terms_.find(subset);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SubsetVector::add_term(std::uint32_t subset, const Rational& c) {
    if (subset >= (1u << n_))
        throw std::invalid_argument("SubsetVector: subset outside {1..n}");
    if (qha::is_zero(c))
        return;
    auto it = terms_.find(subset);
    if (it == terms_.end()) {
        terms_.emplace(subset, c);
    } else {
        it->second += c;
        if (qha::is_zero(it->second))
            terms_.erase(it);
    }
}

SubsetVector& SubsetVector::operator+=(const SubsetVector& o) {
    for (const auto& [s, c] : o.terms_)
        add_term(s, c);
    return *this;
}

SubsetVector& SubsetVector::operator-=(const SubsetVector& o) {
    for (const auto& [s, c] : o.terms_)
        add_term(s, -c);
    return *this;
}

SubsetVector SubsetVector::scaled(const Rational& c) const {
    SubsetVector v(n_);
    if (qha::is_zero(c))
        return v;
    for (const auto& [s, t] : terms_)
        v.terms_[s] = t * c;
    return v;
}

std::string SubsetVector::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << qha::to_string(c) << "*{";
        bool fe = true;
        for (int b = 0; b < n_; ++b)
            if (s & (1u << b)) {
                os << (fe ? "" : ",") << b + 1;
                fe = false;
            }
        os << "}";
    }
    return os.str();
}

SubsetVector e_subset(const SubsetVector& v) {
    SubsetVector out(v.n());
    for (const auto& [s, c] : v.terms())
        for (int b = 0; b < v.n(); ++b)
            if (!(s & (1u << b)))
                out.add_term(s | (1u << b), c);
    return out;
}

SubsetVector f_subset(const SubsetVector& v) {
    SubsetVector out(v.n());
    for (const auto& [s, c] : v.terms())
        for (int b = 0; b < v.n(); ++b)
            if (s & (1u << b))
                out.add_term(s & ~(1u << b), c);
    return out;
}

SubsetVector divided_power(char op, int p, const SubsetVector& v) {
    if (p < 0)
        throw std::invalid_argument("divided_power: p must be >= 0");
    if (op != 'e' && op != 'f')
        throw std::invalid_argument("divided_power: op must be 'e' or 'f'");
    SubsetVector cur = v;
    Rational fact(1);
    for (int t = 1; t <= p; ++t) {
        cur = op == 'e' ? e_subset(cur) : f_subset(cur);
        fact *= t;
    }
    Rational inv = Rational(1) / fact;
    return cur.scaled(inv);
}

CommutatorReport commutator_report(int n) {
    if (n < 0)
        throw std::invalid_argument("commutator_report: n must be >= 0");
    CommutatorReport rep;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        SubsetVector b = SubsetVector::basis(n, s);
        SubsetVector lhs = f_subset(e_subset(b));
        lhs = e_subset(f_subset(b)) - lhs;
        int k = __builtin_popcount(s);
        SubsetVector rhs = b.scaled(Rational(2 * k - n));
        ++rep.checked;
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "n=" << n << " subset mask " << s << ": (ef-fe) gave " << lhs.to_string()
               << ", expected " << rhs.to_string();
            rep.first_failure = os.str();
            rep.passed = false;
            return rep;
        }
    }
    rep.passed = true;
    return rep;
}

namespace {

std::vector<std::uint32_t> subsets_of_size(int n, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (__builtin_popcount(s) == k)
            out.push_back(s);
    return out;
}

}  // namespace

WeightMatrix weyl_s(int n, int r) {
    if (n < 0 || r < -n || r > n || ((n - r) % 2) != 0)
        throw std::invalid_argument("weyl_s: weight out of range (need |r| <= n, r = n mod 2)");
    const int k = (n + r) / 2;
    const int kt = (n - r) / 2;
    auto src = subsets_of_size(n, k);
    auto dst = subsets_of_size(n, kt);
    WeightMatrix wm;
    wm.n = n;
    wm.source_r = r;
    wm.target_r = -r;
    wm.mat = RatMatrix(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t col = 0; col < src.size(); ++col) {
        SubsetVector acc(n);
        for (int p = std::max(0, -r); p <= n; ++p) {
            SubsetVector term =
                divided_power('e', p, divided_power('f', r + p, SubsetVector::basis(n, src[col])));
            if (term.is_zero() && r + p > k)
                break;  // sum is finite: lower weight spaces vanish from here on
            if (p % 2)
                acc -= term;
            else
                acc += term;
        }
        for (size_t row = 0; row < dst.size(); ++row)
            wm.mat.at(static_cast<int>(row), static_cast<int>(col)) = acc.coeff(dst[row]);
    }
    return wm;
}

namespace {

// Full 2^n matrix of a linear operator given on basis subsets.
RatMatrix full_matrix(int n, SubsetVector (*op)(const SubsetVector&)) {
    const int dim = 1 << n;
    RatMatrix m(dim, dim);
    for (int s = 0; s < dim; ++s) {
        SubsetVector img = op(SubsetVector::basis(n, static_cast<std::uint32_t>(s)));
        for (const auto& [t, c] : img.terms())
            m.at(static_cast<int>(t), s) = c;
    }
    return m;
}

}  // namespace

WeylReport weyl_report(int n) {
    WeylReport rep;
    const int dim = 1 << n;
    RatMatrix S(dim, dim);
    for (int r = -n; r <= n; r += 2) {
        WeightMatrix blk = weyl_s(n, r);
        auto src = subsets_of_size(n, (n + r) / 2);
        auto dst = subsets_of_size(n, (n - r) / 2);
        if (blk.mat.rows() != blk.mat.cols() || !blk.mat.invertible()) {
            std::ostringstream os;
            os << "weyl block n=" << n << " r=" << r << " is not an invertible square matrix";
            rep.failures.push_back(os.str());
        }
        for (size_t row = 0; row < dst.size(); ++row)
            for (size_t col = 0; col < src.size(); ++col)
                S.at(static_cast<int>(dst[row]), static_cast<int>(src[col])) =
                    blk.mat.at(static_cast<int>(row), static_cast<int>(col));
    }
    if (!rep.failures.empty()) {
        rep.passed = false;
        return rep;
    }
    RatMatrix Sinv = S.inverse();
    RatMatrix E = full_matrix(n, &e_subset);
    RatMatrix F = full_matrix(n, &f_subset);
    if (!(S * E * Sinv == -F))
        rep.failures.push_back("S e S^-1 != -f at n=" + std::to_string(n));
    if (!(S * F * Sinv == -E))
        rep.failures.push_back("S f S^-1 != -e at n=" + std::to_string(n));
    RatMatrix S2 = S * S;
    for (int r = -n; r <= n; r += 2) {
        auto basis = subsets_of_size(n, (n + r) / 2);
        int sign = 0;
        bool ok = true;
        for (std::uint32_t s : basis) {
            for (std::uint32_t t : basis) {
                const Rational& v = S2.at(static_cast<int>(t), static_cast<int>(s));
                if (s == t) {
                    int d = sgn(v);
                    if (abs(v) != 1 || (sign != 0 && d != sign))
                        ok = false;
                    sign = d;
                } else if (!is_zero(v)) {
                    ok = false;
                }
            }
        }
        if (!ok)
            rep.failures.push_back("S^2 not a constant sign on V_" + std::to_string(r));
        else
            rep.s_squared_signs[r] = sign;
    }
    rep.passed = rep.failures.empty();
    return rep;
}

namespace {

// Partitions with at most `rows` parts, each part at most `cap`, accumulated
// as q^{|partition|}.
void box_partitions(int rows, long cap, long total, LaurentPoly& acc) {
    if (rows == 0) {
        acc += LaurentPoly::q_power(total);
        return;
    }
    for (long v = 0; v <= cap; ++v)
        box_partitions(rows - 1, v, total + v, acc);
}

}  // namespace

LaurentPoly gaussian_binomial(long n, long k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
    LaurentPoly acc;
    box_partitions(static_cast<int>(k), n - k, 0, acc);
    return acc;
}

LaurentPoly centered_gaussian(long n, long k) {
    return gaussian_binomial(n, k).substitute_power(2).shifted(-k * (n - k));
}

long long grassmannian_count(int k, int n, int q) {
    if (k < 0 || k > n || n > 8)
        throw std::invalid_argument("grassmannian_count: need 0 <= k <= n <= 8");
    Gf gf(q);  // rejects unsupported field sizes
    if (k == 0)
        return 1;
    // pivot columns p_0 < ... < p_{k-1}; free cells sit right of each pivot,
    // outside pivot columns
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i)
        pivots[i] = i;
    unsigned long long total_predicted = 0;
    std::vector<std::vector<int>> pivot_sets;
    while (true) {
        int free_cells = 0;
        for (int i = 0; i < k; ++i) {
            for (int c = pivots[i] + 1; c < n; ++c) {
                bool is_pivot = false;
                for (int j = 0; j < k; ++j)
                    if (pivots[j] == c)
                        is_pivot = true;
                if (!is_pivot)
                    ++free_cells;
            }
        }
        unsigned long long cnt = 1;
        for (int t = 0; t < free_cells; ++t)
            cnt *= static_cast<unsigned long long>(q);
        total_predicted += cnt;
        pivot_sets.push_back(pivots);
        int t = k - 1;
        while (t >= 0 && pivots[t] == n - k + t)
            --t;
        if (t < 0)
            break;
        ++pivots[t];
        for (int s = t + 1; s < k; ++s)
            pivots[s] = pivots[s - 1] + 1;
    }
    if (total_predicted > (1ull << 24))
        throw std::invalid_argument("grassmannian_count: " + std::to_string(total_predicted) +
                                    " echelon representatives exceed the 2^24 enumeration bound");
    long long count = 0;
    for (const auto& ps : pivot_sets) {
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int c = ps[i] + 1; c < n; ++c) {
                bool is_pivot = false;
                for (int j = 0; j < k; ++j)
                    if (ps[j] == c)
                        is_pivot = true;
                if (!is_pivot)
                    free_pos.emplace_back(i, c);
            }
        std::vector<std::uint8_t> fill(free_pos.size(), 0);
        while (true) {
            GfMatrix m(static_cast<size_t>(k) * n, 0);
            for (int i = 0; i < k; ++i)
                m[i * n + ps[i]] = 1;
            for (size_t t = 0; t < free_pos.size(); ++t)
                m[free_pos[t].first * n + free_pos[t].second] = fill[t];
            if (gf_rank(gf, m, k, n) == k)  // sanity: every representative has full rank
                ++count;
            size_t t = 0;
            while (t < fill.size() && fill[t] == q - 1)
                fill[t++] = 0;
            if (t == fill.size())
                break;
            ++fill[t];
        }
    }
    return count;
}

long projective_space_defect(int k, int n) {
    if (k < 0 || k > n)
        throw std::invalid_argument("projective_space_defect: need 0 <= k <= n");
    auto poincare = [](int d) {
        LaurentPoly p;
        for (int t = 0; t < d; ++t)
            p += LaurentPoly::q_power(2 * t);
        return p;
    };
    Rational add = poincare(k).evaluate(Rational(1));
    Rational drop = poincare(n - k).evaluate(Rational(1));
    Rational defect = add - drop;
    return defect.get_num().get_si();
}

}  // namespace qha
