#include "qha/cyclotomic.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qha/elim.hpp"

namespace qha {

std::vector<KLRElement> cyclotomic_generators(const KLRAlgebra& alg,
                                              const CyclotomicPresentation& p) {
    const CartanDatum& datum = alg.datum();
    if (static_cast<int>(p.lambda.size()) != datum.rank())
        throw std::invalid_argument("cyclotomic_generators: weight has wrong rank");
    for (int c : p.lambda)
        if (c < 0)
            throw std::invalid_argument("cyclotomic_generators: weight must be dominant");
    const int m = height(p.nu);
    std::vector<KLRElement> gens;
    if (m == 0)
        return gens;
    for (const Sequence& i : seq(datum, p.nu)) {
        int r = weight_pairing(datum, p.lambda, i.front());
        Exponents dots(m, 0);
        dots[0] = static_cast<std::uint8_t>(r);
        KLRElement g(m);
        g.add_term(Perm::identity(m), dots, i, 1);
        gens.push_back(std::move(g));
    }
    return gens;
}

nlohmann::json QuotientReport::to_json() const {
    nlohmann::json j;
    j["status"] = status;
    j["stabilized"] = stabilized;
    j["is_zero"] = is_zero;
    nlohmann::json g = nlohmann::json::array();
    for (const auto& [deg, dim] : graded)
        g.push_back({deg, dim});
    j["graded"] = g;
    if (conclusive())
        j["total"] = total;
    j["cutoffs"] = cutoffs;
    if (stabilized)
        j["stabilized_at"] = stabilized_at;
    return j;
}

namespace {

using Row = SparseElim<KLRMonomial>::Row;

Row element_to_row(const KLRElement& e) {
    Row r;
    for (const auto& [m, c] : e.terms())
        r[m] = Rational(c);
    return r;
}

KLRElement row_to_element(const Row& r, int strands) {
    BigInt denom = 1;
    for (const auto& [m, c] : r) {
        (void)m;
        denom = lcm(denom, BigInt(c.get_den()));
    }
    KLRElement e(strands);
    for (const auto& [m, c] : r) {
        BigInt num = BigInt(c.get_num()) * (denom / BigInt(c.get_den()));
        e.add_term(m.w, m.dots, m.idem, num);
    }
    return e;
}

// ideal-closure computation at one degree cutoff
struct ClosureResult {
    bool identity_in_ideal = false;
    bool budget_exceeded = false;
    std::map<long, long> quotient_dims;  // full window [min_deg, cutoff]
    SparseElim<KLRMonomial> elim;
};

ClosureResult closure_at_cutoff(const KLRAlgebra& alg, const CyclotomicPresentation& p, long cutoff,
                                long product_budget) {
    ClosureResult res;
    const int m = height(p.nu);
    const long min_deg = alg.min_monomial_degree(p.nu);
    auto seqs = seq(alg.datum(), p.nu);

    // two-sided generator set: dots, crossings and idempotent projections
    std::vector<KLRElement> side;
    for (const Sequence& i : seqs) {
        side.push_back(alg.e(i));
        for (int k = 0; k < m; ++k)
            side.push_back(alg.x(k, i));
        for (int k = 0; k + 1 < m; ++k)
            side.push_back(alg.psi(k, i));
    }

    SparseElim<KLRMonomial>& elim = res.elim;
    std::deque<KLRElement> work;
    KLRElement one = alg.identity(p.nu);
    auto identity_check = [&]() {
        if (!res.identity_in_ideal && elim.reduces_to_zero(element_to_row(one)))
            res.identity_in_ideal = true;
        return res.identity_in_ideal;
    };

    auto push_components = [&](const KLRElement& el) {
        // split into homogeneous components (the ideal is graded)
        std::map<long, KLRElement> comps;
        for (const auto& [mono, c] : el.terms()) {
            long d = alg.degree(mono);
            if (d > cutoff)
                continue;
            auto it = comps.find(d);
            if (it == comps.end())
                it = comps.emplace(d, KLRElement(m)).first;
            it->second.add_term(mono.w, mono.dots, mono.idem, c);
        }
        for (auto& [d, comp] : comps) {
            (void)d;
            Row reduced = elim.reduce(element_to_row(comp));
            if (reduced.empty())
                continue;
            KLRElement small = row_to_element(reduced, m);
            elim.add(std::move(reduced));
            work.push_back(std::move(small));
        }
    };

    for (const KLRElement& g : cyclotomic_generators(alg, p))
        push_components(g);

    long products = 0;
    long since_check = 0;
    while (!work.empty()) {
        KLRElement el = work.front();
        work.pop_front();
        for (const KLRElement& g : side) {
            push_components(alg.multiply(g, el));
            push_components(alg.multiply(el, g));
            products += 2;
            if (++since_check >= 8) {
                since_check = 0;
                if (identity_check())
                    return res;
            }
            if (products > product_budget) {
                res.budget_exceeded = true;
                return res;
            }
        }
    }
    if (identity_check())
        return res;

    std::map<long, long> pivot_by_degree;
    for (const auto& [mono, row] : elim.pivots()) {
        (void)row;
        ++pivot_by_degree[alg.degree(mono)];
    }
    for (long d = min_deg; d <= cutoff; ++d) {
        BigInt count = alg.monomial_count_of_degree(p.nu, d);
        long rank = pivot_by_degree.count(d) ? pivot_by_degree[d] : 0;
        long dim = static_cast<long>(count.get_si()) - rank;
        if (dim < 0)
            throw std::logic_error("cyclotomic closure: rank exceeds the monomial count");
        res.quotient_dims[d] = dim;
    }
    return res;
}

}  // namespace

QuotientReport quotient_dims(const KLRAlgebra& alg, const CyclotomicPresentation& p,
                             const std::vector<long>& cutoff_schedule) {
    if (cutoff_schedule.empty())
        throw std::invalid_argument("quotient_dims: empty cutoff schedule");
    for (size_t t = 1; t < cutoff_schedule.size(); ++t)
        if (cutoff_schedule[t] <= cutoff_schedule[t - 1])
            throw std::invalid_argument("quotient_dims: cutoff schedule must be increasing");
    cyclotomic_generators(alg, p);  // validates dominance up front

    QuotientReport rep;
    rep.cutoffs = cutoff_schedule;
    const long budget = 2000000;

    if (height(p.nu) == 0) {
        // R_0(lambda) is the ground ring
        rep.status = "ok";
        rep.stabilized = true;
        rep.graded[0] = 1;
        rep.total = 1;
        rep.stabilized_at = cutoff_schedule.front();
        return rep;
    }

    std::vector<ClosureResult> runs;
    for (long cutoff : cutoff_schedule) {
        runs.push_back(closure_at_cutoff(alg, p, cutoff, budget));
        if (runs.back().identity_in_ideal) {
            // conclusive: the ideal is everything
            rep.status = "ok";
            rep.stabilized = true;
            rep.is_zero = true;
            rep.total = 0;
            rep.stabilized_at = cutoff;
            return rep;
        }
        if (runs.back().budget_exceeded)
            return rep;  // inconclusive
    }
    for (size_t t = 0; t + 1 < runs.size(); ++t) {
        const auto& a = runs[t].quotient_dims;
        const auto& b = runs[t + 1].quotient_dims;
        const long da = cutoff_schedule[t], db = cutoff_schedule[t + 1];
        bool agree = true;
        for (const auto& [deg, dim] : a)
            if (deg <= da && (!b.count(deg) || b.at(deg) != dim))
                agree = false;
        bool ext_zero = true;
        long top = std::numeric_limits<long>::min();
        for (const auto& [deg, dim] : b) {
            if (deg > da && dim != 0)
                ext_zero = false;
            if (dim != 0)
                top = std::max(top, deg);
        }
        bool tail_deep = top <= da - 4;
        if (agree && ext_zero && tail_deep) {
            rep.status = "ok";
            rep.stabilized = true;
            rep.stabilized_at = db;
            rep.total = 0;
            for (const auto& [deg, dim] : b)
                if (dim != 0) {
                    rep.graded[deg] = dim;
                    rep.total += dim;
                }
            rep.is_zero = rep.total == 0;
            return rep;
        }
    }
    // no stabilization: expose the last window for transparency
    for (const auto& [deg, dim] : runs.back().quotient_dims)
        if (dim != 0)
            rep.graded[deg] = dim;
    return rep;
}

std::vector<bool> ideal_membership(const KLRAlgebra& alg, const CyclotomicPresentation& p,
                                   long cutoff, const std::vector<KLRElement>& elements) {
    ClosureResult run = closure_at_cutoff(alg, p, cutoff, 2000000);
    std::vector<bool> out;
    for (const KLRElement& el : elements) {
        if (run.identity_in_ideal) {
            out.push_back(true);
            continue;
        }
        out.push_back(run.elim.reduces_to_zero(element_to_row(el)));
    }
    return out;
}

namespace {

// integers (mu, alpha_j) for mu in omega-coordinates are just coordinates;
// (alpha_i, alpha_j) is the Cartan pairing.
long form_weight_root(const CartanDatum& datum, const WeightVec& mu, const RootVector& beta) {
    long s = 0;
    for (int j = 0; j < datum.rank(); ++j)
        s += static_cast<long>(beta[j]) * mu[j];
    return s;
}

RootVector root_sum(const RootVector& a, const RootVector& b, int scale_b) {
    RootVector r = a;
    for (size_t k = 0; k < r.size(); ++k)
        r[k] += scale_b * b[k];
    return r;
}

WeightVec weight_minus_root(const CartanDatum& datum, const WeightVec& lambda,
                            const RootVector& nu) {
    // lambda - sum nu_i alpha_i in omega-coordinates: alpha_i = sum_j C_{ji} omega_j
    WeightVec mu = lambda;
    for (int j = 0; j < datum.rank(); ++j)
        for (int i = 0; i < datum.rank(); ++i)
            mu[j] -= datum.pairing(j, i) * nu[i];
    return mu;
}

}  // namespace

long weyl_dimension(const CartanDatum& datum, const WeightVec& lambda) {
    WeightVec rho(datum.rank(), 1);
    BigInt num = 1, den = 1;
    for (const RootVector& beta : positive_roots(datum)) {
        long lr = form_weight_root(datum, lambda, beta) + form_weight_root(datum, rho, beta);
        long rr = form_weight_root(datum, rho, beta);
        num *= lr;
        den *= rr;
    }
    BigInt dim = num / den;
    return static_cast<long>(dim.get_si());
}

std::map<WeightVec, long> weight_support_oracle(const CartanDatum& datum, const WeightVec& lambda,
                                                long dim_bound) {
    if (static_cast<int>(lambda.size()) != datum.rank())
        throw std::invalid_argument("weight_support_oracle: weight has wrong rank");
    for (int c : lambda)
        if (c < 0)
            throw std::invalid_argument("weight_support_oracle: weight must be dominant");
    if (!datum.is_finite_type())
        throw UnsupportedTypeError("weight_support_oracle: datum is not finite type");
    auto roots = positive_roots(datum);
    const WeightVec rho(datum.rank(), 1);

    // multiplicities indexed by nu with mu = lambda - nu; proceed by height
    std::map<RootVector, long> mult;
    mult[RootVector(datum.rank(), 0)] = 1;
    long total = 1;
    std::vector<RootVector> level = {RootVector(datum.rank(), 0)};
    while (!level.empty()) {
        // candidates one simple root lower
        std::map<RootVector, bool> next_level;
        for (const RootVector& nu : level)
            for (int i = 0; i < datum.rank(); ++i)
                next_level[root_sum(nu, simple_root(datum, i), 1)] = true;
        level.clear();
        for (const auto& [nu, flag] : next_level) {
            (void)flag;
            WeightVec mu = weight_minus_root(datum, lambda, nu);
            // denominator (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = (nu, lambda+mu+2rho)
            WeightVec lm = lambda;
            for (int j = 0; j < datum.rank(); ++j)
                lm[j] += mu[j] + 2 * rho[j];
            long denom = form_weight_root(datum, lm, nu);
            if (denom <= 0)
                continue;
            // numerator 2 sum_{beta>0} sum_{t>=1} (mu + t beta, beta) m(mu + t beta)
            long long numer = 0;
            for (const RootVector& beta : roots) {
                for (int t = 1;; ++t) {
                    RootVector nu_up = root_sum(nu, beta, -t);
                    if (std::any_of(nu_up.begin(), nu_up.end(), [](int c) { return c < 0; }))
                        break;
                    auto it = mult.find(nu_up);
                    if (it == mult.end() || it->second == 0)
                        continue;
                    WeightVec mu_up = weight_minus_root(datum, lambda, nu_up);
                    numer += 2ll * form_weight_root(datum, mu_up, beta) * it->second;
                }
            }
            if (numer <= 0)
                continue;
            if (numer % denom != 0)
                throw std::logic_error("weight_support_oracle: Freudenthal division not exact");
            long mv = static_cast<long>(numer / denom);
            if (mv > 0) {
                mult[nu] = mv;
                total += mv;
                if (total > dim_bound)
                    throw std::invalid_argument("weight_support_oracle: dimension bound exceeded");
                level.push_back(nu);
            }
        }
    }
    std::map<WeightVec, long> out;
    for (const auto& [nu, mv] : mult)
        if (mv > 0)
            out[weight_minus_root(datum, lambda, nu)] = mv;
    return out;
}

VanishingResult vanishing_check(const KLRAlgebra& alg, const WeightVec& lambda,
                                const RootVector& nu, const std::vector<long>& cutoff_schedule) {
    VanishingResult res;
    CyclotomicPresentation p{lambda, nu};
    res.quotient = quotient_dims(alg, p, cutoff_schedule);
    auto support = weight_support_oracle(alg.datum(), lambda);
    WeightVec mu = weight_minus_root(alg.datum(), lambda, nu);
    res.weight_in_support = support.count(mu) > 0;
    if (res.quotient.conclusive())
        res.consistent = (!res.quotient.is_zero) == res.weight_in_support;
    return res;
}

}  // namespace qha
