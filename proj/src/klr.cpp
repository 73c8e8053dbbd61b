#include "qha/klr.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qha/elim.hpp"
#include "qha/nilhecke.hpp"

namespace qha {

RelationConvention RelationConvention::standard(const CartanDatum& datum) {
    RelationConvention conv;
    for (int i = 0; i < datum.rank(); ++i)
        for (int j = 0; j < datum.rank(); ++j) {
            if (i == j || datum.pairing(i, j) != -1)
                continue;
            // Q_{ij} = v - u across an oriented edge i -> j, u - v against it;
            // the braid sign is the one the polynomial representation forces.
            int qs = datum.has_edge(i, j) ? -1 : +1;
            conv.q_sign[{i, j}] = qs;
            conv.braid_sign[{i, j}] = qs;
        }
    return conv;
}

RelationConvention RelationConvention::flipped_braid() const {
    RelationConvention conv = *this;
    for (auto& [key, s] : conv.braid_sign) {
        (void)key;
        s = -s;
    }
    return conv;
}

void KLRElement::add_term(const Perm& w, const Exponents& dots, const Sequence& idem,
                          const BigInt& c) {
    if (w.n() != m_ || static_cast<int>(dots.size()) != m_ ||
        static_cast<int>(idem.size()) != m_)
        throw std::invalid_argument("KLRElement::add_term: arity mismatch");
    if (qha::is_zero(c))
        return;
    KLRMonomial m{w, dots, idem};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (qha::is_zero(it->second))
            terms_.erase(it);
    }
}

KLRElement& KLRElement::operator+=(const KLRElement& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m.w, m.dots, m.idem, c);
    return *this;
}

KLRElement& KLRElement::operator-=(const KLRElement& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m.w, m.dots, m.idem, -c);
    return *this;
}

KLRElement KLRElement::scaled(const BigInt& c) const {
    KLRElement e(m_);
    if (qha::is_zero(c))
        return e;
    for (const auto& [m, t] : terms_)
        e.terms_[m] = t * c;
    return e;
}

std::string KLRElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str() << "*psi" << m.w.to_string() << "*x(";
        for (int k = 0; k < m_; ++k)
            os << (k ? "," : "") << static_cast<int>(m.dots[k]);
        os << ")*e(";
        for (int k = 0; k < m_; ++k)
            os << (k ? "," : "") << m.idem[k];
        os << ")";
    }
    return os.str();
}

nlohmann::json KLRElement::to_json(const CartanDatum& datum, const RootVector& nu) const {
    nlohmann::json j;
    j["nu"] = vertex_map_to_json(datum, nu);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json term;
        nlohmann::json idem = nlohmann::json::array();
        for (int v : m.idem)
            idem.push_back(datum.label(v));
        nlohmann::json perm = nlohmann::json::array();
        for (int k = 0; k < m_; ++k)
            perm.push_back(m.w(k) + 1);
        nlohmann::json dots = nlohmann::json::array();
        for (int k = 0; k < m_; ++k)
            dots.push_back(static_cast<int>(m.dots[k]));
        term["idem"] = idem;
        term["perm"] = perm;
        term["dots"] = dots;
        term["coeff"] = c.fits_slong_p() ? nlohmann::json(c.get_si()) : nlohmann::json(c.get_str());
        arr.push_back(term);
    }
    j["terms"] = arr;
    return j;
}

KLRAlgebra::KLRAlgebra(CartanDatum datum, RelationConvention conv, bool validate)
    : datum_(std::move(datum)), conv_(std::move(conv)) {
    if (validate)
        self_validate();
}

KLRElement KLRAlgebra::e(const Sequence& i) const {
    const int m = static_cast<int>(i.size());
    KLRElement el(m);
    el.add_term(Perm::identity(m), Exponents(m, 0), i, 1);
    return el;
}

KLRElement KLRAlgebra::x(int k, const Sequence& i) const {
    const int m = static_cast<int>(i.size());
    Exponents d(m, 0);
    d.at(k) = 1;
    KLRElement el(m);
    el.add_term(Perm::identity(m), d, i, 1);
    return el;
}

KLRElement KLRAlgebra::psi(int k, const Sequence& i) const {
    const int m = static_cast<int>(i.size());
    KLRElement el(m);
    el.add_term(Perm::transposition(m, k), Exponents(m, 0), i, 1);
    return el;
}

KLRElement KLRAlgebra::identity(const RootVector& nu) const {
    const int m = height(nu);
    KLRElement el(m);
    for (const Sequence& i : seq(datum_, nu))
        el.add_term(Perm::identity(m), Exponents(m, 0), i, 1);
    return el;
}

long KLRAlgebra::psi_degree(const Perm& w, const Sequence& i) const {
    long d = 0;
    for (int p = 0; p < w.n(); ++p)
        for (int q = p + 1; q < w.n(); ++q)
            if (w(p) > w(q))
                d -= datum_.pairing(i.at(p), i.at(q));
    return d;
}

long KLRAlgebra::degree(const KLRMonomial& m) const {
    long d = psi_degree(m.w, m.idem);
    for (auto a : m.dots)
        d += 2l * a;
    return d;
}

std::vector<KLRAlgebra::SlideTerm> KLRAlgebra::slide_dots(const Word& c, const Exponents& dots,
                                                          const Sequence& i) const {
    std::vector<SlideTerm> out;
    if (c.empty()) {
        out.push_back({Word{}, dots, 1});
        return out;
    }
    const int m = static_cast<int>(i.size());
    const std::uint8_t l = c.front();
    Word rest(c.begin() + 1, c.end());
    Sequence jl = apply_word(rest, i);
    // x^a psi_l = psi_l x^{s_l a} + [equal labels] d_l(x^a)
    Exponents sd = dots;
    std::swap(sd.at(l), sd.at(l + 1));
    for (auto& st : slide_dots(rest, sd, i)) {
        Word w2;
        w2.push_back(l);
        w2.insert(w2.end(), st.word.begin(), st.word.end());
        out.push_back({std::move(w2), st.dots, st.coeff});
    }
    if (jl.at(l) == jl.at(l + 1)) {
        MPoly dd = MPoly::monomial(m, dots).divided_difference(l);
        for (const auto& [exps, cd] : dd.terms())
            for (auto& st : slide_dots(rest, exps, i))
                out.push_back({st.word, st.dots, st.coeff * cd});
    }
    return out;
}

namespace {

std::string memo_key(const Word& u, const Sequence& i) {
    std::string key(u.begin(), u.end());
    key.push_back('\x7f');
    for (int v : i)
        key.push_back(static_cast<char>(v));
    return key;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace

KLRElement KLRAlgebra::cross_normal(const Word& u, const Sequence& i) const {
    const int m = static_cast<int>(i.size());
    if (u.empty())
        return e(i);
    const std::string key = memo_key(u, i);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
    }
    Perm p = perm_of_word(m, u);
    KLRElement result(m);

    // Braid correction when a path move rewrites the pattern at [pos, pos+2]
    // of the full word cur: psi_k psi_{k+1} psi_k e = psi_{k+1} psi_k psi_{k+1} e + beta e.
    auto braid_correction = [&](const Word& cur, int pos) {
        int a = cur[pos], b = cur[pos + 1];
        int k0 = std::min(a, b);
        Word suffix(cur.begin() + pos + 3, cur.end());
        Sequence jl = apply_word(suffix, i);
        if (jl.at(k0) != jl.at(k0 + 2) || datum_.pairing(jl[k0], jl[k0 + 1]) != -1)
            return;
        int beta = conv_.braid_at(jl[k0], jl[k0 + 1]);
        int dir = a < b ? +1 : -1;  // (k,k+1,k) -> (k+1,k,k+1) picks up +beta
        Word del = cur;
        del.erase(del.begin() + pos, del.begin() + pos + 3);
        result += cross_normal(del, i).scaled(dir * beta);
    };

    if (static_cast<int>(u.size()) == p.length()) {
        Word target = lexmin_word(p);
        if (u == target) {
            result.add_term(p, Exponents(m, 0), i, 1);
        } else {
            Word cur = u;
            for (const auto& step : reduced_word_path(m, u, target)) {
                if (step.move.braid)
                    braid_correction(cur, step.move.pos);
                cur = step.result;
            }
            result.add_term(p, Exponents(m, 0), i, 1);
        }
    } else {
        // shortest non-reduced prefix u[0..t); its reduced part gets braided
        // into a word ending with the repeated letter, then psi^2 applies
        size_t t = 2;
        while (word_is_reduced(m, Word(u.begin(), u.begin() + t)))
            ++t;
        Word prefix(u.begin(), u.begin() + t - 1);
        const std::uint8_t cgen = u[t - 1];
        Perm q = perm_of_word(m, prefix);
        Word a_part = lexmin_word(q * Perm::transposition(m, cgen));
        Word target = a_part;
        target.push_back(cgen);
        Word tail(u.begin() + t - 1, u.end());  // starts with cgen
        Word cur = concat(prefix, tail);
        for (const auto& step : reduced_word_path(m, prefix, target)) {
            if (step.move.braid)
                braid_correction(cur, step.move.pos);
            cur = concat(step.result, tail);
        }
        // cur = a_part ++ (cgen, cgen) ++ C
        Word c_part(u.begin() + t, u.end());
        Sequence jl = apply_word(c_part, i);
        const int c1 = jl.at(cgen), c2 = jl.at(cgen + 1);
        if (c1 == c2) {
            // psi^2 = 0: no contribution
        } else if (datum_.pairing(c1, c2) == 0) {
            result += cross_normal(concat(a_part, c_part), i);
        } else {
            const int qs = conv_.q_at(c1, c2);  // +1: x_k - x_{k+1}; -1: reverse
            for (int which = 0; which < 2; ++which) {
                Exponents dv(m, 0);
                dv.at(which == 0 ? cgen : cgen + 1) = 1;
                const BigInt s = which == 0 ? qs : -qs;
                for (const auto& st : slide_dots(c_part, dv, i)) {
                    KLRElement sub = cross_normal(concat(a_part, st.word), i);
                    for (const auto& [mm, cc] : sub.terms()) {
                        Exponents nd = mm.dots;
                        for (int k = 0; k < m; ++k)
                            nd[k] = static_cast<std::uint8_t>(nd[k] + st.dots[k]);
                        result.add_term(mm.w, nd, mm.idem, cc * st.coeff * s);
                    }
                }
            }
        }
    }
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        memo_.emplace(key, result);
    }
    return result;
}

KLRElement KLRAlgebra::multiply(const KLRElement& a, const KLRElement& b) const {
    if (a.strands() != b.strands())
        throw std::invalid_argument("multiply: elements live in different R_nu");
    const int m = a.strands();
    KLRElement out(m);
    for (const auto& [mb, cb] : b.terms()) {
        Sequence tb = mb.target();
        Word rv = lexmin_word(mb.w);
        for (const auto& [ma, ca] : a.terms()) {
            if (ma.idem != tb)
                continue;
            Word wa = lexmin_word(ma.w);
            for (const auto& st : slide_dots(rv, ma.dots, mb.idem)) {
                KLRElement sub = cross_normal(concat(wa, st.word), mb.idem);
                for (const auto& [mm, cc] : sub.terms()) {
                    Exponents nd = mm.dots;
                    for (int k = 0; k < m; ++k)
                        nd[k] = static_cast<std::uint8_t>(nd[k] + st.dots[k] + mb.dots[k]);
                    out.add_term(mm.w, nd, mm.idem, ca * cb * st.coeff * cc);
                }
            }
        }
    }
    return out;
}

PolyState KLRAlgebra::oracle_project(const PolyState& s, const Sequence& i) const {
    PolyState out;
    auto it = s.find(i);
    if (it != s.end() && !it->second.is_zero())
        out.emplace(i, it->second);
    return out;
}

PolyState KLRAlgebra::oracle_apply_x(const PolyState& s, int k) const {
    PolyState out;
    for (const auto& [j, f] : s) {
        Exponents e(j.size(), 0);
        e.at(k) = 1;
        out.emplace(j, f.shifted(e));
    }
    return out;
}

namespace {

void state_add(PolyState& acc, const Sequence& j, const MPoly& f) {
    if (f.is_zero())
        return;
    auto it = acc.find(j);
    if (it == acc.end()) {
        acc.emplace(j, f);
    } else {
        it->second += f;
        if (it->second.is_zero())
            acc.erase(it);
    }
}

}  // namespace

PolyState KLRAlgebra::oracle_apply_psi(const PolyState& s, int k) const {
    PolyState out;
    for (const auto& [j, f] : s) {
        const int m = static_cast<int>(j.size());
        const int c = j.at(k), d = j.at(k + 1);
        if (c == d) {
            state_add(out, j, f.divided_difference(k));
            continue;
        }
        Sequence sj = j;
        std::swap(sj[k], sj[k + 1]);
        MPoly g = f.swapped(k);
        if (datum_.pairing(c, d) == -1 && datum_.has_edge(d, c)) {
            // the crossing against the orientation carries Q_{dc}(x_k, x_{k+1})
            const int qs = conv_.q_at(d, c);
            MPoly factor = MPoly::variable(m, k).scaled(qs) - MPoly::variable(m, k + 1).scaled(qs);
            g = g * factor;
        }
        state_add(out, sj, g);
    }
    return out;
}

PolyState KLRAlgebra::oracle_act(const KLRElement& a, const PolyState& s) const {
    PolyState out;
    for (const auto& [m, c] : a.terms()) {
        auto it = s.find(m.idem);
        if (it == s.end())
            continue;
        PolyState cur;
        cur.emplace(m.idem, it->second.shifted(m.dots).scaled(c));
        Word w = lexmin_word(m.w);
        for (auto wit = w.rbegin(); wit != w.rend(); ++wit)
            cur = oracle_apply_psi(cur, *wit);
        for (const auto& [j, f] : cur)
            state_add(out, j, f);
    }
    return out;
}

// ---------------------------------------------------------------------------
// relation battery

namespace {

struct Op {
    bool is_psi;
    int k;
};
using OpWord = std::vector<Op>;
// one relation instance: sum of coeff * op-word applied to e(i) must vanish
struct Combination {
    std::string name;
    std::vector<std::pair<int, OpWord>> parts;
};

std::vector<Exponents> exponents_up_to(int m, int maxdeg) {
    std::vector<Exponents> out;
    Exponents e(m, 0);
    while (true) {
        int total = 0;
        for (auto v : e)
            total += v;
        if (total <= maxdeg)
            out.push_back(e);
        int k = 0;
        while (k < m) {
            if (e[k] < maxdeg) {
                ++e[k];
                break;
            }
            e[k] = 0;
            ++k;
        }
        if (k == m)
            break;
    }
    return out;
}

}  // namespace

RelationReport KLRAlgebra::verify_relations(const RootVector& nu) const {
    RelationReport rep;
    rep.passed = true;
    const int m = height(nu);
    auto seqs = seq(datum_, nu);
    auto inputs = exponents_up_to(m, 2);

    auto engine_word = [&](const OpWord& word, const Sequence& i) {
        KLRElement el = e(i);
        Sequence cur = i;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (it->is_psi) {
                el = multiply(psi(it->k, cur), el);
                std::swap(cur[it->k], cur[it->k + 1]);
            } else {
                el = multiply(x(it->k, cur), el);
            }
        }
        return el;
    };
    auto oracle_word = [&](const OpWord& word, PolyState st) {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            st = it->is_psi ? oracle_apply_psi(st, it->k) : oracle_apply_x(st, it->k);
        return st;
    };
    auto check = [&](const Combination& comb, const Sequence& i) {
        ++rep.checked;
        KLRElement eng(m);
        for (const auto& [coeff, word] : comb.parts)
            eng += engine_word(word, i).scaled(coeff);
        bool eng_zero = eng.is_zero();
        bool ora_zero = true;
        std::string ora_witness;
        for (const Exponents& f : inputs) {
            PolyState acc;
            for (const auto& [coeff, word] : comb.parts) {
                PolyState s0;
                s0.emplace(i, MPoly::monomial(m, f, coeff));
                for (const auto& [j, g] : oracle_word(word, s0))
                    state_add(acc, j, g);
            }
            if (!acc.empty()) {
                ora_zero = false;
                ora_witness = MPoly::monomial(m, f).to_string();
                break;
            }
        }
        if (!eng_zero || !ora_zero) {
            rep.passed = false;
            if (rep.failures.size() < 20) {
                std::ostringstream os;
                os << comb.name << " at e(";
                for (size_t k = 0; k < i.size(); ++k)
                    os << (k ? "," : "") << datum_.label(i[k]);
                os << ")";
                if (!eng_zero)
                    os << " [engine residue " << eng.to_string() << "]";
                if (!ora_zero)
                    os << " [oracle residue on input " << ora_witness << "]";
                rep.failures.push_back(os.str());
            }
        }
    };

    const Op X0{false, 0};
    (void)X0;
    for (const Sequence& i : seqs) {
        // idempotent calculus, engine side
        for (const Sequence& j : seqs) {
            ++rep.checked;
            KLRElement prod = multiply(e(i), e(j));
            KLRElement expect = i == j ? e(i) : KLRElement(m);
            if (!(prod == expect)) {
                rep.passed = false;
                rep.failures.push_back("e(i)e(j) != delta_{ij} e(i)");
            }
        }
        for (int k = 0; k + 1 < m; ++k) {
            const bool eq = i[k] == i[k + 1];
            const int pair = datum_.pairing(i[k], i[k + 1]);
            Combination slide1{"dot slide psi_k x_k", {}};
            slide1.parts = {{1, {{true, k}, {false, k}}}, {-1, {{false, k + 1}, {true, k}}}};
            if (eq)
                slide1.parts.push_back({-1, {}});
            check(slide1, i);
            Combination slide2{"dot slide x_k psi_k", {}};
            slide2.parts = {{1, {{false, k}, {true, k}}}, {-1, {{true, k}, {false, k + 1}}}};
            if (eq)
                slide2.parts.push_back({-1, {}});
            check(slide2, i);
            for (int l = 0; l < m; ++l) {
                if (l == k || l == k + 1)
                    continue;
                Combination far{"distant dot slide", {}};
                far.parts = {{1, {{true, k}, {false, l}}}, {-1, {{false, l}, {true, k}}}};
                check(far, i);
            }
            Combination square{"psi^2", {}};
            square.parts = {{1, {{true, k}, {true, k}}}};
            if (eq) {
                // psi^2 e(i) = 0
            } else if (pair == 0) {
                square.parts.push_back({-1, {}});
            } else {
                const int qs = conv_.q_at(i[k], i[k + 1]);
                square.parts.push_back({-qs, {{false, k}}});
                square.parts.push_back({qs, {{false, k + 1}}});
            }
            check(square, i);
        }
        for (int k = 0; k < m; ++k)
            for (int l = k + 1; l < m; ++l) {
                Combination comm{"dot commutation", {}};
                comm.parts = {{1, {{false, k}, {false, l}}}, {-1, {{false, l}, {false, k}}}};
                check(comm, i);
            }
        for (int k = 0; k + 1 < m; ++k)
            for (int l = k + 2; l + 1 < m; ++l) {
                Combination comm{"distant crossing commutation", {}};
                comm.parts = {{1, {{true, k}, {true, l}}}, {-1, {{true, l}, {true, k}}}};
                check(comm, i);
            }
        for (int k = 0; k + 2 < m; ++k) {
            Combination braid{"braid", {}};
            braid.parts = {{1, {{true, k}, {true, k + 1}, {true, k}}},
                           {-1, {{true, k + 1}, {true, k}, {true, k + 1}}}};
            if (i[k] == i[k + 2] && datum_.pairing(i[k], i[k + 1]) == -1)
                braid.parts.push_back({-conv_.braid_at(i[k], i[k + 1]), {}});
            check(braid, i);
        }
    }
    // resolution of the identity, engine side
    KLRElement one = identity(nu);
    for (const Sequence& i : seqs) {
        for (int k = 0; k + 1 < m; ++k) {
            ++rep.checked;
            KLRElement g = psi(k, i);
            if (!(multiply(one, g) == g) || !(multiply(g, one) == g)) {
                rep.passed = false;
                rep.failures.push_back("sum of idempotents is not a unit");
            }
        }
    }
    return rep;
}

void KLRAlgebra::self_validate() const {
    const int n = datum_.rank();
    std::vector<RootVector> battery;
    for (int a = 0; a < n; ++a) {
        RootVector two(n, 0);
        two[a] = 2;
        battery.push_back(two);
        RootVector three(n, 0);
        three[a] = 3;
        battery.push_back(three);
        for (int b = a + 1; b < n; ++b) {
            RootVector ab(n, 0);
            ab[a] = 1;
            ab[b] = 1;
            battery.push_back(ab);
            if (datum_.pairing(a, b) == -1) {
                RootVector aab(n, 0);
                aab[a] = 2;
                aab[b] = 1;
                battery.push_back(aab);
                RootVector abb(n, 0);
                abb[a] = 1;
                abb[b] = 2;
                battery.push_back(abb);
            }
        }
    }
    for (const RootVector& nu : battery) {
        RelationReport rep = verify_relations(nu);
        if (!rep.passed)
            throw std::invalid_argument("relation convention failed validation: " +
                                        (rep.failures.empty() ? "?" : rep.failures.front()));
    }
}

SeriesTrunc KLRAlgebra::graded_dim_hom(const Sequence& i, const Sequence& j, long cutoff) const {
    if (cutoff > 20)
        throw std::invalid_argument("graded_dim_hom: cutoff must be <= 20");
    if (induced_root(datum_, i) != induced_root(datum_, j))
        throw std::invalid_argument("graded_dim_hom: sequences have different root vectors");
    const int m = static_cast<int>(i.size());
    SeriesTrunc dots = m == 0 ? SeriesTrunc::from_poly(LaurentPoly::one(), cutoff)
                              : SeriesTrunc::geometric(2, cutoff).pow(m);
    SeriesTrunc acc(cutoff);
    for (const Perm& w : all_perms(m)) {
        if (apply_perm(w, i) != j)
            continue;
        acc = acc + dots * LaurentPoly::q_power(psi_degree(w, i));
    }
    return acc;
}

std::map<long, std::pair<long, long>> KLRAlgebra::hom_rank_by_degree(const Sequence& i,
                                                                     const Sequence& j,
                                                                     long maxdeg) const {
    const int m = static_cast<int>(i.size());
    std::map<long, std::vector<KLRMonomial>> by_degree;
    for (const Perm& w : all_perms(m)) {
        if (apply_perm(w, i) != j)
            continue;
        long base = psi_degree(w, i);
        int dot_cap = static_cast<int>(maxdeg - base < 0 ? -1 : (maxdeg - base) / 2);
        if (dot_cap < 0)
            continue;
        for (const Exponents& d : exponents_up_to(m, dot_cap)) {
            KLRMonomial mono{w, d, i};
            long deg = degree(mono);
            if (deg <= maxdeg)
                by_degree[deg].push_back(mono);
        }
    }
    std::map<long, std::pair<long, long>> out;
    for (auto& [deg, monos] : by_degree) {
        long count = static_cast<long>(monos.size());
        long rank = 0;
        for (int input_bound = 2; input_bound <= 12; input_bound += 2) {
            auto inputs = exponents_up_to(m, input_bound);
            SparseElim<std::pair<int, Exponents>> elim;
            rank = 0;
            for (const KLRMonomial& mono : monos) {
                KLRElement el(m);
                el.add_term(mono.w, mono.dots, mono.idem, 1);
                SparseElim<std::pair<int, Exponents>>::Row row;
                for (size_t t = 0; t < inputs.size(); ++t) {
                    PolyState s0;
                    s0.emplace(i, MPoly::monomial(m, inputs[t]));
                    PolyState img = oracle_act(el, s0);
                    auto it = img.find(j);
                    if (it == img.end())
                        continue;
                    for (const auto& [exps, c] : it->second.terms())
                        row[{static_cast<int>(t), exps}] = Rational(c);
                }
                if (elim.add(std::move(row)))
                    ++rank;
            }
            if (rank == count)
                break;
        }
        out[deg] = {count, rank};
    }
    return out;
}

std::vector<KLRMonomial> KLRAlgebra::monomials_up_to_degree(const RootVector& nu,
                                                            long maxdeg) const {
    const int m = height(nu);
    std::vector<KLRMonomial> out;
    for (const Sequence& i : seq(datum_, nu))
        for (const Perm& w : all_perms(m)) {
            long base = psi_degree(w, i);
            if (base > maxdeg)
                continue;
            int dot_cap = static_cast<int>((maxdeg - base) / 2);
            for (const Exponents& d : exponents_up_to(m, dot_cap)) {
                KLRMonomial mono{w, d, i};
                if (degree(mono) <= maxdeg)
                    out.push_back(mono);
            }
        }
    return out;
}

BigInt KLRAlgebra::monomial_count_of_degree(const RootVector& nu, long d) const {
    const int m = height(nu);
    BigInt total = 0;
    for (const Sequence& i : seq(datum_, nu))
        for (const Perm& w : all_perms(m)) {
            long rem = d - psi_degree(w, i);
            if (rem < 0 || rem % 2)
                continue;
            long s = rem / 2;
            // weak compositions of s into m parts: C(s+m-1, m-1)
            BigInt ways = 1;
            for (long t = 1; t <= m - 1; ++t) {
                ways *= s + t;
                ways /= t;
            }
            if (m == 0)
                ways = (s == 0) ? 1 : 0;
            total += ways;
        }
    return total;
}

long KLRAlgebra::min_monomial_degree(const RootVector& nu) const {
    const int m = height(nu);
    long best = 0;
    for (const Sequence& i : seq(datum_, nu))
        for (const Perm& w : all_perms(m))
            best = std::min(best, psi_degree(w, i));
    return best;
}

KLRElement concat_embed(const KLRElement& a, const KLRElement& b) {
    const int ma = a.strands(), mb = b.strands();
    KLRElement out(ma + mb);
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) {
            std::vector<std::uint8_t> img(ma + mb);
            for (int k = 0; k < ma; ++k)
                img[k] = static_cast<std::uint8_t>(ta.w(k));
            for (int k = 0; k < mb; ++k)
                img[ma + k] = static_cast<std::uint8_t>(tb.w(k) + ma);
            Exponents dots = ta.dots;
            dots.insert(dots.end(), tb.dots.begin(), tb.dots.end());
            Sequence idem = ta.idem;
            idem.insert(idem.end(), tb.idem.begin(), tb.idem.end());
            out.add_term(Perm(std::move(img)), dots, idem, ca * cb);
        }
    return out;
}

OracleAgreementReport oracle_agreement_check(const KLRAlgebra& alg, const RootVector& nu,
                                             int dot_bound, int input_bound) {
    OracleAgreementReport rep;
    const int m = height(nu);
    auto seqs = seq(alg.datum(), nu);
    std::vector<KLRMonomial> monos;
    for (const Sequence& i : seqs)
        for (const Perm& w : all_perms(m))
            for (const Exponents& d : exponents_up_to(m, dot_bound))
                monos.push_back(KLRMonomial{w, d, i});
    auto inputs = exponents_up_to(m, input_bound);
    for (const KLRMonomial& mb : monos) {
        KLRElement eb(m);
        eb.add_term(mb.w, mb.dots, mb.idem, 1);
        Sequence tb = mb.target();
        // cache the b-images once per input
        std::vector<PolyState> b_img;
        for (const Exponents& f : inputs) {
            PolyState s0;
            s0.emplace(mb.idem, MPoly::monomial(m, f));
            b_img.push_back(alg.oracle_act(eb, s0));
        }
        for (const KLRMonomial& ma : monos) {
            if (ma.idem != tb)
                continue;
            KLRElement ea(m);
            ea.add_term(ma.w, ma.dots, ma.idem, 1);
            KLRElement ab = alg.multiply(ea, eb);
            for (size_t t = 0; t < inputs.size(); ++t) {
                PolyState s0;
                s0.emplace(mb.idem, MPoly::monomial(m, inputs[t]));
                PolyState lhs = alg.oracle_act(ab, s0);
                PolyState rhs = alg.oracle_act(ea, b_img[t]);
                ++rep.checked;
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "engine/oracle mismatch: a=" << ea.to_string() << " b=" << eb.to_string()
                       << " input " << MPoly::monomial(m, inputs[t]).to_string();
                    rep.witness = os.str();
                    rep.passed = false;
                    return rep;
                }
            }
        }
    }
    rep.passed = true;
    return rep;
}

OracleAgreementReport a1_specialization_check(int n, int random_trials, unsigned seed) {
    OracleAgreementReport rep;
    CartanDatum a1({"1"}, {});
    KLRAlgebra alg(a1, RelationConvention::standard(a1));
    const Sequence idem(n, 0);

    auto to_klr = [&](const NilElement& a) {
        KLRElement out(n);
        for (const auto& [m, c] : a.terms())
            out.add_term(m.w, m.dots, idem, c);
        return out;
    };
    auto compare = [&](const NilElement& a, const NilElement& b) {
        ++rep.checked;
        KLRElement klr_prod = alg.multiply(to_klr(a), to_klr(b));
        KLRElement nil_prod = to_klr(nil_multiply(a, b));
        if (!(klr_prod == nil_prod)) {
            std::ostringstream os;
            os << "a1 specialization mismatch: a=" << a.to_string() << " b=" << b.to_string();
            rep.witness = os.str();
            return false;
        }
        return true;
    };

    std::vector<NilElement> basis;
    for (const Perm& w : all_perms(n))
        for (const Exponents& d : exponents_up_to(n, 2))
            basis.push_back(NilElement::monomial(n, w, d));
    for (const NilElement& a : basis)
        for (const NilElement& b : basis)
            if (!compare(a, b)) {
                rep.passed = false;
                return rep;
            }

    std::mt19937 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int t = 0; t < random_trials; ++t) {
        NilElement a(n), b(n);
        for (int s = 0; s < 3; ++s) {
            a += basis[pick(rng)].scaled(coeff(rng));
            b += basis[pick(rng)].scaled(coeff(rng));
        }
        if (!compare(a, b)) {
            rep.passed = false;
            return rep;
        }
    }
    rep.passed = true;
    return rep;
}

}  // namespace qha
