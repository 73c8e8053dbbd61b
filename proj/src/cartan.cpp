#include "qha/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qha {

CartanDatum::CartanDatum(std::vector<std::string> labels,
                         std::vector<std::pair<std::string, std::string>> edges) {
    if (labels.empty())
        throw std::invalid_argument("CartanDatum: empty vertex set");
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("CartanDatum: duplicate vertex label");
    labels_ = std::move(labels);

    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        int i = index(a), j = index(b);
        if (i == j)
            throw std::invalid_argument("CartanDatum: loop edge at vertex " + a);
        auto key = std::minmax(i, j);
        if (!seen.insert({key.first, key.second}).second)
            throw std::invalid_argument("CartanDatum: multiple edges between " + a + " and " + b);
        edges_.emplace_back(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
}

int CartanDatum::index(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw std::invalid_argument("unknown vertex '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

int CartanDatum::pairing(int i, int j) const {
    if (i < 0 || j < 0 || i >= rank() || j >= rank())
        throw std::invalid_argument("pairing: vertex index out of range");
    if (i == j)
        return 2;
    for (const auto& [a, b] : edges_)
        if ((a == i && b == j) || (a == j && b == i))
            return -1;
    return 0;
}

int CartanDatum::pairing_by_label(const std::string& a, const std::string& b) const {
    return pairing(index(a), index(b));
}

bool CartanDatum::has_edge(int i, int j) const {
    return std::find(edges_.begin(), edges_.end(), std::make_pair(i, j)) != edges_.end();
}

namespace {

// Arm lengths (in edges) of the tree component from its unique branch node.
std::vector<int> arm_lengths(const std::vector<std::vector<int>>& adj,
                             const std::vector<int>& comp, int center) {
    std::vector<int> arms;
    for (int start : adj[center]) {
        int len = 1, prev = center, cur = start;
        while (true) {
            const auto& nb = adj[cur];
            int next = -1;
            for (int x : nb)
                if (x != prev)
                    next = x;
            if (next < 0)
                break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    (void)comp;
    std::sort(arms.begin(), arms.end());
    return arms;
}

}  // namespace

std::vector<std::string> CartanDatum::classify() const {
    const int n = rank();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges_) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> comp_id(n, -1);
    std::vector<std::string> types;
    for (int s = 0; s < n; ++s) {
        if (comp_id[s] >= 0)
            continue;
        std::vector<int> comp;
        comp.push_back(s);
        comp_id[s] = s;
        for (size_t h = 0; h < comp.size(); ++h)
            for (int x : adj[comp[h]])
                if (comp_id[x] < 0) {
                    comp_id[x] = s;
                    comp.push_back(x);
                }
        long edge_count = 0;
        for (int v : comp)
            edge_count += static_cast<long>(adj[v].size());
        edge_count /= 2;
        const long m = static_cast<long>(comp.size());
        if (edge_count != m - 1)
            throw UnsupportedTypeError("component contains a cycle: not finite type");

        int branch = -1;
        for (int v : comp) {
            if (adj[v].size() > 3)
                throw UnsupportedTypeError("vertex of degree > 3: not finite type");
            if (adj[v].size() == 3) {
                if (branch >= 0)
                    throw UnsupportedTypeError("two branch vertices: not finite type");
                branch = v;
            }
        }
        if (branch < 0) {
            types.push_back("A" + std::to_string(m));
            continue;
        }
        auto arms = arm_lengths(adj, comp, branch);
        if (arms[0] == 1 && arms[1] == 1) {
            types.push_back("D" + std::to_string(m));
        } else if (arms == std::vector<int>{1, 2, 2}) {
            types.push_back("E6");
        } else if (arms == std::vector<int>{1, 2, 3}) {
            types.push_back("E7");
        } else if (arms == std::vector<int>{1, 2, 4}) {
            types.push_back("E8");
        } else {
            throw UnsupportedTypeError("branch shape outside the ADE list: not finite type");
        }
    }
    std::sort(types.begin(), types.end());
    return types;
}

bool CartanDatum::is_finite_type() const {
    try {
        classify();
        return true;
    } catch (const UnsupportedTypeError&) {
        return false;
    }
}

long CartanDatum::expected_root_count() const {
    long total = 0;
    for (const std::string& t : classify()) {
        long m = std::stol(t.substr(1));
        if (t[0] == 'A')
            total += m * (m + 1) / 2;
        else if (t[0] == 'D')
            total += m * (m - 1);
        else if (m == 6)
            total += 36;
        else if (m == 7)
            total += 63;
        else
            total += 120;
    }
    return total;
}

CartanDatum CartanDatum::reoriented(unsigned long mask) const {
    std::vector<std::pair<std::string, std::string>> es;
    for (size_t k = 0; k < edges_.size(); ++k) {
        auto [a, b] = edges_[k];
        if (mask & (1ul << k))
            std::swap(a, b);
        es.emplace_back(labels_[a], labels_[b]);
    }
    return CartanDatum(labels_, es);
}

nlohmann::json CartanDatum::to_json() const {
    nlohmann::json j;
    j["vertices"] = labels_;
    nlohmann::json es = nlohmann::json::array();
    for (const auto& [a, b] : edges_)
        es.push_back({labels_[a], labels_[b]});
    j["edges"] = es;
    return j;
}

CartanDatum CartanDatum::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("quiver JSON must have \"vertices\" and \"edges\"");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "vertices" && key != "edges")
            throw std::invalid_argument("quiver JSON: unknown field \"" + key + "\"");
    }
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("quiver JSON: edges must be [from, to] pairs");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return CartanDatum(labels, edges);
}

CartanDatum CartanDatum::named(const std::string& name) {
    if (name.size() < 2 || (name[0] != 'A' && name[0] != 'D' && name[0] != 'E'))
        throw std::invalid_argument("unknown quiver name '" + name + "'");
    long m = std::stol(name.substr(1));
    if (m < 1 || m > 9)
        throw std::invalid_argument("unknown quiver name '" + name + "'");
    std::vector<std::string> labels;
    for (long i = 1; i <= m; ++i)
        labels.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    auto edge = [&](long a, long b) {
        edges.emplace_back(std::to_string(a), std::to_string(b));
    };
    if (name[0] == 'A') {
        for (long i = 1; i < m; ++i)
            edge(i, i + 1);
    } else if (name[0] == 'D') {
        if (m < 4)
            throw std::invalid_argument("D quivers need rank >= 4");
        for (long i = 1; i < m - 1; ++i)
            edge(i, i + 1);
        edge(m - 2, m);
    } else {
        if (m < 6 || m > 8)
            throw std::invalid_argument("E quivers have rank 6, 7 or 8");
        for (long i = 1; i < m; ++i)
            edge(i, i + 1);
        edges.pop_back();
        edge(3, m);  // branch node at position 3: arms (1, 2, m-4)
    }
    return CartanDatum(labels, edges);
}

int height(const RootVector& nu) {
    return std::accumulate(nu.begin(), nu.end(), 0);
}

RootVector simple_root(const CartanDatum& datum, int i) {
    RootVector r(datum.rank(), 0);
    r.at(i) = 1;
    return r;
}

RootVector induced_root(const CartanDatum& datum, const Sequence& s) {
    RootVector r(datum.rank(), 0);
    for (int i : s)
        r.at(i) += 1;
    return r;
}

std::vector<RootVector> positive_roots(const CartanDatum& datum) {
    const long bound = datum.expected_root_count();  // throws if not ADE
    const int n = datum.rank();
    std::set<RootVector> roots;
    std::vector<RootVector> queue;
    for (int i = 0; i < n; ++i) {
        roots.insert(simple_root(datum, i));
        queue.push_back(simple_root(datum, i));
    }
    while (!queue.empty()) {
        RootVector b = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            int pair = 0;
            for (int j = 0; j < n; ++j)
                pair += b[j] * datum.pairing(j, i);
            RootVector refl = b;
            refl[i] -= pair;
            if (std::all_of(refl.begin(), refl.end(), [](int c) { return c >= 0; }) &&
                roots.insert(refl).second) {
                queue.push_back(refl);
                if (static_cast<long>(roots.size()) > bound)
                    throw UnsupportedTypeError("reflection closure exceeded the ADE root count");
            }
        }
    }
    std::vector<RootVector> out(roots.begin(), roots.end());
    std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
        int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
    });
    return out;
}

namespace {

long long kostant_rec(const std::vector<RootVector>& roots, size_t idx, RootVector rem) {
    if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; }))
        return 1;
    if (idx == roots.size())
        return 0;
    long long total = 0;
    while (true) {
        total += kostant_rec(roots, idx + 1, rem);
        bool ok = true;
        for (size_t j = 0; j < rem.size(); ++j) {
            rem[j] -= roots[idx][j];
            if (rem[j] < 0)
                ok = false;
        }
        if (!ok)
            break;
    }
    return total;
}

}  // namespace

long long kostant_count(const CartanDatum& datum, const RootVector& nu) {
    if (static_cast<int>(nu.size()) != datum.rank())
        throw std::invalid_argument("kostant_count: root vector has wrong rank");
    auto roots = positive_roots(datum);
    return kostant_rec(roots, 0, nu);
}

std::vector<Sequence> seq(const CartanDatum& datum, const RootVector& nu) {
    if (static_cast<int>(nu.size()) != datum.rank())
        throw std::invalid_argument("seq: root vector has wrong rank");
    Sequence base;
    for (int i = 0; i < datum.rank(); ++i) {
        if (nu[i] < 0)
            throw std::invalid_argument("seq: root vector must be nonnegative");
        base.insert(base.end(), nu[i], i);
    }
    std::vector<Sequence> out;
    if (base.empty()) {
        out.push_back({});
        return out;
    }
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

BigInt seq_count(const RootVector& nu) {
    BigInt total = 1;
    long m = 0;
    for (int c : nu) {
        for (int t = 1; t <= c; ++t) {
            ++m;
            total *= m;
            total /= t;
        }
    }
    return total;
}

int weight_pairing(const CartanDatum& datum, const WeightVec& lambda, int i) {
    if (i < 0 || i >= datum.rank())
        throw std::invalid_argument("weight_pairing: vertex index out of range");
    if (static_cast<int>(lambda.size()) != datum.rank())
        throw std::invalid_argument("weight_pairing: weight has wrong rank");
    return lambda[i];
}

static std::vector<int> vertex_map_from_json(const CartanDatum& datum, const nlohmann::json& j,
                                             bool require_nonneg) {
    if (!j.is_object())
        throw std::invalid_argument("expected a JSON object mapping vertex -> integer");
    std::vector<int> out(datum.rank(), 0);
    for (const auto& [key, value] : j.items()) {
        int idx = datum.index(key);
        out[idx] = value.get<int>();
        if (require_nonneg && out[idx] < 0)
            throw std::invalid_argument("coefficient at vertex '" + key + "' must be >= 0");
    }
    return out;
}

RootVector root_from_json(const CartanDatum& datum, const nlohmann::json& j) {
    return vertex_map_from_json(datum, j, true);
}

WeightVec weight_from_json(const CartanDatum& datum, const nlohmann::json& j) {
    return vertex_map_from_json(datum, j, false);
}

nlohmann::json vertex_map_to_json(const CartanDatum& datum, const std::vector<int>& coeffs) {
    nlohmann::json j = nlohmann::json::object();
    for (int i = 0; i < datum.rank(); ++i)
        j[datum.label(i)] = coeffs.at(i);
    return j;
}

}  // namespace qha
