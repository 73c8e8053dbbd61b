#include "qha/orbits.hpp"

#include <algorithm>
#include <stdexcept>

namespace qha {

BigInt gl_order(int m, int q) {
    BigInt order = 1;
    BigInt qm = 1;
    for (int t = 0; t < m; ++t)
        qm *= q;
    BigInt qt = 1;
    for (int t = 0; t < m; ++t) {
        order *= qm - qt;
        qt *= q;
    }
    return order;
}

namespace {

struct EdgeShape {
    int from, to;  // vertex indices
    int rows, cols;
    int offset;  // first cell index in the flattened point
};

struct Generator {
    int vertex;
    int dim;
    GfMatrix g;
    GfMatrix ginv;
};

std::vector<Generator> group_generators(const Gf& gf, const std::vector<int>& dims) {
    std::vector<Generator> gens;
    for (size_t v = 0; v < dims.size(); ++v) {
        const int d = dims[v];
        if (d == 0)
            continue;
        for (int u = 1; u < gf.q(); ++u) {
            GfMatrix m = gf_identity(d);
            m[0] = static_cast<std::uint8_t>(u);
            gens.push_back({static_cast<int>(v), d, m, gf_inverse(gf, m, d)});
        }
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                if (k == l)
                    continue;
                for (int c = 1; c < gf.q(); ++c) {
                    GfMatrix m = gf_identity(d);
                    m[k * d + l] = static_cast<std::uint8_t>(c);
                    gens.push_back({static_cast<int>(v), d, m, gf_inverse(gf, m, d)});
                }
            }
    }
    return gens;
}

std::vector<GfMatrix> decode_point(unsigned long long idx, const std::vector<EdgeShape>& shapes,
                                   int q) {
    std::vector<GfMatrix> mats;
    for (const EdgeShape& sh : shapes) {
        GfMatrix m(static_cast<size_t>(sh.rows) * sh.cols);
        for (size_t c = 0; c < m.size(); ++c) {
            m[c] = static_cast<std::uint8_t>(idx % q);
            idx /= q;
        }
        mats.push_back(std::move(m));
    }
    return mats;
}

unsigned long long encode_point(const std::vector<GfMatrix>& mats, int q) {
    unsigned long long idx = 0;
    unsigned long long base = 1;
    for (const GfMatrix& m : mats)
        for (std::uint8_t v : m) {
            idx += base * v;
            base *= q;
        }
    return idx;
}

// all invertible dim x dim matrices (used by the Burnside check only)
std::vector<GfMatrix> full_gl(const Gf& gf, int dim) {
    std::vector<GfMatrix> out;
    if (dim == 0) {
        out.push_back({});
        return out;
    }
    const size_t cells = static_cast<size_t>(dim) * dim;
    GfMatrix m(cells, 0);
    while (true) {
        if (gf_invertible(gf, m, dim))
            out.push_back(m);
        size_t t = 0;
        while (t < cells && m[t] == gf.q() - 1)
            m[t++] = 0;
        if (t == cells)
            break;
        ++m[t];
    }
    return out;
}

// q^nullity of A -> g_to A - A g_from on rows x cols matrices
unsigned long long fixed_count_edge(const Gf& gf, const GfMatrix& g_to, const GfMatrix& g_from,
                                    int rows, int cols) {
    const int cells = rows * cols;
    GfMatrix sys(static_cast<size_t>(cells) * cells, 0);
    for (int r = 0; r < rows; ++r)
        for (int s = 0; s < cols; ++s) {
            const int col_idx = r * cols + s;  // basis matrix E_{rs}
            for (int a = 0; a < rows; ++a)
                for (int b = 0; b < cols; ++b) {
                    std::uint8_t val = 0;
                    if (b == s)
                        val = gf.add(val, g_to[a * rows + r]);
                    if (a == r)
                        val = gf.sub(val, g_from[s * cols + b]);
                    sys[(a * cols + b) * cells + col_idx] = val;
                }
        }
    int rank = gf_rank(gf, sys, cells, cells);
    unsigned long long fixed = 1;
    for (int t = 0; t < cells - rank; ++t)
        fixed *= gf.q();
    return fixed;
}

}  // namespace

OrbitReport enumerate_orbits(const CartanDatum& datum, const RootVector& nu, int q, bool burnside) {
    if (static_cast<int>(nu.size()) != datum.rank())
        throw std::invalid_argument("enumerate_orbits: root vector has wrong rank");
    datum.classify();  // finite type required
    Gf gf(q);

    std::vector<EdgeShape> shapes;
    int cells = 0;
    for (const auto& [i, j] : datum.edges()) {
        EdgeShape sh{i, j, nu[j], nu[i], cells};
        cells += sh.rows * sh.cols;
        shapes.push_back(sh);
    }
    unsigned long long space = 1;
    for (int t = 0; t < cells; ++t) {
        space *= static_cast<unsigned long long>(q);
        if (space > (1ull << 24))
            throw std::invalid_argument(
                "enumerate_orbits: representation space of " + std::to_string(cells) +
                " cells over F_" + std::to_string(q) + " exceeds the 2^24 point bound");
    }

    OrbitReport rep;
    rep.space_size = space;
    rep.group_order = 1;
    for (int v = 0; v < datum.rank(); ++v)
        rep.group_order *= gl_order(nu[v], q);

    auto gens = group_generators(gf, nu);
    std::vector<bool> visited(space, false);
    std::vector<unsigned long long> stack;
    for (unsigned long long seed = 0; seed < space; ++seed) {
        if (visited[seed])
            continue;
        unsigned long long size = 0;
        stack.push_back(seed);
        visited[seed] = true;
        while (!stack.empty()) {
            unsigned long long idx = stack.back();
            stack.pop_back();
            ++size;
            auto mats = decode_point(idx, shapes, q);
            for (const Generator& g : gens) {
                auto moved = mats;
                for (size_t e = 0; e < shapes.size(); ++e) {
                    const EdgeShape& sh = shapes[e];
                    if (sh.to == g.vertex)
                        moved[e] = gf_mul(gf, g.g, moved[e], sh.rows, sh.rows, sh.cols);
                    if (sh.from == g.vertex)
                        moved[e] = gf_mul(gf, moved[e], g.ginv, sh.rows, sh.cols, sh.cols);
                }
                unsigned long long nidx = encode_point(moved, q);
                if (!visited[nidx]) {
                    visited[nidx] = true;
                    stack.push_back(nidx);
                }
            }
        }
        rep.orbits.emplace_back(seed, size);
        ++rep.orbit_count;
    }

    if (burnside) {
        if (rep.group_order > 100000)
            throw std::invalid_argument("enumerate_orbits: Burnside check needs group order <= 1e5");
        std::vector<std::vector<GfMatrix>> per_vertex;
        for (int v = 0; v < datum.rank(); ++v)
            per_vertex.push_back(full_gl(gf, nu[v]));
        std::vector<size_t> pick(datum.rank(), 0);
        BigInt fixed_total = 0;
        while (true) {
            unsigned long long fixed = 1;
            for (const EdgeShape& sh : shapes)
                fixed *= fixed_count_edge(gf, per_vertex[sh.to][pick[sh.to]],
                                          per_vertex[sh.from][pick[sh.from]], sh.rows, sh.cols);
            fixed_total += BigInt(static_cast<unsigned long>(fixed));
            int v = 0;
            while (v < datum.rank() && pick[v] + 1 == per_vertex[v].size())
                pick[v++] = 0;
            if (v == datum.rank())
                break;
            ++pick[v];
        }
        rep.burnside_checked = true;
        BigInt quot, remv;
        mpz_tdiv_qr(quot.get_mpz_t(), remv.get_mpz_t(), fixed_total.get_mpz_t(),
                    rep.group_order.get_mpz_t());
        rep.burnside_ok = qha::is_zero(remv) && quot == BigInt(static_cast<long>(rep.orbit_count));
    }
    return rep;
}

nlohmann::json OrbitReport::to_json(const CartanDatum& datum, const RootVector& nu) const {
    nlohmann::json j;
    j["nu"] = vertex_map_to_json(datum, nu);
    j["orbit_count"] = orbit_count;
    j["space_size"] = space_size;
    j["group_order"] = group_order.get_str();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [rep_idx, size] : orbits)
        arr.push_back({rep_idx, size});
    j["orbits"] = arr;
    if (burnside_checked)
        j["burnside_ok"] = burnside_ok;
    return j;
}

bool compare_kostant(const CartanDatum& datum, const RootVector& nu, int q) {
    return enumerate_orbits(datum, nu, q).orbit_count == kostant_count(datum, nu);
}

}  // namespace qha
