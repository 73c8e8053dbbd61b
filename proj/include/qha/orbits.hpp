#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qha/cartan.hpp"
#include "qha/gf.hpp"

namespace qha {

/// A point of the representation space: one matrix per oriented edge i -> j
/// with shape nu_j x nu_i, flattened in the edge order of the datum.
struct FiniteRep {
    int q = 0;
    std::vector<GfMatrix> edge_matrices;
};

struct OrbitReport {
    long long orbit_count = 0;
    unsigned long long space_size = 0;
    BigInt group_order;
    /// lex-smallest point index of each orbit, with the orbit size
    std::vector<std::pair<unsigned long long, unsigned long long>> orbits;
    /// Burnside cross-check values (set when requested)
    bool burnside_checked = false;
    bool burnside_ok = false;

    nlohmann::json to_json(const CartanDatum& datum, const RootVector& nu) const;
};

/// Exact orbit count of prod_i GL(nu_i, F_q) acting on the representation
/// space by base change A_{ij} -> g_j A_{ij} g_i^{-1}, by a canonical
/// representative sweep (lex-order seeds, BFS over group generators).
/// Requires finite type, q in {2,3,4,5}, |space| <= 2^24.
OrbitReport enumerate_orbits(const CartanDatum& datum, const RootVector& nu, int q,
                             bool burnside = false);

/// Orbit count equals the Kostant partition count (the counting shadow of
/// indecomposables having positive roots as dimension vectors).
bool compare_kostant(const CartanDatum& datum, const RootVector& nu, int q);

/// |GL(m, q)| = prod_{t<m} (q^m - q^t).
BigInt gl_order(int m, int q);

}  // namespace qha
