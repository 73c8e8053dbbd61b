#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qha/rational.hpp"

namespace qha {

/// Coefficient vector of a positive root-lattice element, indexed by vertex.
using RootVector = std::vector<int>;
/// Integral weight in fundamental-weight coordinates, indexed by vertex.
using WeightVec = std::vector<int>;
/// Word in the vertex set: (i_1, ..., i_m) as vertex indices.
using Sequence = std::vector<int>;

struct UnsupportedTypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A simply-laced Cartan datum: a finite vertex set I together with an
/// oriented simple graph on it (the quiver).  The symmetric pairing
/// <a_i, a_j> is 2 on the diagonal, -1 across an edge in either direction
/// and 0 otherwise.
///
/// Vertices are canonically reordered by label (lexicographic string
/// compare), which pins down the ordering used for sequence enumeration and
/// basis indexing everywhere downstream.
class CartanDatum {
public:
    CartanDatum(std::vector<std::string> labels,
                std::vector<std::pair<std::string, std::string>> edges);

    int rank() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Vertex index for a label; throws std::invalid_argument if unknown.
    int index(const std::string& label) const;

    int pairing(int i, int j) const;
    int pairing_by_label(const std::string& a, const std::string& b) const;

    bool adjacent(int i, int j) const { return i != j && pairing(i, j) == -1; }
    /// Oriented edge test (i -> j).
    bool has_edge(int i, int j) const;
    /// Oriented edges as index pairs, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Classify connected components against the ADE shape list; throws
    /// UnsupportedTypeError when some component is not of type A, D or E.
    std::vector<std::string> classify() const;
    bool is_finite_type() const;

    /// Number of positive roots a finite-type datum must have (by shape).
    long expected_root_count() const;

    /// Same underlying graph with edge orientations given by mask bit per
    /// edge (bit set = reversed).  Used for orientation-independence checks.
    CartanDatum reoriented(unsigned long mask) const;

    bool operator==(const CartanDatum& o) const {
        return labels_ == o.labels_ && edges_ == o.edges_;
    }

    nlohmann::json to_json() const;
    /// {"vertices": ["1","2",...], "edges": [["1","2"], ...]}
    static CartanDatum from_json(const nlohmann::json& j);

    /// Standard named quivers with edges oriented toward the larger label:
    /// A<n>, D<n> (n >= 4), E6, E7, E8.
    static CartanDatum named(const std::string& name);

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
};

/// All positive roots of a finite-type datum, computed by closing the simple
/// roots under simple reflections and keeping the positive vectors.  Output
/// sorted by (height, coefficients).  Throws UnsupportedTypeError when the
/// datum is not ADE (the closure would not terminate inside the known ADE
/// root counts).
std::vector<RootVector> positive_roots(const CartanDatum& datum);

/// Number of multisets of positive roots summing to nu, by direct
/// backtracking enumeration.
long long kostant_count(const CartanDatum& datum, const RootVector& nu);

/// All sequences with induced root vector nu, in lexicographic order with
/// respect to the canonical vertex order.
std::vector<Sequence> seq(const CartanDatum& datum, const RootVector& nu);

/// m! / prod_i nu_i! -- the multinomial count of seq(nu).
BigInt seq_count(const RootVector& nu);

int height(const RootVector& nu);
RootVector simple_root(const CartanDatum& datum, int i);
RootVector induced_root(const CartanDatum& datum, const Sequence& s);

/// <lambda, alpha_i>: the omega-coordinate of a weight at vertex i.
int weight_pairing(const CartanDatum& datum, const WeightVec& lambda, int i);

RootVector root_from_json(const CartanDatum& datum, const nlohmann::json& j);
WeightVec weight_from_json(const CartanDatum& datum, const nlohmann::json& j);
nlohmann::json vertex_map_to_json(const CartanDatum& datum, const std::vector<int>& coeffs);

}  // namespace qha
