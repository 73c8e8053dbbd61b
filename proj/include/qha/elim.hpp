#pragma once

#include <map>

#include "qha/rational.hpp"

namespace qha {

/// Sparse row-echelon accumulator over the rationals, pivoting on the
/// smallest key.  Rows are maps key -> coefficient; pivot rows are kept
/// normalized with leading coefficient 1.
template <class Key>
class SparseElim {
public:
    using Row = std::map<Key, Rational>;

    Row reduce(Row r) const {
        while (!r.empty()) {
            auto lead = r.begin();
            auto p = pivots_.find(lead->first);
            if (p == pivots_.end())
                break;
            Rational f = lead->second;
            for (const auto& [k, v] : p->second) {
                auto it = r.find(k);
                if (it == r.end()) {
                    r.emplace(k, -f * v);
                } else {
                    it->second -= f * v;
                    if (is_zero(it->second))
                        r.erase(it);
                }
            }
        }
        return r;
    }

    /// Returns true when the row was independent (a new pivot was added).
    bool add(Row r) {
        r = reduce(std::move(r));
        if (r.empty())
            return false;
        Rational lead = r.begin()->second;
        for (auto& [k, v] : r)
            v /= lead;
        Key key = r.begin()->first;
        pivots_.emplace(std::move(key), std::move(r));
        return true;
    }

    bool reduces_to_zero(Row r) const { return reduce(std::move(r)).empty(); }

    size_t rank() const { return pivots_.size(); }
    const std::map<Key, Row>& pivots() const { return pivots_; }

private:
    std::map<Key, Row> pivots_;
};

}  // namespace qha
