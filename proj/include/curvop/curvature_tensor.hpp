#pragma once

#include "curvop/wedge_basis.hpp"

#include <cstddef>
#include <vector>

namespace curvop {

struct TensorIndex {
    int i = 0, j = 0, k = 0, l = 0;

    friend bool operator==(const TensorIndex&, const TensorIndex&) = default;
};

// (4,0) curvature tensor R_{ijkl} in an orthonormal frame of dimension dim.
//
// Only canonical representatives are stored: i < j, k < l and
// (i,j) <= (k,l) lexicographically. Every other tuple is resolved through
// antisymmetry in each slot pair and pair symmetry, so those identities hold
// exactly. Indices are 1-based.
class CurvatureTensor {
public:
    explicit CurvatureTensor(int dim);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] std::size_t pair_count() const { return pairs_.size(); }

    // Throws DomainError for an index outside 1..dim.
    [[nodiscard]] double operator()(int i, int j, int k, int l) const;
    // Writes the canonical representative, sign-adjusted. A repeated index in
    // a slot pair only accepts 0.
    void set(int i, int j, int k, int l, double value);

    // Lexicographic position of the pair (i,j), i < j.
    [[nodiscard]] std::size_t pair_index(int i, int j) const;
    [[nodiscard]] const Bivector& pair_at(std::size_t p) const { return pairs_[p]; }

    // Canonical tuples in storage order with their values.
    template <class Fn>
    void for_each_canonical(Fn&& fn) const {
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            for (std::size_t q = p; q < pairs_.size(); ++q) {
                fn(TensorIndex{pairs_[p].i, pairs_[p].j, pairs_[q].i, pairs_[q].j}, values_[packed(p, q)]);
            }
        }
    }

    // Value at canonical pair positions p, q (either order).
    [[nodiscard]] double at_pairs(std::size_t p, std::size_t q) const {
        return p <= q ? values_[packed(p, q)] : values_[packed(q, p)];
    }

    // max |R_ijkl + R_iklj + R_iljk| over all index tuples.
    [[nodiscard]] double max_bianchi_residual() const;

private:
    [[nodiscard]] std::size_t packed(std::size_t p, std::size_t q) const {
        return p * pairs_.size() - p * (p + 1) / 2 + q;
    }
    void check(int i) const;

    int dim_;
    std::vector<Bivector> pairs_;
    std::vector<std::size_t> pair_lookup_;
    std::vector<double> values_;
};

[[nodiscard]] inline double canonical_component(const CurvatureTensor& tensor, int i, int j, int k, int l) {
    return tensor(i, j, k, l);
}

}  // namespace curvop
