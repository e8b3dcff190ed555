#include "curvop/wedge_basis.hpp"

#include "curvop/errors.hpp"
#include "curvop/frame.hpp"

#include <algorithm>
#include <string>

namespace curvop {

std::string to_string(const Bivector& b) {
    return "Y" + std::to_string(b.i) + "^Y" + std::to_string(b.j);
}

WedgeBasis build_wedge_basis(int n) {
    if (n < 2) throw DomainError("wedge basis needs n >= 2, got " + std::to_string(n));

    const int dim = 2 * n;
    WedgeBasis basis;
    basis.n_ = n;
    basis.elements_.reserve(bivector_count(n));

    for (int i = 1; i < dim; i += 2) basis.elements_.push_back({i, i + 1});
    basis.block_id_.assign(static_cast<std::size_t>(n), 0);

    // Lexicographic scan; each unclaimed non-holomorphic pair opens a block
    // together with its partner pair.
    std::vector<std::vector<bool>> claimed(dim + 1, std::vector<bool>(dim + 1, false));
    for (int i = 1; i <= dim; ++i) {
        for (int j = i + 1; j <= dim; ++j) {
            if (j == holomorphic_partner(i, n) || claimed[i][j]) continue;
            const int ip = holomorphic_partner(i, n);
            const int jp = holomorphic_partner(j, n);
            const Bivector first{i, j};
            const Bivector second{std::min(ip, jp), std::max(ip, jp)};
            claimed[i][j] = claimed[second.i][second.j] = true;

            MixedBlock block;
            block.offset = basis.elements_.size();
            block.members = {first, second};
            block.family = (j >= theta_index(n)) ? BlockFamily::HorizontalVertical
                                                 : BlockFamily::DoubleHorizontal;
            basis.blocks_.push_back(block);
            basis.elements_.push_back(first);
            basis.elements_.push_back(second);
            basis.block_id_.push_back(basis.blocks_.size());
            basis.block_id_.push_back(basis.blocks_.size());
        }
    }
    return basis;
}

std::size_t WedgeBasis::position(const Bivector& b) const {
    const auto it = std::find(elements_.begin(), elements_.end(), b);
    if (it == elements_.end()) throw DomainError(to_string(b) + " is not a basis bivector");
    return static_cast<std::size_t>(it - elements_.begin());
}

const MixedBlock& WedgeBasis::find_block(const Bivector& a, const Bivector& b) const {
    const std::size_t pa = position(a);
    const std::size_t pb = position(b);
    const std::size_t id = block_id_[pa];
    if (id == 0 || block_id_[pb] != id || pa == pb) {
        throw DomainError("{" + to_string(a) + ", " + to_string(b) + "} is not a two-element block");
    }
    return blocks_[id - 1];
}

}  // namespace curvop
