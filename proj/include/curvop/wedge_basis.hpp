#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace curvop {

// Y_i ^ Y_j with 1-based i < j.
struct Bivector {
    int i = 0;
    int j = 0;

    friend bool operator==(const Bivector&, const Bivector&) = default;
    friend auto operator<=>(const Bivector&, const Bivector&) = default;
};

[[nodiscard]] std::string to_string(const Bivector& b);

// The two kinds of 2-element blocks: one index from {2n-1, 2n} or none.
enum class BlockFamily { HorizontalVertical, DoubleHorizontal };

struct MixedBlock {
    std::size_t offset = 0;  // position of the first member in the basis
    std::array<Bivector, 2> members;
    BlockFamily family = BlockFamily::DoubleHorizontal;
};

// Ordered bivector basis of Lambda^2: the n holomorphic pairs first, then the
// n^2 - n two-element blocks {(i,j), (i',j')} with i' and j' the partners of i and j.
class WedgeBasis {
public:
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t size() const { return elements_.size(); }
    [[nodiscard]] const Bivector& operator[](std::size_t k) const { return elements_[k]; }
    [[nodiscard]] const std::vector<Bivector>& elements() const { return elements_; }
    [[nodiscard]] std::size_t holomorphic_size() const { return static_cast<std::size_t>(n_); }
    [[nodiscard]] const std::vector<MixedBlock>& mixed_blocks() const { return blocks_; }

    // Block id (0 = holomorphic block, k >= 1 = mixed_blocks()[k-1]) of each position.
    [[nodiscard]] std::size_t block_of(std::size_t position) const { return block_id_[position]; }
    // Position of b in the basis; throws DomainError if b is not a basis element.
    [[nodiscard]] std::size_t position(const Bivector& b) const;
    // The 2-element block containing both a and b; throws DomainError otherwise.
    [[nodiscard]] const MixedBlock& find_block(const Bivector& a, const Bivector& b) const;

private:
    friend WedgeBasis build_wedge_basis(int n);

    int n_ = 0;
    std::vector<Bivector> elements_;
    std::vector<MixedBlock> blocks_;
    std::vector<std::size_t> block_id_;
};

// Throws DomainError for n < 2.
[[nodiscard]] WedgeBasis build_wedge_basis(int n);

// Number of unordered index pairs, 2n^2 - n.
[[nodiscard]] constexpr std::size_t bivector_count(int n) {
    return static_cast<std::size_t>(2 * n * n - n);
}

}  // namespace curvop
