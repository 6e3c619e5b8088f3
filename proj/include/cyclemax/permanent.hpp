#pragma once

#include "cyclemax/bigcount.hpp"
#include "cyclemax/graph.hpp"

#include <cstdint>
#include <vector>

namespace cyclemax {

class DenseMatrix01 {
public:
    explicit DenseMatrix01(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    int order() const { return n_; }
    std::uint8_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    std::uint8_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    friend bool operator==(const DenseMatrix01&, const DenseMatrix01&) = default;

private:
    int n_;
    std::vector<std::uint8_t> a_;
};

// Identity blocks on the diagonal, all-ones blocks where h is 1.
struct BlockMatrixSpec {
    std::vector<int> sizes;
    std::vector<std::vector<std::uint8_t>> h;

    int blocks() const { return static_cast<int>(sizes.size()); }
    int total() const;
    void validate() const;
};

BlockMatrixSpec block_spec_from(const BlowupSpec& spec);
DenseMatrix01 adjacency_plus_identity(const Graph& g);
DenseMatrix01 expand_block_spec(const BlockMatrixSpec& spec);

inline constexpr int ryser_max_order = 30;

// Gray-code Ryser, split into independent chunks across threads.
BigCount ryser_permanent(const DenseMatrix01& a);
// Plain subset sum of the inclusion-exclusion formula, one thread.
BigCount ryser_permanent_reference(const DenseMatrix01& a);

// Permanent of the expanded block matrix from a sum over block-occupancy
// vectors (k_1..k_p). The parallel kernel caches per-block factor tables and
// hoists partial products out of the innermost loop.
BigCount block_permanent(const BlockMatrixSpec& spec);
// Direct transcription of the occupancy-vector sum, one thread.
BigCount block_permanent_reference(const BlockMatrixSpec& spec);

// c(G) <= perm(A + I) / 2.
BigCount cycle_bound_perm(const Graph& g);
BigCount cycle_bound_blowup(const BlockMatrixSpec& spec);

}
