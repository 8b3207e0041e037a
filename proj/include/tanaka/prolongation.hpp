#pragma once

#include "tanaka/algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tanaka {

/// Degree-k map phi : m -> g with phi(m_{-i}) in g_{k-i}.
///
/// blocks[i-1] is the matrix of phi restricted to m_{-i}: columns follow the
/// basis of m_{-i}, rows the coordinates of g_{k-i}. Negative target degrees
/// use the basis of m, non-negative ones the basis of the computed layer.
struct GradedMap {
    int degree = 0;
    std::vector<Matrix> blocks;

    friend bool operator==(const GradedMap&, const GradedMap&) = default;
};

/// Identifies an algebra by its labels, degrees and structure constants.
std::uint64_t fingerprint(const Algebra& a);

/// Position of phi(e_j) inside the flattened coordinates of a degree-k map.
class MapLayout {
public:
    MapLayout() = default;
    /// `target_dims(d)` gives dim g_d for every d < k.
    MapLayout(const Algebra& a, int degree, const std::vector<std::size_t>& nonneg_dims);

    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return size_; }
    std::size_t offset(std::size_t basis_index) const { return offsets_.at(basis_index); }
    std::size_t width(std::size_t basis_index) const { return widths_.at(basis_index); }
    /// dim g_d for d < degree.
    std::size_t target_dim(int d) const;

private:
    int degree_ = 0;
    std::size_t size_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> widths_;
    std::vector<std::size_t> m_dims_;      // dim m_{-i}, index i
    std::vector<std::size_t> nonneg_dims_; // dim g_d, d >= 0
};

/// The layer g_k of the Tanaka prolongation.
struct ProlongationLayer {
    int degree = 0;
    MapLayout layout;
    /// RREF basis over the flattened coordinates of `layout`.
    std::vector<Vector> basis;
    std::uint64_t algebra = 0;

    std::size_t dim() const noexcept { return basis.size(); }
    /// Coordinates (in g_{k-i}) of the image of basis element `j` of m under basis map `t`.
    Vector image(std::size_t t, std::size_t j) const;
    GradedMap map(const Algebra& a, std::size_t t) const;
};

/// Flattens a GradedMap following `layout`.
Vector flatten(const Algebra& a, const MapLayout& layout, const GradedMap& phi);
GradedMap unflatten(const Algebra& a, const MapLayout& layout, const Vector& flat);

/// Space of degree-k maps satisfying the Leibniz rule, computed as one kernel.
/// `lower` must hold g_0, ..., g_{k-1} of the same algebra; throws LayerMismatch.
ProlongationLayer prolong_layer(const Algebra& a, int k, const std::vector<ProlongationLayer>& lower);

/// Degree-0 derivations of m (the layer g_0).
std::vector<GradedMap> der0(const Algebra& a);

/// Subspace of n x n matrices, RREF over row-major flattened entries.
class MatrixSubspace {
public:
    MatrixSubspace() = default;
    MatrixSubspace(std::size_t side, const std::vector<Matrix>& spanning);

    std::size_t side() const noexcept { return side_; }
    std::size_t dim() const noexcept { return space_.dim(); }
    std::vector<Matrix> basis() const;
    bool contains(const Matrix& m) const;
    const Subspace& flattened() const noexcept { return space_; }

    friend bool operator==(const MatrixSubspace&, const MatrixSubspace&) = default;

private:
    std::size_t side_ = 0;
    Subspace space_;
};

/// Degree-0 derivations vanishing on m_{-i}, i >= 2, as endomorphisms of m_{-1}
/// (matrix columns are images of the m_{-1} basis).
MatrixSubspace h0(const Algebra& a);

struct IterationVerdict {
    bool finite = false;
    /// dim m + sum of layer dims; meaningful when finite.
    std::size_t total_dim = 0;
    /// dims of g_0, g_1, ... as computed (ends with 0 when finite).
    std::vector<std::size_t> layer_dims;
    std::vector<ProlongationLayer> layers;
};

constexpr int default_max_degree = 10;

/// Computes g_0, ..., g_N and stops at the first zero layer.
IterationVerdict classify_by_iteration(const Algebra& a, int max_degree = default_max_degree);

/// Recomputes phi([x,y]) - [phi(x),y] - [x,phi(y)] on every basis pair,
/// independently of the solver. `lower` as for prolong_layer.
bool satisfies_leibniz(const Algebra& a, const std::vector<ProlongationLayer>& lower, const MapLayout& layout,
                       const Vector& flat);

} // namespace tanaka
