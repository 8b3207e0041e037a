#pragma once

#include "tanaka/algebra.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace tanaka {

/// Alternating 2-cochain of a base algebra with values in the module
/// V = <Y_1, ..., Y_s>, deg Y_i = -i. `values[(i,j)]`, i < j, is a vector of
/// length s holding the Y-coordinates of alpha(e_i, e_j).
struct Cochain2 {
    std::size_t module_dim = 0;
    std::map<IndexPair, Vector> values;
    int degree = 0;

    /// alpha(e_i, e_j) for any ordered pair.
    Vector at(std::size_t i, std::size_t j) const;
    bool is_zero() const;

    friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

/// Degree-0 1-cochain: f(e_b) = coefficient[b] * Y_{-deg e_b}.
using Cochain1 = std::map<std::size_t, Scalar>;

/// Input of a special extension in the coordinate form
///
///   [X, Y_i] = Y_{i+1},  [Z_j, Y_i] = 0,  [Y_i, Y_j] = 0,
///   [u, v]_m = [u, v]_n + cocycle(u, v)   for u, v in the base.
///
/// X is base basis element `x_index` (degree -1); the covector alpha is its
/// dual coordinate, so W is spanned by the remaining degree -1 elements.
struct ExtensionData {
    Algebra base;
    std::size_t x_index = 0;
    int s = 2;
    Cochain2 cocycle;
    /// Labels of Y_1..Y_s; defaults to "Y1".."Ys" (or "V1".. on collision).
    std::vector<std::string> y_labels;
};

/// Builds the extension. Output basis order is X, Y_1..Y_s, then the other
/// base elements in their base order.
///
/// Throws DegreeViolation when a cocycle value leaves the degree-0 slot and
/// JacobiViolation (with the offending triple) when the result is not a Lie
/// algebra. Over the 3-dimensional Heisenberg base, a nonzero [Z1,Z2]
/// component is only closed for s = 3: for s >= 4 the Jacobi identity on
/// (X, Z1, Z2) forces it to vanish, for s = 2 it has no slot.
Algebra special_extension(const ExtensionData& data);

/// Index of base element `b` in the output basis of special_extension.
std::size_t extension_index(const ExtensionData& data, std::size_t b);

struct H2Result {
    std::size_t dim = 0;
    std::size_t cocycle_dim = 0;
    std::size_t coboundary_dim = 0;
    /// Cocycles spanning a complement of the coboundaries.
    std::vector<Cochain2> representatives;
    /// Covector on the base defining the module action.
    Vector alpha;
};

/// Degree-0 second cohomology of the base with coefficients in the
/// s-dimensional module on which x acts by alpha(x) Y_i -> Y_{i+1} for x in
/// the degree -1 layer, and trivially on W and the deeper layers.
///
/// `w` is a codimension-1 subspace of n_{-1} in layer coordinates; alpha is
/// normalized to 1 on the first degree -1 basis vector outside W.
H2Result h2_0(const Algebra& base, const Subspace& w, int s);
/// Same with W spanned by every degree -1 basis element except `x_index`.
H2Result h2_0(const Algebra& base, std::size_t x_index, int s);

/// d f for a degree-0 1-cochain, with alpha the dual coordinate of x_index.
Cochain2 coboundary(const Algebra& base, std::size_t x_index, int s, const Cochain1& f);

struct CanonicalExtension {
    ExtensionData data;
    /// cocycle = canonical cocycle + d(change).
    Cochain1 change;
};

/// Replaces the cocycle by its component in the representative complement
/// returned by h2_0, recording the absorbed coboundary. The extension built
/// from the original data, rewritten in the basis e_b -> e_b - change(e_b),
/// has exactly the structure constants of the canonical one.
CanonicalExtension canonicalize_extension(const ExtensionData& data);

/// Columns: the basis e_b - f(e_b) (base elements) and Y_i, in the output
/// coordinates of special_extension.
Matrix extension_basis_change(const ExtensionData& data, const Cochain1& f);

} // namespace tanaka
