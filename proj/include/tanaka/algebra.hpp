#pragma once

#include "tanaka/linalg.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tanaka {

struct BasisElement {
    std::string label;
    int degree = -1; ///< negative: the element lies in m_{degree}

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Sparse coordinates: (basis index, coefficient) with nonzero coefficients.
using Terms = std::vector<std::pair<std::size_t, Scalar>>;
using IndexPair = std::pair<std::size_t, std::size_t>;
/// Structure constants [e_i, e_j] for i < j.
using StructureConstants = std::map<IndexPair, Terms>;

/// Negatively graded Lie algebra given by structure constants in a fixed
/// basis. Basis order is declaration order; it fixes every coordinate vector.
///
/// Grading violations and Jacobi failures are representable, `validate`
/// reports them. The constructor only rejects malformed index data.
class Algebra {
public:
    Algebra() = default;
    Algebra(std::string name, std::vector<BasisElement> basis, const StructureConstants& brackets);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    int degree(std::size_t i) const { return basis_.at(i).degree; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// Largest i with m_{-i} nonzero.
    int depth() const noexcept { return depth_; }
    /// Basis indices of m_{-i}, in declaration order.
    const std::vector<std::size_t>& layer_indices(int i) const;
    std::size_t layer_dim(int i) const { return layer_indices(i).size(); }
    /// dim m_{-1}, ..., dim m_{-depth}.
    std::vector<std::size_t> layer_dims() const;
    /// Position of basis index `i` inside its own layer.
    std::size_t position_in_layer(std::size_t i) const { return position_.at(i); }

    /// Dense coordinates of [e_i, e_j].
    const Vector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    /// Nonzero structure constants, i < j.
    const StructureConstants& structure_constants() const noexcept { return constants_; }

    Algebra renamed(std::string name) const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.name_ == b.name_ && a.basis_ == b.basis_ && a.constants_ == b.constants_;
    }

private:
    std::string name_;
    std::vector<BasisElement> basis_;
    StructureConstants constants_;
    std::vector<Vector> table_;
    std::vector<std::vector<std::size_t>> layers_; // layers_[i] = indices of degree -i
    std::vector<std::size_t> position_;
    int depth_ = 0;
};

/// Same structure constants, ignoring names.
bool same_structure(const Algebra& a, const Algebra& b);

/// Bilinear bracket of coordinate vectors. Throws DimensionMismatch.
Vector bracket(const Algebra& a, const Vector& x, const Vector& y);

/// Re-expresses the algebra in a new basis. Column c of `change` holds the
/// old coordinates of new basis vector c; `basis` gives labels and degrees.
Algebra change_basis(const Algebra& a, const Matrix& change, std::vector<BasisElement> basis,
                     std::string name);

struct ValidationFailure {
    std::string check; ///< "grading", "jacobi", "generated" or "nondegenerate"
    std::string witness;

    friend bool operator==(const ValidationFailure&, const ValidationFailure&) = default;
};

struct ValidationReport {
    bool grading = true;
    bool jacobi = true;
    bool generated = true;
    bool nondegenerate = true;
    std::vector<std::size_t> layer_dims;
    int depth = 0;
    std::vector<ValidationFailure> failures;
    /// Coordinates of a nonzero central element of m_{-1}, if any.
    std::optional<Vector> central_witness;

    /// Grading, Jacobi and generation hold: the input is a GNLA.
    bool is_gnla() const noexcept { return grading && jacobi && generated; }
    bool passed() const noexcept { return is_gnla() && nondegenerate; }

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Runs the grading, Jacobi (all basis triples), generation and
/// nondegeneracy checks. Never throws on a well-formed Algebra.
ValidationReport validate(const Algebra& a);

struct AdMatrix {
    Vector element;
    Matrix matrix; ///< column j holds [y, e_j]
    std::size_t rank() const { return tanaka::rank(matrix); }
};

/// Matrix of z -> [y, z]. Throws std::invalid_argument unless y lies in m_{-1}.
AdMatrix ad_matrix(const Algebra& a, const Vector& y);
/// Matrix of z -> [y, z] for an arbitrary y.
Matrix ad(const Algebra& a, const Vector& y);

/// {x : [x, e_j] = 0 for all j}.
Subspace center(const Algebra& a);
/// Coordinate subspace m_{-i}; zero when i is out of range.
Subspace layer(const Algebra& a, int i);

/// Readable form of a coordinate vector, e.g. "2 X + Y".
std::string format_vector(const Algebra& a, const Vector& v);

} // namespace tanaka
