#pragma once

#include "tanaka/algebra.hpp"
#include "tanaka/extension.hpp"
#include "tanaka/groebner.hpp"
#include "tanaka/prolongation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tanaka {

/// 2x2 minors of sum_k y_k L_k, linearly reduced. Variables are named `names`.
PolynomialIdeal linear_matrix_minors(const std::vector<Matrix>& coefficient_matrices, std::vector<std::string> names,
                                     const GroebnerOptions& options = {});

/// Minors of ad(sum y_i e_i) over the degree -1 layer; variables are its labels.
PolynomialIdeal minor_ideal(const Algebra& a, const GroebnerOptions& options = {});

constexpr unsigned default_height = 3;

/// First y in m_{-1} with rank ad y = 1 among: the basis vectors from last to
/// first, then e_i + (p/q) e_j (i < j) with max(|p|, q) = 1..height.
std::optional<Vector> rank1_witness(const Algebra& a, unsigned height = default_height);

/// True iff the span of `space` over the algebraic closure holds a rank-1 matrix.
/// False for the zero space. Throws CapExceeded.
bool spencer_subspace_check(const MatrixSubspace& space, const GroebnerOptions& options = {});

struct TypeVerdict {
    enum class Kind { Finite, Infinite, DegenerateInfinite, Inconclusive };
    enum class Certificate { None, RationalWitness, ClosureWitness };

    Kind kind = Kind::Inconclusive;
    Certificate certificate = Certificate::None;
    /// Rank-one witness (Infinite) or central element of m_{-1} (DegenerateInfinite).
    std::optional<Vector> witness;
    /// dim m + sum of the layer dims; set for Finite.
    std::size_t total_dim = 0;
    /// dims of g_0, g_1, ... as far as computed.
    std::vector<std::size_t> layer_dims;
    /// Minor ideal has only the trivial zero, yet no layer vanished by max_degree.
    bool finite_type_certified = false;
    bool cap_exceeded = false;
    std::string reason;
};

std::string to_string(TypeVerdict::Kind kind);

struct ClassifyOptions {
    int max_degree = default_max_degree;
    unsigned height = default_height;
    GroebnerOptions groebner;
};

/// Degenerate check, rational witness search, then the minor ideal test,
/// then layer iteration. Throws std::invalid_argument unless `a` is a GNLA.
TypeVerdict classify(const Algebra& a, const ClassifyOptions& options = {});

/// d(e_j) = c_j y where [y, e_j] = c_j [y, x] on m_{-1} and d = 0 below,
/// x being the first basis vector of m_{-1} with [x, y] != 0.
/// Throws WitnessInvalid unless rank ad y = 1.
GradedMap rank1_derivation_from_witness(const Algebra& a, const Vector& y);

struct SpecialDecomposition {
    /// m / V with basis X, Z_1, ...
    Algebra quotient;
    Vector x;
    /// y_1 = y, y_{i+1} = [x, y_i].
    std::vector<Vector> ideal_basis;
    Cochain2 cocycle;
    /// Input for special_extension rebuilding `adapted`.
    ExtensionData data;
    /// Columns: coordinates of X, Y_1..Y_s, Z_1.. in the original basis.
    Matrix change;
    /// The input algebra written in the adapted basis.
    Algebra adapted;
};

/// Splits m as a special extension of m / V along a rank-one witness.
/// Throws WitnessInvalid.
SpecialDecomposition decompose_special_extension(const Algebra& a, const Vector& y);

} // namespace tanaka
