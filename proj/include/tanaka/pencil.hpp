#pragma once

#include "tanaka/algebra.hpp"
#include "tanaka/prolongation.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tanaka {

enum class PencilKind { M, E, F };

/// One canonical block: M_m (size 2m+1), E_n(a) or F_n (size 2n).
struct PencilBlock {
    PencilKind kind = PencilKind::F;
    std::size_t size = 1; ///< m for M, n for E and F
    Scalar a = 0;         ///< eigenvalue parameter of E blocks

    std::size_t side() const noexcept { return kind == PencilKind::M ? 2 * size + 1 : 2 * size; }
    std::string to_string() const;

    friend bool operator==(const PencilBlock&, const PencilBlock&) = default;
};

/// Canonical pencil data, kept in assembly order.
struct PencilSpec {
    std::vector<PencilBlock> blocks;

    std::vector<std::size_t> minimal_indices() const;
    std::vector<std::pair<Scalar, std::size_t>> finite_divisors() const;
    std::vector<std::size_t> infinite_divisors() const;
    /// No minimal index equals 0.
    bool nondegenerate() const;
    std::size_t side() const;
    std::string to_string() const;
};

/// Parses "M:1,F:2,E:1:a=0" (a may be a fraction). Throws std::invalid_argument.
PencilSpec parse_pencil_blocks(const std::string& text);

struct PencilPair {
    Matrix b1; ///< coefficient of mu
    Matrix b2; ///< coefficient of lambda
};

/// Skew pair of a single block. Throws std::invalid_argument on n = 0 for E/F.
PencilPair pencil_block(const PencilBlock& block);
/// Blocks placed on the diagonal in the listed order.
PencilPair assemble_pencil(const PencilSpec& spec);

/// 2-step algebra on m_{-1} = k^n, m_{-2} = k^t with [e_i, e_j] = sum_k B_k(i,j) Y_k.
/// Throws NotSkew, DimensionMismatch, NotGenerated (dependent forms).
Algebra metabelian_from_pencil(const std::vector<Matrix>& forms, std::string name = "metabelian",
                               std::vector<std::string> labels = {});
/// Metabelian algebra of the assembled pencil; labels record the block of
/// each basis vector, e.g. "F2_3" is the third vector of the second block.
Algebra algebra_from_pencil(const PencilSpec& spec);

/// Pfaffian of a skew matrix (0 for odd side). Throws NotSkew.
Scalar pfaffian(const Matrix& b);

/// Binary form det(l1 B1 + l2 B2) = sum_i coeffs[i] l1^(n-i) l2^i.
struct BinaryForm {
    std::vector<Scalar> coeffs;
    /// Rational projective roots (l1, l2), normalized to (1, t) or (0, 1).
    std::vector<std::pair<Scalar, Scalar>> roots;
    /// False when the root search was skipped for coefficients too large to factor.
    bool roots_complete = true;

    bool is_zero() const;
    std::string to_string() const;
};

/// Throws DimensionMismatch, NotSkew.
BinaryForm det_pencil(const Matrix& b1, const Matrix& b2);

struct PySubspace {
    MatrixSubspace subspace;
    std::size_t codim = 0;
};

/// {B in P : B y = 0} and its codimension in P.
PySubspace p_y_subspace(const MatrixSubspace& p, const Vector& y);

struct ElementaryH0 {
    std::size_t dim = 0;
    std::string description;
    /// Rank-one nilpotent element, columns are images.
    Matrix rank_one_element;
};

/// Closed form of h0 for a single M or F block; E blocks use the F form.
ElementaryH0 h0_elementary(const PencilBlock& block);

} // namespace tanaka
