#include "tanaka/prolongation.hpp"

#include "tanaka/errors.hpp"

#include <map>

namespace tanaka {

std::uint64_t fingerprint(const Algebra& a) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    for (const auto& b : a.basis()) {
        mix(b.label);
        mix(std::to_string(b.degree));
    }
    for (const auto& [key, terms] : a.structure_constants()) {
        mix(std::to_string(key.first) + "," + std::to_string(key.second));
        for (const auto& [k, c] : terms) mix(std::to_string(k) + ":" + to_string(c));
    }
    return h;
}

// ---------------------------------------------------------------- MapLayout

MapLayout::MapLayout(const Algebra& a, int degree, const std::vector<std::size_t>& nonneg_dims)
    : degree_(degree), nonneg_dims_(nonneg_dims) {
    m_dims_.assign(static_cast<std::size_t>(a.depth()) + 1, 0);
    for (int i = 1; i <= a.depth(); ++i) m_dims_[static_cast<std::size_t>(i)] = a.layer_dim(i);
    offsets_.resize(a.dim());
    widths_.resize(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        offsets_[j] = size_;
        widths_[j] = target_dim(degree + a.degree(j));
        size_ += widths_[j];
    }
}

std::size_t MapLayout::target_dim(int d) const {
    if (d < 0) {
        const auto i = static_cast<std::size_t>(-d);
        return i < m_dims_.size() ? m_dims_[i] : 0;
    }
    const auto i = static_cast<std::size_t>(d);
    if (d >= degree_ || i >= nonneg_dims_.size()) throw LayerMismatch("target layer g_" + std::to_string(d) + " not available");
    return nonneg_dims_[i];
}

Vector ProlongationLayer::image(std::size_t t, std::size_t j) const {
    const Vector& v = basis.at(t);
    const auto off = static_cast<std::ptrdiff_t>(layout.offset(j));
    return Vector(v.begin() + off, v.begin() + off + static_cast<std::ptrdiff_t>(layout.width(j)));
}

GradedMap ProlongationLayer::map(const Algebra& a, std::size_t t) const { return unflatten(a, layout, basis.at(t)); }

Vector flatten(const Algebra& a, const MapLayout& layout, const GradedMap& phi) {
    Vector flat = zero_vector(layout.size());
    if (phi.blocks.size() != static_cast<std::size_t>(a.depth())) throw DimensionMismatch("graded map block count");
    for (int i = 1; i <= a.depth(); ++i) {
        const Matrix& b = phi.blocks[static_cast<std::size_t>(i - 1)];
        const auto& idx = a.layer_indices(i);
        if (b.cols() != idx.size()) throw DimensionMismatch("graded map block width");
        for (std::size_t p = 0; p < idx.size(); ++p) {
            if (b.rows() != layout.width(idx[p])) throw DimensionMismatch("graded map block height");
            for (std::size_t r = 0; r < b.rows(); ++r) flat[layout.offset(idx[p]) + r] = b(r, p);
        }
    }
    return flat;
}

GradedMap unflatten(const Algebra& a, const MapLayout& layout, const Vector& flat) {
    if (flat.size() != layout.size()) throw DimensionMismatch("flattened map length");
    GradedMap phi;
    phi.degree = layout.degree();
    for (int i = 1; i <= a.depth(); ++i) {
        const auto& idx = a.layer_indices(i);
        Matrix b(layout.target_dim(layout.degree() - i), idx.size());
        for (std::size_t p = 0; p < idx.size(); ++p)
            for (std::size_t r = 0; r < b.rows(); ++r) b(r, p) = flat[layout.offset(idx[p]) + r];
        phi.blocks.push_back(std::move(b));
    }
    return phi;
}

// ---------------------------------------------------------------- Leibniz system

namespace {

void check_lower(const Algebra& a, int k, const std::vector<ProlongationLayer>& lower) {
    if (k < 0) throw std::invalid_argument("prolongation degree must be non-negative");
    if (lower.size() != static_cast<std::size_t>(k))
        throw LayerMismatch("expected " + std::to_string(k) + " lower layers, got " + std::to_string(lower.size()));
    const auto fp = fingerprint(a);
    for (std::size_t d = 0; d < lower.size(); ++d) {
        if (lower[d].degree != static_cast<int>(d)) throw LayerMismatch("lower layers out of order");
        if (lower[d].algebra != fp) throw LayerMismatch("lower layer computed for a different algebra");
    }
}

MapLayout layout_for(const Algebra& a, int k, const std::vector<ProlongationLayer>& lower) {
    std::vector<std::size_t> dims;
    for (const auto& l : lower) dims.push_back(l.dim());
    return MapLayout(a, k, dims);
}

using SparseRow = std::map<std::size_t, Scalar>;

/// Row position of m-basis index q inside its layer, checking its degree.
std::size_t m_row(const Algebra& a, std::size_t q, int d) {
    if (a.degree(q) != d) throw DegreeViolation("bracket term leaves its graded component");
    return a.position_in_layer(q);
}

/// Adds sign * [phi(e_i), e_j] to the equation rows, as coefficients of the unknowns of phi(e_i).
void add_bracket_with_image(const Algebra& a, const std::vector<ProlongationLayer>& lower, const MapLayout& layout,
                            std::size_t i, std::size_t j, int d, const Scalar& sign, std::vector<SparseRow>& rows) {
    const int di = layout.degree() + a.degree(i);
    const std::size_t off = layout.offset(i);
    if (di < 0) {
        const auto& src = a.layer_indices(-di);
        for (std::size_t p = 0; p < src.size(); ++p) {
            const Vector& br = a.bracket_basis(src[p], j);
            for (std::size_t q = 0; q < br.size(); ++q) {
                if (is_zero(br[q])) continue;
                rows[m_row(a, q, d)][off + p] += sign * br[q];
            }
        }
    } else {
        const ProlongationLayer& l = lower[static_cast<std::size_t>(di)];
        for (std::size_t t = 0; t < l.dim(); ++t) {
            const Vector img = l.image(t, j);
            for (std::size_t r = 0; r < img.size(); ++r)
                if (!is_zero(img[r])) rows[r][off + t] += sign * img[r];
        }
    }
}

} // namespace

ProlongationLayer prolong_layer(const Algebra& a, int k, const std::vector<ProlongationLayer>& lower) {
    check_lower(a, k, lower);
    ProlongationLayer out;
    out.degree = k;
    out.algebra = fingerprint(a);
    out.layout = layout_for(a, k, lower);
    const MapLayout& layout = out.layout;

    RowEchelon system(layout.size());
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const int d = k + a.degree(i) + a.degree(j);
            const std::size_t height = layout.target_dim(d);
            if (height == 0) continue;
            std::vector<SparseRow> rows(height);
            // phi([e_i, e_j])
            const Vector& br = a.bracket_basis(i, j);
            for (std::size_t l = 0; l < n; ++l) {
                if (is_zero(br[l])) continue;
                if (layout.width(l) != height) throw DegreeViolation("bracket term leaves its graded component");
                for (std::size_t r = 0; r < height; ++r) rows[r][layout.offset(l) + r] += br[l];
            }
            // - [phi(e_i), e_j] - [e_i, phi(e_j)] = - [phi(e_i), e_j] + [phi(e_j), e_i]
            add_bracket_with_image(a, lower, layout, i, j, d, Scalar(-1), rows);
            add_bracket_with_image(a, lower, layout, j, i, d, Scalar(1), rows);
            for (const auto& row : rows) {
                bool any = false;
                for (const auto& [c, v] : row) any = any || !is_zero(v);
                if (!any) continue;
                Vector dense = zero_vector(layout.size());
                for (const auto& [c, v] : row) dense[c] = v;
                system.add(std::move(dense));
            }
        }
    out.basis = system.kernel();
    return out;
}

std::vector<GradedMap> der0(const Algebra& a) {
    const ProlongationLayer g0 = prolong_layer(a, 0, {});
    std::vector<GradedMap> maps;
    for (std::size_t t = 0; t < g0.dim(); ++t) maps.push_back(g0.map(a, t));
    return maps;
}

// ---------------------------------------------------------------- MatrixSubspace

MatrixSubspace::MatrixSubspace(std::size_t side, const std::vector<Matrix>& spanning) : side_(side) {
    std::vector<Vector> flat;
    for (const auto& m : spanning) {
        if (m.rows() != side || m.cols() != side) throw DimensionMismatch("matrix subspace member has wrong side");
        flat.push_back(m.entries());
    }
    space_ = Subspace::span(side * side, flat);
}

std::vector<Matrix> MatrixSubspace::basis() const {
    std::vector<Matrix> out;
    for (const auto& v : space_.basis()) out.push_back(Matrix::from_entries(side_, side_, v));
    return out;
}

bool MatrixSubspace::contains(const Matrix& m) const {
    if (m.rows() != side_ || m.cols() != side_) return false;
    return space_.contains(m.entries());
}

MatrixSubspace h0(const Algebra& a) {
    const ProlongationLayer g0 = prolong_layer(a, 0, {});
    const auto& deg1 = a.layer_indices(1);
    const std::size_t n1 = deg1.size();

    // Combinations of basis derivations whose value on every m_{-i}, i >= 2, vanishes.
    std::vector<std::size_t> constrained;
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (a.degree(j) <= -2)
            for (std::size_t r = 0; r < g0.layout.width(j); ++r) constrained.push_back(g0.layout.offset(j) + r);
    Matrix m(constrained.size(), g0.dim());
    for (std::size_t t = 0; t < g0.dim(); ++t)
        for (std::size_t r = 0; r < constrained.size(); ++r) m(r, t) = g0.basis[t][constrained[r]];
    const Subspace combos = kernel_basis(m);

    std::vector<Matrix> mats;
    for (const auto& c : combos.basis()) {
        Matrix d(n1, n1);
        for (std::size_t t = 0; t < g0.dim(); ++t) {
            if (is_zero(c[t])) continue;
            for (std::size_t col = 0; col < n1; ++col)
                for (std::size_t row = 0; row < n1; ++row)
                    d(row, col) += c[t] * g0.basis[t][g0.layout.offset(deg1[col]) + row];
        }
        mats.push_back(std::move(d));
    }
    return MatrixSubspace(n1, mats);
}

IterationVerdict classify_by_iteration(const Algebra& a, int max_degree) {
    IterationVerdict v;
    for (int k = 0; k <= max_degree; ++k) {
        ProlongationLayer l = prolong_layer(a, k, v.layers);
        v.layer_dims.push_back(l.dim());
        const bool zero = l.dim() == 0;
        v.layers.push_back(std::move(l));
        if (zero) {
            v.finite = true;
            break;
        }
    }
    v.total_dim = a.dim();
    for (auto d : v.layer_dims) v.total_dim += d;
    return v;
}

// ---------------------------------------------------------------- direct check

namespace {

/// Value of [z, e_j] where z has degree d (coordinates of g_d) and e_j is in m.
Vector bracket_with_basis(const Algebra& a, const std::vector<ProlongationLayer>& lower, int d, const Vector& z,
                          std::size_t j, std::size_t target_dim) {
    Vector out = zero_vector(target_dim);
    if (d < 0) {
        const auto& src = a.layer_indices(-d);
        const int td = d + a.degree(j);
        for (std::size_t p = 0; p < src.size(); ++p) {
            if (is_zero(z[p])) continue;
            const Vector& br = a.bracket_basis(src[p], j);
            for (std::size_t q = 0; q < br.size(); ++q)
                if (!is_zero(br[q])) out[m_row(a, q, td)] += z[p] * br[q];
        }
    } else {
        const auto& l = lower[static_cast<std::size_t>(d)];
        for (std::size_t t = 0; t < l.dim(); ++t)
            if (!is_zero(z[t])) axpy(out, z[t], l.image(t, j));
    }
    return out;
}

} // namespace

bool satisfies_leibniz(const Algebra& a, const std::vector<ProlongationLayer>& lower, const MapLayout& layout,
                       const Vector& flat) {
    const int k = layout.degree();
    auto phi = [&](std::size_t j) {
        const auto off = static_cast<std::ptrdiff_t>(layout.offset(j));
        return Vector(flat.begin() + off, flat.begin() + off + static_cast<std::ptrdiff_t>(layout.width(j)));
    };
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const int d = k + a.degree(i) + a.degree(j);
            const std::size_t height = layout.target_dim(d);
            if (height == 0) continue;
            Vector lhs = zero_vector(height);
            const Vector& br = a.bracket_basis(i, j);
            for (std::size_t l = 0; l < n; ++l)
                if (!is_zero(br[l])) axpy(lhs, br[l], phi(l));
            const Vector r1 = bracket_with_basis(a, lower, k + a.degree(i), phi(i), j, height);
            const Vector r2 = bracket_with_basis(a, lower, k + a.degree(j), phi(j), i, height);
            // [e_i, phi(e_j)] = -[phi(e_j), e_i]
            if (lhs != r1 - r2) return false;
        }
    return true;
}

} // namespace tanaka
