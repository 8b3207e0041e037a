#include "tanaka/algebra.hpp"

#include "tanaka/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace tanaka {

Algebra::Algebra(std::string name, std::vector<BasisElement> basis, const StructureConstants& brackets)
    : name_(std::move(name)), basis_(std::move(basis)) {
    const std::size_t n = basis_.size();
    for (const auto& b : basis_)
        if (b.degree >= 0) throw std::invalid_argument("basis element '" + b.label + "' has non-negative degree");
    for (const auto& b : basis_) depth_ = std::max(depth_, -b.degree);

    layers_.assign(static_cast<std::size_t>(depth_) + 1, {});
    position_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& l = layers_[static_cast<std::size_t>(-basis_[i].degree)];
        position_[i] = l.size();
        l.push_back(i);
    }

    table_.assign(n * n, zero_vector(n));
    for (const auto& [key, terms] : brackets) {
        auto [i, j] = key;
        if (i >= n || j >= n) throw std::out_of_range("bracket references basis index out of range");
        if (i == j) throw std::invalid_argument("bracket [e_i, e_i] must not be declared");
        Scalar sign = 1;
        if (i > j) {
            std::swap(i, j);
            sign = -1;
        }
        for (const auto& [k, c] : terms) {
            if (k >= n) throw std::out_of_range("bracket term references basis index out of range");
            table_[i * n + j][k] += sign * c;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector& v = table_[i * n + j];
            table_[j * n + i] = Scalar(-1) * v;
            Terms t;
            for (std::size_t k = 0; k < n; ++k)
                if (!tanaka::is_zero(v[k])) t.emplace_back(k, v[k]);
            if (!t.empty()) constants_.emplace(IndexPair{i, j}, std::move(t));
        }
}

std::optional<std::size_t> Algebra::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return i;
    return std::nullopt;
}

const std::vector<std::size_t>& Algebra::layer_indices(int i) const {
    static const std::vector<std::size_t> empty;
    if (i < 1 || i > depth_) return empty;
    return layers_[static_cast<std::size_t>(i)];
}

std::vector<std::size_t> Algebra::layer_dims() const {
    std::vector<std::size_t> d;
    for (int i = 1; i <= depth_; ++i) d.push_back(layer_dim(i));
    return d;
}

Algebra Algebra::renamed(std::string name) const {
    Algebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool same_structure(const Algebra& a, const Algebra& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.degree(i) != b.degree(i)) return false;
    return a.structure_constants() == b.structure_constants();
}

Vector bracket(const Algebra& a, const Vector& x, const Vector& y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket arguments must have algebra dimension");
    Vector r = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || is_zero(y[j])) continue;
            const Scalar c = x[i] * y[j];
            axpy(r, c, a.bracket_basis(i, j));
        }
    }
    return r;
}

Algebra change_basis(const Algebra& a, const Matrix& change, std::vector<BasisElement> basis, std::string name) {
    const std::size_t n = a.dim();
    if (change.rows() != n || change.cols() != n || basis.size() != n)
        throw DimensionMismatch("basis change must be square of algebra dimension");
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < n; ++c) cols.push_back(change.column(c));
    const Subspace all = Subspace::span(n, cols);
    if (all.dim() != n) throw std::invalid_argument("basis change is singular");

    StructureConstants sc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector br = bracket(a, cols[i], cols[j]);
            if (is_zero(br)) continue;
            const auto coords = solve(change, br);
            Terms t;
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero((*coords)[k])) t.emplace_back(k, (*coords)[k]);
            sc.emplace(IndexPair{i, j}, std::move(t));
        }
    return Algebra(std::move(name), std::move(basis), sc);
}

namespace {

std::string triple_label(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
    return "(" + a.basis()[i].label + "," + a.basis()[j].label + "," + a.basis()[k].label + ")";
}

} // namespace

ValidationReport validate(const Algebra& a) {
    ValidationReport rep;
    rep.depth = a.depth();
    rep.layer_dims = a.layer_dims();
    const std::size_t n = a.dim();

    for (const auto& [key, terms] : a.structure_constants()) {
        const int target = a.degree(key.first) + a.degree(key.second);
        for (const auto& [k, c] : terms) {
            if (a.degree(k) != target) {
                rep.grading = false;
                rep.failures.push_back({"grading", "(" + a.basis()[key.first].label + "," +
                                                       a.basis()[key.second].label + ")"});
                break;
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
                Vector acc = zero_vector(n);
                auto add = [&](std::size_t p, std::size_t q, std::size_t r) {
                    const Vector& inner = a.bracket_basis(p, q);
                    for (std::size_t l = 0; l < n; ++l)
                        if (!is_zero(inner[l]) && l != r) axpy(acc, inner[l], a.bracket_basis(l, r));
                };
                add(i, j, k);
                add(j, k, i);
                add(k, i, j);
                if (!is_zero(acc)) {
                    rep.jacobi = false;
                    rep.failures.push_back({"jacobi", triple_label(a, i, j, k)});
                }
            }

    for (int i = 1; i <= a.depth(); ++i) {
        if (a.layer_dim(i) == 0) {
            rep.generated = false;
            rep.failures.push_back({"generated", "m_{-" + std::to_string(i) + "} is empty below the depth"});
            continue;
        }
        if (i == 1) continue;
        std::vector<Vector> products;
        for (auto p : a.layer_indices(1))
            for (auto q : a.layer_indices(i - 1)) products.push_back(a.bracket_basis(p, q));
        const Subspace spanned = Subspace::span(n, products);
        if (spanned != layer(a, i)) {
            rep.generated = false;
            rep.failures.push_back({"generated", "[m_{-1}, m_{-" + std::to_string(i - 1) + "}] != m_{-" +
                                                     std::to_string(i) + "}"});
        }
    }

    const Subspace central = intersect(center(a), layer(a, 1));
    if (!central.is_zero()) {
        rep.nondegenerate = false;
        rep.central_witness = central.basis().front();
        rep.failures.push_back({"nondegenerate", format_vector(a, central.basis().front())});
    }
    return rep;
}

Matrix ad(const Algebra& a, const Vector& y) {
    const std::size_t n = a.dim();
    if (y.size() != n) throw DimensionMismatch("ad argument must have algebra dimension");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector col = zero_vector(n);
        for (std::size_t i = 0; i < n; ++i)
            if (!is_zero(y[i]) && i != j) axpy(col, y[i], a.bracket_basis(i, j));
        for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
    }
    return m;
}

AdMatrix ad_matrix(const Algebra& a, const Vector& y) {
    if (y.size() != a.dim()) throw DimensionMismatch("ad argument must have algebra dimension");
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!is_zero(y[i]) && a.degree(i) != -1) throw std::invalid_argument("ad_matrix: element is not in m_{-1}");
    return AdMatrix{y, ad(a, y)};
}

Subspace center(const Algebra& a) {
    const std::size_t n = a.dim();
    // Row (j,k): sum_i x_i c_{ij}^k = 0.
    Matrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            const Vector& v = a.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = v[k];
        }
    return kernel_basis(m);
}

Subspace layer(const Algebra& a, int i) { return Subspace::coordinate(a.dim(), a.layer_indices(i)); }

std::string format_vector(const Algebra& a, const Vector& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        Scalar c = v[i];
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        } else if (sgn(c) < 0 && c == -1) {
            os << "-";
            c = 1;
        }
        if (c != 1) os << to_string(c) << " ";
        os << a.basis()[i].label;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace tanaka
