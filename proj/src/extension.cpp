#include "tanaka/extension.hpp"

#include "tanaka/errors.hpp"

#include <array>
#include <set>
#include <stdexcept>

namespace tanaka {

Vector Cochain2::at(std::size_t i, std::size_t j) const {
    if (i == j) return zero_vector(module_dim);
    const bool flip = i > j;
    const auto it = values.find(flip ? IndexPair{j, i} : IndexPair{i, j});
    if (it == values.end()) return zero_vector(module_dim);
    return flip ? Scalar(-1) * it->second : it->second;
}

bool Cochain2::is_zero() const {
    for (const auto& [k, v] : values)
        if (!tanaka::is_zero(v)) return false;
    return true;
}

namespace {

std::vector<std::string> y_labels_for(const ExtensionData& data) {
    if (!data.y_labels.empty()) {
        if (data.y_labels.size() != static_cast<std::size_t>(data.s))
            throw std::invalid_argument("y_labels must have s entries");
        return data.y_labels;
    }
    std::set<std::string> taken;
    for (const auto& b : data.base.basis()) taken.insert(b.label);
    for (const char* prefix : {"Y", "V", "Yv"}) {
        std::vector<std::string> labels;
        bool clash = false;
        for (int i = 1; i <= data.s; ++i) {
            labels.push_back(prefix + std::to_string(i));
            clash = clash || taken.count(labels.back());
        }
        if (!clash) return labels;
    }
    throw std::invalid_argument("cannot choose module labels distinct from the base labels");
}

void check_data(const ExtensionData& data) {
    if (data.s < 2) throw std::invalid_argument("special extension needs s >= 2");
    if (data.x_index >= data.base.dim() || data.base.degree(data.x_index) != -1)
        throw std::invalid_argument("X must be a degree -1 basis element of the base");
    if (data.cocycle.module_dim != static_cast<std::size_t>(data.s))
        throw DimensionMismatch("cocycle module dimension differs from s");
}

/// Degree-0 cochain coordinates of C^1, C^2, C^3 and the two differentials.
struct DegreeZeroComplex {
    const Algebra& base;
    Vector alpha;
    int s;
    std::vector<std::size_t> c1;
    std::map<std::size_t, std::size_t> c1_index;
    std::vector<IndexPair> c2;
    std::map<IndexPair, std::size_t> c2_index;
    std::vector<std::array<std::size_t, 3>> c3;

    DegreeZeroComplex(const Algebra& a, Vector al, int s_) : base(a), alpha(std::move(al)), s(s_) {
        const std::size_t n = a.dim();
        for (std::size_t i = 0; i < n; ++i)
            if (d(i) <= s) {
                c1_index[i] = c1.size();
                c1.push_back(i);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (d(i) + d(j) <= s) {
                    c2_index[{i, j}] = c2.size();
                    c2.push_back({i, j});
                }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (d(i) + d(j) + d(k) <= s) c3.push_back({i, j, k});
    }

    int d(std::size_t i) const { return -base.degree(i); }
    Scalar act(std::size_t x) const { return base.degree(x) == -1 ? alpha[x] : Scalar(0); }

    /// Adds c * alpha(u, v) to `row` (C^2 coordinates).
    void add_pair(Vector& row, std::size_t u, std::size_t v, const Scalar& c) const {
        if (u == v || is_zero(c)) return;
        if (u < v) row[c2_index.at({u, v})] += c;
        else row[c2_index.at({v, u})] -= c;
    }

    Matrix d1() const {
        Matrix m(c2.size(), c1.size());
        for (std::size_t r = 0; r < c2.size(); ++r) {
            const auto [p, q] = c2[r];
            m(r, c1_index.at(q)) += act(p);
            m(r, c1_index.at(p)) -= act(q);
            const Vector& br = base.bracket_basis(p, q);
            for (std::size_t l = 0; l < br.size(); ++l)
                if (!is_zero(br[l])) m(r, c1_index.at(l)) -= br[l];
        }
        return m;
    }

    Matrix d2() const {
        Matrix m(c3.size(), c2.size());
        for (std::size_t r = 0; r < c3.size(); ++r) {
            const auto [x, y, z] = c3[r];
            Vector row = zero_vector(c2.size());
            add_pair(row, y, z, act(x));
            add_pair(row, x, z, -act(y));
            add_pair(row, x, y, act(z));
            auto bracket_term = [&](std::size_t u, std::size_t v, std::size_t w, const Scalar& sign) {
                const Vector& br = base.bracket_basis(u, v);
                for (std::size_t l = 0; l < br.size(); ++l)
                    if (!is_zero(br[l])) add_pair(row, l, w, sign * br[l]);
            };
            bracket_term(x, y, z, Scalar(-1));
            bracket_term(x, z, y, Scalar(1));
            bracket_term(y, z, x, Scalar(-1));
            for (std::size_t c = 0; c < c2.size(); ++c) m(r, c) = row[c];
        }
        return m;
    }

    Cochain2 to_cochain(const Vector& v) const {
        Cochain2 out;
        out.module_dim = static_cast<std::size_t>(s);
        for (std::size_t r = 0; r < c2.size(); ++r) {
            if (is_zero(v[r])) continue;
            const auto [p, q] = c2[r];
            Vector val = zero_vector(out.module_dim);
            val[static_cast<std::size_t>(d(p) + d(q) - 1)] = v[r];
            out.values[{p, q}] = std::move(val);
        }
        return out;
    }

    /// Throws DegreeViolation when the cochain has a component outside degree 0.
    Vector from_cochain(const Cochain2& c) const {
        Vector v = zero_vector(c2.size());
        for (const auto& [key, val] : c.values) {
            auto [p, q] = key;
            if (p == q || p >= base.dim() || q >= base.dim())
                throw std::invalid_argument("cocycle references an invalid basis pair");
            Scalar sign = 1;
            if (p > q) {
                std::swap(p, q);
                sign = -1;
            }
            for (std::size_t comp = 0; comp < val.size(); ++comp) {
                if (is_zero(val[comp])) continue;
                const int target = static_cast<int>(comp) + 1;
                if (target != d(p) + d(q))
                    throw DegreeViolation("cocycle value on (" + base.basis()[p].label + "," + base.basis()[q].label +
                                          ") has a component outside degree 0");
                v[c2_index.at({p, q})] += sign * val[comp];
            }
        }
        return v;
    }

    Vector from_cochain1(const Cochain1& f) const {
        Vector v = zero_vector(c1.size());
        for (const auto& [b, c] : f) {
            const auto it = c1_index.find(b);
            if (it == c1_index.end()) {
                if (!is_zero(c)) throw DegreeViolation("1-cochain value outside the module range");
                continue;
            }
            v[it->second] = c;
        }
        return v;
    }
};

Vector dual_alpha(const Algebra& base, std::size_t x_index) {
    Vector alpha = zero_vector(base.dim());
    alpha[x_index] = 1;
    return alpha;
}

H2Result compute_h2(const Algebra& base, Vector alpha, int s) {
    if (s < 2) throw std::invalid_argument("module length s must be at least 2");
    const DegreeZeroComplex cx(base, alpha, s);
    H2Result out;
    out.alpha = alpha;
    const std::size_t n2 = cx.c2.size();
    const Subspace cocycles = cx.c3.empty() ? Subspace::full(n2) : kernel_basis(cx.d2());
    const Subspace coboundaries = cx.c1.empty() ? Subspace(n2) : image(cx.d1());
    out.cocycle_dim = cocycles.dim();
    out.coboundary_dim = coboundaries.dim();
    if (!cocycles.contains(coboundaries)) throw std::logic_error("d2 o d1 != 0: inconsistent cochain complex");
    out.dim = out.cocycle_dim - out.coboundary_dim;
    RowEchelon acc(n2);
    for (const auto& b : coboundaries.basis()) acc.add(b);
    for (const auto& z : cocycles.basis())
        if (acc.add(z)) out.representatives.push_back(cx.to_cochain(z));
    return out;
}

} // namespace

std::size_t extension_index(const ExtensionData& data, std::size_t b) {
    if (b == data.x_index) return 0;
    const std::size_t shift = static_cast<std::size_t>(data.s) + 1;
    return b < data.x_index ? b + shift : b + shift - 1;
}

Algebra special_extension(const ExtensionData& data) {
    check_data(data);
    const Algebra& n = data.base;
    const std::size_t s = static_cast<std::size_t>(data.s);
    const auto ylabels = y_labels_for(data);

    std::vector<BasisElement> basis;
    basis.push_back(n.basis()[data.x_index]);
    for (std::size_t i = 1; i <= s; ++i) basis.push_back({ylabels[i - 1], -static_cast<int>(i)});
    for (std::size_t b = 0; b < n.dim(); ++b)
        if (b != data.x_index) basis.push_back(n.basis()[b]);

    const DegreeZeroComplex cx(n, dual_alpha(n, data.x_index), data.s);
    const Vector cocycle = cx.from_cochain(data.cocycle);

    StructureConstants sc;
    for (std::size_t i = 1; i < s; ++i) sc[{0, i}].emplace_back(i + 1, Scalar(1));
    for (std::size_t p = 0; p < n.dim(); ++p)
        for (std::size_t q = p + 1; q < n.dim(); ++q) {
            Terms t;
            const Vector& br = n.bracket_basis(p, q);
            for (std::size_t l = 0; l < br.size(); ++l)
                if (!is_zero(br[l])) t.emplace_back(extension_index(data, l), br[l]);
            const auto it = cx.c2_index.find({p, q});
            if (it != cx.c2_index.end() && !is_zero(cocycle[it->second]))
                t.emplace_back(static_cast<std::size_t>(cx.d(p) + cx.d(q)), cocycle[it->second]);
            if (t.empty()) continue;
            const std::size_t i = extension_index(data, p), j = extension_index(data, q);
            if (i < j) {
                sc[{i, j}] = std::move(t);
            } else {
                for (auto& [k, c] : t) c = -c;
                sc[{j, i}] = std::move(t);
            }
        }

    Algebra m(n.name() + "_ext", std::move(basis), sc);
    const ValidationReport rep = validate(m);
    for (const auto& f : rep.failures)
        if (f.check == "jacobi") throw JacobiViolation(f.witness);
    return m;
}

H2Result h2_0(const Algebra& base, const Subspace& w, int s) {
    const auto& deg1 = base.layer_indices(1);
    if (w.ambient_dim() != deg1.size()) throw DimensionMismatch("W must live in the degree -1 layer coordinates");
    if (w.dim() + 1 != deg1.size()) throw std::invalid_argument("W must have codimension 1 in the degree -1 layer");
    // alpha spans the annihilator of W.
    const Subspace ann = w.is_zero() ? Subspace::full(deg1.size()) : kernel_basis(Matrix::from_rows(w.basis(), deg1.size()));
    Vector a1 = ann.basis().front();
    for (std::size_t i = 0; i < a1.size(); ++i)
        if (!is_zero(a1[i])) {
            a1 = (1 / a1[i]) * a1;
            break;
        }
    Vector alpha = zero_vector(base.dim());
    for (std::size_t i = 0; i < deg1.size(); ++i) alpha[deg1[i]] = a1[i];
    return compute_h2(base, std::move(alpha), s);
}

H2Result h2_0(const Algebra& base, std::size_t x_index, int s) {
    if (x_index >= base.dim() || base.degree(x_index) != -1)
        throw std::invalid_argument("X must be a degree -1 basis element");
    return compute_h2(base, dual_alpha(base, x_index), s);
}

Cochain2 coboundary(const Algebra& base, std::size_t x_index, int s, const Cochain1& f) {
    const DegreeZeroComplex cx(base, dual_alpha(base, x_index), s);
    if (cx.c1.empty()) return cx.to_cochain(zero_vector(cx.c2.size()));
    return cx.to_cochain(cx.d1() * cx.from_cochain1(f));
}

CanonicalExtension canonicalize_extension(const ExtensionData& data) {
    check_data(data);
    const H2Result h = h2_0(data.base, data.x_index, data.s);
    const DegreeZeroComplex cx(data.base, dual_alpha(data.base, data.x_index), data.s);
    const Vector target = cx.from_cochain(data.cocycle);

    // target = sum_r c_r rep_r + d1 f
    std::vector<Vector> cols;
    for (const auto& r : h.representatives) cols.push_back(cx.from_cochain(r));
    const Matrix d1 = cx.d1();
    for (std::size_t c = 0; c < d1.cols(); ++c) cols.push_back(d1.column(c));
    CanonicalExtension out{data, {}};
    if (cols.empty()) return out;
    const auto sol = solve(Matrix::from_columns(cols, cx.c2.size()), target);
    if (!sol) throw std::invalid_argument("cocycle is not closed: the extension is not a Lie algebra");

    Vector canonical = zero_vector(cx.c2.size());
    for (std::size_t r = 0; r < h.representatives.size(); ++r) axpy(canonical, (*sol)[r], cols[r]);
    out.data.cocycle = cx.to_cochain(canonical);
    for (std::size_t c = 0; c < cx.c1.size(); ++c) {
        const Scalar& v = (*sol)[h.representatives.size() + c];
        if (!is_zero(v)) out.change[cx.c1[c]] = v;
    }
    return out;
}

Matrix extension_basis_change(const ExtensionData& data, const Cochain1& f) {
    check_data(data);
    const std::size_t n = data.base.dim() + static_cast<std::size_t>(data.s);
    Matrix p = Matrix::identity(n);
    for (const auto& [b, c] : f) {
        const int d = -data.base.degree(b);
        if (d > data.s) continue;
        p(static_cast<std::size_t>(d), extension_index(data, b)) -= c;
    }
    return p;
}

} // namespace tanaka
