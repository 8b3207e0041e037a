#include "tanaka/pencil.hpp"

#include "tanaka/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tanaka {

namespace {

char kind_char(PencilKind k) {
    switch (k) {
    case PencilKind::M: return 'M';
    case PencilKind::E: return 'E';
    case PencilKind::F: return 'F';
    }
    return '?';
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

void require_skew(const Matrix& b) {
    if (b.rows() != b.cols() || !b.is_skew()) throw NotSkew("matrix is not skew-symmetric");
}

/// Places the rectangular block `top` as [[0, top], [-top^t, 0]] at offset `at`.
void embed(Matrix& target, const Matrix& top, std::size_t at) {
    const std::size_t r = top.rows();
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) {
            target(at + i, at + r + j) = top(i, j);
            target(at + r + j, at + i) = -top(i, j);
        }
}

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

const Integer divisor_search_limit("1000000000000");

} // namespace

std::string PencilBlock::to_string() const {
    std::string s = std::string(1, kind_char(kind)) + ":" + std::to_string(size);
    if (kind == PencilKind::E) s += ":a=" + tanaka::to_string(a);
    return s;
}

std::vector<std::size_t> PencilSpec::minimal_indices() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks)
        if (b.kind == PencilKind::M) out.push_back(b.size);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Scalar, std::size_t>> PencilSpec::finite_divisors() const {
    std::vector<std::pair<Scalar, std::size_t>> out;
    for (const auto& b : blocks)
        if (b.kind == PencilKind::E) out.emplace_back(b.a, b.size);
    return out;
}

std::vector<std::size_t> PencilSpec::infinite_divisors() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks)
        if (b.kind == PencilKind::F) out.push_back(b.size);
    return out;
}

bool PencilSpec::nondegenerate() const {
    const auto m = minimal_indices();
    return m.empty() || m.front() > 0;
}

std::size_t PencilSpec::side() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.side();
    return n;
}

std::string PencilSpec::to_string() const {
    std::string s;
    for (const auto& b : blocks) s += (s.empty() ? "" : ",") + b.to_string();
    return s;
}

PencilSpec parse_pencil_blocks(const std::string& text) {
    PencilSpec spec;
    if (trim(text).empty()) throw std::invalid_argument("empty block list");
    for (const auto& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() < 2 || parts[0].size() != 1) throw std::invalid_argument("bad block '" + item + "'");
        PencilBlock b;
        switch (parts[0][0]) {
        case 'M': b.kind = PencilKind::M; break;
        case 'E': b.kind = PencilKind::E; break;
        case 'F': b.kind = PencilKind::F; break;
        default: throw std::invalid_argument("unknown block kind in '" + item + "'");
        }
        const auto& n = parts[1];
        if (n.empty() || n.size() > 6 || !std::all_of(n.begin(), n.end(), ::isdigit))
            throw std::invalid_argument("bad block size in '" + item + "'");
        b.size = std::stoul(n);
        if (b.kind != PencilKind::M && b.size == 0) throw std::invalid_argument("E and F blocks need size >= 1");
        if (b.kind == PencilKind::E) {
            if (parts.size() != 3 || parts[2].rfind("a=", 0) != 0)
                throw std::invalid_argument("E block needs a parameter, e.g. E:2:a=1/3");
            b.a = parse_scalar(parts[2].substr(2));
        } else if (parts.size() != 2) {
            throw std::invalid_argument("unexpected parameter in '" + item + "'");
        }
        spec.blocks.push_back(b);
    }
    return spec;
}

PencilPair pencil_block(const PencilBlock& block) {
    const std::size_t side = block.side();
    if (block.kind != PencilKind::M && block.size == 0) throw std::invalid_argument("E and F blocks need size >= 1");
    PencilPair out{Matrix(side, side), Matrix(side, side)};
    const std::size_t n = block.size;
    // 1-based (r, c) entries of the upper-right block
    Matrix mu, lambda;
    if (block.kind == PencilKind::M) {
        mu = Matrix(n + 1, n);
        lambda = Matrix(n + 1, n);
        for (std::size_t r = 1; r <= n + 1; ++r)
            for (std::size_t c = 1; c <= n; ++c) {
                if (r + c == n + 1) lambda(r - 1, c - 1) = 1;
                if (r + c == n + 2) mu(r - 1, c - 1) = 1;
            }
    } else {
        mu = Matrix(n, n);
        lambda = Matrix(n, n);
        for (std::size_t r = 1; r <= n; ++r)
            for (std::size_t c = 1; c <= n; ++c) {
                if (block.kind == PencilKind::E) {
                    if (r + c == n + 1) {
                        mu(r - 1, c - 1) = 1;
                        lambda(r - 1, c - 1) = block.a;
                    }
                    if (r + c == n + 2) lambda(r - 1, c - 1) = 1;
                } else {
                    if (r + c == n + 1) lambda(r - 1, c - 1) = 1;
                    if (r + c == n + 2) mu(r - 1, c - 1) = 1;
                }
            }
    }
    embed(out.b1, mu, 0);
    embed(out.b2, lambda, 0);
    return out;
}

PencilPair assemble_pencil(const PencilSpec& spec) {
    const std::size_t n = spec.side();
    PencilPair out{Matrix(n, n), Matrix(n, n)};
    std::size_t at = 0;
    for (const auto& b : spec.blocks) {
        const auto p = pencil_block(b);
        for (std::size_t i = 0; i < b.side(); ++i)
            for (std::size_t j = 0; j < b.side(); ++j) {
                out.b1(at + i, at + j) = p.b1(i, j);
                out.b2(at + i, at + j) = p.b2(i, j);
            }
        at += b.side();
    }
    return out;
}

Algebra metabelian_from_pencil(const std::vector<Matrix>& forms, std::string name, std::vector<std::string> labels) {
    if (forms.empty() && labels.empty()) throw std::invalid_argument("no forms and no side given");
    const std::size_t n = forms.empty() ? labels.size() : forms.front().rows();
    for (const auto& b : forms) {
        if (b.rows() != n || b.cols() != n) throw DimensionMismatch("pencil forms have different sides");
        require_skew(b);
    }
    std::vector<Vector> flat;
    for (const auto& b : forms) flat.push_back(b.entries());
    if (rank(Matrix::from_rows(flat, n * n)) != forms.size())
        throw NotGenerated("pencil forms are linearly dependent");
    if (labels.empty())
        for (std::size_t i = 1; i <= n; ++i) labels.push_back("X" + std::to_string(i));
    if (labels.size() != n) throw DimensionMismatch("label count differs from the form side");

    std::vector<BasisElement> basis;
    for (auto& l : labels) basis.push_back({std::move(l), -1});
    std::set<std::string> taken;
    for (const auto& b : basis) taken.insert(b.label);
    std::string prefix = "Y";
    while (true) {
        bool clash = false;
        for (std::size_t k = 1; k <= forms.size(); ++k) clash = clash || taken.count(prefix + std::to_string(k));
        if (!clash) break;
        prefix += "Y";
    }
    for (std::size_t k = 1; k <= forms.size(); ++k) basis.push_back({prefix + std::to_string(k), -2});

    StructureConstants sc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Terms t;
            for (std::size_t k = 0; k < forms.size(); ++k)
                if (!is_zero(forms[k](i, j))) t.emplace_back(n + k, forms[k](i, j));
            if (!t.empty()) sc[{i, j}] = std::move(t);
        }
    return Algebra(std::move(name), std::move(basis), sc);
}

Algebra algebra_from_pencil(const PencilSpec& spec) {
    const auto pair = assemble_pencil(spec);
    std::vector<Matrix> forms;
    std::vector<Vector> flat;
    for (const Matrix* b : {&pair.b1, &pair.b2}) {
        flat.push_back(b->entries());
        if (rank(Matrix::from_rows(flat, b->rows() * b->cols())) == flat.size()) forms.push_back(*b);
        else flat.pop_back();
    }
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < spec.blocks.size(); ++k)
        for (std::size_t i = 1; i <= spec.blocks[k].side(); ++i)
            labels.push_back(std::string(1, kind_char(spec.blocks[k].kind)) + std::to_string(k + 1) + "_" +
                             std::to_string(i));
    return metabelian_from_pencil(forms, "pencil(" + spec.to_string() + ")", std::move(labels));
}

Scalar pfaffian(const Matrix& b) {
    require_skew(b);
    const std::size_t n = b.rows();
    if (n % 2 == 1) return 0;
    Matrix a = b;
    Scalar result = 1;
    for (std::size_t size = n; size > 0; size -= 2) {
        // bring a nonzero entry into position (0, 1)
        std::size_t p = 1;
        while (p < size && is_zero(a(0, p))) ++p;
        if (p == size) return 0;
        if (p != 1) {
            for (std::size_t i = 0; i < size; ++i) std::swap(a(i, 1), a(i, p));
            for (std::size_t j = 0; j < size; ++j) std::swap(a(1, j), a(p, j));
            result = -result;
        }
        const Scalar pivot = a(0, 1);
        result *= pivot;
        Matrix next(size - 2, size - 2);
        for (std::size_t i = 2; i < size; ++i)
            for (std::size_t j = 2; j < size; ++j)
                next(i - 2, j - 2) = a(i, j) + (a(1, i) * a(0, j) - a(0, i) * a(1, j)) / pivot;
        a = std::move(next);
    }
    return result;
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c == 0; });
}

std::string BinaryForm::to_string() const {
    const std::size_t n = coeffs.empty() ? 0 : coeffs.size() - 1;
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const Scalar& c = coeffs[i];
        std::string mono;
        if (n - i > 0) mono += "l1" + (n - i > 1 ? "^" + std::to_string(n - i) : "");
        if (i > 0) mono += std::string(mono.empty() ? "" : "*") + "l2" + (i > 1 ? "^" + std::to_string(i) : "");
        std::string coef = tanaka::to_string(abs(c));
        std::string term = mono.empty() ? coef : (abs(c) == 1 ? mono : coef + "*" + mono);
        if (s.empty()) s = (c < 0 ? "-" : "") + term;
        else s += (c < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

BinaryForm det_pencil(const Matrix& b1, const Matrix& b2) {
    if (b1.rows() != b2.rows() || b1.cols() != b2.cols()) throw DimensionMismatch("pencil matrices differ in size");
    require_skew(b1);
    require_skew(b2);
    const std::size_t n = b1.rows();
    BinaryForm out;

    // p(t) = det(B1 + t B2) by interpolation at t = 0..n
    Matrix vander(n + 1, n + 1);
    Vector values(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        Scalar power = 1;
        for (std::size_t i = 0; i <= n; ++i) {
            vander(t, i) = power;
            power *= static_cast<long>(t);
        }
        values[t] = determinant(b1 + Scalar(static_cast<long>(t)) * b2);
    }
    out.coeffs = *solve(vander, values);
    if (out.is_zero()) return out;

    std::size_t low = 0, high = n;
    while (out.coeffs[low] == 0) ++low;
    while (out.coeffs[high] == 0) --high;
    if (low > 0) out.roots.emplace_back(1, 0);
    if (high > low) {
        Integer den = 1;
        for (std::size_t i = low; i <= high; ++i) den = lcm(den, Integer(out.coeffs[i].get_den()));
        std::vector<Integer> q;
        for (std::size_t i = low; i <= high; ++i) q.push_back(Integer(out.coeffs[i] * den));
        const Integer a0 = abs(q.front()), an = abs(q.back());
        if (a0 > divisor_search_limit || an > divisor_search_limit) {
            out.roots_complete = false;
        } else {
            std::set<Scalar> found;
            for (const auto& p : divisors(a0))
                for (const auto& d : divisors(an))
                    for (int sign : {1, -1}) {
                        const Scalar t = Scalar(p * sign, d);
                        Scalar v = 0, power = 1;
                        for (const auto& c : q) {
                            v += c * power;
                            power *= t;
                        }
                        if (v == 0) found.insert(t);
                    }
            for (const auto& t : found) out.roots.emplace_back(1, t);
        }
    }
    if (high < n) out.roots.emplace_back(0, 1);
    return out;
}

PySubspace p_y_subspace(const MatrixSubspace& p, const Vector& y) {
    if (y.size() != p.side()) throw DimensionMismatch("y does not match the pencil side");
    const auto basis = p.basis();
    PySubspace out;
    if (basis.empty()) {
        out.subspace = MatrixSubspace(p.side(), {});
        return out;
    }
    std::vector<Vector> images;
    for (const auto& b : basis) images.push_back(b * y);
    const Subspace ker = kernel_basis(Matrix::from_columns(images, p.side()));
    std::vector<Matrix> members;
    for (const auto& c : ker.basis()) {
        Matrix m(p.side(), p.side());
        for (std::size_t k = 0; k < basis.size(); ++k) m = m + c[k] * basis[k];
        members.push_back(std::move(m));
    }
    out.subspace = MatrixSubspace(p.side(), members);
    out.codim = basis.size() - out.subspace.dim();
    return out;
}

ElementaryH0 h0_elementary(const PencilBlock& block) {
    if (block.kind != PencilKind::M && block.size == 0) throw std::invalid_argument("E and F blocks need size >= 1");
    if (block.kind == PencilKind::M && block.size == 0) throw std::invalid_argument("M_0 has no closed form here");
    ElementaryH0 out;
    const std::size_t n = block.size, side = block.side();
    out.rank_one_element = Matrix(side, side);
    out.rank_one_element(0, side - 1) = 1;
    if (block.kind == PencilKind::M) {
        out.dim = 2 * n + 1;
        out.description = "x diag(I_" + std::to_string(n + 1) + ", -I_" + std::to_string(n) +
                          ") plus an upper-right Toeplitz block of size " + std::to_string(n + 1) + "x" +
                          std::to_string(n);
    } else {
        out.dim = 3 * n;
        out.description = "[[Y11, Y12], [Y21, -Y11]] with upper triangular Toeplitz blocks of size " +
                          std::to_string(n);
    }
    return out;
}

} // namespace tanaka
