#include "tanaka/groebner.hpp"

#include "tanaka/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tanaka {

int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order) {
    if (order == MonomialOrder::Grevlex) {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db ? -1 : 1;
        // Equal degree: the smaller exponent in the last differing variable wins.
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

namespace {

struct Descending {
    MonomialOrder order;
    bool operator()(const Exponents& a, const Exponents& b) const { return compare_monomials(a, b, order) > 0; }
};

using TermMap = std::map<Exponents, Scalar, Descending>;

void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch("polynomials over different variable sets");
    if (a.order() != b.order()) throw std::invalid_argument("polynomials with different monomial orders");
}

} // namespace

class PolynomialBuilder {
public:
    static Polynomial from_map(std::size_t n, MonomialOrder o, const TermMap& m) {
        Polynomial p(n, o);
        for (const auto& [e, c] : m)
            if (!tanaka::is_zero(c)) p.terms_.emplace_back(e, c);
        return p;
    }
    static void push(Polynomial& p, Exponents e, Scalar c) { p.terms_.emplace_back(std::move(e), std::move(c)); }
};

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c, MonomialOrder order) {
    Polynomial p(nvars, order);
    if (!tanaka::is_zero(c)) p.terms_.emplace_back(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i, MonomialOrder order) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(std::move(e), Scalar(1), order);
}

Polynomial Polynomial::monomial(Exponents e, const Scalar& c, MonomialOrder order) {
    Polynomial p(e.size(), order);
    if (!tanaka::is_zero(c)) p.terms_.emplace_back(std::move(e), c);
    return p;
}

Polynomial Polynomial::linear(const Vector& coeffs, MonomialOrder order) {
    TermMap m{Descending{order}};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (tanaka::is_zero(coeffs[i])) continue;
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        m[e] = coeffs[i];
    }
    return PolynomialBuilder::from_map(coeffs.size(), order, m);
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.front().first) == 0);
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total_degree(terms_.front().first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    const Scalar inv = 1 / leading_coefficient();
    return inv * *this;
}

Scalar Polynomial::evaluate(const Vector& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong length");
    Scalar total = 0;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Scalar mag = c;
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        mag = abs(mag);
        const bool unit_monomial = total_degree(e) == 0;
        if (mag != 1 || unit_monomial) os << tanaka::to_string(mag);
        bool need_star = mag != 1 && !unit_monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << (i < names.size() ? names[i] : "y" + std::to_string(i + 1));
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

Polynomial Polynomial::combine(const Polynomial& a, const Polynomial& b, const Scalar& bscale) {
    check_compatible(a, b);
    Polynomial out(a.nvars_, a.order_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        int cmp;
        if (i == a.terms_.size()) cmp = -1;
        else if (j == b.terms_.size()) cmp = 1;
        else cmp = compare_monomials(a.terms_[i].first, b.terms_[j].first, a.order_);
        if (cmp > 0) {
            out.terms_.push_back(a.terms_[i++]);
        } else if (cmp < 0) {
            out.terms_.emplace_back(b.terms_[j].first, bscale * b.terms_[j].second);
            ++j;
        } else {
            Scalar c = a.terms_[i].second + bscale * b.terms_[j].second;
            if (!tanaka::is_zero(c)) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const { return Scalar(-1) * *this; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return Polynomial::combine(a, b, Scalar(1)); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return Polynomial::combine(a, b, Scalar(-1)); }

Polynomial operator*(const Scalar& c, const Polynomial& p) {
    Polynomial out(p.nvars(), p.order());
    if (is_zero(c)) return out;
    for (const auto& [e, x] : p.terms()) PolynomialBuilder::push(out, e, c * x);
    return out;
}

Polynomial Polynomial::times_term(const Exponents& e, const Scalar& c) const {
    if (e.size() != nvars_) throw DimensionMismatch("monomial has wrong variable count");
    Polynomial out(nvars_, order_);
    if (tanaka::is_zero(c)) return out;
    // Multiplying by a monomial preserves the order of terms.
    for (const auto& [f, x] : terms_) {
        Exponents g(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) g[i] = e[i] + f[i];
        out.terms_.emplace_back(std::move(g), c * x);
    }
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    TermMap m{Descending{a.order()}};
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(a.nvars());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            m[e] += ca * cb;
        }
    return PolynomialBuilder::from_map(a.nvars(), a.order(), m);
}

// ---------------------------------------------------------------- reduction

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
    TermMap work{Descending{f.order()}};
    for (const auto& [e, c] : f.terms()) work.emplace(e, c);
    TermMap rest{Descending{f.order()}};
    while (!work.empty()) {
        auto top = work.begin();
        const Polynomial* divisor = nullptr;
        for (const auto& g : basis)
            if (!g.is_zero() && divides(g.leading_monomial(), top->first)) {
                divisor = &g;
                break;
            }
        if (!divisor) {
            rest.emplace(top->first, top->second);
            work.erase(top);
            continue;
        }
        Exponents shift(f.nvars());
        for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = top->first[i] - divisor->leading_monomial()[i];
        const Scalar factor = top->second / divisor->leading_coefficient();
        for (const auto& [e, c] : divisor->terms()) {
            Exponents g(f.nvars());
            for (std::size_t i = 0; i < g.size(); ++i) g[i] = e[i] + shift[i];
            auto [it, inserted] = work.try_emplace(std::move(g), 0);
            it->second -= factor * c;
            if (is_zero(it->second)) work.erase(it);
        }
    }
    return PolynomialBuilder::from_map(f.nvars(), f.order(), rest);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    check_compatible(f, g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.nvars(), f.order());
    const Exponents l = lcm(f.leading_monomial(), g.leading_monomial());
    Exponents sf(l.size()), sg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
        sf[i] = l[i] - f.leading_monomial()[i];
        sg[i] = l[i] - g.leading_monomial()[i];
    }
    return f.times_term(sf, 1 / f.leading_coefficient()) - g.times_term(sg, 1 / g.leading_coefficient());
}

namespace {

struct Pair {
    std::size_t i, j;
    Exponents lcm;
};

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, MonomialOrder order) {
    // Drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(g[j].leading_monomial(), g[i].leading_monomial()))
                redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
        }
        if (!redundant) minimal.push_back(g[i].monic());
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        // Tail reduction: the leading term is irreducible by the others.
        Polynomial lead = Polynomial::monomial(minimal[i].leading_monomial(), Scalar(1), order);
        Polynomial tail = minimal[i] - lead;
        reduced.push_back(lead + reduce(tail, others));
    }
    std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
        return compare_monomials(a.leading_monomial(), b.leading_monomial(), order) < 0;
    });
    return reduced;
}

} // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, const GroebnerOptions& options) {
    std::vector<Polynomial> g;
    std::size_t nvars = 0;
    for (const auto& p : generators) {
        if (!g.empty() && p.nvars() != nvars) throw DimensionMismatch("generators over different variable sets");
        nvars = p.nvars();
        if (p.order() != options.order) throw std::invalid_argument("generator monomial order differs from options");
        if (!p.is_zero()) g.push_back(p.monic());
    }
    if (g.empty()) return {};

    std::vector<Pair> pending;
    auto add_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) pending.push_back({i, k, lcm(g[i].leading_monomial(), g[k].leading_monomial())});
    };
    for (std::size_t k = 1; k < g.size(); ++k) add_pairs_for(k);

    auto is_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        for (const auto& p : pending)
            if (p.i == a && p.j == b) return true;
        return false;
    };

    while (!pending.empty()) {
        // Normal selection strategy: smallest lcm first.
        auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
            const int c = compare_monomials(a.lcm, b.lcm, options.order);
            if (c != 0) return c < 0;
            return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
        const Pair pair = *best;
        pending.erase(best);

        const Exponents& li = g[pair.i].leading_monomial();
        const Exponents& lj = g[pair.j].leading_monomial();
        // Product criterion: coprime leading monomials.
        bool coprime = true;
        for (std::size_t v = 0; v < nvars && coprime; ++v) coprime = li[v] == 0 || lj[v] == 0;
        if (coprime) continue;
        // Chain criterion.
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (divides(g[k].leading_monomial(), pair.lcm) && !is_pending(pair.i, k) && !is_pending(pair.j, k))
                chain = true;
        }
        if (chain) continue;

        const unsigned deg = total_degree(pair.lcm);
        if (deg > options.degree_cap) throw CapExceeded(deg);

        Polynomial r = reduce(s_polynomial(g[pair.i], g[pair.j]), g);
        if (r.is_zero()) continue;
        g.push_back(r.monic());
        add_pairs_for(g.size() - 1);
        if (g.back().is_constant()) break; // unit ideal
    }
    for (const auto& p : g)
        if (p.is_constant()) return {Polynomial::constant(nvars, Scalar(1), options.order)};
    return reduce_basis(std::move(g), options.order);
}

// ---------------------------------------------------------------- ideals

PolynomialIdeal::PolynomialIdeal(std::size_t n, std::vector<Polynomial> gens, GroebnerOptions opts)
    : nvars(n), generators(std::move(gens)), options(opts) {
    for (const auto& p : generators)
        if (p.nvars() != n) throw DimensionMismatch("generator has wrong variable count");
}

const std::vector<Polynomial>& PolynomialIdeal::compute_groebner() {
    if (!groebner) groebner = buchberger(generators, options);
    return *groebner;
}

bool PolynomialIdeal::contains(const Polynomial& p) { return reduce(p, compute_groebner()).is_zero(); }

bool only_trivial_zero(PolynomialIdeal& ideal) {
    for (const auto& p : ideal.generators)
        if (!p.is_homogeneous()) throw std::invalid_argument("only_trivial_zero requires homogeneous generators");
    const auto& gb = ideal.compute_groebner();
    for (const auto& p : gb)
        if (p.is_constant() && !p.is_zero()) return true; // empty zero set
    for (std::size_t v = 0; v < ideal.nvars; ++v) {
        bool pure = false;
        for (const auto& p : gb) {
            const auto& lm = p.leading_monomial();
            if (lm[v] == 0) continue;
            bool only_v = true;
            for (std::size_t w = 0; w < ideal.nvars; ++w)
                if (w != v && lm[w] != 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

} // namespace tanaka
