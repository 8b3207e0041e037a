#pragma once

#include "tanaka/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tanaka {

enum class MonomialOrder { Grevlex, Lex };

using Exponents = std::vector<unsigned>;

/// -1, 0, 1 as a < b, a == b, a > b in the given order.
int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order);
unsigned total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);

/// Multivariate polynomial with exact coefficients. Terms are kept sorted by
/// decreasing monomial; no zero coefficient is ever stored.
class Polynomial {
public:
    using Term = std::pair<Exponents, Scalar>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars, MonomialOrder order = MonomialOrder::Grevlex)
        : nvars_(nvars), order_(order) {}

    static Polynomial constant(std::size_t nvars, const Scalar& c, MonomialOrder order = MonomialOrder::Grevlex);
    static Polynomial variable(std::size_t nvars, std::size_t i, MonomialOrder order = MonomialOrder::Grevlex);
    static Polynomial monomial(Exponents e, const Scalar& c, MonomialOrder order = MonomialOrder::Grevlex);
    /// Sum of coefficient * x_i over a coefficient vector.
    static Polynomial linear(const Vector& coeffs, MonomialOrder order = MonomialOrder::Grevlex);

    std::size_t nvars() const noexcept { return nvars_; }
    MonomialOrder order() const noexcept { return order_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    unsigned degree() const;
    bool is_homogeneous() const;

    const Exponents& leading_monomial() const { return terms_.front().first; }
    const Scalar& leading_coefficient() const { return terms_.front().second; }
    Polynomial monic() const;

    Scalar evaluate(const Vector& point) const;
    std::string to_string(const std::vector<std::string>& names = {}) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& c, const Polynomial& p);
    /// p * c * x^e
    Polynomial times_term(const Exponents& e, const Scalar& c) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t nvars_ = 0;
    MonomialOrder order_ = MonomialOrder::Grevlex;
    std::vector<Term> terms_;

    static Polynomial combine(const Polynomial& a, const Polynomial& b, const Scalar& bscale);
    friend class PolynomialBuilder;
};

struct GroebnerOptions {
    MonomialOrder order = MonomialOrder::Grevlex;
    /// Abort once an S-pair of higher degree is needed.
    unsigned degree_cap = 12;
};

/// Normal form of `f` modulo `basis` (full reduction).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis: monic, pairwise irreducible leading terms, sorted by
/// increasing leading monomial. Throws CapExceeded.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, const GroebnerOptions& options = {});

/// Ideal with an optional cached reduced Groebner basis.
struct PolynomialIdeal {
    std::size_t nvars = 0;
    std::vector<std::string> variables;
    std::vector<Polynomial> generators;
    GroebnerOptions options;
    std::optional<std::vector<Polynomial>> groebner;

    PolynomialIdeal() = default;
    PolynomialIdeal(std::size_t n, std::vector<Polynomial> gens, GroebnerOptions opts = {});

    const std::vector<Polynomial>& compute_groebner();
    bool contains(const Polynomial& p);
};

/// True iff the zero set of the homogeneous ideal over the algebraic closure
/// is {0}: every variable has a pure power among the Groebner leading terms.
/// Throws std::invalid_argument on non-homogeneous generators, CapExceeded.
bool only_trivial_zero(PolynomialIdeal& ideal);

} // namespace tanaka
