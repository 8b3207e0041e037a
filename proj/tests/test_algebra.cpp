#include "doctest.h"

#include "fixtures.hpp"
#include "tanaka/algebra.hpp"
#include "tanaka/errors.hpp"

using namespace tanaka;
using fixtures::vec;

TEST_CASE("validate accepts heisenberg3") {
    const auto rep = validate(fixtures::heisenberg3());
    CHECK(rep.passed());
    CHECK(rep.depth == 2);
    CHECK(rep.layer_dims == std::vector<std::size_t>{2, 1});
    CHECK(rep.failures.empty());
}

TEST_CASE("validate reports a grading violation with its pair") {
    const auto bad = fixtures::make("bad", {{"X", -1}, {"Y", -1}, {"Z", -2}}, {{{0, 1}, {{0, Scalar(1)}}}});
    const auto rep = validate(bad);
    CHECK_FALSE(rep.grading);
    REQUIRE_FALSE(rep.failures.empty());
    CHECK(rep.failures.front().check == "grading");
    CHECK(rep.failures.front().witness == "(X,Y)");
}

TEST_CASE("validate reports a Jacobi violation with a triple") {
    // [A,B]=C, [A,C]=D, [B,C]=D, [A,D]=E plus a lone [B,D]=E that breaks Jacobi on (A,B,C)? Use a direct one:
    // X,Y,Z:-1 ; U,V,W:-2 ; T:-3 with [X,Y]=U, [U,Z]=T but no other terms.
    const auto bad = fixtures::make("badjacobi",
                                    {{"X", -1}, {"Y", -1}, {"Z", -1}, {"U", -2}, {"T", -3}},
                                    {{{0, 1}, {{3, Scalar(1)}}}, {{2, 3}, {{4, Scalar(1)}}}});
    const auto rep = validate(bad);
    CHECK(rep.grading);
    CHECK_FALSE(rep.jacobi);
    bool found = false;
    for (const auto& f : rep.failures)
        if (f.check == "jacobi") found = f.witness == "(X,Y,Z)";
    CHECK(found);
}

TEST_CASE("validate checks generation and nondegeneracy") {
    const auto gapped = fixtures::make("gap", {{"X", -1}, {"Y", -1}, {"Z", -3}}, {});
    CHECK_FALSE(validate(gapped).generated);

    const auto rep = validate(fixtures::abelian2());
    CHECK(rep.is_gnla());
    CHECK_FALSE(rep.nondegenerate);
    REQUIRE(rep.central_witness.has_value());

    const auto f = validate(fixtures::free2step3());
    CHECK(f.passed());
    CHECK(f.layer_dims == std::vector<std::size_t>{3, 3});
}

TEST_CASE("validate is idempotent") {
    const auto a = fixtures::goursat4();
    CHECK(validate(a) == validate(a));
}

TEST_CASE("bracket is bilinear and antisymmetric") {
    const auto h = fixtures::heisenberg3();
    CHECK(is_zero(bracket(h, vec({3, 5, 1}), vec({3, 5, 1}))));
    CHECK(bracket(h, vec({1, 0, 0}), vec({0, 1, 0})) == vec({0, 0, 1}));
    CHECK(bracket(h, vec({2, 1, 0}), vec({0, 1, 0})) == vec({0, 0, 2}));
    CHECK(bracket(h, vec({0, 1, 0}), vec({1, 0, 0})) == vec({0, 0, -1}));
    CHECK_THROWS_AS(bracket(h, vec({1, 0}), vec({0, 1, 0})), DimensionMismatch);
}

TEST_CASE("ad_matrix ranks") {
    CHECK(ad_matrix(fixtures::heisenberg3(), vec({0, 1, 0})).rank() == 1);
    const auto g = fixtures::goursat4();
    const auto adz1 = ad_matrix(g, vec({0, 1, 0, 0}));
    CHECK(adz1.rank() == 1);
    CHECK(image(adz1.matrix) == Subspace::coordinate(4, {2}));
    CHECK(ad_matrix(fixtures::free2step3(), vec({1, 0, 0, 0, 0, 0})).rank() == 2);
    CHECK_THROWS_AS(ad_matrix(fixtures::heisenberg3(), vec({0, 0, 1})), std::invalid_argument);
}

TEST_CASE("ad columns are brackets with basis vectors") {
    const auto f = fixtures::free2step3();
    const Vector y = vec({1, -2, 3, 0, 0, 0});
    const auto m = ad_matrix(f, y).matrix;
    for (std::size_t j = 0; j < f.dim(); ++j) CHECK(m.column(j) == bracket(f, y, unit_vector(6, j)));
}

TEST_CASE("center examples") {
    CHECK(center(fixtures::heisenberg3()) == Subspace::coordinate(3, {2}));
    CHECK(center(fixtures::goursat4()) == Subspace::coordinate(4, {3}));
    CHECK(center(fixtures::abelian2()) == Subspace::full(2));
    // Always contains the deepest layer.
    CHECK(center(fixtures::free2step3()).contains(layer(fixtures::free2step3(), 2)));
}

TEST_CASE("layer examples") {
    const auto h = fixtures::heisenberg3();
    CHECK(layer(h, 1) == Subspace::coordinate(3, {0, 1}));
    CHECK(layer(h, 3).dim() == 0);
}

TEST_CASE("layer dimension bounds on fixtures") {
    for (const auto& a : {fixtures::heisenberg3(), fixtures::goursat4(), fixtures::free2step3()}) {
        std::size_t total = 0;
        const auto dims = a.layer_dims();
        for (auto d : dims) total += d;
        CHECK(total == a.dim());
        for (std::size_t i = 1; i < dims.size(); ++i) CHECK(dims[i] <= dims[0] * dims[i - 1]);
    }
}

TEST_CASE("nondegenerate algebras have nonzero ad on m_{-1}") {
    const auto f = fixtures::free2step3();
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                CHECK(ad_matrix(f, vec({a, b, c, 0, 0, 0})).rank() >= 1);
            }
}

TEST_CASE("change_basis round trip") {
    const auto h = fixtures::heisenberg3();
    // X' = X + Y, Y' = Y, Z' = Z  =>  [X',Y'] = Z'
    const Matrix p{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}};
    const auto h2 = change_basis(h, p, h.basis(), "h");
    CHECK(same_structure(h, h2));
    const Matrix q{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto h3 = change_basis(h, q, h.basis(), "h");
    CHECK(h3.bracket_basis(0, 1) == vec({0, 0, 2}));
}
