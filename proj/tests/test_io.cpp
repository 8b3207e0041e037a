#include "doctest.h"

#include "fixtures.hpp"
#include "tanaka/catalog.hpp"
#include "tanaka/errors.hpp"
#include "tanaka/io.hpp"

using namespace tanaka;
using fixtures::vec;

namespace {

ParseError::Kind kind_of(const std::string& text, std::size_t* line = nullptr) {
    try {
        parse_algebra(text);
    } catch (const ParseError& e) {
        if (line) *line = e.line();
        return e.kind();
    }
    FAIL("no ParseError");
    return ParseError::Kind::Syntax;
}

} // namespace

TEST_CASE("parse a small document") {
    const auto a = parse_algebra("algebra heis\n# comment\nbasis X:-1 Y:-1 Z:-2\nbracket [X,Y] = Z  # trailing\n");
    CHECK(a.name() == "heis");
    CHECK(same_structure(a, fixtures::heisenberg3()));

    const auto b = parse_algebra("basis A:-1 B:-1 C:-2 D:-2\nbracket [B,A] = 3/2 C - D\n");
    CHECK(b.name() == "unnamed");
    CHECK(bracket(b, unit_vector(4, 0), unit_vector(4, 1)) == Vector{0, 0, Scalar(-3, 2), 1});

    const auto c = parse_algebra("basis A:-1 B:-1 C:-2\nbracket [A,B] = 2*C + C - 1 C\n");
    CHECK(bracket(c, unit_vector(3, 0), unit_vector(3, 1)) == vec({0, 0, 2}));
    const auto z = parse_algebra("basis A:-1 B:-1 C:-2\nbracket [A,B] = 0\n");
    CHECK(z.structure_constants().empty());
}

TEST_CASE("parse errors carry kind and line") {
    std::size_t line = 0;
    CHECK(kind_of("basis X:-1 Y:-1 Z:-2\n\nbracket [X,W] = Z\n", &line) == ParseError::Kind::UnknownLabel);
    CHECK(line == 3);
    CHECK(kind_of("basis X:-1 Y:-1 Z:-2\nbracket [X,Y] = Q\n", &line) == ParseError::Kind::UnknownLabel);
    CHECK(kind_of("basis X:-1 Y:-1 Z:-2\nbracket [X,Y] = Z\nbracket [Y,X] = Z\n", &line) ==
          ParseError::Kind::DuplicateBracket);
    CHECK(line == 3);
    CHECK(kind_of("basis X:-1 Y:-1 Z:-2\nbracket [X,Y] = X\n") == ParseError::Kind::GradingViolation);
    CHECK(kind_of("basis X:0\n") == ParseError::Kind::GradingViolation);
    CHECK(kind_of("basis X:-1 X:-1\n") == ParseError::Kind::Syntax);
    CHECK(kind_of("basis X:-1 Y:-1 Z:-2\nbracket X,Y = Z\n") == ParseError::Kind::Syntax);
    CHECK(kind_of("basis X:-1 Y:-1 Z:-2\nbracket [X,Y] = 1/0 Z\n") == ParseError::Kind::Syntax);
    CHECK(kind_of("basis X:-1 Y:-1 Z:-2\nbracket [X,Y] = Z Z\n") == ParseError::Kind::Syntax);
    CHECK(kind_of("basis X:-1 Y:-1 Z:-2\nbracket [X,Y] =\n") == ParseError::Kind::Syntax);
    CHECK(kind_of("lie X\n") == ParseError::Kind::Syntax);
    CHECK(kind_of("algebra a\nalgebra b\nbasis X:-1\n") == ParseError::Kind::Syntax);
    CHECK(kind_of("") == ParseError::Kind::Syntax);
}

TEST_CASE("catalog documents round-trip") {
    std::vector<Algebra> all{catalog::nontrivial6(), catalog::free2step3(), catalog::heisenberg(7),
                             catalog::from_pencil(parse_pencil_blocks("M:2,E:2:a=-3/4,F:1"))};
    for (std::size_t n = 2; n <= 6; ++n) all.push_back(catalog::goursat(n));
    for (std::size_t k = 3; k <= 7; ++k) all.push_back(catalog::kgen(k));
    for (const auto& a : all) {
        const std::string doc = serialize_algebra(a);
        const Algebra b = parse_algebra(doc);
        CHECK(b == a);
        CHECK(serialize_algebra(b) == doc);
    }
}

TEST_CASE("cocycle files") {
    const auto base = fixtures::heisenberg3();
    const auto d = parse_cocycle("x X\ncocycle [Z,Y] = -2 Y3\n", base, 3);
    CHECK(d.x_index == 0);
    CHECK(d.cocycle.at(1, 2) == vec({0, 0, 2}));
    CHECK(d.y_labels.empty());
    CHECK(parse_cocycle(serialize_cocycle(base, 0, d.cocycle), base, 3).cocycle == d.cocycle);

    const auto m = parse_cocycle("x Y\nmodule V1 V2\n", base, 2);
    CHECK(m.x_index == 1);
    CHECK(m.y_labels == std::vector<std::string>{"V1", "V2"});

    CHECK_THROWS_AS(parse_cocycle("cocycle [Y,Z] = Y3\n", base, 3), ParseError);
    CHECK_THROWS_AS(parse_cocycle("x Z\n", base, 3), ParseError);
    CHECK_THROWS_AS(parse_cocycle("x X\ncocycle [Y,Z] = Y2\n", base, 3), ParseError);
    CHECK_THROWS_AS(parse_cocycle("x X\ncocycle [Y,Z] = Y9\n", base, 3), ParseError);
    CHECK_THROWS_AS(parse_cocycle("x X\nmodule A B\n", base, 3), ParseError);
}

TEST_CASE("reports") {
    TypeVerdict f;
    f.kind = TypeVerdict::Kind::Finite;
    f.total_dim = 21;
    f.layer_dims = {9, 3, 3, 0};
    const auto r = make_report(fixtures::free2step3(), f);
    const auto json = emit_report(r, ReportFormat::Json);
    CHECK(json.find("\"kind\": \"finite\"") != std::string::npos);
    CHECK(json.find("\"total_dim\": 21") != std::string::npos);
    // key order is fixed
    CHECK(json.find("\"algebra\"") < json.find("\"dims\""));
    CHECK(json.find("\"dims\"") < json.find("\"depth\""));
    CHECK(json.find("\"depth\"") < json.find("\"verdict\""));
    CHECK(json.find("\"verdict\"") < json.find("\"version\""));
    CHECK(report_from_json(json).same_json_fields(r));
    CHECK(emit_report(report_from_json(json), ReportFormat::Json) == json);

    TypeVerdict i;
    i.kind = TypeVerdict::Kind::Infinite;
    i.certificate = TypeVerdict::Certificate::RationalWitness;
    i.witness = Vector{0, Scalar(3, 2), 0};
    const auto ri = make_report(fixtures::heisenberg3(), i);
    const auto ji = emit_report(ri, ReportFormat::Json);
    CHECK(ji.find("\"3/2\"") != std::string::npos);
    CHECK(ji.find("\"total_dim\": null") != std::string::npos);
    CHECK(report_from_json(ji).same_json_fields(ri));
    CHECK(emit_report(ri, ReportFormat::Text).find("3/2 Y") != std::string::npos);

    TypeVerdict dg;
    dg.kind = TypeVerdict::Kind::DegenerateInfinite;
    dg.witness = vec({1, 0});
    CHECK(emit_report(make_report(fixtures::abelian2(), dg), ReportFormat::Json).find("degenerate_infinite") !=
          std::string::npos);
    CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);
}
