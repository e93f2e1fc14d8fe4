#include <doctest.h>

#include "c0embed/error.hpp"
#include "c0embed/specfile.hpp"

using namespace c0embed;

TEST_CASE("parse each operator variant") {
    const OperatorSpec dense = parse_operator_spec(R"({
        "operator": {"type": "dense", "entries": [[[0,0],[1,0]],[[0,0],[0,0]]]}
    })");
    REQUIRE(dense.op.get_if<Dense>() != nullptr);
    CHECK(dense.op.get_if<Dense>()->matrix.mat()(0, 1) == Complex(1.0));

    const OperatorSpec diag = parse_operator_spec(R"({
        "operator": {"type": "diagonal", "eigenvalues": [[1,0],[0,1]],
                     "kernel_dim": 0, "cokernel_dim": 0}
    })");
    REQUIRE(diag.op.get_if<Diagonal>() != nullptr);
    CHECK(diag.op.get_if<Diagonal>()->eigenvalues[1] == Complex(0.0, 1.0));

    const OperatorSpec shift = parse_operator_spec(R"({
        "operator": {"type": "block_right_shift", "fiber_dim": "infinite",
                     "fiber_truncation": 2, "block_truncation": 4}
    })");
    REQUIRE(shift.op.get_if<BlockRightShift>() != nullptr);
    CHECK(shift.op.get_if<BlockRightShift>()->fiber_dim.is_infinite());

    const OperatorSpec mult = parse_operator_spec(R"({
        "operator": {"type": "multiplication", "sample_points": [[0.5,0]],
                     "sample_weights": [2.0]}
    })");
    REQUIRE(mult.op.get_if<Multiplication>() != nullptr);

    const OperatorSpec volterra = parse_operator_spec(R"({
        "operator": {"type": "volterra", "grid_size": 100}
    })");
    CHECK(volterra.op.get_if<Volterra>()->grid_size == 100);

    const OperatorSpec zero = parse_operator_spec(R"({
        "operator": {"type": "zero", "space_dim": "infinite", "truncation": 16}
    })");
    CHECK(zero.op.get_if<ZeroOperator>()->space_dim.is_infinite());

    const OperatorSpec sum = parse_operator_spec(R"({
        "operator": {"type": "direct_sum", "parts": [
            {"type": "volterra", "grid_size": 32},
            {"type": "zero", "space_dim": "infinite", "truncation": 8}]}
    })");
    REQUIRE(sum.op.get_if<DirectSum>() != nullptr);
    CHECK(sum.op.get_if<DirectSum>()->parts.size() == 2);
}

TEST_CASE("strict parsing rejects unknown keys with a field path") {
    try {
        parse_operator_spec(R"({
            "operator": {"type": "volterra", "grid_size": 64, "extra": 1}
        })");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string message = e.what();
        CHECK(message.find("/operator/extra") != std::string::npos);
        CHECK(message.find("unknown key") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_operator_spec(R"({"operator": {"type": "volterra",
        "grid_size": 64}, "surprise": {}})"),
                    ParseError);
}

TEST_CASE("parse errors carry diagnostics") {
    CHECK_THROWS_AS(parse_operator_spec("not json"), ParseError);
    CHECK_THROWS_AS(parse_operator_spec(R"({"options": {}})"), ParseError);
    CHECK_THROWS_AS(parse_operator_spec(R"({"operator": {"type": "mystery"}})"), ParseError);
    // Complex scalars must be [re, im] pairs.
    CHECK_THROWS_AS(parse_operator_spec(R"({
        "operator": {"type": "diagonal", "eigenvalues": [1.0],
                     "kernel_dim": 0, "cokernel_dim": 0}})"),
                    ParseError);
    // Variant invariants are reported as parse failures with their path.
    CHECK_THROWS_AS(parse_operator_spec(R"({
        "operator": {"type": "zero", "space_dim": 3, "truncation": 4}})"),
                    ParseError);
}

TEST_CASE("contour and options blocks") {
    const OperatorSpec spec = parse_operator_spec(R"({
        "operator": {"type": "volterra", "grid_size": 32},
        "contour": {"circles": [{"center": [1, 0], "radius": 0.5}], "nodes": 128},
        "options": {"nodes": 64, "grid": 4, "depth": 6, "branch": [0, 1], "seed": 7}
    })");
    REQUIRE(spec.contour.has_value());
    CHECK(spec.contour->circles.size() == 1);
    CHECK(spec.contour->nodes == 128);
    CHECK(spec.options.nodes == 64);
    CHECK(spec.options.grid == 4);
    CHECK(spec.options.depth == 6);
    CHECK(spec.options.branch == std::vector<int>{0, 1});
    CHECK(spec.options.seed == 7u);
}

TEST_CASE("serialization round-trips") {
    DirectSum sum;
    sum.parts.push_back(Diagonal{{Complex(0.5, -0.25), Complex(2.0)},
                                 CardinalDim::finite(0), CardinalDim::finite(0)});
    sum.parts.push_back(BlockLeftShift{CardinalDim::infinite(), 3, 5});
    sum.parts.push_back(ZeroOperator{CardinalDim::infinite(), 4});
    const StructuredOperator op(sum);

    const OperatorSpec back = parse_operator_spec(serialize_operator_spec(op));
    CHECK(describe(back.op) == describe(op));
    CHECK((materialize(back.op).mat() - materialize(op).mat()).norm() == 0.0);
}
