#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace omnileib;
using testsupport::TestRng;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("1") == Rat(1));
    CHECK(parse_rational("-7/3") == Rat(-7, 3));
    CHECK(parse_rational("2/-4") == Rat(-1, 2));
    CHECK(parse_rational("+5") == Rat(5));
    CHECK(rat_string(Rat(-1, 2)) == "-1/2");
    CHECK(rat_string(Rat(4, 2)) == "2");
    CHECK(rat_string(parse_rational("6/-8")) == "-3/4");

    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("1.5"), input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("a/2"), input_error);
    CHECK_THROWS_AS(parse_rational("1/"), input_error);
}

TEST_CASE("rref rank on fixed matrices") {
    Matrix prop(2, 2);
    prop.at(0, 0) = 1;
    prop.at(0, 1) = 2;
    prop.at(1, 0) = 2;
    prop.at(1, 1) = 4;
    CHECK(rref_rank(prop).rank == 1);

    CHECK(rref_rank(Matrix::identity(3)).rank == 3);
    CHECK(rref_rank(Matrix(2, 5)).rank == 0);

    // Deterministic pivots: leftmost column, topmost row.
    const Rref r = rref_rank(prop);
    REQUIRE(r.pivot_cols == std::vector<std::size_t>{0});
    CHECK(r.rref.at(0, 0) == 1);
    CHECK(r.rref.at(0, 1) == 2);
    CHECK(r.rref.at(1, 0) == 0);
    CHECK(r.rref.at(1, 1) == 0);
}

TEST_CASE("rref is idempotent and rank matches the transpose and the oracle") {
    TestRng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng.pick(8);
        const std::size_t cols = 1 + rng.pick(8);
        const Matrix m = testsupport::random_matrix(rng, rows, cols);
        const Rref r = rref_rank(m);
        CHECK(rref_rank(r.rref).rref == r.rref);
        CHECK(r.rank == rref_rank(transpose(m)).rank);
        CHECK(r.rank == testsupport::rank_oracle(m));
    }
}

TEST_CASE("kernel basis solves m x = 0") {
    TestRng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t rows = 1 + rng.pick(6);
        const std::size_t cols = 1 + rng.pick(6);
        const Matrix m = testsupport::random_matrix(rng, rows, cols);
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == cols - rref_rank(m).rank);
        for (const Vec& x : basis) CHECK(is_zero(mat_vec(m, x)));
    }
    // Zero-row constraint matrix: the kernel is everything.
    CHECK(kernel_basis(Matrix(0, 3)).size() == 3);
}

TEST_CASE("bracket_eval on catalog algebras") {
    const LeibnizAlgebra& ab2 = catalog_lookup("abelian2");
    CHECK(is_zero(bracket_eval(ab2, unit_vec(2, 0), unit_vec(2, 1))));

    const LeibnizAlgebra& l2 = catalog_lookup("L2");
    CHECK(bracket_eval(l2, unit_vec(2, 1), unit_vec(2, 1)) == unit_vec(2, 0));
    CHECK(is_zero(bracket_eval(l2, unit_vec(2, 0), unit_vec(2, 1))));

    CHECK_THROWS_AS(bracket_eval(l2, Vec(3), Vec(2)), input_error);
}

TEST_CASE("bracket_eval is bilinear") {
    TestRng rng(11);
    const LeibnizAlgebra& sl2 = catalog_lookup("sl2");
    for (int trial = 0; trial < 20; ++trial) {
        const Vec x = testsupport::random_vec(rng, 3);
        const Vec x2 = testsupport::random_vec(rng, 3);
        const Vec y = testsupport::random_vec(rng, 3);
        const Rat a = rng.rational_value();
        const Vec lhs = bracket_eval(sl2, vec_add(vec_scale(a, x), x2), y);
        const Vec rhs = vec_add(vec_scale(a, bracket_eval(sl2, x, y)), bracket_eval(sl2, x2, y));
        CHECK(lhs == rhs);
        const Vec lhs2 = bracket_eval(sl2, y, vec_add(vec_scale(a, x), x2));
        const Vec rhs2 = vec_add(vec_scale(a, bracket_eval(sl2, y, x)), bracket_eval(sl2, y, x2));
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("is_leibniz verdicts and witnesses") {
    CHECK(is_leibniz(catalog_lookup("abelian3")).ok);
    CHECK(is_leibniz(catalog_lookup("L2")).ok);

    // [e1,e1] = e2, [e2,e1] = e1 violates the identity at the first triple.
    LeibnizAlgebra bad(2);
    bad.cst(0, 0, 1) = 1;
    bad.cst(1, 0, 0) = 1;
    const LeibnizVerdict v = is_leibniz(bad);
    REQUIRE_FALSE(v.ok);
    CHECK(v.witness == std::array<std::size_t, 3>{1, 1, 1});
    CHECK(v.defect == Vec{Rat(-1), Rat(0)});
    CHECK(v.defect == testsupport::brute_defect(bad, 0, 0, 0));
}

TEST_CASE("derived subalgebra bases") {
    CHECK(derived_subalgebra(catalog_lookup("abelian2")).empty());

    const auto l2_derived = derived_subalgebra(catalog_lookup("L2"));
    REQUIRE(l2_derived.size() == 1);
    CHECK(l2_derived[0] == unit_vec(2, 0));

    // sl2 is perfect: the brackets span everything.
    CHECK(derived_subalgebra(catalog_lookup("sl2")).size() == 3);
}

TEST_CASE("catalog entries all satisfy the Leibniz identity") {
    CHECK(catalog().size() >= 7);
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        CHECK(is_leibniz(entry.algebra).ok);
        CHECK(testsupport::brute_is_leibniz(entry.algebra));
    }
    CHECK(catalog_lookup("abelian2").c == Vec(8, Rat(0)));
    const LeibnizAlgebra& l2 = catalog_lookup("L2");
    CHECK(l2.cst(1, 1, 0) == 1);
    CHECK_THROWS_AS(catalog_lookup("nosuch"), input_error);
}

TEST_CASE("perturbing structure constants keeps checker and oracle in agreement") {
    for (const auto& entry : catalog()) {
        for (std::size_t flat = 0; flat < entry.algebra.c.size(); ++flat) {
            if (entry.algebra.c[flat] == 0) continue;
            LeibnizAlgebra mutated = entry.algebra;
            mutated.c[flat] += 1;
            INFO(entry.name << " entry " << flat);
            CHECK(is_leibniz(mutated).ok == testsupport::brute_is_leibniz(mutated));
        }
    }
}
