#include <frobx/algebra.hpp>

#include "../support/fixtures.hpp"

#include <doctest.h>

using namespace frobx;

namespace {

Rational r(long long v) { return Rational(v); }

} // namespace

TEST_CASE("example algebras pass validation") {
    for (const Algebra& a :
         {fixtures::dual_numbers_algebra(), fixtures::group_z2_algebra(), fixtures::mat2_algebra()}) {
        Report report = validate_algebra(a);
        CHECK_MESSAGE(report.ok(), a.name, ": ", report.summary());
    }
}

TEST_CASE("a corrupted structure constant is caught with its indices") {
    Algebra a = fixtures::mat2_algebra();
    a.mul[(1 * 4 + 2) * 4 + 0] = r(2); // E12*E21 = 2*E11
    Report report = validate_algebra(a);
    CHECK_FALSE(report.ok());
    const Check* assoc = report.find("associativity");
    REQUIRE(assoc != nullptr);
    CHECK_FALSE(assoc->passed);
    // (E12*E21)*E12 = 2*E12 while E12*(E21*E12) = E12
    CHECK_FALSE(assoc->witnesses.empty());
    CHECK(assoc->witnesses.front().find("(i,j,k,q)=") != std::string::npos);
}

TEST_CASE("a broken unit is caught in the unit check") {
    Algebra a = fixtures::dual_numbers_algebra();
    a.unit_vec = {r(1), r(1)}; // 1+x is not the unit
    Report report = validate_algebra(a);
    const Check* unit = report.find("unit_laws");
    REQUIRE(unit != nullptr);
    CHECK_FALSE(unit->passed);
}

TEST_CASE("multiplication tables as matrices") {
    LinearMap mu = mult_map(fixtures::group_z2_algebra());
    CHECK(mu.dom_factors() == Legs{2, 2});
    CHECK(mu.cod_factors() == Legs{2});
    LinearMap expect(Legs{2}, Legs{2, 2},
                     {r(1), r(0), r(0), r(1),
                      r(0), r(1), r(1), r(0)});
    CHECK(mu == expect);

    LinearMap mu_dual = mult_map(fixtures::dual_numbers_algebra());
    LinearMap expect_dual(Legs{2}, Legs{2, 2},
                          {r(1), r(0), r(0), r(0),
                           r(0), r(1), r(1), r(0)});
    CHECK(mu_dual == expect_dual);
}

TEST_CASE("unit law as matrices") {
    for (const Algebra& a :
         {fixtures::dual_numbers_algebra(), fixtures::group_z2_algebra(), fixtures::mat2_algebra()}) {
        LinearMap mu = mult_map(a);
        LinearMap eta = unit_map(a);
        LinearMap id = LinearMap::identity(a.dim);
        CHECK(compose(mu, kron(eta, id)) == id);
        CHECK(compose(mu, kron(id, eta)) == id);
    }
}

TEST_CASE("commutativity detection") {
    CHECK(is_commutative(fixtures::dual_numbers_algebra()));
    CHECK(is_commutative(fixtures::group_z2_algebra()));
    // E12*E21 = E11 but E21*E12 = E22
    CHECK_FALSE(is_commutative(fixtures::mat2_algebra()));
}

TEST_CASE("coordinate multiplication in mat2 follows matrix units") {
    Algebra a = fixtures::mat2_algebra();
    std::vector<Rational> e12 = {r(0), r(1), r(0), r(0)};
    std::vector<Rational> e21 = {r(0), r(0), r(1), r(0)};
    CHECK(multiply_coords(a, e12, e21) == std::vector<Rational>{r(1), r(0), r(0), r(0)});
    CHECK(multiply_coords(a, e21, e12) == std::vector<Rational>{r(0), r(0), r(0), r(1)});
}

TEST_CASE("make_algebra rejects wrong table sizes") {
    CHECK_THROWS_AS(make_algebra("bad", 2, {"a", "b"}, {r(1)}, {r(1), r(0)}),
                    DimensionMismatch);
    CHECK_THROWS_AS(make_algebra("bad", 2, {"a"}, std::vector<Rational>(8), {r(1), r(0)}),
                    DimensionMismatch);
    CHECK_THROWS_AS(make_algebra("bad", 2, {"a", "b"}, std::vector<Rational>(8), {r(1)}),
                    DimensionMismatch);
}

TEST_CASE("trivial algebra is its own unit object") {
    Algebra q = trivial_algebra();
    CHECK(is_trivial(q));
    CHECK(validate_algebra(q).ok());
    CHECK_FALSE(is_trivial(fixtures::dual_numbers_algebra()));
}
