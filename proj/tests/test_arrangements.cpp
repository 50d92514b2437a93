#include <doctest.h>

#include "helpers.hpp"

using namespace lefarr;
using namespace lefarr::testing;

namespace {

Arrangement parse_arr(const std::string& text) {
    return parse_arrangement_text(text).arrangement;
}

}  // namespace

TEST_CASE("defining polynomial and jacobian ideal") {
    VariableContext ctx({"x", "y", "z"});
    const auto A = parse_arr("vars: x,y,z\nx\ny\nz\nx+y+z\n");
    const auto q = defining_polynomial(A);
    CHECK(q == parse_polynomial("x^2*y*z + x*y^2*z + x*y*z^2", ctx));
    const auto J = jacobian_ideal(A);
    REQUIRE(J.generators.size() == 4);
    CHECK(J.homogeneous);
    // the Euler relation puts Q inside the ideal of the partials
    std::vector<Polynomial> partials(J.generators.begin() + 1, J.generators.end());
    CHECK(ideal_membership(q, IdealPresentation::make(3, partials)));
}

TEST_CASE("proportional and affine forms are rejected") {
    VariableContext ctx({"x", "y"});
    CHECK_THROWS_AS(Arrangement::make(2, {parse_polynomial("x", ctx),
                                          parse_polynomial("2*x", ctx)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Arrangement::make(2, {parse_polynomial("x+1", ctx)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Arrangement::make(2, {parse_polynomial("x^2", ctx)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Arrangement::make(2, {}), std::invalid_argument);
}

TEST_CASE("saito criterion certifies the braid arrangement") {
    VariableContext ctx({"x", "y", "z"});
    const auto A = parse_arr("vars: x,y,z\nx\ny\nz\nx-y\nx-z\ny-z\n");
    // Euler derivation plus the two classical higher ones for A_3
    const auto euler = DerivationVector::make({parse_polynomial("x", ctx),
                                               parse_polynomial("y", ctx),
                                               parse_polynomial("z", ctx)});
    const auto d2 = DerivationVector::make({parse_polynomial("x^2", ctx),
                                            parse_polynomial("y^2", ctx),
                                            parse_polynomial("z^2", ctx)});
    const auto d3 = DerivationVector::make({parse_polynomial("x^3", ctx),
                                            parse_polynomial("y^3", ctx),
                                            parse_polynomial("z^3", ctx)});
    const auto v = saito_verify(A, {euler, d2, d3});
    CHECK(v.basis);
    CHECK(v.pdeg_sum == 6);

    // wrong degrees: replace the cubic part by another quadratic one
    const auto bad = saito_verify(A, {euler, d2, d2});
    CHECK(!bad.basis);
    CHECK(bad.reason == SaitoFailure::degree_sum);

    // non-logarithmic candidate
    const auto rogue = DerivationVector::make({parse_polynomial("y^3", ctx),
                                               parse_polynomial("x^3", ctx),
                                               parse_polynomial("z^3", ctx)});
    const auto nl = saito_verify(A, {euler, d2, rogue});
    CHECK(!nl.basis);
    CHECK(nl.reason == SaitoFailure::not_logarithmic);
}

TEST_CASE("freeness pattern recognition on explicit monomial ideals") {
    // braid pattern: x^4, x^3 y^1, x^2 y^2 ... with lambda = (1,2,4,5,7)
    const auto braid_gin = ideal(3, {{5,0,0},{4,1,0},{3,2,0},{2,4,0},{1,5,0},{0,7,0}});
    const auto v = is_free_via_rgin_of(braid_gin, 6);
    REQUIRE(v.free);
    CHECK(v.lambda == std::vector<int>{1, 2, 4, 5, 7});

    // a generator outside k[x1, x2] breaks the pattern
    const auto bad = is_free_via_rgin_of(ideal(3, {{3,0,0},{2,1,0},{1,2,0},{0,4,0},{0,3,1}}), 4);
    CHECK(!bad.free);
    CHECK(bad.witness == pp({0, 3, 1}));

    // wrong generator count
    CHECK(!is_free_via_rgin_of(ideal(3, {{2,0,0},{1,1,0},{0,2,0}}), 4).free);

    // lambda gap of three is not allowed
    const auto gap = is_free_via_rgin_of(ideal(3, {{2,0,0},{1,1,0},{0,4,0}}), 3);
    CHECK(!gap.free);

    CHECK(is_free_via_rgin_of(MonomialIdeal::unit(3), 1).free);
}

TEST_CASE("freeness via rgin on the classical examples") {
    const auto braid = parse_arr("vars: x,y,z\nx\ny\nz\nx-y\nx-z\ny-z\n");
    const auto v = is_free_via_rgin(braid, {.seed = 7});
    REQUIRE(v.free);
    CHECK(v.lambda == std::vector<int>{1, 2, 4, 5, 7});

    const auto generic = parse_arr("vars: x,y,z\nx\ny\nz\nx+y+z\n");
    CHECK(!is_free_via_rgin(generic, {.seed = 7}).free);
}

TEST_CASE("conjectured degree bound for generators in later variables") {
    // d0 = 4 and every generator involving z has degree >= 4: consistent
    const auto c = check_conjecture_d0_of(ideal(3, {{3,0,0},{2,1,0},{1,2,0},{0,4,0},{0,3,1}}));
    CHECK(c.consistent);
    CHECK(c.d0 == 4);
    // a z-generator of degree 3 below d0 = 4 violates it
    const auto bad = check_conjecture_d0_of(ideal(3, {{3,0,0},{0,4,0},{0,2,1}}));
    CHECK(!bad.consistent);
    CHECK(bad.violating_generator == pp({0, 2, 1}));
    // no pure power of x_2 at all: vacuously consistent
    const auto open_case = check_conjecture_d0_of(ideal(3, {{2,0,0},{1,1,0}}));
    CHECK(open_case.consistent);
    CHECK(open_case.d0 == -1);
}

TEST_CASE("full jacobian algebra report on the four line arrangement") {
    const auto A = parse_arr("vars: x,y,z\nx\ny\nz\nx+y+z\n");
    const auto rep = jacobian_algebra_report(A, {.seed = 7}, 6);
    CHECK(rep.n == 4);
    REQUIRE(rep.gin.certified);
    CHECK(rep.gin.ideal == ideal(3, {{3,0,0},{2,1,0},{1,2,0},{0,4,0},{0,3,1}}));
    CHECK(rep.hilbert == std::vector<long>{1, 3, 6, 7, 6, 6, 6});
    CHECK(rep.wlp.holds);
    CHECK(rep.slp.holds);
    CHECK(rep.almost_revlex.holds);
    CHECK(!rep.freeness.free);
    CHECK(rep.conjecture.consistent);
    CHECK(rep.conjecture.d0 == 4);
}
