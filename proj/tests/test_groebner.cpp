#include "arcsing/groebner.hpp"

#include "test_util.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace arcsing;
using arcsing::testutil::poly;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kXYZS{"x", "y", "z", "s"};

std::vector<Polynomial> ideal(const std::vector<std::string>& vars,
                              std::initializer_list<const char*> gens) {
    std::vector<Polynomial> out;
    for (const char* g : gens) out.push_back(poly(vars, g));
    return out;
}

}  // namespace

TEST_CASE("normal form basics") {
    std::vector<Polynomial> basis = ideal(kXY, {"x"});
    CHECK(normal_form(poly(kXY, "x^2"), basis).is_zero());
    CHECK(normal_form(poly(kXY, "y"), basis) == poly(kXY, "y"));
    CHECK(normal_form(poly(kXY, "x*y + y^2"), basis) == poly(kXY, "y^2"));
}

TEST_CASE("s-polynomial cancels leading terms") {
    Polynomial f = poly(kXY, "x^2 - y"), g = poly(kXY, "x*y - 1");
    Polynomial s = s_polynomial(f, g);
    // lcm(x^2, xy) = x^2 y; S = y*f - x*g = -y^2 + x.
    CHECK(s == poly(kXY, "x - y^2"));
}

TEST_CASE("buchberger postconditions") {
    std::vector<Polynomial> gens = ideal(kXY, {"x^2 - y", "x*y - 1"});
    GroebnerBasis gb = buchberger(gens);
    for (const auto& g : gens) CHECK(in_ideal(g, gb));
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        CHECK(gb.basis[i].leading_coefficient() == 1);
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
            CHECK(normal_form(s_polynomial(gb.basis[i], gb.basis[j]), gb.basis).is_zero());
    }
}

TEST_CASE("ideal membership") {
    GroebnerBasis gb = buchberger(ideal(kXYZ, {"x", "y", "x*y - z^5"}));
    CHECK(in_ideal(poly(kXYZ, "z^5"), gb));
    CHECK(in_ideal(poly(kXYZ, "x^2 + y^2"), gb));
    CHECK(!in_ideal(poly(kXYZ, "z^4"), gb));
    CHECK(!in_ideal(poly(kXYZ, "z"), gb));
}

TEST_CASE("zero-dimensionality of the bounded example ideal") {
    ZeroDimResult r = zero_dim_at_origin(
        ideal(kXYZS, {"x", "y", "z^3", "z^2*s", "z*s^2", "s^3"}));
    REQUIRE(r.kind == ZeroDimResult::Kind::Isolated);
    CHECK(r.q == 3);
    CHECK(r.pure_power_exponents == std::vector<int>{1, 1, 3, 3});
}

TEST_CASE("positive dimension of the unbounded example ideal") {
    ZeroDimResult r = zero_dim_at_origin(
        ideal(kXYZS, {"x", "y", "s^5", "z*s^4", "z^2*s^3", "z^3*s^2", "z^4*s"}));
    REQUIRE(r.kind == ZeroDimResult::Kind::PositiveDimensional);
    REQUIRE(r.axis.has_value());
    CHECK(*r.axis == 2);  // the z-axis
}

TEST_CASE("the maximal ideal is zero-dimensional with q = 1") {
    ZeroDimResult r = zero_dim_at_origin(ideal(kXYZ, {"x", "y", "z"}));
    REQUIRE(r.kind == ZeroDimResult::Kind::Isolated);
    CHECK(r.q == 1);
}

TEST_CASE("mixed generators still certify isolation") {
    // x^2 - y^3 and y^4 force pure powers of both variables.
    ZeroDimResult r = zero_dim_at_origin(ideal(kXY, {"x^2 - y^3", "y^4"}));
    REQUIRE(r.kind == ZeroDimResult::Kind::Isolated);
    CHECK(r.pure_power_exponents[1] == 4);
    // x^4 = (x^2 - y^3)(x^2 + y^3) + y^2 * y^4, and no smaller power works.
    CHECK(r.pure_power_exponents[0] == 4);
    CHECK(r.q == 4);
}

TEST_CASE("degenerate inputs yield Unknown") {
    CHECK(zero_dim_at_origin({}).kind == ZeroDimResult::Kind::Unknown);
}

TEST_CASE("random monomial ideals against a combinatorial oracle") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> nvars_d(2, 4);
    std::uniform_int_distribution<int> ngens_d(1, 6);
    std::uniform_int_distribution<int> exp(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = nvars_d(rng);
        std::vector<Polynomial> gens;
        int ngens = ngens_d(rng);
        for (int k = 0; k < ngens; ++k) {
            Monomial m(n, 0);
            bool nonconst = false;
            for (auto& e : m) { e = exp(rng); if (e > 0) nonconst = true; }
            if (!nonconst) m[0] = 1;
            gens.push_back(Polynomial::term(n, m, 1));
        }
        // Oracle: a monomial ideal is zero-dimensional at the origin iff every
        // variable appears as a pure-power generator; its minimal pure power
        // of v is the least exponent among pure v-power generators.
        std::vector<int> min_pure(n, 0);
        for (const auto& g : gens) {
            const Monomial& m = g.leading_monomial();
            int nz = 0;
            std::size_t which = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (m[i] > 0) { ++nz; which = i; }
            if (nz == 1 && (min_pure[which] == 0 || m[which] < min_pure[which]))
                min_pure[which] = m[which];
        }
        bool all_pure = true;
        int expect_q = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (min_pure[v] == 0) all_pure = false;
            expect_q = std::max(expect_q, min_pure[v]);
        }
        ZeroDimResult r = zero_dim_at_origin(gens);
        if (all_pure) {
            REQUIRE(r.kind == ZeroDimResult::Kind::Isolated);
            CHECK(r.q == expect_q);
        } else {
            REQUIRE(r.kind == ZeroDimResult::Kind::PositiveDimensional);
            REQUIRE(r.axis.has_value());
            // The witness axis must have no pure-power generator.
            CHECK(min_pure[*r.axis] == 0);
        }
    }
}

TEST_CASE("membership is stable under ideal operations") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<int> coeff(-2, 2);
    auto rand_poly = [&](std::size_t n) {
        Polynomial p(n);
        for (int k = 0; k < 2; ++k) {
            Monomial m(n);
            for (auto& e : m) e = exp(rng);
            p.add_term(std::move(m), coeff(rng));
        }
        return p;
    };
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial a = rand_poly(2), b = rand_poly(2);
        if (a.is_zero() || b.is_zero()) continue;
        GroebnerBasis gb = buchberger({a, b});
        Polynomial combo = rand_poly(2) * a + rand_poly(2) * b;
        CHECK(in_ideal(combo, gb));
    }
}
