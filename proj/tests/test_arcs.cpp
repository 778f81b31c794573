#include "arcsing/arc.hpp"

#include "test_util.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace arcsing;
using arcsing::testutil::mono_arc;
using arcsing::testutil::poly;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kXYZS{"x", "y", "z", "s"};

Variety xy_z5() {
    return Variety{kXYZ, {poly(kXYZ, "x*y - z^5")}};
}

ArcFamily declared_family() {
    // x -> t^(2N+2), y -> t^(2N+5), z -> t, s -> t^(2N+3)
    ArcFamily f;
    f.images = {{1, 2, 2}, {1, 2, 5}, {1, 0, 1}, {1, 2, 3}};
    f.n_lo = 1;
    f.n_hi = 100;
    return f;
}

}  // namespace

TEST_CASE("arc order") {
    CHECK(arc_order(mono_arc({3, 2, 1})) == OrderValue::finite(1));
    CHECK(arc_order(instantiate_family(declared_family(), 1)) == OrderValue::finite(1));
    CHECK(arc_order(instantiate_family(declared_family(), 7)) == OrderValue::finite(1));
    CHECK(arc_order(mono_arc({2, 2, 2})) == OrderValue::finite(2));
}

TEST_CASE("arc invariants are enforced") {
    CHECK_THROWS_AS(Arc({FormalSeries::term(1, 0)}).check_invariants(), std::invalid_argument);
    CHECK_THROWS_AS(Arc({FormalSeries::zero(), FormalSeries::zero()}).check_invariants(),
                    std::invalid_argument);
}

TEST_CASE("validation on a variety") {
    Variety v = xy_z5();
    CHECK(validate_on_variety(mono_arc({3, 2, 1}), v).exact);
    CHECK_THROWS_AS(validate_on_variety(mono_arc({1, 1, 1}), v), ArcNotOnVariety);

    Variety v4{kXYZS, {poly(kXYZS, "x^2*y^3 - z^4*s^5")}};
    CHECK(validate_on_variety(instantiate_family(ArcFamily{{{1, 2, 2}, {1, 2, 5}, {1, 0, 1}, {1, 2, 3}}, 1, 10}, 1), v4).exact);
}

TEST_CASE("graph construction") {
    Arc a = mono_arc({3, 2, 1});
    Arc g = graph(a);
    REQUIRE(g.nvars() == 4);
    CHECK(g.images[3] == FormalSeries::t());
    CHECK(arc_order(g) == OrderValue::finite(1));

    Arc b = graph(mono_arc({5, 5, 2}));
    CHECK(b.images[3] == FormalSeries::t());
    CHECK(arc_order(b) == OrderValue::finite(1));
}

TEST_CASE("family instantiation") {
    Arc a1 = instantiate_family(declared_family(), 1);
    CHECK(a1.images[0] == FormalSeries::t(4));
    CHECK(a1.images[1] == FormalSeries::t(7));
    CHECK(a1.images[2] == FormalSeries::t(1));
    CHECK(a1.images[3] == FormalSeries::t(5));

    Arc a10 = instantiate_family(declared_family(), 10);
    CHECK(a10.images[0] == FormalSeries::t(22));
    CHECK(a10.images[1] == FormalSeries::t(25));
    CHECK(a10.images[2] == FormalSeries::t(1));
    CHECK(a10.images[3] == FormalSeries::t(23));

    ArcFamily degenerate{{{1, 0, 1}, {1, 0, 1}}, 1, 5};
    Arc d = instantiate_family(degenerate, 3);
    CHECK(d.images[0] == FormalSeries::t());
    CHECK(d.images[1] == FormalSeries::t());

    CHECK_THROWS_AS(instantiate_family(declared_family(), 0), std::out_of_range);
}

TEST_CASE("family order is monotone when exponents are") {
    ArcFamily f = declared_family();
    Rational prev = 0;
    for (long long n = 1; n <= 10; ++n) {
        OrderValue o = arc_order(instantiate_family(f, n));
        REQUIRE(o.is_finite());
        CHECK(o.value() >= prev);
        prev = o.value();
    }
}

TEST_CASE("validation is invariant under permuting defining polynomials") {
    Variety v{kXYZ, {poly(kXYZ, "x*y - z^5"), poly(kXYZ, "x^2 - y^3")}};
    Variety w{kXYZ, {poly(kXYZ, "x^2 - y^3"), poly(kXYZ, "x*y - z^5")}};
    Arc a = mono_arc({3, 2, 1});
    CHECK(validate_on_variety(a, v).exact == validate_on_variety(a, w).exact);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> exp(1, 4);
    std::uniform_int_distribution<int> nt(0, 4);
    std::uniform_int_distribution<int> ex(0, 3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < 30; ++i) {
        Arc a = mono_arc({exp(rng), exp(rng), exp(rng)});
        Polynomial p(3), q(3);
        for (int k = 0; k < nt(rng); ++k) {
            Monomial m{ex(rng), ex(rng), ex(rng)};
            p.add_term(m, coeff(rng));
        }
        for (int k = 0; k < nt(rng); ++k) {
            Monomial m{ex(rng), ex(rng), ex(rng)};
            q.add_term(m, coeff(rng));
        }
        CHECK(substitute(p * q, a) == substitute(p, a) * substitute(q, a));
    }
}
