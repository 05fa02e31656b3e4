#include <doctest.h>

#include "contactlab/errors.hpp"
#include "contactlab/planecurve.hpp"
#include "contactlab/poly_io.hpp"
#include "contactlab/projective.hpp"
#include "contactlab/seeding.hpp"
#include "support/oracles.hpp"

using namespace contactlab;

TEST_CASE("projective points") {
    ProjPoint p({Rat(2), Rat(4), Rat(6)});
    CHECK(p.same_point(ProjPoint::of({1, 2, 3})));
    CHECK(p.same_point(ProjPoint({Rat(-1), Rat(-2), Rat(-3)})));
    CHECK_FALSE(p.same_point(ProjPoint::of({1, 2, 4})));
    CHECK(p.str() == "[1, 2, 3]");
    CHECK(ProjPoint({Rat(0), Rat(1, 2), Rat(-1, 2)}).str() == "[0, 1, -1]");
    CHECK_THROWS_AS(ProjPoint({Rat(0), Rat(0), Rat(0)}), InputError);
    CHECK_THROWS_AS(ProjPoint({Rat(1), Rat(2)}), InputError);
    CHECK(ProjPoint::parse("[1, 2, 3]").same_point(p));
    CHECK(ProjPoint::parse("[1/2, 0, 0, -3]").dim() == 4);
}

TEST_CASE("plucker coordinates") {
    ProjPoint e0 = ProjPoint::of({1, 0, 0, 0});
    ProjPoint e1 = ProjPoint::of({0, 1, 0, 0});
    PluckerPoint p = plucker_coords(make_line(e0, e1));
    CHECK(p.p == std::array<Rat, 6>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});

    // all six minors by hand
    PluckerPoint q = plucker_coords(
        make_line(ProjPoint::of({1, 0, 0, 1}), ProjPoint::of({0, 1, 1, 0})));
    CHECK(q.p == std::array<Rat, 6>{Rat(1), Rat(1), Rat(0), Rat(0), Rat(-1), Rat(-1)});

    CHECK_THROWS_AS(make_line(e0, ProjPoint::of({2, 0, 0, 0})), DegenerateLine);
    CHECK_THROWS_AS(make_line(e0, ProjPoint::of({1, 0, 0})), DegenerateLine);
}

TEST_CASE("plucker quadric") {
    CHECK(on_plucker_quadric(PluckerPoint{{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}}));
    CHECK_FALSE(on_plucker_quadric(PluckerPoint{{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}}));
    // homogeneity: scaling does not change the answer
    CHECK_FALSE(on_plucker_quadric(PluckerPoint{{Rat(3), Rat(0), Rat(0), Rat(0), Rat(0), Rat(3)}}));

    SUBCASE("1000 seeded random lines land on the quadric") {
        int tested = 0;
        for (int i = 0; tested < 1000; ++i) {
            Rng rng(derive_seed(99, "quadric-line", static_cast<std::uint64_t>(i)));
            std::vector<Rat> a(4), b(4);
            bool az = true, bz = true;
            for (std::size_t k = 0; k < 4; ++k) {
                a[k] = Rat(rng.range(-9, 9));
                b[k] = Rat(rng.range(-9, 9));
                az = az && a[k].is_zero();
                bz = bz && b[k].is_zero();
            }
            if (az || bz) continue;
            ProjPoint pa(a), pb(b);
            if (pa.same_point(pb)) continue;
            CHECK(on_plucker_quadric(plucker_coords(make_line(pa, pb))));
            ++tested;
        }
    }

    SUBCASE("re-spanning yields a proportional point") {
        ProjPoint a = ProjPoint::of({1, 2, 0, -1});
        ProjPoint b = ProjPoint::of({0, 1, 1, 3});
        // a + 2b and 3a - b span the same line
        std::vector<Rat> c(4), d(4);
        for (std::size_t i = 0; i < 4; ++i) {
            c[i] = a[i] + Rat(2) * b[i];
            d[i] = Rat(3) * a[i] - b[i];
        }
        PluckerPoint p1 = plucker_coords(make_line(a, b));
        PluckerPoint p2 = plucker_coords(make_line(ProjPoint(c), ProjPoint(d)));
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j)
                CHECK(p1.p[i] * p2.p[j] == p1.p[j] * p2.p[i]);
    }
}

TEST_CASE("random projectivity determinism and group action") {
    Mat3 m1 = random_projectivity(42);
    Mat3 m2 = random_projectivity(42);
    CHECK(m1.m == m2.m);
    CHECK_FALSE(m1.det().is_zero());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(m1.m[i][j] <= Rat(5));
            CHECK(m1.m[i][j] >= Rat(-5));
        }

    Rng rng(derive_seed(17, "proj-action"));
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly f;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b) {
                int c = 3 - a - b;
                MultiPoly mono(Rat(rng.range(-4, 4)));
                mono *= MultiPoly::variable("x0").pow(static_cast<unsigned>(a)) *
                        MultiPoly::variable("x1").pow(static_cast<unsigned>(b)) *
                        MultiPoly::variable("x2").pow(static_cast<unsigned>(c));
                f += mono;
            }
        if (f.is_zero()) continue;
        HomogPoly hf = make_homog(f);
        Mat3 m = random_projectivity(static_cast<std::uint64_t>(trial) + 1000);
        HomogPoly g = transform_curve(hf, m);
        CHECK(g.degree == hf.degree);
        CHECK(transform_curve(g, m.inverse()).poly == hf.poly);
    }
}

TEST_CASE("projectivities preserve singularity data of catalog curves") {
    for (const char* text : {"x1^2*x2 - x0^3 - x0^2*x2", "x1^2*x2 - x0^3"}) {
        HomogPoly f = make_homog(parse_poly(text));
        PlaneCurve before = analyze_curve(f);
        for (std::uint64_t s = 1; s <= 5; ++s) {
            Mat3 m = random_projectivity(s);
            PlaneCurve after = analyze_curve(transform_curve(f, m));
            CHECK(after.delta == before.delta);
            CHECK(after.kappa == before.kappa);
            REQUIRE(after.singularities.size() == before.singularities.size());
            for (const SingularPoint& sp : before.singularities) {
                ProjPoint moved = apply_projectivity(m, sp.point);
                bool matched = false;
                for (const SingularPoint& sq : after.singularities) {
                    if (sq.point.same_point(moved)) {
                        matched = sq.kind == sp.kind;
                        break;
                    }
                }
                CHECK(matched);
            }
        }
    }
}
