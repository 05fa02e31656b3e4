#include <doctest.h>

#include "contactlab/contactlines.hpp"
#include "contactlab/errors.hpp"
#include "contactlab/seeding.hpp"
#include "support/oracles.hpp"

using namespace contactlab;

namespace {

std::array<std::array<Rat, 4>, 4> as_array(const AntisymMatrix4& a) {
    std::array<std::array<Rat, 4>, 4> m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j);
    return m;
}

}  // namespace

TEST_CASE("pfaffian") {
    CHECK(pfaffian(bryant_matrix()) == Rat(1));
    CHECK(pfaffian(AntisymMatrix4::from_upper({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}))
              .is_zero());

    SUBCASE("pf(A)^2 = det(A) for 100 seeded random antisymmetric matrices") {
        for (std::uint64_t s = 0; s < 100; ++s) {
            AntisymMatrix4 a = random_antisym(derive_seed(71, "pf", s), true);
            Rat pf = pfaffian(a);
            CHECK(pf * pf == testing::det4(as_array(a)));
        }
    }

    SUBCASE("the Pfaffian is the Plucker quadric form of the coefficient vector") {
        for (std::uint64_t s = 0; s < 100; ++s) {
            AntisymMatrix4 a = random_antisym(derive_seed(73, "pf-quadric", s), true);
            CHECK(pfaffian(a) == plucker_quadric_form(a.upper()));
        }
    }
}

TEST_CASE("contact structure construction") {
    CHECK(make_contact_structure(bryant_matrix()).pf == Rat(1));
    CHECK_THROWS_AS(make_contact_structure(AntisymMatrix4::from_upper(
                        {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)})),
                    MathError);
}

TEST_CASE("contact lines of the Bryant structure") {
    ContactStructure phi = make_contact_structure(bryant_matrix());
    ProjPoint e0 = ProjPoint::of({1, 0, 0, 0});
    ProjPoint e1 = ProjPoint::of({0, 1, 0, 0});
    ProjPoint e2 = ProjPoint::of({0, 0, 1, 0});
    ProjPoint e3 = ProjPoint::of({0, 0, 0, 1});
    CHECK_FALSE(is_contact_line(phi, make_line(e0, e1)));  // value A01 = 1
    CHECK(is_contact_line(phi, make_line(e0, e2)));        // A02 = 0
    CHECK(is_contact_line(phi, make_line(e0, e3)));        // A03 = 0
}

TEST_CASE("hyperplane form identity") {
    ContactStructure phi = make_contact_structure(bryant_matrix());
    std::array<Rat, 6> h = hyperplane_form(phi);
    CHECK(h == std::array<Rat, 6>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});

    SUBCASE("a^T A b equals the form paired with Plucker coordinates, 1000 lines") {
        ContactStructure psi =
            make_contact_structure(random_antisym(derive_seed(79, "structure", 0), false));
        std::array<Rat, 6> hp = hyperplane_form(psi);
        for (int i = 0; i < 1000; ++i) {
            Line3 line = random_line(derive_seed(79, "line", static_cast<std::uint64_t>(i)));
            Rat direct(0);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    direct += line.a[static_cast<std::size_t>(r)] * psi.matrix.at(r, c) *
                              line.b[static_cast<std::size_t>(c)];
            PluckerPoint pl = plucker_coords(line);
            Rat paired(0);
            for (std::size_t k = 0; k < 6; ++k) paired += hp[k] * pl.p[k];
            CHECK(direct == paired);
        }
    }

    SUBCASE("scaling the matrix scales the form") {
        AntisymMatrix4 a = random_antisym(derive_seed(83, "scale", 1), false);
        std::array<Rat, 6> u = a.upper();
        for (Rat& v : u) v *= Rat(3);
        ContactStructure tripled = make_contact_structure(AntisymMatrix4::from_upper(u));
        std::array<Rat, 6> h1 = hyperplane_form(make_contact_structure(a));
        std::array<Rat, 6> h3 = hyperplane_form(tripled);
        for (std::size_t k = 0; k < 6; ++k) CHECK(h3[k] == Rat(3) * h1[k]);
    }
}

TEST_CASE("contact planes through a point") {
    ContactStructure phi = make_contact_structure(bryant_matrix());
    ContactPlane pl = contact_lines_through_point(phi, ProjPoint::of({1, 0, 0, 0}));
    CHECK(pl.coeffs == std::array<Rat, 4>{Rat(0), Rat(1), Rat(0), Rat(0)});  // {x1 = 0}

    SUBCASE("p lies on its own contact plane, 100 random points") {
        for (std::uint64_t s = 0; s < 100; ++s) {
            Rng rng(derive_seed(89, "point", s));
            std::vector<Rat> c(4);
            bool zero = true;
            for (auto& v : c) {
                v = Rat(rng.range(-9, 9));
                zero = zero && v.is_zero();
            }
            if (zero) continue;
            ProjPoint p(c);
            ContactPlane plane = contact_lines_through_point(phi, p);
            Rat on(0);
            for (std::size_t k = 0; k < 4; ++k) on += plane.coeffs[k] * p[k];
            CHECK(on.is_zero());
        }
    }

    SUBCASE("lines from p into the plane are contact") {
        ContactStructure psi =
            make_contact_structure(random_antisym(derive_seed(97, "psi", 2), false));
        ProjPoint p = ProjPoint::of({1, 2, 0, -1});
        ContactPlane plane = contact_lines_through_point(psi, p);
        int sampled = 0;
        for (std::uint64_t s = 0; sampled < 25; ++s) {
            Rng rng(derive_seed(97, "sample", s));
            // solve plane . q = 0 for q3 given random q0..q2 (or resample)
            std::vector<Rat> q(4);
            for (int k = 0; k < 3; ++k) q[static_cast<std::size_t>(k)] = Rat(rng.range(-9, 9));
            if (plane.coeffs[3].is_zero()) break;  // fallback handled below
            Rat acc(0);
            for (std::size_t k = 0; k < 3; ++k) acc += plane.coeffs[k] * q[k];
            q[3] = -acc / plane.coeffs[3];
            ProjPoint pq = [&]() -> ProjPoint {
                try { return ProjPoint(q); } catch (...) { return p; }
            }();
            if (pq.same_point(p)) continue;
            CHECK(is_contact_line(psi, make_line(p, pq)));
            ++sampled;
        }
        CHECK(sampled == 25);
    }
}

TEST_CASE("random line experiment agrees everywhere") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        ContactStructure phi =
            make_contact_structure(random_antisym(derive_seed(101, "exp", s), false));
        LinesExperiment e = run_lines_experiment(phi, 1000, s);
        CHECK(e.lines_tested == 1000);
        CHECK(e.agreements == 1000);
        CHECK(e.pf == pfaffian(phi.matrix));
    }

    SUBCASE("worker partition does not change the result") {
        ContactStructure phi = make_contact_structure(bryant_matrix());
        LinesExperiment serial = run_lines_experiment(phi, 500, 12345, 1);
        LinesExperiment parallel = run_lines_experiment(phi, 500, 12345, 4);
        CHECK(serial.agreements == parallel.agreements);
        CHECK(serial.lines_tested == parallel.lines_tested);
    }
}

TEST_CASE("hyperplane section of the quadric has projective dimension 3") {
    // rank of the Jacobian of (quadric, hyperplane) is 2 at sample contact
    // lines, so the intersection is a 3-fold in CP^5
    ContactStructure phi = make_contact_structure(bryant_matrix());
    std::array<Rat, 6> h = hyperplane_form(phi);
    int checked = 0;
    for (std::uint64_t s = 0; checked < 20; ++s) {
        Rng rng(derive_seed(103, "dim", s));
        std::vector<Rat> pc(4);
        bool zero = true;
        for (auto& v : pc) {
            v = Rat(rng.range(-5, 5));
            zero = zero && v.is_zero();
        }
        if (zero) continue;
        ProjPoint p(pc);
        ContactPlane plane = contact_lines_through_point(phi, p);
        // take q in the contact plane (solve for a free coordinate)
        int pivot = -1;
        for (int k = 0; k < 4; ++k)
            if (!plane.coeffs[static_cast<std::size_t>(k)].is_zero()) pivot = k;
        REQUIRE(pivot >= 0);
        std::vector<Rat> q(4);
        for (int k = 0; k < 4; ++k)
            if (k != pivot) q[static_cast<std::size_t>(k)] = Rat(rng.range(-5, 5));
        Rat acc(0);
        for (int k = 0; k < 4; ++k)
            if (k != pivot) acc += plane.coeffs[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(k)];
        q[static_cast<std::size_t>(pivot)] = -acc / plane.coeffs[static_cast<std::size_t>(pivot)];
        ProjPoint pq = [&]() -> ProjPoint {
            try { return ProjPoint(q); } catch (...) { return p; }
        }();
        if (pq.same_point(p)) continue;

        PluckerPoint pl = plucker_coords(make_line(p, pq));
        REQUIRE(on_plucker_quadric(pl));
        // gradient of p01 p23 - p02 p13 + p03 p12
        std::array<Rat, 6> grad{pl.p[5], -pl.p[4], pl.p[3], pl.p[2], -pl.p[1], pl.p[0]};
        // rank of the 2x6 matrix (grad; h) must be 2: some 2x2 minor nonzero
        bool rank2 = false;
        for (std::size_t i = 0; i < 6 && !rank2; ++i)
            for (std::size_t j = i + 1; j < 6 && !rank2; ++j)
                rank2 = !(grad[i] * h[j] - grad[j] * h[i]).is_zero();
        CHECK(rank2);
        ++checked;
    }
}
