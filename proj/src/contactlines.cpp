#include "contactlab/contactlines.hpp"

#include <thread>
#include <vector>

#include "contactlab/errors.hpp"
#include "contactlab/seeding.hpp"

namespace contactlab {

Rat pfaffian(const AntisymMatrix4& a) {
    return a.at(0, 1) * a.at(2, 3) - a.at(0, 2) * a.at(1, 3) + a.at(0, 3) * a.at(1, 2);
}

ContactStructure make_contact_structure(const AntisymMatrix4& a) {
    Rat pf = pfaffian(a);
    if (pf.is_zero()) throw MathError("matrix is singular: Pfaffian vanishes");
    return ContactStructure{a, std::move(pf)};
}

namespace {

Rat bilinear(const AntisymMatrix4& a, const ProjPoint& p, const ProjPoint& q) {
    Rat acc(0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            acc += p[static_cast<std::size_t>(i)] * a.at(i, j) * q[static_cast<std::size_t>(j)];
    return acc;
}

}  // namespace

bool is_contact_line(const ContactStructure& phi, const Line3& line) {
    if (line.a.same_point(line.b)) throw DegenerateLine("degenerate spanning pair");
    return bilinear(phi.matrix, line.a, line.b).is_zero();
}

std::array<Rat, 6> hyperplane_form(const ContactStructure& phi) {
    return phi.matrix.upper();
}

ContactPlane contact_lines_through_point(const ContactStructure& phi, const ProjPoint& p) {
    if (p.dim() != 4) throw InputError("contact plane expects a CP^3 point");
    std::array<Rat, 4> coeffs;
    bool all_zero = true;
    for (int j = 0; j < 4; ++j) {
        Rat c(0);
        for (int i = 0; i < 4; ++i) c += p[static_cast<std::size_t>(i)] * phi.matrix.at(i, j);
        if (!c.is_zero()) all_zero = false;
        coeffs[static_cast<std::size_t>(j)] = std::move(c);
    }
    if (all_zero)  // impossible for pf != 0: A is invertible
        throw MathError("contact plane degenerated; matrix must be singular");
    return ContactPlane{std::move(coeffs)};
}

Line3 random_line(std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        std::vector<Rat> a(4), b(4);
        bool a_zero = true, b_zero = true;
        for (int i = 0; i < 4; ++i) {
            a[static_cast<std::size_t>(i)] = Rat(rng.range(-9, 9));
            b[static_cast<std::size_t>(i)] = Rat(rng.range(-9, 9));
            a_zero = a_zero && a[static_cast<std::size_t>(i)].is_zero();
            b_zero = b_zero && b[static_cast<std::size_t>(i)].is_zero();
        }
        if (a_zero || b_zero) continue;
        ProjPoint pa(a), pb(b);
        if (pa.same_point(pb)) continue;
        return Line3{std::move(pa), std::move(pb)};
    }
}

AntisymMatrix4 random_antisym(std::uint64_t seed, bool allow_singular) {
    Rng rng(seed);
    for (;;) {
        std::array<Rat, 6> u;
        for (auto& v : u) v = Rat(rng.range(-9, 9));
        AntisymMatrix4 a = AntisymMatrix4::from_upper(u);
        if (allow_singular || !pfaffian(a).is_zero()) return a;
    }
}

LinesExperiment run_lines_experiment(const ContactStructure& phi, int lines, std::uint64_t seed,
                                     int jobs) {
    if (lines < 0) throw InputError("negative line count");
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, std::max(1, lines));

    std::array<Rat, 6> h = hyperplane_form(phi);
    auto probe = [&phi, &h](std::uint64_t line_seed) {
        Line3 line = random_line(line_seed);
        bool direct = is_contact_line(phi, line);
        PluckerPoint p = plucker_coords(line);
        Rat section(0);
        for (int i = 0; i < 6; ++i) section += h[static_cast<std::size_t>(i)] * p.p[static_cast<std::size_t>(i)];
        bool via_plucker = on_plucker_quadric(p) && section.is_zero();
        return direct == via_plucker;
    };

    std::vector<int> agree(static_cast<std::size_t>(jobs), 0);
    auto worker = [&](int w) {
        // deterministic partition: worker w handles indices w, w+jobs, ...
        for (int i = w; i < lines; i += jobs) {
            if (probe(derive_seed(seed, "line", static_cast<std::uint64_t>(i))))
                agree[static_cast<std::size_t>(w)] += 1;
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (std::thread& t : pool) t.join();
    }

    LinesExperiment e;
    e.pf = phi.pf;
    e.lines_tested = lines;
    for (int w = 0; w < jobs; ++w) e.agreements += agree[static_cast<std::size_t>(w)];
    return e;
}

}  // namespace contactlab
