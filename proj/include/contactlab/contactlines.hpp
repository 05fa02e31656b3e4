#pragma once

#include <array>
#include <cstdint>

#include "contactlab/forms.hpp"
#include "contactlab/projective.hpp"

namespace contactlab {

/// Contact structure on CP^3 as a nonsingular antisymmetric matrix.
struct ContactStructure {
    AntisymMatrix4 matrix;
    Rat pf;  // Pfaffian; the structure is valid iff pf != 0
};

// a01*a23 - a02*a13 + a03*a12; pf(A)^2 = det(A).
Rat pfaffian(const AntisymMatrix4& a);

// Throws MathError when the Pfaffian vanishes.
ContactStructure make_contact_structure(const AntisymMatrix4& a);

/// True iff a^T A b = 0 for spanning points of the line; independent of the
/// chosen spanning points.
bool is_contact_line(const ContactStructure& phi, const Line3& line);

/// Coefficients (a01, a02, a03, a12, a13, a23) as a linear form on Plucker
/// coordinates: a^T A b = <hyperplane_form, plucker_coords(line)> exactly.
std::array<Rat, 6> hyperplane_form(const ContactStructure& phi);

/// The contact plane {x : p^T A x = 0} through p; a line through p is
/// contact iff its second spanning point lies on this plane.
struct ContactPlane {
    std::array<Rat, 4> coeffs;
};

ContactPlane contact_lines_through_point(const ContactStructure& phi, const ProjPoint& p);

struct LinesExperiment {
    Rat pf;
    int lines_tested = 0;
    int agreements = 0;
};

/// Seeded random-line experiment comparing is_contact_line against the
/// Plucker-quadric + hyperplane-section condition. The seed range is
/// partitioned deterministically across at most `jobs` workers.
LinesExperiment run_lines_experiment(const ContactStructure& phi, int lines, std::uint64_t seed,
                                     int jobs = 1);

// Deterministic random line in CP^3 with small integer coordinates.
Line3 random_line(std::uint64_t seed);

// Deterministic random antisymmetric matrix; nonsingular unless
// allow_singular.
AntisymMatrix4 random_antisym(std::uint64_t seed, bool allow_singular = false);

}  // namespace contactlab
