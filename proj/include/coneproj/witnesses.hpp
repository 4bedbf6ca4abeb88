#pragma once

#include "coneproj/cone.hpp"
#include "coneproj/linalg.hpp"

namespace coneproj {

enum class WitnessConstruction { Equality, Antipodal, Border };

/// An explicitly constructed vector certifying an extremal configuration,
/// together with its recomputed angles. Every construction guarantees both
/// the vector and its projection are nonzero.
struct Witness {
    Vec vector;
    double certified_original_angle = 0.0;   // angle(vector, axis)
    double certified_projected_angle = 0.0;  // angle(P vector, P axis)
    WitnessConstruction construction = WitnessConstruction::Equality;
};

/// Saturating vector for the projection implication: a cone member at angle
/// exactly phi from the axis whose projection sits at angle exactly phi1
/// from the projected axis. Requires dim V >= 2, a nonzero axis, and
/// 0 <= phi < angle(axis, V-perp).
Witness equality_witness(const Vec& axis, const SubspaceBasis& V, double phi);

/// Cone member whose projection points exactly opposite the projected axis
/// (<Pu, Pv> = -||Pu|| ||Pv||). Requires 1 <= dim V < ambient dim, a nonzero
/// axis, and phi > angle(axis, V-perp).
Witness antipodal_witness(const Vec& axis, const SubspaceBasis& V, double phi);

/// Boundary-aperture member (at angle psi = angle(axis, V-perp) from the
/// axis) whose projection makes the prescribed inner-product ratio:
/// <Pu, Pv> = epsilon ||Pu|| ||Pv||, epsilon in (0, 1]. As epsilon drops to
/// 0 the projected angle sweeps toward pi/2 from below. Requires
/// dim V >= 2, a nonzero axis, and psi > 0.
Witness border_witness(const Vec& axis, const SubspaceBasis& V, double epsilon);

/// Constructive preimage: given a cone member `seed` with P seed != O and a
/// target w in V with <w, Pv> >= cos(theta) ||w|| ||Pv|| for the angle theta
/// certified by the seed, returns u~ = w + (seed - P seed) ||w|| / ||P seed||,
/// which projects exactly to w and stays inside the cone. The cone must be
/// closed with its apex at the origin (translate first otherwise).
Vec lift_to_cone(const Vec& target, const Vec& seed, const RoundCone& cone,
                 const SubspaceBasis& V);

const char* to_string(WitnessConstruction c);

}  // namespace coneproj
