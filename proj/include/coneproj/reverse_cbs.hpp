#pragma once

#include "coneproj/linalg.hpp"

namespace coneproj {

/// Evaluation of one premise/conclusion inequality pair. Margins are the
/// signed slack of each inequality, normalized by (product of the relevant
/// norms + 1) so tolerances are scale-free.
struct CbsCheck {
    bool premise_holds = false;
    bool conclusion_holds = false;
    double premise_margin = 0.0;
    double conclusion_margin = 0.0;
};

/// The projection implication at aperture phi < psi = angle(v, V-perp):
///   <u, v> >= cos(phi) ||u|| ||v||
///     implies  <Pu, Pv> >= cos(phi1) ||Pu|| ||Pv||,
/// with phi1 the projected aperture. A sound implementation never observes
/// the premise holding while the conclusion margin drops below -1e-9.
CbsCheck check_projection_implication(const Vec& u, const Vec& v,
                                      const SubspaceBasis& V, double phi);

/// Sufficient condition, checked on the component u1 = P u alone, for the
/// strict strengthening <u, v> < alpha ||u|| ||v|| to hold for every
/// extension of u1 by an arbitrary V-perp part:
///   ||v2|| < alpha ||v1|| / sqrt(1 - alpha^2)   and
///   <u1, v1> < sqrt((alpha^2 ||v||^2 - ||v2||^2) / (||v||^2 - ||v2||^2)) ||u1|| ||v1||.
/// Both hypotheses are strict; "strict" is encoded as margin > 1e-12.
bool enhanced_cbs_condition(const Vec& u1, const Vec& v, const SubspaceBasis& V,
                            double alpha);

struct SignLemmaCheck {
    CbsCheck check;
    bool strict_regime = false;  // Pu != O, 0 < angle(v, V-perp) < pi/2, dim V >= 1
    bool strict_holds = false;   // <Pu, Pv> > 0
};

/// The sign lemma at the boundary aperture psi = angle(v, V-perp):
///   <u, v> >= cos(psi) ||u|| ||v||  implies  <Pu, Pv> >= 0,
/// strengthened to strict positivity when Pu != O and 0 < psi < pi/2.
/// Requires V proper, v nonzero, psi > 0.
SignLemmaCheck check_sign_lemma(const Vec& u, const Vec& v, const SubspaceBasis& V);

}  // namespace coneproj
