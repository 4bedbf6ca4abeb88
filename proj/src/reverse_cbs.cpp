#include "coneproj/reverse_cbs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coneproj/projection.hpp"

namespace coneproj {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kStrictTol = 1e-12;
}  // namespace

CbsCheck check_projection_implication(const Vec& u, const Vec& v,
                                      const SubspaceBasis& V, double phi) {
    if (u.size() != V.ambient_dim() || v.size() != V.ambient_dim()) {
        throw std::invalid_argument("check_projection_implication: dimension mismatch");
    }
    const double psi = angle_to_complement(v, V);
    if (!(phi >= 0.0 && phi < psi)) {
        throw std::domain_error(
            "check_projection_implication: requires 0 <= phi < angle(v, V-perp)");
    }
    const double phi1 = projected_aperture(phi, psi);

    const Vec pu = V.project(u);
    const Vec pv = V.project(v);
    const double nu = norm(u);
    const double nv = norm(v);
    const double npu = norm(pu);
    const double npv = norm(pv);

    CbsCheck c;
    c.premise_margin = (dot(u, v) - std::cos(phi) * nu * nv) / (nu * nv + 1.0);
    c.conclusion_margin = (dot(pu, pv) - std::cos(phi1) * npu * npv) / (npu * npv + 1.0);
    c.premise_holds = c.premise_margin >= 0.0;
    c.conclusion_holds = c.conclusion_margin >= 0.0;
    return c;
}

bool enhanced_cbs_condition(const Vec& u1, const Vec& v, const SubspaceBasis& V,
                            double alpha) {
    if (u1.size() != V.ambient_dim() || v.size() != V.ambient_dim()) {
        throw std::invalid_argument("enhanced_cbs_condition: dimension mismatch");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("enhanced_cbs_condition: alpha must lie in (0, 1)");
    }
    if (norm(sub(u1, V.project(u1))) > 1e-10 * (norm(u1) + 1.0)) {
        throw std::invalid_argument("enhanced_cbs_condition: u1 must lie in the subspace");
    }

    const Decomposition dv = V.decompose(v);
    const double n1 = norm(dv.parallel);
    const double n2 = norm(dv.perpendicular);
    const double nv = norm(v);

    // first hypothesis: ||v2|| < alpha ||v1|| / sqrt(1 - alpha^2)
    const double first_margin =
        (alpha * n1 / std::sqrt(1.0 - alpha * alpha) - n2) / (nv + 1.0);
    if (!(first_margin > kStrictTol)) return false;

    // second hypothesis: <u1, v1> below the projected-aperture cosine bound
    const double num = alpha * alpha * nv * nv - n2 * n2;  // > 0 given the first
    const double den = nv * nv - n2 * n2;                  // = ||v1||^2 > 0
    const double coef = std::sqrt(std::max(num, 0.0) / den);
    const double nu1 = norm(u1);
    const double second_margin =
        (coef * nu1 * n1 - dot(u1, dv.parallel)) / (nu1 * n1 + 1.0);
    return second_margin > kStrictTol;
}

SignLemmaCheck check_sign_lemma(const Vec& u, const Vec& v, const SubspaceBasis& V) {
    if (u.size() != V.ambient_dim() || v.size() != V.ambient_dim()) {
        throw std::invalid_argument("check_sign_lemma: dimension mismatch");
    }
    if (V.is_full_space()) {
        throw std::domain_error("check_sign_lemma: subspace must be proper");
    }
    if (is_zero(v)) {
        throw std::domain_error("check_sign_lemma: v must be nonzero");
    }
    const double psi = angle_to_complement(v, V);
    if (!(psi > 0.0)) {
        throw std::domain_error("check_sign_lemma: v must not be orthogonal to the subspace");
    }

    const Vec pu = V.project(u);
    const Vec pv = V.project(v);
    const double nu = norm(u);
    const double nv = norm(v);
    const double npu = norm(pu);
    const double npv = norm(pv);

    SignLemmaCheck r;
    r.check.premise_margin = (dot(u, v) - std::cos(psi) * nu * nv) / (nu * nv + 1.0);
    r.check.premise_holds = r.check.premise_margin >= 0.0;
    r.check.conclusion_margin = dot(pu, pv) / (npu * npv + 1.0);
    r.check.conclusion_holds = r.check.conclusion_margin >= 0.0;
    r.strict_regime = !is_zero(pu) && psi < kHalfPi && V.dim() >= 1;
    r.strict_holds = r.check.conclusion_margin > 0.0;
    return r;
}

}  // namespace coneproj
