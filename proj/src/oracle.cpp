#include "coneproj/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "coneproj/rng.hpp"
#include "coneproj/witnesses.hpp"

namespace coneproj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
std::string describe_instance(const RoundCone& cone, const SubspaceBasis& V,
                              double psi) {
    std::ostringstream os;
    os.precision(17);
    os << "dim=" << V.ambient_dim() << " subspace_dim=" << V.dim()
       << " phi=" << cone.half_aperture << " psi=" << psi
       << " flavor=" << (cone.flavor == ConeFlavor::Closed ? "closed" : "apex_open");
    return os.str();
}

Vec normalized(const Vec& v) { return scaled(v, 1.0 / norm(v)); }

// Deterministic grid of 2 dim V + 1 unit directions inside the cone of
// half-aperture theta around `axis_dir` in V: the axis, boundary rotations
// toward both signs of every completion direction, one half-angle rotation,
// and the witness direction. For theta = pi the rotations land on -axis.
std::vector<Vec> lift_direction_grid(const Vec& axis_in_V, const SubspaceBasis& V,
                                     double theta, const Vec& witness_projection) {
    const Vec anchor = is_zero(axis_in_V) ? V.vectors().front() : normalized(axis_in_V);

    std::vector<Vec> completion_input;
    completion_input.push_back(anchor);
    for (const Vec& b : V.vectors()) completion_input.push_back(b);
    const SubspaceBasis frame =
        SubspaceBasis::orthonormalize(completion_input, V.ambient_dim());

    std::vector<Vec> grid;
    grid.push_back(anchor);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    for (std::size_t i = 1; i < frame.dim(); ++i) {
        const Vec& z = frame.vectors()[i];
        grid.push_back(add(scaled(anchor, ct), scaled(z, st)));
        grid.push_back(add(scaled(anchor, ct), scaled(z, -st)));
    }
    if (theta > kPi - 1e-12) {
        grid.push_back(scaled(anchor, -1.0));  // exact antipode
    } else if (frame.dim() > 1) {
        const Vec& z = frame.vectors()[1];
        grid.push_back(add(scaled(anchor, std::cos(theta / 2.0)),
                           scaled(z, std::sin(theta / 2.0))));
    }
    if (!is_zero(witness_projection)) {
        grid.push_back(normalized(witness_projection));
    }
    return grid;
}

}  // namespace

ConeSampler::ConeSampler(RoundCone cone, SamplerConfig cfg)
    : cone_(std::move(cone)), cfg_(cfg) {
    if (cone_.apex.size() < 2) {
        throw std::invalid_argument("ConeSampler: ambient dimension must be at least 2");
    }
    if (is_zero(cone_.axis)) {
        throw std::invalid_argument("ConeSampler: axis must be nonzero");
    }
    if (cfg_.sample_count < 1) {
        throw std::invalid_argument("ConeSampler: sample count must be at least 1");
    }
    if (cfg_.mode == SampleMode::BoundaryOnly && cone_.half_aperture > kHalfPi) {
        throw std::invalid_argument(
            "ConeSampler: boundary sampling requires half aperture <= pi/2; "
            "use FilledCone for wide cones");
    }
    unit_axis_ = normalized(cone_.axis);
}

Vec ConeSampler::sample(std::size_t index) const {
    SplitMix64 g(mix_seed(cfg_.seed, index));
    const std::size_t n = unit_axis_.size();
    const double phi = cone_.half_aperture;
    const double theta =
        (cfg_.mode == SampleMode::BoundaryOnly) ? phi : phi * g.next_unit();

    if (theta <= 0.0) return add(cone_.apex, unit_axis_);

    // unit direction orthogonal to the axis
    Vec w(n, 0.0);
    double nw = 0.0;
    do {
        for (double& x : w) x = g.next_gaussian();
        const double c = dot(w, unit_axis_);
        for (std::size_t i = 0; i < n; ++i) w[i] -= c * unit_axis_[i];
        nw = norm(w);
    } while (nw <= 1e-12);

    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    Vec dir(n);
    for (std::size_t i = 0; i < n; ++i) dir[i] = ct * unit_axis_[i] + (st / nw) * w[i];
    return add(cone_.apex, dir);
}

std::vector<Vec> sample_cone(const RoundCone& cone, const SamplerConfig& cfg) {
    ConeSampler sampler(cone, cfg);
    std::vector<Vec> out;
    out.reserve(cfg.sample_count);
    for (std::size_t i = 0; i < cfg.sample_count; ++i) out.push_back(sampler.sample(i));
    return out;
}

VerificationReport empirical_projection_check(const RoundCone& cone,
                                              const SubspaceBasis& V,
                                              const SamplerConfig& cfg,
                                              const ClassifierPolicy& policy,
                                              double membership_tol) {
    if (membership_tol < 0.0) {
        throw std::invalid_argument(
            "empirical_projection_check: membership tolerance must be nonnegative");
    }
    const ProjectionClass pc = classify(cone, V, policy);
    const ConeSampler sampler(cone, cfg);
    const double psi = cone.half_aperture - pc.boundary_margin;

    VerificationReport rep;
    rep.instance = describe_instance(cone, V, psi);
    rep.tag = pc.tag;
    rep.predicted_aperture = pc.projected_aperture;
    rep.samples_tested = cfg.sample_count;
    rep.worst_margin = std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < cfg.sample_count; ++i) {
        const Vec u = sampler.sample(i);
        const Vec p = V.project(u);
        const double m = classified_set_margin(pc, p);
        if (m < rep.worst_margin) rep.worst_margin = m;
        if (m < -membership_tol) ++rep.violations;

        const Vec rel = sub(p, pc.projected_apex);
        if (!is_zero(rel)) {
            const double ang = angle_between(rel, pc.projected_axis);
            if (ang > rep.empirical_max_projected_angle) {
                rep.empirical_max_projected_angle = ang;
            }
        }
    }

    // Constructive reverse-inclusion certificate: lift a direction grid of
    // the predicted image back into the (apex-at-origin) cone.
    const bool closed_cone_case = pc.tag == ProjectionTag::ClosedCone &&
                                  V.dim() >= 2 &&
                                  pc.boundary_margin < -policy.angle_tol &&
                                  !is_zero(pc.projected_axis);
    const bool full_subspace_case = pc.tag == ProjectionTag::FullSubspace &&
                                    V.dim() >= 1 && !V.is_full_space();
    if (closed_cone_case || full_subspace_case) {
        const RoundCone centered{zero_vector(cone.apex.size()), cone.axis,
                                 cone.half_aperture, ConeFlavor::Closed};
        const Witness seed =
            closed_cone_case
                ? equality_witness(cone.axis, V, cone.half_aperture)
                : antipodal_witness(cone.axis, V, cone.half_aperture);
        const double theta = seed.certified_projected_angle;
        const std::vector<Vec> grid = lift_direction_grid(
            pc.projected_axis, V, theta, V.project(seed.vector));
        for (const Vec& w : grid) {
            ++rep.lift_directions_checked;
            try {
                const Vec lifted = lift_to_cone(w, seed.vector, centered, V);
                const bool inside = contains(centered, lifted, membership_tol);
                const bool projects_back =
                    norm(sub(V.project(lifted), w)) <= membership_tol * (norm(w) + 1.0);
                if (!inside || !projects_back) ++rep.lift_failures;
            } catch (const std::exception&) {
                ++rep.lift_failures;
            }
        }
    }
    return rep;
}

double l2_discretized_experiment(double alpha, std::size_t grid_points) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("l2_discretized_experiment: alpha must lie in (0, 1)");
    }
    if (grid_points < 10) {
        throw std::invalid_argument("l2_discretized_experiment: need at least 10 grid points");
    }
    const std::size_t n = grid_points;
    // Coordinates carry a 1/sqrt(N) weight so the standard dot product
    // realizes the (1/N)-weighted one and alpha is dimension-free.
    const Vec ones(n, 1.0 / std::sqrt(static_cast<double>(n)));
    const RoundCone cone = make_cone(zero_vector(n), ones, std::acos(alpha));

    // The verdict is monotone in t, so the first non-full classification is
    // the smallest grid threshold.
    std::vector<std::size_t> axes;
    axes.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        axes.push_back(k - 1);
        const SubspaceBasis V = SubspaceBasis::coordinate(n, axes);
        const ProjectionClass pc = classify(cone, V);
        if (pc.tag != ProjectionTag::FullSubspace) {
            return static_cast<double>(k) / static_cast<double>(n);
        }
    }
    return 1.0;
}

L2Counterexample l2_counterexample(double alpha, std::size_t grid_points, double t) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("l2_counterexample: alpha must lie in (0, 1)");
    }
    if (grid_points < 10) {
        throw std::invalid_argument("l2_counterexample: need at least 10 grid points");
    }
    if (!(t > 0.0 && t < 1.0)) {
        throw std::invalid_argument("l2_counterexample: t must lie in (0, 1)");
    }
    const std::size_t n = grid_points;
    const auto cut = static_cast<std::size_t>(std::floor(t * static_cast<double>(n)));
    if (cut < 1 || cut >= n) {
        throw std::invalid_argument("l2_counterexample: cutoff outside the grid");
    }

    const Vec ones(n, 1.0 / std::sqrt(static_cast<double>(n)));
    const double phi = std::acos(alpha);
    std::vector<std::size_t> axes(cut);
    for (std::size_t i = 0; i < cut; ++i) axes[i] = i;
    const SubspaceBasis V = SubspaceBasis::coordinate(n, axes);

    const double psi = angle_to_complement(ones, V);
    if (!(phi > psi)) {
        throw std::domain_error(
            "l2_counterexample: no counterexample at or above the threshold");
    }

    const Witness w = antipodal_witness(ones, V, phi);

    L2Counterexample ce;
    ce.cutoff_index = cut;
    double partial = 0.0;
    for (std::size_t i = 0; i < cut; ++i) partial += w.vector[i];
    ce.partial_sum = partial;
    const double nu = norm(w.vector);
    const double nv = norm(ones);
    ce.premise_margin = (dot(w.vector, ones) - alpha * nu * nv) / (nu * nv + 1.0);
    ce.vector = w.vector;
    return ce;
}

}  // namespace coneproj
