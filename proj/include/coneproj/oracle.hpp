#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coneproj/cone.hpp"
#include "coneproj/linalg.hpp"
#include "coneproj/projection.hpp"

namespace coneproj {

enum class SampleMode {
    BoundaryOnly,  // directions at angle exactly half_aperture from the axis
    FilledCone,    // angle drawn uniformly in [0, half_aperture]
};

struct SamplerConfig {
    std::uint64_t seed = 0;
    std::size_t sample_count = 1;
    SampleMode mode = SampleMode::BoundaryOnly;
};

/// Deterministic cone sampler. sample(i) is a pure function of (seed, i):
/// any partition of the index range reproduces the same stream, so parallel
/// and serial sweeps agree bitwise. Emitted points are apex + d with d a
/// unit direction inside the cone. Boundary sampling needs
/// half_aperture <= pi/2 (wider cones are sampled filled); the extremal
/// boundary set is where the classification is tight, so that is the
/// default mode.
class ConeSampler {
  public:
    ConeSampler(RoundCone cone, SamplerConfig cfg);

    Vec sample(std::size_t index) const;

    const RoundCone& cone() const { return cone_; }
    const SamplerConfig& config() const { return cfg_; }

  private:
    RoundCone cone_;
    SamplerConfig cfg_;
    Vec unit_axis_;
};

/// Materializes cfg.sample_count samples.
std::vector<Vec> sample_cone(const RoundCone& cone, const SamplerConfig& cfg);

/// Outcome of one empirical verification run. `violations` counts samples
/// whose projection fell outside the classified set beyond the 1e-9
/// membership tolerance; `worst_margin` is the smallest membership slack
/// seen. For cone-shaped images the run also certifies the reverse
/// inclusion constructively, by lifting a deterministic grid of directions
/// of the predicted image back into the original cone (2 dim V + 1
/// directions, including the axis, boundary rotations — which degenerate to
/// -Pv when the image is the whole subspace — and the witness direction).
struct VerificationReport {
    std::string instance;
    ProjectionTag tag = ProjectionTag::SinglePoint;
    std::size_t samples_tested = 0;
    std::size_t violations = 0;
    double worst_margin = 0.0;
    double empirical_max_projected_angle = 0.0;
    double predicted_aperture = 0.0;
    std::size_t lift_directions_checked = 0;
    std::size_t lift_failures = 0;
};

VerificationReport empirical_projection_check(const RoundCone& cone,
                                              const SubspaceBasis& V,
                                              const SamplerConfig& cfg,
                                              const ClassifierPolicy& policy = {},
                                              double membership_tol = 1e-9);

/// Discretized version of the threshold question on (0,1): models the
/// function space as R^N with the (1/N)-weighted inner product, takes the
/// all-ones axis at aperture arccos(alpha), and scans the nested coordinate
/// subspaces V_t (first floor(tN) axes) for the smallest grid t whose
/// classification is no longer the full subspace. Converges to
/// 1 - alpha^2 at rate 1/N.
double l2_discretized_experiment(double alpha, std::size_t grid_points);

/// Explicit counterexample below the threshold: a vector satisfying the
/// mean-vs-norm premise whose partial sum up to floor(tN) is negative.
struct L2Counterexample {
    Vec vector;
    std::size_t cutoff_index = 0;
    double partial_sum = 0.0;
    double premise_margin = 0.0;
};

L2Counterexample l2_counterexample(double alpha, std::size_t grid_points, double t);

}  // namespace coneproj
