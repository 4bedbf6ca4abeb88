#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coneproj/cone.hpp"
#include "coneproj/linalg.hpp"

namespace coneproj {

/// Subspace specification as written by the user: either a list of spanning
/// vectors (orthonormalized on construction) or the "coords:i,j,..."
/// shorthand for a coordinate subspace.
struct SubspaceSpec {
    bool coords_shorthand = false;
    std::vector<std::size_t> coords;  // sorted, deduplicated
    std::vector<Vec> spanning;
};

/// One problem instance as exchanged with the CLI. Angles are radians.
///
/// JSON shape:
///   {
///     "dimension": 3,
///     "cone": {"apex": [...], "axis": [...],
///              "half_aperture_radians": 0.52, "flavor": "closed"},
///     "subspace": "coords:0,1"            // or [[1,0,0],[0,1,0]]
///     "offset": [0,0,2],                  // optional affine offset
///     "probe": [1,0,1]                    // optional vector u for checks
///   }
struct InstanceDescriptor {
    std::size_t dimension = 0;
    Vec apex;
    Vec axis;
    double half_aperture = 0.0;
    ConeFlavor flavor = ConeFlavor::Closed;
    SubspaceSpec subspace;
    std::optional<Vec> offset;
    std::optional<Vec> probe;
};

InstanceDescriptor parse_instance(const nlohmann::json& doc);
InstanceDescriptor parse_instance_text(const std::string& text);

/// Canonical serialization; parse followed by serialize is idempotent.
nlohmann::json serialize_instance(const InstanceDescriptor& inst);

RoundCone instance_cone(const InstanceDescriptor& inst);
SubspaceBasis instance_subspace(const InstanceDescriptor& inst);

SubspaceSpec parse_subspace_field(const nlohmann::json& field, std::size_t dimension);
SubspaceSpec parse_coords_shorthand(const std::string& text, std::size_t dimension);

std::string flavor_name(ConeFlavor flavor);
ConeFlavor flavor_from_name(const std::string& name);

}  // namespace coneproj
