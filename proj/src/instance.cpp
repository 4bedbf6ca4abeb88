#include "coneproj/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace coneproj {

namespace {

using nlohmann::json;

Vec parse_vector(const json& arr, std::size_t dimension, const char* what) {
    if (!arr.is_array()) {
        throw std::invalid_argument(std::string(what) + ": expected an array of numbers");
    }
    Vec v;
    v.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_number()) {
            throw std::invalid_argument(std::string(what) + ": expected an array of numbers");
        }
        v.push_back(x.get<double>());
    }
    if (dimension != 0 && v.size() != dimension) {
        throw std::invalid_argument(std::string(what) + ": wrong dimension");
    }
    if (!all_finite(v)) {
        throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
    }
    return v;
}

json vector_to_json(const Vec& v) { return json(v); }

}  // namespace

std::string flavor_name(ConeFlavor flavor) {
    return flavor == ConeFlavor::Closed ? "closed" : "apex_open";
}

ConeFlavor flavor_from_name(const std::string& name) {
    if (name == "closed") return ConeFlavor::Closed;
    if (name == "apex_open") return ConeFlavor::ApexOpen;
    throw std::invalid_argument("flavor: expected \"closed\" or \"apex_open\"");
}

SubspaceSpec parse_coords_shorthand(const std::string& text, std::size_t dimension) {
    const std::string prefix = "coords:";
    if (text.rfind(prefix, 0) != 0) {
        throw std::invalid_argument("subspace: shorthand must start with \"coords:\"");
    }
    SubspaceSpec spec;
    spec.coords_shorthand = true;
    std::size_t pos = prefix.size();
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        const std::string token = text.substr(pos, end - pos);
        if (token.empty()) {
            throw std::invalid_argument("subspace: empty coordinate index");
        }
        std::size_t consumed = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(token, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("subspace: bad coordinate index \"" + token + "\"");
        }
        if (consumed != token.size()) {
            throw std::invalid_argument("subspace: bad coordinate index \"" + token + "\"");
        }
        spec.coords.push_back(static_cast<std::size_t>(value));
        pos = end + 1;
    }
    std::sort(spec.coords.begin(), spec.coords.end());
    if (std::adjacent_find(spec.coords.begin(), spec.coords.end()) != spec.coords.end()) {
        throw std::invalid_argument("subspace: duplicate coordinate index");
    }
    for (std::size_t c : spec.coords) {
        if (dimension != 0 && c >= dimension) {
            throw std::invalid_argument("subspace: coordinate index out of range");
        }
    }
    return spec;
}

SubspaceSpec parse_subspace_field(const nlohmann::json& field, std::size_t dimension) {
    if (field.is_string()) {
        return parse_coords_shorthand(field.get<std::string>(), dimension);
    }
    if (field.is_array()) {
        SubspaceSpec spec;
        for (const auto& row : field) {
            spec.spanning.push_back(parse_vector(row, dimension, "subspace vector"));
        }
        return spec;
    }
    throw std::invalid_argument(
        "subspace: expected a list of vectors or a \"coords:i,j,...\" string");
}

InstanceDescriptor parse_instance(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("instance: expected a JSON object");
    }
    InstanceDescriptor inst;
    if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned()) {
        throw std::invalid_argument("instance: missing positive \"dimension\"");
    }
    inst.dimension = doc["dimension"].get<std::size_t>();
    if (inst.dimension == 0) {
        throw std::invalid_argument("instance: dimension must be positive");
    }

    if (!doc.contains("cone") || !doc["cone"].is_object()) {
        throw std::invalid_argument("instance: missing \"cone\" object");
    }
    const json& cone = doc["cone"];
    inst.apex = cone.contains("apex") ? parse_vector(cone["apex"], inst.dimension, "apex")
                                      : zero_vector(inst.dimension);
    if (!cone.contains("axis")) {
        throw std::invalid_argument("instance: cone needs an \"axis\"");
    }
    inst.axis = parse_vector(cone["axis"], inst.dimension, "axis");
    if (!cone.contains("half_aperture_radians") ||
        !cone["half_aperture_radians"].is_number()) {
        throw std::invalid_argument("instance: cone needs \"half_aperture_radians\"");
    }
    inst.half_aperture = cone["half_aperture_radians"].get<double>();
    inst.flavor = cone.contains("flavor")
                      ? flavor_from_name(cone["flavor"].get<std::string>())
                      : ConeFlavor::Closed;

    if (!doc.contains("subspace")) {
        throw std::invalid_argument("instance: missing \"subspace\"");
    }
    inst.subspace = parse_subspace_field(doc["subspace"], inst.dimension);

    if (doc.contains("offset")) {
        inst.offset = parse_vector(doc["offset"], inst.dimension, "offset");
    }
    if (doc.contains("probe")) {
        inst.probe = parse_vector(doc["probe"], inst.dimension, "probe");
    }
    return inst;
}

InstanceDescriptor parse_instance_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("instance: JSON parse error: ") + e.what());
    }
    return parse_instance(doc);
}

nlohmann::json serialize_instance(const InstanceDescriptor& inst) {
    json cone;
    cone["apex"] = vector_to_json(inst.apex);
    cone["axis"] = vector_to_json(inst.axis);
    cone["half_aperture_radians"] = inst.half_aperture;
    cone["flavor"] = flavor_name(inst.flavor);

    json doc;
    doc["dimension"] = inst.dimension;
    doc["cone"] = cone;
    if (inst.subspace.coords_shorthand) {
        std::string text = "coords:";
        for (std::size_t i = 0; i < inst.subspace.coords.size(); ++i) {
            if (i) text += ',';
            text += std::to_string(inst.subspace.coords[i]);
        }
        doc["subspace"] = text;
    } else {
        json rows = json::array();
        for (const Vec& v : inst.subspace.spanning) rows.push_back(vector_to_json(v));
        doc["subspace"] = rows;
    }
    if (inst.offset) doc["offset"] = vector_to_json(*inst.offset);
    if (inst.probe) doc["probe"] = vector_to_json(*inst.probe);
    return doc;
}

RoundCone instance_cone(const InstanceDescriptor& inst) {
    return make_cone(inst.apex, inst.axis, inst.half_aperture, inst.flavor);
}

SubspaceBasis instance_subspace(const InstanceDescriptor& inst) {
    if (inst.subspace.coords_shorthand) {
        return SubspaceBasis::coordinate(inst.dimension, inst.subspace.coords);
    }
    return SubspaceBasis::orthonormalize(inst.subspace.spanning, inst.dimension);
}

}  // namespace coneproj
