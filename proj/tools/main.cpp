// Command-line front end: classify cone projections, evaluate the aperture
// formulas, construct extremal witnesses, and run the sampling oracle.
//
// Exit codes: 0 success, 1 bad input, 2 regime violation (an operation was
// requested outside its preconditions), 3 verification found violations.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coneproj/cone.hpp"
#include "coneproj/instance.hpp"
#include "coneproj/linalg.hpp"
#include "coneproj/oracle.hpp"
#include "coneproj/projection.hpp"
#include "coneproj/reverse_cbs.hpp"
#include "coneproj/witnesses.hpp"

namespace {

using nlohmann::json;
using namespace coneproj;

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
    bool degrees = false;
};

struct InstanceOptions {
    std::string input_path;
    std::size_t dim = 0;
    std::string apex;
    std::string axis;
    std::string subspace;
    std::string offset;
    std::string probe;
    double phi = 0.0;
    bool phi_set = false;
    std::string flavor = "closed";
};

Vec parse_csv_vector(const std::string& text, const char* what) {
    Vec v;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        const std::string token = text.substr(pos, end - pos);
        if (token.empty()) {
            throw std::invalid_argument(std::string(what) + ": empty coordinate");
        }
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad number \"" + token + "\"");
        }
        if (consumed != token.size()) {
            throw std::invalid_argument(std::string(what) + ": bad number \"" + token + "\"");
        }
        v.push_back(value);
        if (end == text.size()) break;
        pos = end + 1;
    }
    return v;
}

SubspaceSpec parse_subspace_inline(const std::string& text, std::size_t dimension) {
    if (text.rfind("coords:", 0) == 0) {
        return parse_coords_shorthand(text, dimension);
    }
    SubspaceSpec spec;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        spec.spanning.push_back(parse_csv_vector(text.substr(pos, end - pos), "subspace vector"));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return spec;
}

InstanceDescriptor load_instance(const InstanceOptions& opt, bool degrees) {
    if (!opt.input_path.empty()) {
        std::ifstream in(opt.input_path);
        if (!in) {
            throw std::invalid_argument("cannot open input file: " + opt.input_path);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_instance_text(buf.str());
    }
    InstanceDescriptor inst;
    if (opt.axis.empty()) {
        throw std::invalid_argument("provide --input <file> or an inline --axis");
    }
    inst.axis = parse_csv_vector(opt.axis, "axis");
    inst.dimension = opt.dim ? opt.dim : inst.axis.size();
    if (inst.axis.size() != inst.dimension) {
        throw std::invalid_argument("axis does not match --dim");
    }
    inst.apex = opt.apex.empty() ? zero_vector(inst.dimension)
                                 : parse_csv_vector(opt.apex, "apex");
    if (inst.apex.size() != inst.dimension) {
        throw std::invalid_argument("apex does not match the dimension");
    }
    if (!opt.phi_set) {
        throw std::invalid_argument("inline instances need --phi");
    }
    inst.half_aperture = degrees ? opt.phi / kDegPerRad : opt.phi;
    inst.flavor = flavor_from_name(opt.flavor);
    if (opt.subspace.empty()) {
        throw std::invalid_argument("inline instances need --subspace");
    }
    inst.subspace = parse_subspace_inline(opt.subspace, inst.dimension);
    if (!opt.offset.empty()) {
        Vec d = parse_csv_vector(opt.offset, "offset");
        if (d.size() != inst.dimension) {
            throw std::invalid_argument("offset does not match the dimension");
        }
        inst.offset = std::move(d);
    }
    if (!opt.probe.empty()) {
        Vec u = parse_csv_vector(opt.probe, "probe");
        if (u.size() != inst.dimension) {
            throw std::invalid_argument("probe does not match the dimension");
        }
        inst.probe = std::move(u);
    }
    return inst;
}

void add_instance_options(CLI::App* cmd, InstanceOptions& opt) {
    cmd->add_option("--input", opt.input_path, "instance file (JSON)");
    cmd->add_option("--dim", opt.dim, "ambient dimension (inline instances)");
    cmd->add_option("--apex", opt.apex, "apex, comma-separated (default: origin)");
    cmd->add_option("--axis", opt.axis, "axis, comma-separated");
    cmd->add_option("--phi", opt.phi, "half aperture (radians)")->each([&](const std::string&) {
        opt.phi_set = true;
    });
    cmd->add_option("--flavor", opt.flavor, "closed | apex_open");
    cmd->add_option("--subspace", opt.subspace,
                    "\"coords:i,j,...\" or spanning vectors \"x,y,z;x,y,z\"");
    cmd->add_option("--offset", opt.offset, "affine offset, comma-separated");
    cmd->add_option("--u", opt.probe, "probe vector u, comma-separated");
}

void add_output_options(CLI::App* cmd, OutputOptions& opt) {
    cmd->add_option("--format", opt.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out_path, "write the result to a file instead of stdout");
    cmd->add_flag("--degrees", opt.degrees, "accept and emit angles in degrees");
}

double out_angle(double rad, const OutputOptions& opt) {
    return opt.degrees ? rad * kDegPerRad : rad;
}

double in_angle(double value, const OutputOptions& opt) {
    return opt.degrees ? value / kDegPerRad : value;
}

void emit(const json& doc, const OutputOptions& opt) {
    std::string text = doc.dump(2);
    text += '\n';
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path);
        if (!out) {
            throw std::invalid_argument("cannot open output file: " + opt.out_path);
        }
        out << text;
    }
}

std::string csv_number(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows,
              const OutputOptions& opt) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) os << ',';
        os << header[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    }
    if (opt.out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(opt.out_path);
        if (!out) {
            throw std::invalid_argument("cannot open output file: " + opt.out_path);
        }
        out << os.str();
    }
}

void require_json_format(const OutputOptions& opt, const char* command) {
    if (opt.format != "json") {
        throw std::invalid_argument(std::string(command) +
                                    ": csv output is only provided for sweep-style "
                                    "commands (orthant, aperture, inverse-aperture, "
                                    "verify, l2-demo)");
    }
}

json projection_to_json(const ProjectionClass& pc, const OutputOptions& opt) {
    json doc;
    doc["tag"] = to_string(pc.tag);
    doc["projected_apex"] = pc.projected_apex;
    doc["projected_axis"] = pc.projected_axis;
    doc["projected_aperture"] = out_angle(pc.projected_aperture, opt);
    doc["boundary_margin"] = out_angle(pc.boundary_margin, opt);
    doc["angle_unit"] = opt.degrees ? "degrees" : "radians";
    return doc;
}

int run_classify(const InstanceOptions& iopt, const OutputOptions& oopt,
                 double angle_tol, bool open_variant) {
    require_json_format(oopt, open_variant ? "project-open" : "classify");
    const InstanceDescriptor inst = load_instance(iopt, oopt.degrees);
    const RoundCone cone = instance_cone(inst);
    const SubspaceBasis V = instance_subspace(inst);
    const ClassifierPolicy policy{angle_tol};

    ProjectionClass pc;
    if (open_variant) {
        if (inst.offset) {
            throw std::invalid_argument("project-open: affine offsets apply to classify only");
        }
        pc = project_open_cone(cone, V, policy);
    } else if (inst.offset) {
        pc = classify_affine(cone, V, *inst.offset, policy);
    } else {
        pc = classify(cone, V, policy);
    }

    json doc = projection_to_json(pc, oopt);
    doc["command"] = open_variant ? "project-open" : "classify";
    emit(doc, oopt);
    return 0;
}

int run_witness(const InstanceOptions& iopt, const OutputOptions& oopt,
                const std::string& construction, double epsilon, bool epsilon_set) {
    require_json_format(oopt, "witness");
    const InstanceDescriptor inst = load_instance(iopt, oopt.degrees);
    const SubspaceBasis V = instance_subspace(inst);

    Witness w;
    if (construction == "equality") {
        w = equality_witness(inst.axis, V, inst.half_aperture);
    } else if (construction == "antipodal") {
        w = antipodal_witness(inst.axis, V, inst.half_aperture);
    } else if (construction == "border") {
        if (!epsilon_set) {
            throw std::invalid_argument("witness: border construction needs --epsilon");
        }
        w = border_witness(inst.axis, V, epsilon);
    } else {
        throw std::invalid_argument("witness: construction must be equality, antipodal or border");
    }

    json doc;
    doc["command"] = "witness";
    doc["construction"] = to_string(w.construction);
    doc["vector"] = w.vector;
    doc["certified_original_angle"] = out_angle(w.certified_original_angle, oopt);
    doc["certified_projected_angle"] = out_angle(w.certified_projected_angle, oopt);
    doc["angle_unit"] = oopt.degrees ? "degrees" : "radians";
    emit(doc, oopt);
    return 0;
}

int run_verify(const InstanceOptions& iopt, const OutputOptions& oopt,
               std::size_t samples, std::uint64_t seed, const std::string& mode,
               double angle_tol, double membership_tol) {
    const InstanceDescriptor inst = load_instance(iopt, oopt.degrees);
    const RoundCone cone = instance_cone(inst);
    const SubspaceBasis V = instance_subspace(inst);

    SamplerConfig cfg;
    cfg.seed = seed;
    cfg.sample_count = samples;
    if (mode == "boundary") {
        cfg.mode = SampleMode::BoundaryOnly;
    } else if (mode == "filled") {
        cfg.mode = SampleMode::FilledCone;
    } else {
        throw std::invalid_argument("verify: mode must be boundary or filled");
    }

    const VerificationReport rep =
        empirical_projection_check(cone, V, cfg, ClassifierPolicy{angle_tol}, membership_tol);

    if (oopt.format == "csv") {
        emit_csv({"instance", "tag", "samples_tested", "violations", "worst_margin",
                  "empirical_max_projected_angle", "predicted_aperture",
                  "lift_directions_checked", "lift_failures", "seed", "mode"},
                 {{'"' + rep.instance + '"', to_string(rep.tag),
                   std::to_string(rep.samples_tested), std::to_string(rep.violations),
                   csv_number(rep.worst_margin),
                   csv_number(out_angle(rep.empirical_max_projected_angle, oopt)),
                   csv_number(out_angle(rep.predicted_aperture, oopt)),
                   std::to_string(rep.lift_directions_checked),
                   std::to_string(rep.lift_failures), std::to_string(seed), mode}},
                 oopt);
    } else {
        json doc;
        doc["command"] = "verify";
        doc["instance"] = rep.instance;
        doc["tag"] = to_string(rep.tag);
        doc["samples_tested"] = rep.samples_tested;
        doc["violations"] = rep.violations;
        doc["worst_margin"] = rep.worst_margin;
        doc["empirical_max_projected_angle"] =
            out_angle(rep.empirical_max_projected_angle, oopt);
        doc["predicted_aperture"] = out_angle(rep.predicted_aperture, oopt);
        doc["lift_directions_checked"] = rep.lift_directions_checked;
        doc["lift_failures"] = rep.lift_failures;
        doc["membership_tol"] = membership_tol;
        doc["seed"] = seed;
        doc["mode"] = mode;
        doc["angle_unit"] = oopt.degrees ? "degrees" : "radians";
        emit(doc, oopt);
    }
    return (rep.violations > 0 || rep.lift_failures > 0) ? 3 : 0;
}

int run_cbs_check(const InstanceOptions& iopt, const OutputOptions& oopt,
                  const std::string& kind, double alpha, bool alpha_set) {
    require_json_format(oopt, "cbs-check");
    const InstanceDescriptor inst = load_instance(iopt, oopt.degrees);
    const SubspaceBasis V = instance_subspace(inst);
    if (!inst.probe) {
        throw std::invalid_argument("cbs-check: needs a probe vector (--u or \"probe\")");
    }
    const Vec& u = *inst.probe;

    json doc;
    doc["command"] = "cbs-check";
    doc["kind"] = kind;
    if (kind == "implication") {
        const CbsCheck c = check_projection_implication(u, inst.axis, V, inst.half_aperture);
        doc["premise_holds"] = c.premise_holds;
        doc["conclusion_holds"] = c.conclusion_holds;
        doc["premise_margin"] = c.premise_margin;
        doc["conclusion_margin"] = c.conclusion_margin;
    } else if (kind == "sign") {
        const SignLemmaCheck s = check_sign_lemma(u, inst.axis, V);
        doc["premise_holds"] = s.check.premise_holds;
        doc["conclusion_holds"] = s.check.conclusion_holds;
        doc["premise_margin"] = s.check.premise_margin;
        doc["conclusion_margin"] = s.check.conclusion_margin;
        doc["strict_regime"] = s.strict_regime;
        doc["strict_holds"] = s.strict_holds;
    } else if (kind == "enhanced") {
        if (!alpha_set) {
            throw std::invalid_argument("cbs-check: the enhanced condition needs --alpha");
        }
        doc["condition_holds"] = enhanced_cbs_condition(u, inst.axis, V, alpha);
        doc["alpha"] = alpha;
    } else {
        throw std::invalid_argument("cbs-check: kind must be implication, sign or enhanced");
    }
    emit(doc, oopt);
    return 0;
}

int run_orthant(int n, bool table, const OutputOptions& oopt) {
    if (table) {
        if (oopt.format == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (int k = 2; k <= n; ++k) {
                rows.push_back({std::to_string(k),
                                csv_number(out_angle(orthant_max_aperture(k), oopt))});
            }
            emit_csv({"n", "max_aperture"}, rows, oopt);
        } else {
            json rows = json::array();
            for (int k = 2; k <= n; ++k) {
                rows.push_back({{"n", k},
                                {"max_aperture", out_angle(orthant_max_aperture(k), oopt)}});
            }
            json doc;
            doc["command"] = "orthant";
            doc["table"] = rows;
            doc["angle_unit"] = oopt.degrees ? "degrees" : "radians";
            emit(doc, oopt);
        }
        return 0;
    }
    const double aperture = orthant_max_aperture(n);
    if (oopt.format == "csv") {
        emit_csv({"n", "max_aperture"},
                 {{std::to_string(n), csv_number(out_angle(aperture, oopt))}}, oopt);
    } else {
        json doc;
        doc["command"] = "orthant";
        doc["n"] = n;
        doc["max_aperture"] = out_angle(aperture, oopt);
        doc["angle_unit"] = oopt.degrees ? "degrees" : "radians";
        emit(doc, oopt);
    }
    return 0;
}

int run_l2_demo(double alpha, std::size_t grid, double ce_t, bool ce_t_set,
                const OutputOptions& oopt) {
    const double threshold = l2_discretized_experiment(alpha, grid);
    const double analytic = l2_threshold(alpha);

    double t = ce_t;
    if (!ce_t_set) {
        // default: one grid step below the measured threshold, when possible
        t = threshold - 1.0 / static_cast<double>(grid);
    }

    json ce_doc;
    bool have_ce = false;
    if (t > 0.0 && t < analytic) {
        const L2Counterexample ce = l2_counterexample(alpha, grid, t);
        ce_doc["t"] = t;
        ce_doc["cutoff_index"] = ce.cutoff_index;
        ce_doc["partial_sum"] = ce.partial_sum;
        ce_doc["premise_margin"] = ce.premise_margin;
        have_ce = true;
    }

    if (oopt.format == "csv") {
        emit_csv({"alpha", "grid_points", "threshold", "analytic_threshold",
                  "counterexample_t", "counterexample_partial_sum"},
                 {{csv_number(alpha), std::to_string(grid), csv_number(threshold),
                   csv_number(analytic),
                   have_ce ? csv_number(ce_doc["t"].get<double>()) : "",
                   have_ce ? csv_number(ce_doc["partial_sum"].get<double>()) : ""}},
                 oopt);
    } else {
        json doc;
        doc["command"] = "l2-demo";
        doc["alpha"] = alpha;
        doc["grid_points"] = grid;
        doc["threshold"] = threshold;
        doc["analytic_threshold"] = analytic;
        if (have_ce) doc["counterexample"] = ce_doc;
        emit(doc, oopt);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coneproj: orthogonal projections of round cones — classification, "
                 "extremal witnesses, and sampling-based verification"};
    app.require_subcommand(1);

    InstanceOptions iopt;
    OutputOptions oopt;
    double angle_tol = 1e-9;
    double membership_tol = 1e-9;

    auto* classify_cmd = app.add_subcommand("classify", "classify P[C] for a closed cone");
    add_instance_options(classify_cmd, iopt);
    add_output_options(classify_cmd, oopt);
    classify_cmd->add_option("--angle-tol", angle_tol, "boundary detection band (radians)");

    auto* open_cmd = app.add_subcommand("project-open", "classify P[C] for an apex-open cone");
    add_instance_options(open_cmd, iopt);
    add_output_options(open_cmd, oopt);
    open_cmd->add_option("--angle-tol", angle_tol, "boundary detection band (radians)");

    double phi = 0.0, psi = 0.0, phi1 = 0.0;
    auto* aperture_cmd = app.add_subcommand("aperture", "projected half-aperture phi1(phi, psi)");
    aperture_cmd->add_option("--phi", phi, "original half aperture")->required();
    aperture_cmd->add_option("--psi", psi, "angle between the axis and V-perp")->required();
    add_output_options(aperture_cmd, oopt);

    auto* inverse_cmd =
        app.add_subcommand("inverse-aperture", "widest phi with projected aperture <= phi1");
    inverse_cmd->add_option("--phi1", phi1, "projected half aperture (< pi/2)")->required();
    inverse_cmd->add_option("--psi", psi, "angle between the axis and V-perp")->required();
    add_output_options(inverse_cmd, oopt);

    std::string construction = "equality";
    double epsilon = 0.5;
    bool epsilon_set = false;
    auto* witness_cmd = app.add_subcommand("witness", "construct an extremal witness");
    add_instance_options(witness_cmd, iopt);
    add_output_options(witness_cmd, oopt);
    witness_cmd->add_option("--construction", construction, "equality | antipodal | border");
    witness_cmd->add_option("--epsilon", epsilon, "target inner-product ratio (border)")
        ->each([&](const std::string&) { epsilon_set = true; });

    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::string mode = "boundary";
    auto* verify_cmd = app.add_subcommand("verify", "sample the cone and verify the classification");
    add_instance_options(verify_cmd, iopt);
    add_output_options(verify_cmd, oopt);
    verify_cmd->add_option("--samples", samples, "number of samples (default 100000)");
    verify_cmd->add_option("--seed", seed, "RNG seed (default 0)");
    verify_cmd->add_option("--mode", mode, "boundary | filled");
    verify_cmd->add_option("--angle-tol", angle_tol, "boundary detection band (radians)");
    verify_cmd->add_option("--tol", membership_tol, "membership tolerance (default 1e-9)");

    int orthant_n = 2;
    bool orthant_table = false;
    auto* orthant_cmd = app.add_subcommand("orthant", "widest aperture inscribed in an orthant");
    orthant_cmd->add_option("--n", orthant_n, "dimension (>= 2)")->required();
    orthant_cmd->add_flag("--table", orthant_table, "emit the table for 2..n");
    add_output_options(orthant_cmd, oopt);

    double alpha = 0.5;
    std::size_t grid = 1000;
    double ce_t = 0.0;
    bool ce_t_set = false;
    auto* l2_cmd = app.add_subcommand("l2-demo", "discretized threshold experiment on (0,1)");
    l2_cmd->add_option("--alpha", alpha, "mean-vs-norm ratio in (0,1)")->required();
    l2_cmd->add_option("--grid", grid, "grid points (default 1000)");
    l2_cmd->add_option("--counterexample-t", ce_t, "cutoff t for the explicit counterexample")
        ->each([&](const std::string&) { ce_t_set = true; });
    add_output_options(l2_cmd, oopt);

    std::string cbs_kind = "implication";
    double cbs_alpha = 0.5;
    bool cbs_alpha_set = false;
    auto* cbs_cmd = app.add_subcommand("cbs-check", "evaluate the inequality predicates");
    add_instance_options(cbs_cmd, iopt);
    add_output_options(cbs_cmd, oopt);
    cbs_cmd->add_option("--kind", cbs_kind, "implication | sign | enhanced");
    cbs_cmd->add_option("--alpha", cbs_alpha, "alpha for the enhanced condition")
        ->each([&](const std::string&) { cbs_alpha_set = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(classify_cmd)) {
            return run_classify(iopt, oopt, angle_tol, false);
        }
        if (app.got_subcommand(open_cmd)) {
            return run_classify(iopt, oopt, angle_tol, true);
        }
        if (app.got_subcommand(aperture_cmd)) {
            const double result =
                projected_aperture(in_angle(phi, oopt), in_angle(psi, oopt));
            if (oopt.format == "csv") {
                emit_csv({"phi", "psi", "phi1"},
                         {{csv_number(phi), csv_number(psi),
                           csv_number(out_angle(result, oopt))}},
                         oopt);
            } else {
                json doc;
                doc["command"] = "aperture";
                doc["phi"] = phi;
                doc["psi"] = psi;
                doc["phi1"] = out_angle(result, oopt);
                doc["angle_unit"] = oopt.degrees ? "degrees" : "radians";
                emit(doc, oopt);
            }
            return 0;
        }
        if (app.got_subcommand(inverse_cmd)) {
            const double result =
                inverse_aperture(in_angle(phi1, oopt), in_angle(psi, oopt));
            if (oopt.format == "csv") {
                emit_csv({"phi1", "psi", "phi"},
                         {{csv_number(phi1), csv_number(psi),
                           csv_number(out_angle(result, oopt))}},
                         oopt);
            } else {
                json doc;
                doc["command"] = "inverse-aperture";
                doc["phi1"] = phi1;
                doc["psi"] = psi;
                doc["phi"] = out_angle(result, oopt);
                doc["angle_unit"] = oopt.degrees ? "degrees" : "radians";
                emit(doc, oopt);
            }
            return 0;
        }
        if (app.got_subcommand(witness_cmd)) {
            return run_witness(iopt, oopt, construction, epsilon, epsilon_set);
        }
        if (app.got_subcommand(verify_cmd)) {
            return run_verify(iopt, oopt, samples, seed, mode, angle_tol, membership_tol);
        }
        if (app.got_subcommand(orthant_cmd)) {
            return run_orthant(orthant_n, orthant_table, oopt);
        }
        if (app.got_subcommand(l2_cmd)) {
            return run_l2_demo(alpha, grid, ce_t, ce_t_set, oopt);
        }
        if (app.got_subcommand(cbs_cmd)) {
            return run_cbs_check(iopt, oopt, cbs_kind, cbs_alpha, cbs_alpha_set);
        }
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "regime violation: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
