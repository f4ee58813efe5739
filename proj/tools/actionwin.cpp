#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "actionwin/barcode.hpp"
#include "actionwin/displacement.hpp"
#include "actionwin/fixtures.hpp"
#include "actionwin/io.hpp"
#include "actionwin/linearization.hpp"
#include "actionwin/pwc.hpp"

using namespace actionwin;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { Ok = 0, Domain = 1, Input = 2 };

int exit_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::SchemaError:
        case ErrorCode::IoError:
            return Input;
        default:
            return Domain;
    }
}

void report_error(const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.witness().empty()) std::cerr << "witness: " << e.witness() << "\n";
}

struct Common {
    std::string format = "table";
    bool stamp = false;
};

void print_stamp(const Common& c, const std::string& command, const std::vector<std::string>& inputs) {
    if (!c.stamp || c.format == "json" || c.format == "csv") return;
    std::cout << "# actionwin " << kVersion << " " << command;
    for (const auto& i : inputs) std::cout << " " << i;
    std::cout << "\n";
}

void print_barcode(const Barcode& bars, const std::string& format) {
    if (format == "json") {
        std::cout << io::to_json(bars).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << io::barcode_csv(bars);
    } else if (format == "diagram") {
        std::cout << io::bar_diagram(bars);
    } else {
        std::cout << io::barcode_table(bars);
    }
}

std::string detect_kind(const io::Json& doc) {
    if (doc.is_object()) {
        if (doc.contains("generators")) return "complex";
        if (doc.contains("chords")) return "dga";
        if (doc.contains("initial")) return "timeline";
    }
    throw Error(ErrorCode::SchemaError, "$: cannot tell the document kind; pass --kind", "$");
}

int cmd_validate(const std::string& path, std::string kind) {
    io::Json doc = io::load_json(path);
    if (kind == "auto") kind = detect_kind(doc);
    if (kind == "complex") {
        auto c = io::complex_from_json(doc);
        std::cout << "valid complex: " << c.size() << " generators over " << c.field().tag() << ", window ["
                  << to_string(c.window().lower) << ", " << to_string(c.window().upper) << ")\n";
        return Ok;
    }
    if (kind == "dga") {
        auto dga = io::dga_from_json(doc);
        auto report = dga.validate();
        if (report.ok()) {
            std::cout << "valid dga: " << dga.chords().size() << " chords over " << dga.field().tag() << "\n";
            return Ok;
        }
        for (const auto& issue : report.issues) {
            std::cout << to_string(issue.code) << ": " << issue.message << " (witness: " << issue.witness << ")\n";
        }
        return Domain;
    }
    if (kind == "timeline") {
        auto tl = io::timeline_from_json(doc);
        auto trace = simulate(tl, SimulateOptions{false});
        std::cout << "valid timeline: " << tl.items.size() << " items, " << trace.events.size() << " events\n";
        return Ok;
    }
    throw Error(ErrorCode::SchemaError, "unknown kind '" + kind + "'", kind);
}

int cmd_barcode(const std::string& path, const std::string& engine, const Common& common) {
    auto c = io::complex_from_json(io::load_json(path));
    Barcode bars;
    if (engine == "canonical") {
        bars = barcode(c);
    } else if (engine == "definitional") {
        bars = barcode_definitional(c);
    } else {
        bars = barcode(c);
        Barcode oracle = barcode_definitional(c);
        if (!(bars == oracle)) {
            throw Error(ErrorCode::EngineMismatch, "canonical and definitional barcodes differ (" +
                                                       std::to_string(bars.size()) + " vs " +
                                                       std::to_string(oracle.size()) + " bars)");
        }
    }
    print_stamp(common, "barcode --engine " + engine, {path});
    print_barcode(bars, common.format);
    return Ok;
}

int cmd_simulate(const std::string& path, const std::optional<std::string>& vineyard_out,
                 const std::optional<std::string>& audit_rate, bool show_trace, const Common& common) {
    auto tl = io::timeline_from_json(io::load_json(path));
    auto trace = simulate(tl);
    auto report = check_transitions(trace, tl);
    std::optional<AuditReport> audit;
    if (audit_rate) {
        Rational rate = parse_rational(*audit_rate);
        Rational end = trace.samples.back().time;
        if (end == tl.start_time) end += 1;
        audit = drift_speed_audit(tl, PiecewiseLinear<Rational>::constant(rate, tl.start_time, end));
    }

    if (common.format == "json") {
        io::Json checks = io::Json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"scope", c.scope}, {"time", to_string(c.time)}, {"rule", c.rule},
                              {"passed", c.passed}, {"detail", c.detail}});
        }
        io::Json out{{"checks", checks}, {"all_passed", report.all_passed()}};
        if (audit) {
            io::Json flags = io::Json::array();
            for (const auto& f : audit->flags) {
                flags.push_back({{"item", f.item_index}, {"subject", f.subject}, {"message", f.message}});
            }
            out["audit"] = flags;
        }
        if (show_trace) {
            io::Json samples = io::Json::array();
            for (const auto& s : trace.samples) {
                samples.push_back({{"time", to_string(s.time)}, {"label", s.label}, {"barcode", io::to_json(s.barcode)}});
            }
            out["samples"] = samples;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        print_stamp(common, "simulate", {path});
        if (show_trace) {
            for (const auto& s : trace.samples) {
                std::cout << "t=" << to_string(s.time) << " (" << s.label << "):";
                for (const auto& b : s.barcode) std::cout << " " << to_string(b);
                std::cout << "\n";
            }
        }
        for (const auto& c : report.checks) {
            std::cout << c.scope << " t=" << to_string(c.time) << ": " << c.rule << ": " << (c.passed ? "pass" : "FAIL");
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
        }
        if (audit) {
            for (const auto& f : audit->flags) {
                std::cout << "audit: item " << f.item_index << " " << f.subject << ": " << f.message << "\n";
            }
            if (audit->passed()) std::cout << "audit: pass\n";
        }
    }
    if (vineyard_out) {
        std::string csv = io::vineyard_csv(vineyard(trace));
        if (*vineyard_out == "-") {
            std::cout << csv;
        } else {
            io::write_file(*vineyard_out, csv);
        }
    }
    bool ok = report.all_passed() && (!audit || audit->passed());
    return ok ? Ok : Domain;
}

int cmd_linearize(const std::string& dga_path, const std::optional<std::string>& aug_path, const std::string& a,
                  const std::string& b, const std::string& l, const std::optional<std::string>& output,
                  const Common& common) {
    auto dga = io::dga_from_json(io::load_json(dga_path));
    Augmentation eps;
    if (aug_path) eps = io::augmentation_from_json(io::load_json(*aug_path), dga.field());
    auto complex = partial_linearization(dga, eps, parse_action(a), parse_action(b), parse_action(l));
    auto bars = barcode(complex);
    io::Json doc = io::to_json(complex);
    if (output) {
        io::write_file(*output, doc.dump(2) + "\n");
    }
    if (common.format == "json") {
        io::Json out{{"barcode", io::to_json(bars)}};
        if (!output) out["complex"] = doc;
        std::cout << out.dump(2) << "\n";
        return Ok;
    }
    std::vector<std::string> inputs{dga_path};
    if (aug_path) inputs.push_back(*aug_path);
    print_stamp(common, "linearize", inputs);
    if (!output) std::cout << doc.dump(2) << "\n";
    print_barcode(bars, common.format);
    return Ok;
}

int cmd_bound(const std::optional<std::string>& sigma, const std::optional<std::string>& sigma_file,
              const std::optional<std::string>& betti, const std::optional<std::string>& betti_file,
              const std::string& l, const std::optional<std::string>& osc, const std::optional<std::string>& profile,
              const Common& common) {
    SigmaProfile s = sigma_file ? io::sigma_from_json(io::load_json(*sigma_file)) : io::parse_sigma_list(*sigma);
    BettiProfile b = betti_file ? io::betti_from_json(io::load_json(*betti_file)) : io::parse_betti_list(*betti);
    Rational value = osc ? parse_rational(*osc) : oscillation(io::profile_from_csv(io::read_file(*profile), *profile), Rational(1));
    BoundReport r = theorem_bound(s, b, parse_action(l), value);

    std::string ordering;
    for (std::size_t i = 0; i < r.ordering.size(); ++i) ordering += (i ? ", " : "") + std::to_string(r.ordering[i]);
    if (common.format == "json") {
        io::Json out{{"count", r.count},
                     {"i_star", r.i_star ? io::Json(*r.i_star) : io::Json(nullptr)},
                     {"ordering", r.ordering},
                     {"binding_constraint", r.binding.empty() ? io::Json(nullptr) : io::Json(r.binding)},
                     {"threshold", to_string(r.threshold)},
                     {"oscillation", to_string(value)},
                     {"strict_boundary", r.at_boundary},
                     {"transversality_assumed", r.transversality_assumed}};
        std::cout << out.dump(2) << "\n";
        return Ok;
    }
    std::vector<std::string> inputs;
    if (sigma_file) inputs.push_back(*sigma_file);
    if (betti_file) inputs.push_back(*betti_file);
    if (profile) inputs.push_back(*profile);
    print_stamp(common, "bound", inputs);
    std::cout << summary_line(r) << "\n";
    std::cout << "oscillation: " << to_string(value) << "\n";
    std::cout << "ordering: " << ordering << "\n";
    std::cout << "i_star: " << (r.i_star ? std::to_string(*r.i_star) : "none") << "\n";
    std::cout << "threshold: " << to_string(r.threshold) << "\n";
    std::cout << "hypothesis: displaced Legendrian transverse to the Reeb flow applied to the original (not checked)\n";
    return Ok;
}

int cmd_fixtures(const std::optional<std::string>& name, const std::string& field_tag, bool all,
                 const std::optional<std::string>& out_dir) {
    FieldSpec field = FieldSpec::parse(field_tag);
    if (all) {
        for (const auto& f : fixtures::catalog()) {
            std::string text = io::fixture_document(f.name, field).dump(2) + "\n";
            if (out_dir) {
                io::write_file(*out_dir + "/" + f.name + ".json", text);
            } else {
                std::cout << "# " << f.name << "\n" << text;
            }
        }
        return Ok;
    }
    if (!name) {
        for (const auto& f : fixtures::catalog()) std::cout << f.name << " (" << f.kind << "): " << f.description << "\n";
        return Ok;
    }
    std::string text = io::fixture_document(*name, field).dump(2) + "\n";
    if (out_dir) {
        io::write_file(*out_dir + "/" + *name + ".json", text);
    } else {
        std::cout << text;
    }
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Filtered complexes with action windows, barcodes, and displacement bounds"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Common common;
    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(allowed));
        sub->add_flag("--stamp", common.stamp, "Add a provenance header to human-readable output");
    };

    std::string path;
    std::string kind = "auto";
    auto* validate = app.add_subcommand("validate", "Validate a complex, DGA or timeline file");
    validate->add_option("path", path, "Input file")->required();
    validate->add_option("--kind", kind, "Document kind")->check(CLI::IsMember({"auto", "complex", "dga", "timeline"}));

    std::string engine = "canonical";
    auto* bc = app.add_subcommand("barcode", "Compute the barcode of a complex");
    bc->add_option("path", path, "Complex file")->required();
    bc->add_option("--engine", engine, "canonical, definitional, or both (cross-checked)")
        ->check(CLI::IsMember({"canonical", "definitional", "both"}));
    add_format(bc, {"table", "json", "csv", "diagram"});

    std::optional<std::string> vineyard_out, audit_rate;
    bool show_trace = false;
    auto* sim = app.add_subcommand("simulate", "Run a timeline and check the barcode transition rules");
    sim->add_option("path", path, "Timeline file")->required();
    sim->add_option("--vineyard", vineyard_out, "Write the vineyard CSV to a file ('-' for stdout)");
    sim->add_option("--audit-rate", audit_rate, "Constant oscillation rate for the drift-speed audit");
    sim->add_flag("--trace", show_trace, "Print the barcode of every sample");
    add_format(sim, {"table", "json"});

    std::optional<std::string> aug_path, output;
    std::string a, b, l = "inf";
    auto* lin = app.add_subcommand("linearize", "Partially linearize a two-component DGA in an action window");
    lin->add_option("path", path, "DGA file")->required();
    lin->add_option("--augmentation", aug_path, "Augmentation file");
    lin->add_option("--a", a, "Lower window end")->required();
    lin->add_option("--b", b, "Upper window end")->required();
    lin->add_option("--l", l, "Length bound l (default inf)");
    lin->add_option("--output", output, "Write the complex to this file");
    add_format(lin, {"table", "json", "csv", "diagram"});

    std::optional<std::string> sigma, sigma_file, betti, betti_file, osc, profile;
    std::string bound_l = "inf";
    auto* bound = app.add_subcommand("bound", "Lower bound on the number of mixed chords after a displacement");
    auto* sg = bound->add_option("--sigma", sigma, "sigma_0,...,sigma_n (rationals or inf)");
    auto* sgf = bound->add_option("--sigma-file", sigma_file, "JSON sigma profile");
    auto* bt = bound->add_option("--betti", betti, "b_0,...,b_n");
    auto* btf = bound->add_option("--betti-file", betti_file, "JSON Betti profile");
    bound->add_option("--l", bound_l, "Length bound l (default inf)");
    auto* os = bound->add_option("--osc", osc, "Oscillation of the Hamiltonian");
    auto* pf = bound->add_option("--profile", profile, "CSV oscillation profile t,max,min on [0, 1]");
    sg->excludes(sgf);
    bt->excludes(btf);
    os->excludes(pf);
    add_format(bound, {"table", "json"});

    std::optional<std::string> fixture_name, out_dir;
    std::string field_tag = "F2";
    bool all = false;
    auto* fx = app.add_subcommand("fixtures", "List or emit built-in example files");
    fx->add_option("name", fixture_name, "Fixture name (omit to list)");
    fx->add_option("--field", field_tag, "Coefficient field: F2, Fp (prime p) or Q");
    fx->add_flag("--all", all, "Emit every fixture");
    fx->add_option("--output-dir", out_dir, "Write <name>.json files into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Input;
    }

    try {
        if (*validate) return cmd_validate(path, kind);
        if (*bc) return cmd_barcode(path, engine, common);
        if (*sim) return cmd_simulate(path, vineyard_out, audit_rate, show_trace, common);
        if (*lin) return cmd_linearize(path, aug_path, a, b, l, output, common);
        if (*bound) {
            if ((!sigma && !sigma_file) || (!betti && !betti_file) || (!osc && !profile)) {
                std::cerr << "error: bound needs --sigma/--sigma-file, --betti/--betti-file and --osc/--profile\n";
                return Input;
            }
            return cmd_bound(sigma, sigma_file, betti, betti_file, bound_l, osc, profile, common);
        }
        if (*fx) return cmd_fixtures(fixture_name, field_tag, all, out_dir);
    } catch (const Error& e) {
        report_error(e);
        return exit_for(e);
    }
    return Ok;
}
