#include "molsim/cli.hpp"

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "molsim/device.hpp"
#include "molsim/report.hpp"

namespace molsim {

namespace {

using nlohmann::json;

struct Options {
    std::string design_path;
    std::string config_path;
    std::string format = "text";
    std::string units = "beta";
    std::vector<std::string> fixes;
    bool catalog_defaults = false;
};

ToolConfig make_config(const Options& opt) {
    if (opt.config_path.empty()) return ToolConfig{};
    return load_config(opt.config_path);
}

EnergyUnits units_of(const Options& opt) {
    if (opt.units == "ev") return EnergyUnits::Ev;
    if (opt.units == "beta") return EnergyUnits::Beta;
    throw std::runtime_error("unknown units '" + opt.units + "' (use beta or ev)");
}

int cmd_validate(const Options& opt, std::ostream& out) {
    DesignFile df = load_design(opt.design_path);
    CompiledDesign d = df.is_gate() ? build_gate(df.gate) : build_diode(df.diode);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["version"] = kToolVersion;
    j["design"] = build_report(df, ToolConfig{}, EnergyUnits::Beta)["design"];
    json v = json::array();
    for (const Violation& viol : validate_graph(d.graph))
        v.push_back(json{{"site", viol.site}, {"message", viol.message}});
    j["validation"] = json{{"violations", v}, {"valid", v.empty()}};
    if (opt.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << "design: " << df.kind_name() << "\n";
        out << "validation: " << (v.empty() ? "ok" : "INVALID") << "\n";
        for (const auto& viol : v)
            out << "  site " << viol["site"].get<int>() << ": "
                << viol["message"].get<std::string>() << "\n";
    }
    return v.empty() ? 0 : 1;
}

int cmd_build(const Options& opt, std::ostream& out) {
    DesignFile df = load_design(opt.design_path);
    CompiledDesign d = df.is_gate() ? build_gate(df.gate) : build_diode(df.diode);
    if (opt.format == "json") {
        json atoms = json::array();
        for (const Atom& a : d.graph.atoms) {
            const char* sec = "unassigned";
            switch (d.graph.section(a.site_index)) {
                case Section::Donor: sec = "donor"; break;
                case Section::Bridge: sec = "bridge"; break;
                case Section::Acceptor: sec = "acceptor"; break;
                case Section::Contact: sec = "contact"; break;
                default: break;
            }
            atoms.push_back(json{{"site", a.site_index},
                                 {"element", element_symbol(a.element)},
                                 {"section", sec}});
        }
        json bonds = json::array();
        for (const Bond& b : d.graph.bonds) {
            const char* o = b.order == BondOrder::Single ? "single"
                          : b.order == BondOrder::Double ? "double"
                          : b.order == BondOrder::Triple ? "triple"
                                                         : "aromatic";
            bonds.push_back(json{{"a", b.a}, {"b", b.b}, {"order", o}});
        }
        json j;
        j["schema_version"] = kSchemaVersion;
        j["molecule"] = render(d.graph);
        j["atoms"] = atoms;
        j["bonds"] = bonds;
        out << j.dump(2) << "\n";
    } else {
        out << "molecule: " << render(d.graph) << "\n";
        out << d.graph.atoms.size() << " atoms, " << d.graph.bonds.size() << " bonds, "
            << d.graph.rings.size() << " aromatic rings\n";
    }
    return 0;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
    DesignFile df = load_design(opt.design_path);
    ToolConfig cfg = make_config(opt);
    json report = build_report(df, cfg, units_of(opt));
    report.erase("truth_table");
    report.erase("iv_sweep");
    out << render_report(report, opt.format);
    return 0;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
    DesignFile df = load_design(opt.design_path);
    ToolConfig cfg = make_config(opt);
    json report = build_report(df, cfg, units_of(opt));
    if (opt.format == "json") {
        out << render_report(report, "json");
        return 0;
    }
    if (df.is_gate()) {
        json tt;
        tt["design"] = report["design"];
        tt["truth_table"] = report["truth_table"];
        out << render_report(tt, "text");
    } else {
        // two-column I-V sweep for a bare diode
        DiodeModel m;
        m.forward_threshold = report["diode"]["forward_threshold_volts"].get<double>();
        m.reverse_threshold = report["diode"]["reverse_threshold_volts"].get<double>();
        m.on_conductance = report["diode"]["on_conductance_siemens"].get<double>();
        out << render_iv_sweep(iv_sweep(m, m.reverse_threshold + 1.0, 100));
    }
    return 0;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
    ToolConfig cfg = make_config(opt);
    std::optional<std::string> fix_donor, fix_acceptor, fix_bridge;
    for (const std::string& f : opt.fixes) {
        size_t eq = f.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("--fix expects role=NAME, got '" + f + "'");
        std::string role = f.substr(0, eq), name = f.substr(eq + 1);
        if (role == "donor") fix_donor = name;
        else if (role == "acceptor") fix_acceptor = name;
        else if (role == "bridge") fix_bridge = name;
        else throw std::runtime_error("--fix role must be donor, acceptor or bridge");
    }
    DiodeSpec base;  // ring counts / contact template
    if (!opt.design_path.empty()) {
        DesignFile df = load_design(opt.design_path);
        base = df.is_gate() ? df.gate.diode_a : df.diode;
    }
    auto specs = enumerate_designs(fix_donor, fix_acceptor, fix_bridge);
    json rows = json::array();
    for (DiodeSpec spec : specs) {
        spec.rings_donor = base.rings_donor;
        spec.rings_acceptor = base.rings_acceptor;
        spec.contact_metal = base.contact_metal;
        CompiledDesign d = build_diode(spec);
        EnergyProfile p = energy_profile(d, cfg.params, cfg.device);
        DiodeModel m = diode_model(p, cfg.device);
        rows.push_back(json{{"donor", spec.donor_group},
                            {"acceptor", spec.acceptor_group},
                            {"bridge", spec.bridge},
                            {"delta_e_lumo_ev", p.delta_e_lumo_ev},
                            {"forward_threshold_volts", m.forward_threshold},
                            {"reverse_threshold_volts", m.reverse_threshold},
                            {"rectification_ratio", m.rectification_ratio()}});
    }
    if (opt.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["rows"] = rows;
        out << j.dump(2) << "\n";
    } else {
        out << "# donor acceptor bridge delta_e_lumo_ev reverse_threshold_V ratio\n";
        out << std::setprecision(6);
        for (const auto& r : rows)
            out << r["donor"].get<std::string>() << ' ' << r["acceptor"].get<std::string>() << ' '
                << r["bridge"].get<std::string>() << ' ' << r["delta_e_lumo_ev"].get<double>()
                << ' ' << r["reverse_threshold_volts"].get<double>() << ' '
                << r["rectification_ratio"].get<double>() << "\n";
    }
    return 0;
}

int cmd_catalog(const Options& opt, std::ostream& out) {
    ToolConfig cfg = make_config(opt);
    json j = catalog_json(opt.catalog_defaults, cfg);
    if (opt.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        for (const char* key : {"donors", "acceptors", "insulators"}) {
            out << key << ":";
            for (const auto& g : j[key]) out << ' ' << g["name"].get<std::string>();
            out << "\n";
        }
        if (opt.catalog_defaults) out << j["defaults"].dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polyphenylene molecular diode / diode-logic design compiler"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_design, bool design_optional = false) {
        if (needs_design) {
            auto* o = sub->add_option("design", opt.design_path, "design file");
            if (!design_optional) o->required();
        }
        sub->add_option("--config", opt.config_path, "config file overriding defaults");
        sub->add_option("--format", opt.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--units", opt.units, "energy units: beta|ev")
            ->check(CLI::IsMember({"beta", "ev"}));
    };

    auto* validate = app.add_subcommand("validate", "parse and validate a design");
    add_common(validate, true);
    auto* build = app.add_subcommand("build", "compile a design to a molecular graph");
    add_common(build, true);
    auto* analyze = app.add_subcommand("analyze", "orbital and energy-profile report");
    add_common(analyze, true);
    auto* simulate = app.add_subcommand("simulate", "truth table (gate) or I-V sweep (diode)");
    add_common(simulate, true);
    auto* sweep = app.add_subcommand("sweep", "enumerate the X/Y/R design space");
    add_common(sweep, true, true);
    sweep->add_option("--fix", opt.fixes, "fix a role, e.g. --fix donor=NH2");
    auto* catalog = app.add_subcommand("catalog", "list functional groups");
    add_common(catalog, false);
    catalog->add_flag("--defaults", opt.catalog_defaults, "include built-in config defaults");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(opt, out);
        if (app.got_subcommand(build)) return cmd_build(opt, out);
        if (app.got_subcommand(analyze)) return cmd_analyze(opt, out);
        if (app.got_subcommand(simulate)) return cmd_simulate(opt, out);
        if (app.got_subcommand(sweep)) return cmd_sweep(opt, out);
        if (app.got_subcommand(catalog)) return cmd_catalog(opt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace molsim
