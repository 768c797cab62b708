#include "molsim/report.hpp"

#include <iomanip>
#include <sstream>

#include "molsim/device.hpp"

namespace molsim {

namespace {

using nlohmann::json;

json diode_spec_json(const DiodeSpec& s) {
    return json{{"donor", s.donor_group},
                {"acceptor", s.acceptor_group},
                {"bridge", s.bridge},
                {"rings_donor", s.rings_donor},
                {"rings_acceptor", s.rings_acceptor},
                {"contact", contact_metal_name(s.contact_metal)}};
}

json design_json(const DesignFile& df) {
    json j;
    j["kind"] = df.kind_name();
    if (df.is_gate()) {
        j["diode_a"] = diode_spec_json(df.gate.diode_a);
        j["diode_b"] = diode_spec_json(df.gate.diode_b);
        j["load_ohms"] = df.gate.load_resistance;
        j["supply_volts"] = df.gate.supply_voltage;
    } else {
        j.update(diode_spec_json(df.diode));
    }
    return j;
}

json validation_json(const MolecularGraph& g) {
    json v = json::array();
    for (const Violation& viol : validate_graph(g))
        v.push_back(json{{"site", viol.site}, {"message", viol.message}});
    return json{{"violations", v}, {"valid", v.empty()}};
}

json inventory_json(const MolecularGraph& g) {
    InventoryReport inv = inventory(g);
    return json{{"molecular_mass_u", inv.molecular_mass},
                {"valence_electrons", inv.valence_electrons},
                {"sigma_electrons", inv.sigma_electrons},
                {"pi_electrons", inv.pi_electrons},
                {"lone_pair_electrons", inv.lone_pair_electrons},
                {"ring_count", inv.ring_count}};
}

json frontier_json(const FrontierReport& f) {
    return json{{"e_homo", f.e_homo},
                {"e_lumo", f.e_lumo},
                {"gap", f.gap},
                {"ionization_potential", f.ionization_potential},
                {"electron_affinity", f.electron_affinity},
                {"transfer_balance", f.transfer_balance}};
}

json side_orbitals_json(const CompiledDesign& d, Section side, const ToolConfig& cfg,
                        EnergyUnits units) {
    PiSystem pi = d.side_pi_system(side);
    HuckelMatrix m = build_matrix(pi, cfg.params);
    OrbitalSet orbitals = solve_eigensystem(m, cfg.params);
    Occupation occ = occupy(orbitals, pi.electron_count, cfg.params.degeneracy_tol);
    auto classes = classify_orbitals(orbitals, cfg.params);

    json energies = json::array();
    for (double e : orbitals.energies)
        energies.push_back(units == EnergyUnits::Ev ? energy_to_ev(e, cfg.params) : e);
    json counts = json::array();
    for (int c : occ.counts) counts.push_back(c);
    json labels = json::array();
    for (BondingClass c : classes) labels.push_back(bonding_class_name(c));
    json sites = json::array();
    for (const PiSite& s : pi.members) sites.push_back(s.label);

    json j;
    j["site_labels"] = sites;
    j["energies"] = energies;
    j["occupation"] = counts;
    j["orbital_class"] = labels;
    j["electron_count"] = pi.electron_count;
    if (occ.homo_index) j["homo_index"] = *occ.homo_index;
    if (occ.lumo_index) j["lumo_index"] = *occ.lumo_index;
    return j;
}

json diode_orbitals_json(const CompiledDesign& d, const ToolConfig& cfg, EnergyUnits units) {
    return json{{"donor", side_orbitals_json(d, Section::Donor, cfg, units)},
                {"acceptor", side_orbitals_json(d, Section::Acceptor, cfg, units)}};
}

json profile_json(const EnergyProfile& p) {
    return json{{"donor_levels_ev", frontier_json(p.donor_levels)},
                {"acceptor_levels_ev", frontier_json(p.acceptor_levels)},
                {"bridge_barrier_ev", p.bridge_barrier_ev},
                {"contact_fermi_ev", p.contact_fermi_ev},
                {"delta_e_lumo_ev", p.delta_e_lumo_ev}};
}

json diode_model_json(const DiodeModel& m) {
    return json{{"forward_threshold_volts", m.forward_threshold},
                {"reverse_threshold_volts", m.reverse_threshold},
                {"on_conductance_siemens", m.on_conductance},
                {"rectifying", m.rectifying()},
                {"rectification_ratio", m.rectification_ratio()}};
}

json config_json(const ToolConfig& cfg) {
    json groups;
    for (const auto& [name, p] : cfg.params.heteroatom_table)
        groups[name] = json{{"h", p.h}, {"k", p.k}, {"n_pi", p.n_pi}, {"h_ring", p.h_ring}};
    return json{
        {"params",
         {{"alpha", cfg.params.alpha},
          {"beta", cfg.params.beta},
          {"beta_ev", cfg.params.beta_ev},
          {"degeneracy_tol", cfg.params.degeneracy_tol},
          {"jacobi_tol", cfg.params.jacobi_tol},
          {"jacobi_max_sweeps", cfg.params.jacobi_max_sweeps},
          {"groups", groups}}},
        {"levels",
         {{"v_low", cfg.device.v_low},
          {"v_high", cfg.device.v_high},
          {"v_low_max", cfg.device.v_low_max},
          {"v_high_min", cfg.device.v_high_min}}},
        {"model",
         {{"base_threshold_volts", cfg.device.base_threshold_volts},
          {"on_conductance_siemens", cfg.device.on_conductance_siemens},
          {"bridge_barrier_ev", cfg.device.bridge_barrier_ev},
          {"fermi_ev", cfg.device.fermi_ev}}}};
}

json truth_table_json(const TruthTable& t) {
    json rows = json::array();
    for (const TruthTableRow& r : t.rows) {
        json node_volts;
        for (const auto& [n, v] : r.node_volts) node_volts[n] = v;
        rows.push_back(json{{"inputs", r.input_volts},
                            {"node_volts", node_volts},
                            {"logic_output", r.logic_output}});
    }
    return json{{"rows", rows}, {"v_low_max", t.v_low_max}, {"v_high_min", t.v_high_min}};
}

struct DiodeAnalysis {
    CompiledDesign design;
    EnergyProfile profile;
    DiodeModel model;
};

DiodeAnalysis analyze_diode(const DiodeSpec& spec, const ToolConfig& cfg) {
    DiodeAnalysis a{build_diode(spec), {}, {}};
    a.profile = energy_profile(a.design, cfg.params, cfg.device);
    a.model = diode_model(a.profile, cfg.device);
    return a;
}

json diode_report_body(const DiodeAnalysis& a, const ToolConfig& cfg, EnergyUnits units) {
    json j;
    j["validation"] = validation_json(a.design.graph);
    j["inventory"] = inventory_json(a.design.graph);
    j["molecule"] = render(a.design.graph);
    j["orbitals"] = diode_orbitals_json(a.design, cfg, units);
    j["profile"] = profile_json(a.profile);
    j["diode"] = diode_model_json(a.model);
    return j;
}

}  // namespace

json build_report(const DesignFile& df, const ToolConfig& cfg, EnergyUnits units) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["version"] = kToolVersion;
    j["units"] = units == EnergyUnits::Ev ? "ev" : "beta";
    j["design"] = design_json(df);
    j["config"] = config_json(cfg);

    if (!df.is_gate()) {
        DiodeAnalysis a = analyze_diode(df.diode, cfg);
        j.update(diode_report_body(a, cfg, units));
        auto sweep = iv_sweep(a.model, a.model.reverse_threshold + 1.0, 100);
        json iv = json::array();
        for (const IVPoint& p : sweep) iv.push_back(json{p.bias_volts, p.current_amps});
        j["iv_sweep"] = iv;
        return j;
    }

    CompiledDesign gate = build_gate(df.gate);
    DiodeAnalysis a = analyze_diode(df.gate.diode_a, cfg);
    DiodeAnalysis b = analyze_diode(df.gate.diode_b, cfg);
    j["validation"] = validation_json(gate.graph);
    j["inventory"] = inventory_json(gate.graph);
    j["molecule"] = render(gate.graph);
    j["orbitals"] = json{{"a", diode_orbitals_json(a.design, cfg, units)},
                         {"b", diode_orbitals_json(b.design, cfg, units)}};
    j["profile"] = json{{"a", profile_json(a.profile)}, {"b", profile_json(b.profile)}};
    j["diode"] = json{{"a", diode_model_json(a.model)}, {"b", diode_model_json(b.model)}};
    Circuit circuit = make_gate_circuit(df.gate.kind, a.model, b.model,
                                        df.gate.load_resistance, df.gate.supply_voltage);
    j["truth_table"] = truth_table_json(truth_table(circuit, cfg.device));
    return j;
}

namespace {

void text_frontier(std::ostream& os, const char* name, const json& f) {
    os << "  " << name << ": HOMO " << f["e_homo"].get<double>() << "  LUMO "
       << f["e_lumo"].get<double>() << "  gap " << f["gap"].get<double>() << "  I "
       << f["ionization_potential"].get<double>() << "  A "
       << f["electron_affinity"].get<double>() << "\n";
}

void text_orbitals(std::ostream& os, const std::string& title, const json& side) {
    os << title << " (" << side["electron_count"].get<int>() << " pi electrons)\n";
    os << "    #   energy      occ  class\n";
    const auto& e = side["energies"];
    for (size_t i = 0; i < e.size(); ++i) {
        os << "   " << std::setw(2) << i << "  " << std::setw(9) << e[i].get<double>() << "   "
           << side["occupation"][i].get<int>() << "    "
           << side["orbital_class"][i].get<std::string>();
        if (side.contains("homo_index") && side["homo_index"].get<size_t>() == i) os << "  <- HOMO";
        if (side.contains("lumo_index") && side["lumo_index"].get<size_t>() == i) os << "  <- LUMO";
        os << "\n";
    }
}

std::string render_text(const json& r) {
    std::ostringstream os;
    os << std::setprecision(6);
    os << "design: " << r["design"]["kind"].get<std::string>() << "\n";
    if (r.contains("molecule")) os << "molecule: " << r["molecule"].get<std::string>() << "\n";
    if (r.contains("validation")) {
        os << "validation: " << (r["validation"]["valid"].get<bool>() ? "ok" : "INVALID") << "\n";
        for (const auto& v : r["validation"]["violations"])
            os << "  site " << v["site"].get<int>() << ": " << v["message"].get<std::string>()
               << "\n";
    }
    if (r.contains("inventory")) {
        const auto& inv = r["inventory"];
        os << "inventory: mass " << inv["molecular_mass_u"].get<double>() << " u, "
           << inv["valence_electrons"].get<int>() << " valence e ("
           << inv["sigma_electrons"].get<int>() << " sigma, " << inv["pi_electrons"].get<int>()
           << " pi, " << inv["lone_pair_electrons"].get<int>() << " lone), "
           << inv["ring_count"].get<int>() << " rings\n";
    }
    auto emit_orbitals = [&](const json& orb, const std::string& prefix) {
        text_orbitals(os, prefix + "donor side orbitals", orb["donor"]);
        text_orbitals(os, prefix + "acceptor side orbitals", orb["acceptor"]);
    };
    auto emit_profile = [&](const json& p) {
        os << "energy profile (eV):\n";
        text_frontier(os, "donor   ", p["donor_levels_ev"]);
        text_frontier(os, "acceptor", p["acceptor_levels_ev"]);
        os << "  delta_E_LUMO " << p["delta_e_lumo_ev"].get<double>() << " eV, contact E_F "
           << p["contact_fermi_ev"].get<double>() << " eV\n";
    };
    auto emit_diode = [&](const json& d) {
        os << "diode model: forward " << d["forward_threshold_volts"].get<double>()
           << " V, reverse " << d["reverse_threshold_volts"].get<double>() << " V, ratio "
           << d["rectification_ratio"].get<double>()
           << (d["rectifying"].get<bool>() ? " (rectifying)" : " (not rectifying)") << "\n";
    };
    if (r.contains("orbitals")) {
        const auto& orb = r["orbitals"];
        if (orb.contains("a")) {
            emit_orbitals(orb["a"], "[diode a] ");
            emit_orbitals(orb["b"], "[diode b] ");
        } else {
            emit_orbitals(orb, "");
        }
    }
    if (r.contains("profile")) {
        const auto& p = r["profile"];
        if (p.contains("a")) { emit_profile(p["a"]); emit_profile(p["b"]); }
        else emit_profile(p);
    }
    if (r.contains("diode")) {
        const auto& d = r["diode"];
        if (d.contains("a")) { emit_diode(d["a"]); emit_diode(d["b"]); }
        else emit_diode(d);
    }
    if (r.contains("truth_table")) {
        os << "truth table:\n";
        for (const auto& row : r["truth_table"]["rows"]) {
            os << "  ";
            for (const auto& [name, v] : row["inputs"].items())
                os << name << "=" << v.get<double>() << "V ";
            os << "-> C=" << row["node_volts"]["C"].get<double>() << "V  logic "
               << row["logic_output"].get<int>() << "\n";
        }
    }
    return os.str();
}

}  // namespace

std::string render_report(const json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format == "text") return render_text(report);
    throw std::invalid_argument("unknown report format '" + format + "'");
}

json catalog_json(bool include_defaults, const ToolConfig& cfg) {
    json j;
    for (GroupRole role : {GroupRole::Donor, GroupRole::Acceptor, GroupRole::Insulator}) {
        json list = json::array();
        for (const auto& g : catalog_groups(role)) {
            json e;
            e["name"] = g.name;
            e["fragment"] = render(g.fragment);
            e["attachment_points"] = g.attachment_sites.size();
            if (g.pi_pseudo) {
                e["pi_pseudo_site"] = *g.pi_pseudo;
                e["n_pi"] = g.n_pi;
            }
            if (g.name == "CN") e["aliases"] = json::array({"CH"});
            list.push_back(e);
        }
        std::string key = role == GroupRole::Donor ? "donors"
                        : role == GroupRole::Acceptor ? "acceptors"
                                                      : "insulators";
        j[key] = list;
    }
    if (include_defaults) j["defaults"] = config_json(cfg);
    return j;
}

}  // namespace molsim
