#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "molsim/builder.hpp"
#include "molsim/huckel.hpp"

namespace molsim {

struct DeviceConfig {
    double base_threshold_volts = 0.3;
    double on_conductance_siemens = 1e-6;
    double bridge_barrier_ev = 2.0;  // reported only; no role in the threshold model
    std::map<std::string, double> fermi_ev = {{"Au", 5.1}, {"Al", 4.1}, {"U", 3.6}};
    // logic levels
    double v_low = 0.0;
    double v_high = 5.0;
    double v_low_max = 1.0;
    double v_high_min = 3.5;
};

/// Frontier levels of both halves in eV plus the rectification driver
/// delta_e_lumo = donor E_LUMO - acceptor E_LUMO.
struct EnergyProfile {
    FrontierReport donor_levels;     // eV
    FrontierReport acceptor_levels;  // eV
    double bridge_barrier_ev = 0.0;
    double contact_fermi_ev = 0.0;
    double delta_e_lumo_ev = 0.0;
};

struct DiodeModel {
    double forward_threshold = 0.0;  // volts
    double reverse_threshold = 0.0;  // volts; > forward for rectifying designs
    double on_conductance = 0.0;     // siemens

    bool rectifying() const { return reverse_threshold > forward_threshold; }
    double rectification_ratio() const { return reverse_threshold / forward_threshold; }
};

struct DiodeElement {
    std::string anode;
    std::string cathode;
    DiodeModel model;
};
struct ResistorElement {
    std::string n1;
    std::string n2;
    double ohms;
};

struct Circuit {
    std::vector<std::string> nodes;
    std::vector<DiodeElement> diodes;
    std::vector<ResistorElement> resistors;
    std::map<std::string, double> fixed;         // supply / ground
    std::vector<std::string> inputs;             // driven per simulation
    std::vector<std::pair<std::string, std::string>> shorts;  // e.g. Q - C
};

struct TruthTableRow {
    std::map<std::string, double> input_volts;
    std::map<std::string, double> node_volts;
    int logic_output = 0;
};

struct TruthTable {
    std::vector<TruthTableRow> rows;
    double v_low_max = 0.0;
    double v_high_min = 0.0;
};

struct NonConvergence : std::runtime_error {
    NonConvergence() : std::runtime_error("no consistent diode on/off assignment") {}
};
struct FloatingNode : std::runtime_error {
    explicit FloatingNode(const std::string& node)
        : std::runtime_error("node '" + node + "' has no connected element") {}
};
struct AmbiguousLogicLevel : std::runtime_error {
    explicit AmbiguousLogicLevel(const std::string& what) : std::runtime_error(what) {}
};

EnergyProfile energy_profile(const CompiledDesign& design, const HuckelParameters& params,
                             const DeviceConfig& config);

DiodeModel diode_model(const EnergyProfile& profile, const DeviceConfig& config);

/// Gate circuit per the classic diode-logic topologies: AND pulls the common
/// node Q toward the supply through R' and each diode points from Q to its
/// input; OR mirrors both (diodes input -> Q, R' from Q to ground).
Circuit make_gate_circuit(GateKind kind, const DiodeModel& a, const DiodeModel& b,
                          double load_ohms, double supply_volts);

/// Ideal-threshold nodal solution: every diode is either OFF (open) or ON
/// (fixed drop equal to its forward threshold). Assignments are searched for
/// a consistent fixed point; returns all node voltages.
std::map<std::string, double> simulate_circuit(const Circuit& c,
                                               const std::map<std::string, double>& input_levels);

/// Net current into each node of a solved circuit (Kirchhoff residual check).
std::map<std::string, double> node_current_residuals(
    const Circuit& c, const std::map<std::string, double>& input_levels,
    const std::map<std::string, double>& solution);

TruthTable truth_table(const Circuit& c, const DeviceConfig& config);

/// Current through an isolated diode at the given bias (volts across it,
/// anode positive). Forward conduction above the forward threshold, reverse
/// breakdown above the reverse threshold, zero in between.
double diode_current(const DiodeModel& m, double bias_volts);

struct IVPoint {
    double bias_volts;
    double current_amps;
};
std::vector<IVPoint> iv_sweep(const DiodeModel& m, double v_max, int steps);
std::string render_iv_sweep(const std::vector<IVPoint>& points);

}  // namespace molsim
