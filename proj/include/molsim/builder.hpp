#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "molsim/molgraph.hpp"

namespace molsim {

enum class GroupRole { Donor, Acceptor, Insulator };
const char* group_role_name(GroupRole r);

struct FunctionalGroupSpec {
    std::string name;
    GroupRole role;
    MolecularGraph fragment;              // open attachment valence(s) unfilled
    std::vector<int> attachment_sites;    // 1 for donors/acceptors, 2 for insulators
    std::optional<std::string> pi_pseudo; // group name keyed into the Huckel table
    int n_pi = 0;                         // electrons the pseudo-site contributes
};

enum class ContactMetal { Au, Al, U };
const char* contact_metal_name(ContactMetal m);
ContactMetal contact_metal_from_name(const std::string& name);

struct DiodeSpec {
    std::string donor_group;
    std::string acceptor_group;
    std::string bridge;
    int rings_donor = 1;
    int rings_acceptor = 1;
    ContactMetal contact_metal = ContactMetal::Au;
};

enum class GateKind { AND, OR };
const char* gate_kind_name(GateKind k);

struct GateSpec {
    GateKind kind = GateKind::AND;
    DiodeSpec diode_a;
    DiodeSpec diode_b;
    double load_resistance = 1e5;  // ohms
    double supply_voltage = 5.0;   // volts
};

/// One conjugated half of a compiled diode: ring sites in canonical order
/// (outermost ring first, each ring's atoms in cycle order starting at the
/// substituent position) plus the group pseudo-site anchor.
struct SideInfo {
    std::vector<std::array<int, 6>> rings;
    int anchor_site = -1;
    std::string group;
};

struct CompiledDesign {
    MolecularGraph graph;
    SideInfo donor_side;
    SideInfo acceptor_side;
    std::vector<int> bridge_sites;
    std::vector<int> contact_sites;  // one per end
    ContactMetal contact_metal = ContactMetal::Au;
    // gate-only fields
    std::optional<GateKind> gate_kind;
    std::shared_ptr<const CompiledDesign> diode_a;  // component diodes, for analysis
    std::shared_ptr<const CompiledDesign> diode_b;
    std::string node_q;
    std::string output_c;
    double load_resistance = 0.0;
    double supply_voltage = 0.0;

    /// Builds the canonical pi system for one side (ring chain plus pseudo-
    /// site last). Both sides of a symmetric design yield identical systems.
    PiSystem side_pi_system(Section side) const;
};

struct UnknownGroup : std::runtime_error {
    explicit UnknownGroup(const std::string& name, GroupRole role);
};
struct RoleMismatch : std::runtime_error {
    RoleMismatch(const std::string& name, GroupRole wanted, GroupRole actual);
};
struct InvalidSpec : std::runtime_error {
    explicit InvalidSpec(const std::string& what) : std::runtime_error(what) {}
};

const std::vector<FunctionalGroupSpec>& catalog_groups(GroupRole role);

/// Looks a group up across every role; returns nullptr if absent. "CH"
/// resolves to the nitrile entry (accepted alias, intent flagged in docs).
const FunctionalGroupSpec* find_group(const std::string& name);
const FunctionalGroupSpec* find_group(const std::string& name, GroupRole role);

CompiledDesign build_diode(const DiodeSpec& spec);

/// Reference design with the same group on both sides, used to probe the
/// parameter calibration; bypasses the donor/acceptor role check.
CompiledDesign build_symmetric_probe(const std::string& group_name, int rings,
                                     ContactMetal metal);

CompiledDesign build_gate(const GateSpec& spec);

std::vector<DiodeSpec> enumerate_designs(const std::optional<std::string>& fix_donor,
                                         const std::optional<std::string>& fix_acceptor,
                                         const std::optional<std::string>& fix_bridge);

/// Substitutes catalog fragments for [X:..]/[Y:..]/[R:..] tokens left by the
/// parser. Insulator placeholders splice into the chain; donor/acceptor ones
/// must be terminal.
MolecularGraph resolve_placeholders(const MolecularGraph& g);

}  // namespace molsim
