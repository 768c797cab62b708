#include "molsim/builder.hpp"

#include <algorithm>
#include <sstream>

namespace molsim {

const char* group_role_name(GroupRole r) {
    switch (r) {
        case GroupRole::Donor: return "donor";
        case GroupRole::Acceptor: return "acceptor";
        case GroupRole::Insulator: return "insulator";
    }
    return "?";
}

const char* contact_metal_name(ContactMetal m) {
    switch (m) {
        case ContactMetal::Au: return "Au";
        case ContactMetal::Al: return "Al";
        case ContactMetal::U: return "U";
    }
    return "?";
}

ContactMetal contact_metal_from_name(const std::string& name) {
    if (name == "Au") return ContactMetal::Au;
    if (name == "Al") return ContactMetal::Al;
    if (name == "U") return ContactMetal::U;
    throw InvalidSpec("unknown contact metal '" + name + "' (known: Au, Al, U)");
}

const char* gate_kind_name(GateKind k) {
    return k == GateKind::AND ? "AND" : "OR";
}

UnknownGroup::UnknownGroup(const std::string& name, GroupRole role)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "unknown " << group_role_name(role) << " group '" << name << "' (known: ";
          bool first = true;
          for (const auto& g : catalog_groups(role)) {
              if (!first) os << ", ";
              os << g.name;
              first = false;
          }
          os << ")";
          return os.str();
      }()) {}

RoleMismatch::RoleMismatch(const std::string& name, GroupRole wanted, GroupRole actual)
    : std::runtime_error("group '" + name + "' is " + group_role_name(actual) +
                         ", not usable as " + group_role_name(wanted)) {}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

void mark_group(MolecularGraph& g, const std::string& name, int anchor, int n_pi) {
    for (Atom& a : g.atoms) a.group = GroupMark{name, false, 0};
    g.atoms[anchor].group = GroupMark{name, true, n_pi};
}

FunctionalGroupSpec make_group(const std::string& name, GroupRole role,
                               MolecularGraph fragment, std::vector<int> attach,
                               int n_pi) {
    assign_hybridization(fragment);
    bool has_pseudo = role != GroupRole::Insulator;
    if (has_pseudo) mark_group(fragment, name, attach.front(), n_pi);
    else for (Atom& a : fragment.atoms) a.group = GroupMark{name, false, 0};
    FunctionalGroupSpec spec;
    spec.name = name;
    spec.role = role;
    spec.fragment = std::move(fragment);
    spec.attachment_sites = std::move(attach);
    if (has_pseudo) spec.pi_pseudo = name;
    spec.n_pi = n_pi;
    return spec;
}

std::vector<FunctionalGroupSpec> make_donors() {
    std::vector<FunctionalGroupSpec> out;
    {
        MolecularGraph g;
        g.add_atom(Element::N);
        out.push_back(make_group("NH2", GroupRole::Donor, g, {0}, 2));
    }
    {
        MolecularGraph g;
        g.add_atom(Element::O);
        out.push_back(make_group("OH", GroupRole::Donor, g, {0}, 2));
    }
    {
        MolecularGraph g;
        g.add_atom(Element::C);
        out.push_back(make_group("CH3", GroupRole::Donor, g, {0}, 2));
    }
    {
        MolecularGraph g;
        g.add_atom(Element::C);
        g.add_atom(Element::C);
        g.add_bond(0, 1, BondOrder::Single);
        out.push_back(make_group("CH2CH3", GroupRole::Donor, g, {0}, 2));
    }
    return out;
}

std::vector<FunctionalGroupSpec> make_acceptors() {
    std::vector<FunctionalGroupSpec> out;
    {
        // nitro drawn uncharged with pentavalent nitrogen
        MolecularGraph g;
        g.add_atom(Element::N);
        g.add_atom(Element::O);
        g.add_atom(Element::O);
        g.add_bond(0, 1, BondOrder::Double);
        g.add_bond(0, 2, BondOrder::Double);
        g.atoms[0].valence_override = 5;
        out.push_back(make_group("NO2", GroupRole::Acceptor, g, {0}, 0));
    }
    {
        MolecularGraph g;
        g.add_atom(Element::C);
        g.add_atom(Element::N);
        g.add_bond(0, 1, BondOrder::Triple);
        out.push_back(make_group("CN", GroupRole::Acceptor, g, {0}, 0));
    }
    {
        MolecularGraph g;
        g.add_atom(Element::C);
        g.add_atom(Element::O);
        g.add_bond(0, 1, BondOrder::Double);
        out.push_back(make_group("CHO", GroupRole::Acceptor, g, {0}, 0));
    }
    {
        // isocyanide drawn uncharged: dative N (4) and carbene-like C (3)
        MolecularGraph g;
        g.add_atom(Element::N);
        g.add_atom(Element::C);
        g.add_bond(0, 1, BondOrder::Triple);
        g.atoms[0].valence_override = 4;
        g.atoms[1].valence_override = 3;
        out.push_back(make_group("NC", GroupRole::Acceptor, g, {0}, 0));
    }
    return out;
}

std::vector<FunctionalGroupSpec> make_insulators() {
    std::vector<FunctionalGroupSpec> out;
    {
        MolecularGraph g;
        g.add_atom(Element::C);
        out.push_back(make_group("CH2", GroupRole::Insulator, g, {0, 0}, 0));
    }
    {
        MolecularGraph g;
        g.add_atom(Element::C);
        g.add_atom(Element::C);
        g.add_bond(0, 1, BondOrder::Single);
        out.push_back(make_group("CH2CH2", GroupRole::Insulator, g, {0, 1}, 0));
    }
    return out;
}

}  // namespace

const std::vector<FunctionalGroupSpec>& catalog_groups(GroupRole role) {
    static const std::vector<FunctionalGroupSpec> donors = make_donors();
    static const std::vector<FunctionalGroupSpec> acceptors = make_acceptors();
    static const std::vector<FunctionalGroupSpec> insulators = make_insulators();
    switch (role) {
        case GroupRole::Donor: return donors;
        case GroupRole::Acceptor: return acceptors;
        default: return insulators;
    }
}

const FunctionalGroupSpec* find_group(const std::string& name, GroupRole role) {
    std::string key = name == "CH" ? "CN" : name;  // accepted alternate spelling
    for (const auto& g : catalog_groups(role))
        if (g.name == key) return &g;
    return nullptr;
}

const FunctionalGroupSpec* find_group(const std::string& name) {
    for (GroupRole r : {GroupRole::Donor, GroupRole::Acceptor, GroupRole::Insulator})
        if (const auto* g = find_group(name, r)) return g;
    return nullptr;
}

namespace {

const FunctionalGroupSpec& require_group(const std::string& name, GroupRole role) {
    if (const auto* g = find_group(name, role)) return *g;
    if (const auto* other = find_group(name)) throw RoleMismatch(name, role, other->role);
    throw UnknownGroup(name, role);
}

// Copies fragment atoms/bonds into g; returns new site of fragment site i.
std::vector<int> splice_fragment(MolecularGraph& g, const MolecularGraph& frag) {
    std::vector<int> map(frag.atoms.size());
    for (const Atom& a : frag.atoms) {
        int s = g.add_atom(a.element, a.hybridization);
        g.atoms[s].valence_override = a.valence_override;
        g.atoms[s].group = a.group;
        map[a.site_index] = s;
    }
    for (const Bond& b : frag.bonds) g.add_bond(map[b.a], map[b.b], b.order);
    return map;
}

std::array<int, 6> add_ring(MolecularGraph& g) {
    std::array<int, 6> sites{};
    for (int i = 0; i < 6; ++i) sites[i] = g.add_atom(Element::C, Hybridization::sp2);
    for (int i = 0; i < 6; ++i) g.add_bond(sites[i], sites[(i + 1) % 6], BondOrder::Aromatic);
    g.rings.push_back(sites);
    return sites;
}

// One conjugated half: group fragment on the outermost ring, chain of para-
// linked rings ending at the inner attachment (toward the bridge).
SideInfo build_side(MolecularGraph& g, const FunctionalGroupSpec& group, int n_rings,
                    Section section) {
    SideInfo side;
    side.group = group.name;
    auto frag_map = splice_fragment(g, group.fragment);
    side.anchor_site = frag_map[group.attachment_sites.front()];
    for (int s : frag_map) g.tag(s, section);
    for (int r = 0; r < n_rings; ++r) {
        auto ring = add_ring(g);
        for (int s : ring) g.tag(s, section);
        if (r == 0) g.add_bond(side.anchor_site, ring[0], BondOrder::Single);
        else g.add_bond(side.rings.back()[3], ring[0], BondOrder::Single);
        side.rings.push_back(ring);
    }
    return side;
}

void tag_hydrogens_and_contacts(CompiledDesign& d) {
    MolecularGraph& g = d.graph;
    // hydrogens inherit the section of their heavy neighbor
    for (const Atom& a : g.atoms) {
        if (a.element != Element::H) continue;
        auto nb = g.neighbors(a.site_index);
        if (!nb.empty()) g.tag(a.site_index, g.section(nb.front()));
    }
    // electrode attachment points: the hydrogen ortho to the chain axis on
    // each outermost ring
    d.contact_sites.clear();
    for (const SideInfo* side : {&d.donor_side, &d.acceptor_side}) {
        int carbon = side->rings.front()[1];
        for (int nb : g.neighbors(carbon)) {
            if (g.atoms[nb].element == Element::H) {
                g.tag(nb, Section::Contact);
                d.contact_sites.push_back(nb);
                break;
            }
        }
    }
}

CompiledDesign build_diode_impl(const FunctionalGroupSpec& donor,
                                const FunctionalGroupSpec& acceptor,
                                const FunctionalGroupSpec& bridge, int rings_donor,
                                int rings_acceptor, ContactMetal metal) {
    if (rings_donor < 1 || rings_acceptor < 1)
        throw InvalidSpec("ring counts must be >= 1");
    CompiledDesign d;
    d.contact_metal = metal;
    MolecularGraph& g = d.graph;

    d.donor_side = build_side(g, donor, rings_donor, Section::Donor);
    auto bridge_map = splice_fragment(g, bridge.fragment);
    d.bridge_sites = bridge_map;
    for (int s : bridge_map) g.tag(s, Section::Bridge);
    d.acceptor_side = build_side(g, acceptor, rings_acceptor, Section::Acceptor);

    g.add_bond(d.donor_side.rings.back()[3], bridge_map[bridge.attachment_sites[0]],
               BondOrder::Single);
    g.add_bond(bridge_map[bridge.attachment_sites[1]], d.acceptor_side.rings.back()[3],
               BondOrder::Single);

    assign_hybridization(g);
    fill_implicit_hydrogens(g);
    tag_hydrogens_and_contacts(d);
    return d;
}

}  // namespace

PiSystem CompiledDesign::side_pi_system(Section side) const {
    const SideInfo& s = side == Section::Donor ? donor_side : acceptor_side;
    const FunctionalGroupSpec* group = find_group(s.group);
    if (!group) throw UnknownGroup(s.group, GroupRole::Donor);
    PiSystem pi;
    int n_rings = static_cast<int>(s.rings.size());
    for (int r = 0; r < n_rings; ++r)
        for (int i = 0; i < 6; ++i)
            pi.members.push_back(PiSite{s.rings[r][i], "C", 0});
    for (int r = 0; r < n_rings; ++r) {
        for (int i = 0; i < 6; ++i)
            pi.adjacency.emplace_back(6 * r + i, 6 * r + (i + 1) % 6);
        if (r + 1 < n_rings) pi.adjacency.emplace_back(6 * r + 3, 6 * (r + 1));
    }
    if (group->pi_pseudo) {
        pi.members.push_back(PiSite{s.anchor_site, *group->pi_pseudo, group->n_pi});
        pi.adjacency.emplace_back(6 * n_rings, 0);
    }
    pi.ring_count = n_rings;
    pi.electron_count = 6 * n_rings + group->n_pi;
    return pi;
}

CompiledDesign build_diode(const DiodeSpec& spec) {
    const auto& donor = require_group(spec.donor_group, GroupRole::Donor);
    const auto& acceptor = require_group(spec.acceptor_group, GroupRole::Acceptor);
    const auto& bridge = require_group(spec.bridge, GroupRole::Insulator);
    return build_diode_impl(donor, acceptor, bridge, spec.rings_donor,
                            spec.rings_acceptor, spec.contact_metal);
}

CompiledDesign build_symmetric_probe(const std::string& group_name, int rings,
                                     ContactMetal metal) {
    const FunctionalGroupSpec* group = find_group(group_name);
    if (!group || group->role == GroupRole::Insulator)
        throw UnknownGroup(group_name, GroupRole::Donor);
    const auto& bridge = require_group("CH2", GroupRole::Insulator);
    return build_diode_impl(*group, *group, bridge, rings, rings, metal);
}

CompiledDesign build_gate(const GateSpec& spec) {
    if (spec.load_resistance <= 0.0) throw InvalidSpec("load resistance must be > 0");
    if (spec.supply_voltage <= 0.0) throw InvalidSpec("supply voltage must be > 0");
    CompiledDesign gate;
    gate.gate_kind = spec.kind;
    gate.load_resistance = spec.load_resistance;
    gate.supply_voltage = spec.supply_voltage;
    gate.node_q = "Q";
    gate.output_c = "C";
    gate.diode_a = std::make_shared<CompiledDesign>(build_diode(spec.diode_a));
    gate.diode_b = std::make_shared<CompiledDesign>(build_diode(spec.diode_b));
    gate.contact_metal = spec.diode_a.contact_metal;

    // Merge the two diode molecules through a common aliphatic node Q: for
    // AND the diodes face Q with their donor ends (conduction Q -> input),
    // for OR with their acceptor ends. The electrode hydrogen on the joined
    // end becomes the link carbon.
    MolecularGraph& g = gate.graph;
    int joined_contact_index = spec.kind == GateKind::AND ? 0 : 1;
    std::vector<int> link_sites;
    for (const CompiledDesign* part : {gate.diode_a.get(), gate.diode_b.get()}) {
        int offset = static_cast<int>(g.atoms.size());
        for (const Atom& a : part->graph.atoms) {
            int s = g.add_atom(a.element, a.hybridization);
            g.atoms[s].valence_override = a.valence_override;
            g.atoms[s].group = a.group;
        }
        for (const Bond& b : part->graph.bonds)
            g.add_bond(b.a + offset, b.b + offset, b.order);
        for (const auto& r : part->graph.rings) {
            std::array<int, 6> ring{};
            for (int i = 0; i < 6; ++i) ring[i] = r[i] + offset;
            g.rings.push_back(ring);
        }
        for (const auto& [site, sec] : part->graph.section_tags)
            g.tag(site + offset, sec);
        int joint = part->contact_sites[joined_contact_index] + offset;
        g.atoms[joint].element = Element::C;  // H -> CH2 link toward Q
        g.atoms[joint].hybridization = Hybridization::sp3;
        g.tag(joint, Section::Bridge);
        link_sites.push_back(joint);
    }
    int q = g.add_atom(Element::C, Hybridization::sp3);
    g.tag(q, Section::Bridge);
    for (int s : link_sites) g.add_bond(q, s, BondOrder::Single);
    int out = g.add_atom(Element::C, Hybridization::sp3);  // output wire stub
    g.tag(out, Section::Bridge);
    g.add_bond(q, out, BondOrder::Single);
    fill_implicit_hydrogens(g);
    for (const Atom& a : g.atoms)
        if (a.element == Element::H && g.section(a.site_index) == Section::Unassigned) {
            auto nb = g.neighbors(a.site_index);
            if (!nb.empty()) gate.graph.tag(a.site_index, g.section(nb.front()));
        }
    return gate;
}

std::vector<DiodeSpec> enumerate_designs(const std::optional<std::string>& fix_donor,
                                         const std::optional<std::string>& fix_acceptor,
                                         const std::optional<std::string>& fix_bridge) {
    std::vector<std::string> donors, acceptors, bridges;
    if (fix_donor) donors = {require_group(*fix_donor, GroupRole::Donor).name};
    else for (const auto& g : catalog_groups(GroupRole::Donor)) donors.push_back(g.name);
    if (fix_acceptor) acceptors = {require_group(*fix_acceptor, GroupRole::Acceptor).name};
    else for (const auto& g : catalog_groups(GroupRole::Acceptor)) acceptors.push_back(g.name);
    if (fix_bridge) bridges = {require_group(*fix_bridge, GroupRole::Insulator).name};
    else for (const auto& g : catalog_groups(GroupRole::Insulator)) bridges.push_back(g.name);

    std::vector<DiodeSpec> out;
    for (const auto& d : donors)
        for (const auto& a : acceptors)
            for (const auto& b : bridges)
                out.push_back(DiodeSpec{d, a, b, 1, 1, ContactMetal::Au});
    return out;
}

MolecularGraph resolve_placeholders(const MolecularGraph& input) {
    MolecularGraph g = input;
    std::vector<Placeholder> todo = std::move(g.placeholders);
    g.placeholders.clear();
    for (const Placeholder& p : todo) {
        GroupRole role = p.role == 'X' ? GroupRole::Donor
                       : p.role == 'Y' ? GroupRole::Acceptor
                                       : GroupRole::Insulator;
        const FunctionalGroupSpec& group = require_group(p.name, role);
        auto map = splice_fragment(g, group.fragment);
        if (p.attach_site >= 0)
            g.add_bond(map[group.attachment_sites[0]], p.attach_site, p.order);
        if (p.attach_site2 >= 0) {
            if (group.attachment_sites.size() < 2)
                throw InvalidSpec("group '" + p.name + "' has a single attachment point");
            g.add_bond(map[group.attachment_sites[1]], p.attach_site2, p.order2);
        }
    }
    assign_hybridization(g);
    fill_implicit_hydrogens(g);
    return g;
}

}  // namespace molsim
