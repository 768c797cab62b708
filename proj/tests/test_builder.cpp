#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "molsim/builder.hpp"

using namespace molsim;

TEST_CASE("catalog lists the expected groups") {
    std::set<std::string> donors, acceptors, insulators;
    for (const auto& g : catalog_groups(GroupRole::Donor)) donors.insert(g.name);
    for (const auto& g : catalog_groups(GroupRole::Acceptor)) acceptors.insert(g.name);
    for (const auto& g : catalog_groups(GroupRole::Insulator)) insulators.insert(g.name);
    CHECK(donors == std::set<std::string>{"NH2", "OH", "CH3", "CH2CH3"});
    CHECK(acceptors == std::set<std::string>{"NO2", "CN", "CHO", "NC"});
    CHECK(insulators == std::set<std::string>{"CH2", "CH2CH2"});
}

TEST_CASE("group lookup resolves roles and the CH alias") {
    const FunctionalGroupSpec* nh2 = find_group("NH2");
    REQUIRE(nh2 != nullptr);
    CHECK(nh2->role == GroupRole::Donor);
    CHECK(nh2->n_pi == 2);
    const FunctionalGroupSpec* ch = find_group("CH");
    REQUIRE(ch != nullptr);
    CHECK(ch->name == "CN");  // accepted alternate spelling of the nitrile group
    CHECK(find_group("BF3") == nullptr);
    CHECK(find_group("NH2", GroupRole::Acceptor) == nullptr);
}

TEST_CASE("build_diode assembles a donor-bridge-acceptor molecule") {
    DiodeSpec spec{"NH2", "NO2", "CH2", 1, 1, ContactMetal::Au};
    CompiledDesign d = build_diode(spec);
    CHECK(d.graph.rings.size() == 2);
    CHECK(d.donor_side.rings.size() == 1);
    CHECK(d.acceptor_side.rings.size() == 1);
    CHECK(d.bridge_sites.size() == 1);
    CHECK(d.contact_sites.size() == 2);
    CHECK(validate_graph(d.graph).empty());
    // sections cover donor, bridge, acceptor and contacts
    std::set<Section> seen;
    for (const Atom& a : d.graph.atoms) seen.insert(d.graph.section(a.site_index));
    CHECK(seen.count(Section::Donor) == 1);
    CHECK(seen.count(Section::Bridge) == 1);
    CHECK(seen.count(Section::Acceptor) == 1);
    CHECK(seen.count(Section::Contact) == 1);
    CHECK(seen.count(Section::Unassigned) == 0);
}

TEST_CASE("longer chains and the two-carbon bridge") {
    DiodeSpec spec{"OH", "CN", "CH2CH2", 2, 3, ContactMetal::Al};
    CompiledDesign d = build_diode(spec);
    CHECK(d.graph.rings.size() == 5);
    CHECK(d.donor_side.rings.size() == 2);
    CHECK(d.acceptor_side.rings.size() == 3);
    CHECK(d.bridge_sites.size() == 2);
    CHECK(d.contact_metal == ContactMetal::Al);
    CHECK(validate_graph(d.graph).empty());
}

TEST_CASE("role and name errors") {
    CHECK_THROWS_AS(build_diode(DiodeSpec{"NO2", "NH2", "CH2", 1, 1, ContactMetal::Au}),
                    RoleMismatch);
    CHECK_THROWS_AS(build_diode(DiodeSpec{"NH2", "NO2", "NH2", 1, 1, ContactMetal::Au}),
                    RoleMismatch);
    CHECK_THROWS_AS(build_diode(DiodeSpec{"ZZZ", "NO2", "CH2", 1, 1, ContactMetal::Au}),
                    UnknownGroup);
    CHECK_THROWS_AS(build_diode(DiodeSpec{"NH2", "NO2", "CH2", 0, 1, ContactMetal::Au}),
                    InvalidSpec);
    try {
        build_diode(DiodeSpec{"ZZZ", "NO2", "CH2", 1, 1, ContactMetal::Au});
    } catch (const UnknownGroup& e) {
        // the diagnostic names the available donors
        CHECK(std::string(e.what()).find("NH2") != std::string::npos);
    }
}

TEST_CASE("side pi systems are canonical and symmetric-safe") {
    CompiledDesign d = build_diode(DiodeSpec{"NH2", "NO2", "CH2", 1, 1, ContactMetal::Au});
    PiSystem donor = d.side_pi_system(Section::Donor);
    PiSystem acceptor = d.side_pi_system(Section::Acceptor);
    CHECK(donor.members.size() == 7);   // 6 ring carbons + pseudo-site
    CHECK(donor.electron_count == 8);   // 6 ring + 2 from NH2
    CHECK(acceptor.members.size() == 7);
    CHECK(acceptor.electron_count == 6);
    CHECK(donor.adjacency.size() == 7);
    // pseudo-site is always last and attached to the substituted carbon
    CHECK(donor.members.back().label == "NH2");
    CHECK(donor.adjacency.back() == std::pair<int, int>{6, 0});

    CompiledDesign sym = build_symmetric_probe("CH3", 1, ContactMetal::Au);
    PiSystem a = sym.side_pi_system(Section::Donor);
    PiSystem b = sym.side_pi_system(Section::Acceptor);
    CHECK(a.members.size() == b.members.size());
    CHECK(a.adjacency == b.adjacency);
    CHECK(a.electron_count == b.electron_count);
}

TEST_CASE("symmetric probe accepts either role but not insulators") {
    CHECK_NOTHROW(build_symmetric_probe("NO2", 1, ContactMetal::Au));
    CHECK_THROWS_AS(build_symmetric_probe("CH2", 1, ContactMetal::Au), UnknownGroup);
}

TEST_CASE("gate compilation merges two diodes at node Q") {
    GateSpec spec;
    spec.kind = GateKind::AND;
    spec.diode_a = DiodeSpec{"NH2", "NO2", "CH2", 1, 1, ContactMetal::Au};
    spec.diode_b = DiodeSpec{"OH", "CN", "CH2", 1, 1, ContactMetal::Au};
    CompiledDesign g = build_gate(spec);
    REQUIRE(g.gate_kind.has_value());
    CHECK(*g.gate_kind == GateKind::AND);
    CHECK(g.node_q == "Q");
    CHECK(g.output_c == "C");
    REQUIRE(g.diode_a);
    REQUIRE(g.diode_b);
    CHECK(g.diode_a->donor_side.group == "NH2");
    CHECK(g.diode_b->donor_side.group == "OH");
    CHECK(g.graph.rings.size() == 4);
    CHECK(validate_graph(g.graph).empty());

    spec.kind = GateKind::OR;
    CompiledDesign og = build_gate(spec);
    CHECK(validate_graph(og.graph).empty());
    CHECK(og.graph.atoms.size() == g.graph.atoms.size());
}

TEST_CASE("gate precondition checks") {
    GateSpec spec;
    spec.diode_a = DiodeSpec{"NH2", "NO2", "CH2", 1, 1, ContactMetal::Au};
    spec.diode_b = spec.diode_a;
    spec.load_resistance = 0.0;
    CHECK_THROWS_AS(build_gate(spec), InvalidSpec);
    spec.load_resistance = 1e5;
    spec.supply_voltage = -1.0;
    CHECK_THROWS_AS(build_gate(spec), InvalidSpec);
}

TEST_CASE("design-space enumeration counts") {
    CHECK(enumerate_designs(std::nullopt, std::nullopt, std::nullopt).size() == 32);
    CHECK(enumerate_designs("NH2", std::nullopt, std::nullopt).size() == 8);
    CHECK(enumerate_designs(std::nullopt, "NO2", std::nullopt).size() == 8);
    CHECK(enumerate_designs(std::nullopt, std::nullopt, "CH2").size() == 16);
    CHECK(enumerate_designs("NH2", "NO2", "CH2").size() == 1);
    CHECK_THROWS_AS(enumerate_designs("NO2", std::nullopt, std::nullopt), RoleMismatch);
    CHECK_THROWS_AS(enumerate_designs("QQQ", std::nullopt, std::nullopt), UnknownGroup);
}

TEST_CASE("enumeration order is deterministic") {
    auto a = enumerate_designs(std::nullopt, std::nullopt, std::nullopt);
    auto b = enumerate_designs(std::nullopt, std::nullopt, std::nullopt);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].donor_group == b[i].donor_group);
        CHECK(a[i].acceptor_group == b[i].acceptor_group);
        CHECK(a[i].bridge == b[i].bridge);
    }
    CHECK(a.front().donor_group == "NH2");
}

TEST_CASE("placeholder resolution splices catalog fragments") {
    MolecularGraph g = parse_molecule("[X:NH2]-c6-[R:CH2]-c6-[Y:NO2]");
    MolecularGraph r = resolve_placeholders(g);
    CHECK(r.placeholders.empty());
    int n = 0, o = 0;
    for (const Atom& a : r.atoms) {
        if (a.element == Element::N) ++n;
        if (a.element == Element::O) ++o;
    }
    CHECK(n == 2);  // amine N + nitro N
    CHECK(o == 2);  // nitro oxygens
    CHECK(validate_graph(r).empty());
    CHECK_THROWS_AS(resolve_placeholders(parse_molecule("[X:QQQ]-c6")), UnknownGroup);
}

TEST_CASE("bridge saturation splits the compiled pi system") {
    CompiledDesign d = build_diode(DiodeSpec{"NH2", "NO2", "CH2", 1, 1, ContactMetal::Au});
    std::vector<PiSystem> systems = extract_pi_systems(d.graph);
    CHECK(systems.size() == 2);
}

TEST_CASE("contact metal conversions") {
    CHECK(contact_metal_from_name("Au") == ContactMetal::Au);
    CHECK(contact_metal_from_name("Al") == ContactMetal::Al);
    CHECK(contact_metal_from_name("U") == ContactMetal::U);
    CHECK(std::string(contact_metal_name(ContactMetal::U)) == "U");
    CHECK_THROWS_AS(contact_metal_from_name("Cu"), InvalidSpec);
}
