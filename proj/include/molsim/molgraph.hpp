#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace molsim {

enum class Element { C, H, N, O, S, Cl };
enum class Hybridization { sp2, sp3, terminal };
enum class BondOrder { Single, Double, Triple, Aromatic };
enum class Section { Donor, Bridge, Acceptor, Contact, Unassigned };

const char* element_symbol(Element e);
double atomic_mass(Element e);
int valence_electron_count(Element e);

/// Standard valence(s) an element may exhibit. The first entry is the
/// default used for implicit-hydrogen fill; later entries cover the
/// hypervalent forms needed to draw nitro-type groups uncharged.
const std::vector<int>& allowed_valences(Element e);

/// Marks an atom as belonging to a named functional group. The anchor atom
/// doubles as the group's single pi pseudo-site; n_pi is the number of pi
/// electrons the group feeds into the conjugated system it attaches to.
struct GroupMark {
    std::string name;
    bool anchor = false;
    int n_pi = 0;
};

struct Atom {
    Element element;
    Hybridization hybridization = Hybridization::sp3;
    int site_index = -1;
    std::optional<int> valence_override;
    std::optional<GroupMark> group;
};

struct Bond {
    int a;
    int b;
    BondOrder order;
};

/// Unresolved [X:NAME] / [Y:NAME] / [R:NAME] token from the linear notation.
/// The builder substitutes the catalog fragment at the attachment site(s).
/// X/Y placeholders are terminal (one attachment); R placeholders may sit
/// mid-chain and carry two.
struct Placeholder {
    char role;  // 'X', 'Y' or 'R'
    std::string name;
    int attach_site = -1;
    BondOrder order = BondOrder::Single;
    int attach_site2 = -1;
    BondOrder order2 = BondOrder::Single;
};

struct MolecularGraph {
    std::vector<Atom> atoms;
    std::vector<Bond> bonds;
    std::vector<std::array<int, 6>> rings;  // aromatic six-rings, cyclic order
    std::map<int, Section> section_tags;
    std::vector<Placeholder> placeholders;

    int add_atom(Element e, Hybridization h = Hybridization::sp3);
    void add_bond(int a, int b, BondOrder order);

    std::vector<int> neighbors(int site) const;
    const Bond* find_bond(int a, int b) const;
    double bond_order_sum(int site) const;  // aromatic counts 1.5
    int placeholder_valence(int site) const;
    Section section(int site) const;
    void tag(int site, Section s) { section_tags[site] = s; }
    bool in_ring(int site) const;
};

struct Violation {
    int site;  // -1 for whole-graph violations
    std::string message;
};
using ValidationReport = std::vector<Violation>;

struct PiSite {
    int site;           // graph site of the carbon, or of the group anchor
    std::string label;  // "C" for plain carbons, group name for pseudo-sites
    int n_pi;           // electrons contributed by a pseudo-site (0 for C)
};

struct PiSystem {
    std::vector<PiSite> members;
    std::vector<std::pair<int, int>> adjacency;  // indices into members
    int electron_count = 0;
    int ring_count = 0;
};

struct InventoryReport {
    double molecular_mass = 0.0;
    int valence_electrons = 0;
    int sigma_electrons = 0;
    int pi_electrons = 0;
    int lone_pair_electrons = 0;
    int ring_count = 0;
};

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(size_t off, const std::string& what);
};

struct NoPiSystem : std::runtime_error {
    NoPiSystem() : std::runtime_error("graph contains no conjugated pi system") {}
};

/// Parses the linear molecular notation (grammar in the README). Unfilled
/// valence is completed with implicit hydrogens.
MolecularGraph parse_molecule(std::string_view text);

/// Canonical renderer for the same notation; parse(render(g)) is isomorphic
/// to g for grammar-generated graphs.
std::string render(const MolecularGraph& g);

ValidationReport validate_graph(const MolecularGraph& g);

/// All conjugated components, each collapsed to its pi sites. Group-marked
/// atoms contribute one pseudo-site (the anchor); plain sp2 atoms contribute
/// themselves.
std::vector<PiSystem> extract_pi_systems(const MolecularGraph& g);

/// The largest conjugated component. Throws NoPiSystem for saturated graphs.
PiSystem extract_pi_system(const MolecularGraph& g);

InventoryReport inventory(const MolecularGraph& g);

/// Aromatic bonds replaced by the canonical Kekule assignment (alternation
/// starts at each ring's lowest-index atom).
std::vector<Bond> kekulize(const MolecularGraph& g);

/// Recomputes sp2/sp3/terminal flags from the bond list.
void assign_hybridization(MolecularGraph& g);

/// Completes unfilled valence with hydrogen atoms (placeholder attachments
/// count as used valence).
void fill_implicit_hydrogens(MolecularGraph& g);

}  // namespace molsim
