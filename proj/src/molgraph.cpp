#include "molsim/molgraph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace molsim {

namespace {

// Attachment positions consumed in order around a ring; the first two are
// para so a plain chain threads straight through.
constexpr std::array<int, 6> kRingPositions = {0, 3, 1, 4, 2, 5};

struct ElementInfo {
    const char* symbol;
    double mass;
    int valence_electrons;
    std::vector<int> valences;
};

const ElementInfo& info(Element e) {
    static const std::map<Element, ElementInfo> table = {
        {Element::C, {"C", 12.011, 4, {4}}},
        {Element::H, {"H", 1.008, 1, {1}}},
        {Element::N, {"N", 14.007, 5, {3, 5}}},
        {Element::O, {"O", 15.999, 6, {2}}},
        {Element::S, {"S", 32.06, 6, {2, 6}}},
        {Element::Cl, {"Cl", 35.45, 7, {1}}},
    };
    return table.at(e);
}

double order_value(BondOrder o) {
    switch (o) {
        case BondOrder::Single: return 1.0;
        case BondOrder::Double: return 2.0;
        case BondOrder::Triple: return 3.0;
        case BondOrder::Aromatic: return 1.5;
    }
    return 0.0;
}

}  // namespace

const char* element_symbol(Element e) { return info(e).symbol; }
double atomic_mass(Element e) { return info(e).mass; }
int valence_electron_count(Element e) { return info(e).valence_electrons; }
const std::vector<int>& allowed_valences(Element e) { return info(e).valences; }

ParseError::ParseError(size_t off, const std::string& what)
    : std::runtime_error("offset " + std::to_string(off) + ": " + what), offset(off) {}

int MolecularGraph::add_atom(Element e, Hybridization h) {
    int idx = static_cast<int>(atoms.size());
    atoms.push_back(Atom{e, h, idx, std::nullopt, std::nullopt});
    return idx;
}

void MolecularGraph::add_bond(int a, int b, BondOrder order) {
    bonds.push_back(Bond{a, b, order});
}

std::vector<int> MolecularGraph::neighbors(int site) const {
    std::vector<int> out;
    for (const Bond& b : bonds) {
        if (b.a == site) out.push_back(b.b);
        if (b.b == site) out.push_back(b.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const Bond* MolecularGraph::find_bond(int a, int b) const {
    for (const Bond& bd : bonds)
        if ((bd.a == a && bd.b == b) || (bd.a == b && bd.b == a)) return &bd;
    return nullptr;
}

double MolecularGraph::bond_order_sum(int site) const {
    double sum = 0.0;
    for (const Bond& b : bonds)
        if (b.a == site || b.b == site) sum += order_value(b.order);
    return sum;
}

int MolecularGraph::placeholder_valence(int site) const {
    int sum = 0;
    for (const Placeholder& p : placeholders) {
        if (p.attach_site == site) sum += static_cast<int>(order_value(p.order));
        if (p.attach_site2 == site) sum += static_cast<int>(order_value(p.order2));
    }
    return sum;
}

Section MolecularGraph::section(int site) const {
    auto it = section_tags.find(site);
    return it == section_tags.end() ? Section::Unassigned : it->second;
}

bool MolecularGraph::in_ring(int site) const {
    for (const auto& r : rings)
        if (std::find(r.begin(), r.end(), site) != r.end()) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Unit {
    bool is_ring = false;
    bool is_placeholder = false;
    int atom_site = -1;        // plain atoms
    int ring_index = -1;       // rings
    int ring_used = 0;         // substitution points consumed
    int ring_declared = -1;    // from c6<k>, -1 if unspecified
    int placeholder_index = -1;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    MolecularGraph run() {
        if (text_.empty()) throw ParseError(0, "empty input");
        parse_chain();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected character");
        finalize();
        return std::move(g_);
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;
    MolecularGraph g_;
    std::vector<Unit> units_;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool accept(char c) {
        if (!eof() && peek() == c) { ++pos_; return true; }
        return false;
    }

    void parse_chain() {
        // prev unit per nesting level; level 0 is the main chain
        std::vector<std::optional<Unit>> prev_stack = {std::nullopt};
        std::optional<BondOrder> pending;

        while (!eof()) {
            char c = peek();
            if (c == ')') {
                if (prev_stack.size() == 1) return;  // caller-level close
                if (pending) throw ParseError(pos_, "dangling bond symbol");
                ++pos_;
                prev_stack.pop_back();
                continue;
            }
            if (c == '-' || c == '=' || c == '#') {
                if (!prev_stack.back()) throw ParseError(pos_, "bond symbol without preceding atom");
                if (pending) throw ParseError(pos_, "duplicate bond symbol");
                pending = c == '-' ? BondOrder::Single
                        : c == '=' ? BondOrder::Double
                                   : BondOrder::Triple;
                ++pos_;
                continue;
            }
            if (c == '(') {
                if (!prev_stack.back()) throw ParseError(pos_, "branch without preceding atom");
                if (pending) throw ParseError(pos_, "bond symbol before branch");
                ++pos_;
                prev_stack.push_back(prev_stack.back());
                continue;
            }
            Unit u = parse_unit();
            if (prev_stack.back()) {
                connect(*prev_stack.back(), u, pending.value_or(BondOrder::Single));
            } else if (pending) {
                throw ParseError(pos_, "bond symbol without preceding atom");
            }
            pending.reset();
            prev_stack.back() = u;
        }
        if (prev_stack.size() != 1) throw ParseError(pos_, "unclosed branch");
        if (pending) throw ParseError(pos_, "dangling bond symbol");
    }

    Unit parse_unit() {
        size_t start = pos_;
        char c = peek();
        if (c == 'c') return parse_ring(start);
        if (c == '[') return parse_placeholder(start);
        return parse_atom(start);
    }

    Unit parse_ring(size_t start) {
        ++pos_;  // 'c'
        if (!accept('6')) throw ParseError(start, "ring token must be 'c6'");
        Unit u;
        u.is_ring = true;
        if (accept('<')) {
            if (eof() || peek() < '1' || peek() > '6')
                throw ParseError(pos_, "unclosed ring marker: expected digit 1-6");
            u.ring_declared = peek() - '0';
            ++pos_;
            if (!accept('>')) throw ParseError(pos_, "unclosed ring marker: expected '>'");
        }
        std::array<int, 6> sites{};
        for (int i = 0; i < 6; ++i) sites[i] = g_.add_atom(Element::C, Hybridization::sp2);
        for (int i = 0; i < 6; ++i) g_.add_bond(sites[i], sites[(i + 1) % 6], BondOrder::Aromatic);
        u.ring_index = static_cast<int>(g_.rings.size());
        g_.rings.push_back(sites);
        units_.push_back(u);
        return u;
    }

    Unit parse_atom(size_t start) {
        Element e;
        if (text_.compare(pos_, 2, "Cl") == 0) { e = Element::Cl; pos_ += 2; }
        else if (accept('C')) e = Element::C;
        else if (accept('N')) e = Element::N;
        else if (accept('O')) e = Element::O;
        else if (accept('S')) e = Element::S;
        else if (accept('H')) e = Element::H;
        else throw ParseError(start, std::string("unknown element or token '") + peek() + "'");
        Unit u;
        u.atom_site = g_.add_atom(e);
        units_.push_back(u);
        return u;
    }

    Unit parse_placeholder(size_t start) {
        ++pos_;  // '['
        if (eof() || (peek() != 'X' && peek() != 'Y' && peek() != 'R'))
            throw ParseError(pos_, "placeholder role must be X, Y or R");
        char role = peek();
        ++pos_;
        if (!accept(':')) throw ParseError(pos_, "expected ':' in placeholder");
        std::string name;
        while (!eof() && peek() != ']') name += text_[pos_++];
        if (!accept(']')) throw ParseError(start, "unclosed placeholder");
        if (name.empty()) throw ParseError(start, "empty placeholder name");
        Unit u;
        u.is_placeholder = true;
        u.placeholder_index = static_cast<int>(g_.placeholders.size());
        g_.placeholders.push_back(Placeholder{role, name, -1, BondOrder::Single});
        units_.push_back(u);
        return u;
    }

    int attach_site(Unit& u) {
        if (u.is_ring) {
            if (u.ring_declared >= 0 && u.ring_used >= u.ring_declared)
                throw ParseError(pos_, "more ring substituents than declared");
            if (u.ring_used >= 6) throw ParseError(pos_, "ring substitution points exhausted");
            int site = g_.rings[u.ring_index][kRingPositions[u.ring_used]];
            ++u.ring_used;
            return site;
        }
        return u.atom_site;
    }

    void connect(Unit prev, Unit& next, BondOrder order) {
        // Units are value copies; ring usage counters live on the graph-less
        // copies, so re-resolve against the stored unit list by identity of
        // ring_index / atom_site. Rings are the only stateful case.
        Unit& p = resolve(prev);
        Unit& n = resolve(next);
        if (p.is_placeholder && n.is_placeholder)
            throw ParseError(pos_, "placeholder cannot bond to placeholder");
        if (p.is_placeholder || n.is_placeholder) {
            Unit& ph_unit = p.is_placeholder ? p : n;
            Unit& other = p.is_placeholder ? n : p;
            Placeholder& ph = g_.placeholders[ph_unit.placeholder_index];
            int site = attach_site(other);
            if (ph.attach_site < 0) {
                ph.attach_site = site;
                ph.order = order;
            } else if (ph.attach_site2 < 0 && ph.role == 'R') {
                ph.attach_site2 = site;
                ph.order2 = order;
            } else {
                throw ParseError(pos_, "placeholder already fully attached");
            }
            return;
        }
        int a = attach_site(p);
        int b = attach_site(n);
        g_.add_bond(a, b, order);
    }

    Unit& resolve(const Unit& u) {
        for (Unit& stored : units_) {
            if (u.is_ring && stored.is_ring && stored.ring_index == u.ring_index) return stored;
            if (!u.is_ring && !u.is_placeholder && !stored.is_ring && !stored.is_placeholder &&
                stored.atom_site == u.atom_site)
                return stored;
            if (u.is_placeholder && stored.is_placeholder &&
                stored.placeholder_index == u.placeholder_index)
                return stored;
        }
        throw std::logic_error("parser unit lost");
    }

    void finalize() {
        assign_hybridization(g_);
        fill_implicit_hydrogens(g_);
    }
};

}  // namespace

void assign_hybridization(MolecularGraph& g) {
    for (Atom& a : g.atoms) {
        if (a.element == Element::H) { a.hybridization = Hybridization::terminal; continue; }
        bool sp2 = false;
        for (const Bond& b : g.bonds) {
            if (b.a != a.site_index && b.b != a.site_index) continue;
            if (b.order == BondOrder::Aromatic || b.order == BondOrder::Double) sp2 = true;
        }
        a.hybridization = sp2 ? Hybridization::sp2 : Hybridization::sp3;
    }
}

void fill_implicit_hydrogens(MolecularGraph& g) {
    int heavy = static_cast<int>(g.atoms.size());
    for (int s = 0; s < heavy; ++s) {
        const Atom& a = g.atoms[s];
        if (a.element == Element::H) continue;
        double used = g.bond_order_sum(s) + g.placeholder_valence(s);
        int target = -1;
        if (a.valence_override) {
            target = *a.valence_override;
        } else {
            for (int v : allowed_valences(a.element))
                if (v + 1e-9 >= used) { target = v; break; }
        }
        if (target < 0) continue;  // over-bonded; left for validate_graph
        int deficit = static_cast<int>(std::lround(target - used));
        for (int i = 0; i < deficit; ++i) {
            int h = g.add_atom(Element::H, Hybridization::terminal);
            g.add_bond(s, h, BondOrder::Single);
        }
    }
}

MolecularGraph parse_molecule(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Renderer
// ---------------------------------------------------------------------------

namespace {

char bond_symbol(BondOrder o) {
    switch (o) {
        case BondOrder::Double: return '=';
        case BondOrder::Triple: return '#';
        default: return '-';
    }
}

struct CNode {  // condensed node: ring, non-ring heavy atom, or placeholder
    bool is_ring = false;
    int ring_index = -1;
    int atom_site = -1;
    int placeholder_index = -1;
    int min_site = 0;
};

struct CEdge {
    int other;       // condensed node index
    BondOrder order;
    int via_site;    // ring attachment atom on *this* side, for ordering
};

}  // namespace

std::string render(const MolecularGraph& g) {
    // Map each heavy atom to a condensed node (rings collapse to one node).
    std::vector<int> node_of(g.atoms.size(), -1);
    std::vector<CNode> nodes;
    for (size_t r = 0; r < g.rings.size(); ++r) {
        CNode n;
        n.is_ring = true;
        n.ring_index = static_cast<int>(r);
        n.min_site = *std::min_element(g.rings[r].begin(), g.rings[r].end());
        int id = static_cast<int>(nodes.size());
        nodes.push_back(n);
        for (int s : g.rings[r]) node_of[s] = id;
    }
    for (const Atom& a : g.atoms) {
        if (a.element == Element::H) continue;
        if (node_of[a.site_index] >= 0) continue;
        CNode n;
        n.atom_site = a.site_index;
        n.min_site = a.site_index;
        node_of[a.site_index] = static_cast<int>(nodes.size());
        nodes.push_back(n);
    }
    if (nodes.empty()) {
        // hydrogen-only graph
        std::string out;
        for (size_t i = 0; i < g.atoms.size(); ++i) {
            if (!out.empty()) out += '-';
            out += "H";
        }
        return out;
    }

    for (size_t pi = 0; pi < g.placeholders.size(); ++pi) {
        CNode n;
        n.placeholder_index = static_cast<int>(pi);
        n.min_site = static_cast<int>(g.atoms.size() + pi);  // order after real atoms
        nodes.push_back(n);
    }

    std::vector<std::vector<CEdge>> adj(nodes.size());
    for (const Bond& b : g.bonds) {
        if (g.atoms[b.a].element == Element::H || g.atoms[b.b].element == Element::H) continue;
        int na = node_of[b.a], nb = node_of[b.b];
        if (na == nb) continue;  // intra-ring bond
        adj[na].push_back(CEdge{nb, b.order, b.a});
        adj[nb].push_back(CEdge{na, b.order, b.b});
    }
    for (size_t pi = 0; pi < g.placeholders.size(); ++pi) {
        const Placeholder& p = g.placeholders[pi];
        int pn = -1;
        for (size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].placeholder_index == static_cast<int>(pi)) pn = static_cast<int>(i);
        if (p.attach_site >= 0) {
            adj[pn].push_back(CEdge{node_of[p.attach_site], p.order, -1});
            adj[node_of[p.attach_site]].push_back(CEdge{pn, p.order, p.attach_site});
        }
        if (p.attach_site2 >= 0) {
            adj[pn].push_back(CEdge{node_of[p.attach_site2], p.order2, -1});
            adj[node_of[p.attach_site2]].push_back(CEdge{pn, p.order2, p.attach_site2});
        }
    }

    std::vector<bool> visited(nodes.size(), false);
    std::ostringstream out;
    bool first_component = true;

    std::function<void(int, int, std::ostringstream&)> emit = [&](int id, int parent,
                                                                  std::ostringstream& os) {
        visited[id] = true;
        const CNode& n = nodes[id];
        std::vector<CEdge> children;
        for (const CEdge& e : adj[id])
            if (e.other != parent && !visited[e.other]) children.push_back(e);
        std::sort(children.begin(), children.end(), [&](const CEdge& x, const CEdge& y) {
            return nodes[x.other].min_site < nodes[y.other].min_site;
        });
        size_t total = children.size();
        if (n.is_ring) {
            int attachments = static_cast<int>(total) + (parent >= 0 ? 1 : 0);
            os << "c6";
            if (attachments > 2) os << '<' << attachments << '>';
        } else if (n.placeholder_index >= 0) {
            const Placeholder& p = g.placeholders[n.placeholder_index];
            os << '[' << p.role << ':' << p.name << ']';
        } else {
            const Atom& a = g.atoms[n.atom_site];
            os << element_symbol(a.element);
        }
        std::vector<std::string> parts;
        for (const CEdge& e : children) {
            if (visited[e.other]) continue;
            std::ostringstream sub;
            sub << bond_symbol(e.order);
            emit(e.other, id, sub);
            parts.push_back(sub.str());
        }
        for (size_t i = 0; i + 1 < parts.size(); ++i) os << '(' << parts[i] << ')';
        if (!parts.empty()) os << parts.back();
    };

    // Deterministic root per component: lowest min_site among degree<=1 nodes,
    // falling back to the lowest min_site overall.
    std::vector<int> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return nodes[x].min_site < nodes[y].min_site; });
    for (int id : order) {
        if (visited[id]) continue;
        // find component members, pick root
        std::vector<int> comp;
        std::vector<int> stack = {id};
        std::vector<bool> seen(nodes.size(), false);
        seen[id] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const CEdge& e : adj[v])
                if (!seen[e.other]) { seen[e.other] = true; stack.push_back(e.other); }
        }
        std::sort(comp.begin(), comp.end(),
                  [&](int x, int y) { return nodes[x].min_site < nodes[y].min_site; });
        int root = comp.front();
        for (int v : comp)
            if (adj[v].size() <= 1) { root = v; break; }
        if (!first_component) out << '.';
        first_component = false;
        emit(root, -1, out);
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

ValidationReport validate_graph(const MolecularGraph& g) {
    ValidationReport report;
    int n = static_cast<int>(g.atoms.size());
    if (n == 0) {
        report.push_back({-1, "empty graph"});
        return report;
    }
    for (const Bond& b : g.bonds) {
        if (b.a == b.b) report.push_back({b.a, "bond endpoints must be distinct"});
        if (b.a < 0 || b.a >= n || b.b < 0 || b.b >= n)
            report.push_back({-1, "bond references nonexistent site"});
        if (b.order == BondOrder::Aromatic) {
            bool in_ring = false;
            for (const auto& r : g.rings) {
                for (int i = 0; i < 6; ++i) {
                    int u = r[i], v = r[(i + 1) % 6];
                    if ((b.a == u && b.b == v) || (b.a == v && b.b == u)) in_ring = true;
                }
            }
            if (!in_ring)
                report.push_back({b.a, "aromatic bond outside a detected six-membered ring"});
        }
    }
    for (const Atom& a : g.atoms) {
        double used = g.bond_order_sum(a.site_index) + g.placeholder_valence(a.site_index);
        if (std::abs(used - std::lround(used)) > 1e-9) {
            report.push_back({a.site_index, "non-integer valence sum"});
            continue;
        }
        int v = static_cast<int>(std::lround(used));
        bool ok;
        if (a.valence_override) {
            ok = v == *a.valence_override;
        } else {
            const auto& allowed = allowed_valences(a.element);
            ok = std::find(allowed.begin(), allowed.end(), v) != allowed.end();
        }
        if (!ok) {
            std::ostringstream msg;
            msg << "valence " << v << " not allowed for " << element_symbol(a.element);
            report.push_back({a.site_index, msg.str()});
        }
    }
    // connectivity
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) { seen[u] = true; ++reached; stack.push_back(u); }
    }
    if (reached != n) {
        int first_unreached = 0;
        while (seen[first_unreached]) ++first_unreached;
        report.push_back({first_unreached, "graph is disconnected"});
    }
    return report;
}

// ---------------------------------------------------------------------------
// Pi system extraction
// ---------------------------------------------------------------------------

std::vector<PiSystem> extract_pi_systems(const MolecularGraph& g) {
    int n = static_cast<int>(g.atoms.size());
    // A site is a pi member if it is a group anchor (pseudo-site) or an
    // untagged sp2 atom. Non-anchor group atoms fold into their anchor.
    std::vector<bool> member(n, false);
    for (const Atom& a : g.atoms) {
        if (a.group) {
            if (a.group->anchor) member[a.site_index] = true;
        } else if (a.hybridization == Hybridization::sp2 && a.element != Element::H) {
            member[a.site_index] = true;
        }
    }
    std::vector<std::vector<int>> adj(n);
    for (const Bond& b : g.bonds) {
        if (member[b.a] && member[b.b]) {
            adj[b.a].push_back(b.b);
            adj[b.b].push_back(b.a);
        }
    }
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (!member[s] || comp[s] >= 0) continue;
        std::vector<int> stack = {s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (comp[u] < 0) { comp[u] = ncomp; stack.push_back(u); }
        }
        ++ncomp;
    }
    std::vector<PiSystem> systems(ncomp);
    std::vector<std::map<int, int>> local(ncomp);  // graph site -> member idx
    for (int s = 0; s < n; ++s) {
        if (comp[s] < 0) continue;
        PiSystem& sys = systems[comp[s]];
        const Atom& a = g.atoms[s];
        PiSite site;
        site.site = s;
        if (a.group && a.group->anchor) {
            site.label = a.group->name;
            site.n_pi = a.group->n_pi;
        } else {
            site.label = "C";
            site.n_pi = 0;
        }
        local[comp[s]][s] = static_cast<int>(sys.members.size());
        sys.members.push_back(site);
    }
    for (const Bond& b : g.bonds) {
        if (!member[b.a] || !member[b.b]) continue;
        int c = comp[b.a];
        systems[c].adjacency.emplace_back(local[c][b.a], local[c][b.b]);
    }
    // electrons: 6 per aromatic ring wholly inside, 2 per double bond between
    // plain members, plus pseudo-site contributions
    for (const auto& r : g.rings) {
        bool inside = true;
        for (int s : r)
            if (comp[s] < 0) inside = false;
        if (inside && comp[r[0]] >= 0) {
            systems[comp[r[0]]].electron_count += 6;
            systems[comp[r[0]]].ring_count += 1;
        }
    }
    for (const Bond& b : g.bonds) {
        if (b.order != BondOrder::Double) continue;
        if (!member[b.a] || !member[b.b]) continue;
        if (g.atoms[b.a].group || g.atoms[b.b].group) continue;
        systems[comp[b.a]].electron_count += 2;
    }
    for (PiSystem& s : systems)
        for (const PiSite& site : s.members) s.electron_count += site.n_pi;
    return systems;
}

PiSystem extract_pi_system(const MolecularGraph& g) {
    auto systems = extract_pi_systems(g);
    if (systems.empty()) throw NoPiSystem();
    const PiSystem* best = &systems.front();
    for (const PiSystem& s : systems)
        if (s.members.size() > best->members.size()) best = &s;
    return *best;
}

// ---------------------------------------------------------------------------
// Inventory
// ---------------------------------------------------------------------------

std::vector<Bond> kekulize(const MolecularGraph& g) {
    std::vector<Bond> out = g.bonds;
    for (const auto& ring : g.rings) {
        // rotate to start at the lowest-index atom, keep stored orientation
        int start = 0;
        for (int i = 1; i < 6; ++i)
            if (ring[i] < ring[start]) start = i;
        for (int i = 0; i < 6; ++i) {
            int u = ring[(start + i) % 6];
            int v = ring[(start + i + 1) % 6];
            BondOrder o = (i % 2 == 0) ? BondOrder::Double : BondOrder::Single;
            for (Bond& b : out)
                if (b.order == BondOrder::Aromatic &&
                    ((b.a == u && b.b == v) || (b.a == v && b.b == u)))
                    b.order = o;
        }
    }
    return out;
}

InventoryReport inventory(const MolecularGraph& g) {
    InventoryReport rep;
    for (const Atom& a : g.atoms) {
        rep.molecular_mass += atomic_mass(a.element);
        rep.valence_electrons += valence_electron_count(a.element);
    }
    auto kek = kekulize(g);
    int sigma_bonds = static_cast<int>(kek.size());
    int pi_bonds = 0;
    for (const Bond& b : kek) {
        if (b.order == BondOrder::Double) pi_bonds += 1;
        if (b.order == BondOrder::Triple) pi_bonds += 2;
    }
    rep.sigma_electrons = 2 * sigma_bonds;
    rep.pi_electrons = 2 * pi_bonds;
    // lone electrons: what each atom keeps after committing one electron per
    // bond-order unit
    for (const Atom& a : g.atoms) {
        double used = g.bond_order_sum(a.site_index);
        int committed = static_cast<int>(std::lround(used));
        int lone = valence_electron_count(a.element) - committed;
        if (lone > 0) rep.lone_pair_electrons += lone;
    }
    rep.ring_count = static_cast<int>(g.rings.size());
    return rep;
}

}  // namespace molsim
