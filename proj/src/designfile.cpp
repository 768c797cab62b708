#include "molsim/designfile.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "molsim/keyfile.hpp"

namespace molsim {

const char* DesignFile::kind_name() const {
    switch (kind) {
        case Kind::Diode: return "diode";
        case Kind::AndGate: return "and_gate";
        case Kind::OrGate: return "or_gate";
    }
    return "?";
}

namespace {

const std::set<std::string> kDiodeKeys = {"donor", "acceptor", "bridge", "rings_donor",
                                          "rings_acceptor", "contact"};

void apply_diode_key(DiodeSpec& spec, const KeyValue& kv, const std::string& file) {
    if (kv.key == "donor") spec.donor_group = kv.value;
    else if (kv.key == "acceptor") spec.acceptor_group = kv.value;
    else if (kv.key == "bridge") spec.bridge = kv.value;
    else if (kv.key == "rings_donor") spec.rings_donor = parse_int(kv, file);
    else if (kv.key == "rings_acceptor") spec.rings_acceptor = parse_int(kv, file);
    else if (kv.key == "contact") {
        try {
            spec.contact_metal = contact_metal_from_name(kv.value);
        } catch (const InvalidSpec& e) {
            throw KeyFileError(file, kv.line, e.what());
        }
    }
}

void check_group(const std::string& name, GroupRole role, int line, const std::string& file) {
    if (find_group(name, role)) return;
    try {
        if (const auto* other = find_group(name)) throw RoleMismatch(name, role, other->role);
        throw UnknownGroup(name, role);
    } catch (const std::runtime_error& e) {
        throw KeyFileError(file, line, e.what());
    }
}

void check_diode(const DiodeSpec& spec, const std::map<std::string, int>& lines,
                 const std::string& prefix, const std::string& file) {
    auto line_of = [&](const std::string& key) {
        auto it = lines.find(prefix + key);
        return it == lines.end() ? 0 : it->second;
    };
    if (spec.donor_group.empty())
        throw KeyFileError(file, 0, "missing key '" + prefix + "donor'");
    if (spec.acceptor_group.empty())
        throw KeyFileError(file, 0, "missing key '" + prefix + "acceptor'");
    if (spec.bridge.empty())
        throw KeyFileError(file, 0, "missing key '" + prefix + "bridge'");
    check_group(spec.donor_group, GroupRole::Donor, line_of("donor"), file);
    check_group(spec.acceptor_group, GroupRole::Acceptor, line_of("acceptor"), file);
    check_group(spec.bridge, GroupRole::Insulator, line_of("bridge"), file);
    if (spec.rings_donor < 1 || spec.rings_acceptor < 1)
        throw KeyFileError(file, 0, "ring counts must be >= 1");
}

}  // namespace

DesignFile parse_design_text(const std::string& text, const std::string& filename) {
    auto entries = parse_keyfile(text, filename);
    DesignFile df;
    bool kind_seen = false;
    std::map<std::string, int> lines;

    for (const KeyValue& kv : entries) {
        if (kv.section == "design") {
            if (kv.key == "kind") {
                kind_seen = true;
                if (kv.value == "diode") df.kind = DesignFile::Kind::Diode;
                else if (kv.value == "and_gate") df.kind = DesignFile::Kind::AndGate;
                else if (kv.value == "or_gate") df.kind = DesignFile::Kind::OrGate;
                else if (kv.value == "not_gate" || kv.value == "xor_gate")
                    throw KeyFileError(filename, kv.line,
                                       "kind '" + kv.value +
                                           "' is not realizable in pure diode logic "
                                           "(diodes cannot invert); supported kinds: "
                                           "diode, and_gate, or_gate");
                else
                    throw KeyFileError(filename, kv.line,
                                       "unknown kind '" + kv.value +
                                           "' (supported: diode, and_gate, or_gate)");
            } else if (kDiodeKeys.count(kv.key)) {
                apply_diode_key(df.diode, kv, filename);
                lines[kv.key] = kv.line;
            } else if (kv.key == "load_ohms") {
                df.gate.load_resistance = parse_double(kv, filename);
                lines[kv.key] = kv.line;
            } else if (kv.key == "supply_volts") {
                df.gate.supply_voltage = parse_double(kv, filename);
                lines[kv.key] = kv.line;
            } else {
                throw KeyFileError(filename, kv.line, "unknown key '" + kv.key + "'");
            }
        } else if (kv.section == "diode.a" || kv.section == "diode.b") {
            if (!kDiodeKeys.count(kv.key))
                throw KeyFileError(filename, kv.line,
                                   "unknown key '" + kv.key + "' in [" + kv.section + "]");
            DiodeSpec& spec = kv.section == "diode.a" ? df.gate.diode_a : df.gate.diode_b;
            apply_diode_key(spec, kv, filename);
            lines[kv.section + "." + kv.key] = kv.line;
        } else if (kv.section.empty()) {
            throw KeyFileError(filename, kv.line, "key outside any section (expected [design])");
        } else {
            throw KeyFileError(filename, kv.line, "unknown section '[" + kv.section + "]'");
        }
    }
    if (!kind_seen) throw KeyFileError(filename, 0, "missing key 'kind' in [design]");

    if (df.kind == DesignFile::Kind::Diode) {
        check_diode(df.diode, lines, "", filename);
    } else {
        df.gate.kind = df.kind == DesignFile::Kind::AndGate ? GateKind::AND : GateKind::OR;
        check_diode(df.gate.diode_a, lines, "diode.a.", filename);
        check_diode(df.gate.diode_b, lines, "diode.b.", filename);
        if (df.gate.load_resistance <= 0)
            throw KeyFileError(filename, 0, "load_ohms must be > 0");
        if (df.gate.supply_voltage <= 0)
            throw KeyFileError(filename, 0, "supply_volts must be > 0");
    }
    return df;
}

DesignFile load_design(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open design file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_design_text(buf.str(), path);
}

}  // namespace molsim
