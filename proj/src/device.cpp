#include "molsim/device.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace molsim {

namespace {

FrontierReport frontier_ev(const FrontierReport& f, const HuckelParameters& p) {
    FrontierReport out;
    out.e_homo = energy_to_ev(f.e_homo, p);
    out.e_lumo = energy_to_ev(f.e_lumo, p);
    out.gap = out.e_lumo - out.e_homo;
    out.ionization_potential = -out.e_homo;
    out.electron_affinity = -out.e_lumo;
    out.transfer_balance = out.electron_affinity - out.ionization_potential;
    return out;
}

FrontierReport solve_side(const CompiledDesign& design, Section side,
                          const HuckelParameters& params) {
    PiSystem pi = design.side_pi_system(side);
    HuckelMatrix m = build_matrix(pi, params);
    OrbitalSet orbitals = solve_eigensystem(m, params);
    Occupation occ = occupy(orbitals, pi.electron_count, params.degeneracy_tol);
    return frontier(orbitals, occ, params);
}

}  // namespace

EnergyProfile energy_profile(const CompiledDesign& design, const HuckelParameters& params,
                             const DeviceConfig& config) {
    EnergyProfile p;
    FrontierReport donor = solve_side(design, Section::Donor, params);
    FrontierReport acceptor = solve_side(design, Section::Acceptor, params);
    p.donor_levels = frontier_ev(donor, params);
    p.acceptor_levels = frontier_ev(acceptor, params);
    p.bridge_barrier_ev = config.bridge_barrier_ev;
    auto it = config.fermi_ev.find(contact_metal_name(design.contact_metal));
    p.contact_fermi_ev = it == config.fermi_ev.end() ? 0.0 : it->second;
    p.delta_e_lumo_ev = p.donor_levels.e_lumo - p.acceptor_levels.e_lumo;
    return p;
}

DiodeModel diode_model(const EnergyProfile& profile, const DeviceConfig& config) {
    DiodeModel m;
    m.forward_threshold = config.base_threshold_volts;
    // single-electron convention: a 1 eV level offset costs 1 V of bias
    m.reverse_threshold = config.base_threshold_volts + std::abs(profile.delta_e_lumo_ev);
    m.on_conductance = config.on_conductance_siemens;
    return m;
}

Circuit make_gate_circuit(GateKind kind, const DiodeModel& a, const DiodeModel& b,
                          double load_ohms, double supply_volts) {
    Circuit c;
    c.nodes = {"A", "B", "Q", "C", "VDD", "GND"};
    c.fixed["GND"] = 0.0;
    c.inputs = {"A", "B"};
    c.shorts.emplace_back("Q", "C");
    if (kind == GateKind::AND) {
        c.fixed["VDD"] = supply_volts;
        c.resistors.push_back({"VDD", "Q", load_ohms});
        c.diodes.push_back({"Q", "A", a});
        c.diodes.push_back({"Q", "B", b});
    } else {
        c.fixed["VDD"] = supply_volts;  // present but unused by the OR load
        c.resistors.push_back({"Q", "GND", load_ohms});
        c.diodes.push_back({"A", "Q", a});
        c.diodes.push_back({"B", "Q", b});
    }
    return c;
}

namespace {

// Gaussian elimination with partial pivoting. Returns false if the system is
// inconsistent; free variables are pinned to zero.
bool solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& b,
                  std::vector<double>& x) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivot_col_of_row(rows, -1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int best = row;
        for (int r = row; r < rows; ++r)
            if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
        if (std::abs(a[best][col]) < 1e-12) continue;
        std::swap(a[best], a[row]);
        std::swap(b[best], b[row]);
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            double f = a[r][col] / a[row][col];
            if (f == 0.0) continue;
            for (int c2 = col; c2 < cols; ++c2) a[r][c2] -= f * a[row][c2];
            b[r] -= f * b[row];
        }
        pivot_col_of_row[row] = col;
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (std::abs(b[r]) > 1e-9) return false;  // inconsistent
    x.assign(cols, 0.0);
    for (int r = 0; r < row; ++r) {
        int col = pivot_col_of_row[r];
        double s = b[r];
        for (int c2 = col + 1; c2 < cols; ++c2) s -= a[r][c2] * x[c2];
        x[col] = s / a[r][col];
    }
    return true;
}

struct NodeIndex {
    std::map<std::string, std::string> alias;  // node -> representative
    std::map<std::string, int> unknown;        // representative -> variable id
    std::map<std::string, double> fixed;       // representative -> volts

    std::string rep(const std::string& n) const {
        auto it = alias.find(n);
        return it == alias.end() ? n : it->second;
    }
};

NodeIndex index_nodes(const Circuit& c, const std::map<std::string, double>& inputs) {
    NodeIndex idx;
    for (const auto& [a, b] : c.shorts) idx.alias[b] = a;
    // resolve chains
    for (auto& [k, v] : idx.alias) {
        std::string r = v;
        while (idx.alias.count(r)) r = idx.alias.at(r);
        v = r;
    }
    std::map<std::string, double> fixed = c.fixed;
    for (const auto& [n, volts] : inputs) fixed[n] = volts;
    for (const std::string& n : c.nodes) {
        std::string r = idx.rep(n);
        auto it = fixed.find(n);
        if (it != fixed.end()) idx.fixed[r] = it->second;
    }
    for (const std::string& n : c.nodes) {
        std::string r = idx.rep(n);
        if (!idx.fixed.count(r) && !idx.unknown.count(r)) {
            int id = static_cast<int>(idx.unknown.size());
            idx.unknown[r] = id;
        }
    }
    return idx;
}

}  // namespace

std::map<std::string, double> simulate_circuit(const Circuit& c,
                                               const std::map<std::string, double>& inputs) {
    for (const std::string& n : c.inputs)
        if (!inputs.count(n))
            throw std::invalid_argument("missing input level for node '" + n + "'");
    NodeIndex idx = index_nodes(c, inputs);

    // every unknown node must touch at least one element
    for (const auto& [node, id] : idx.unknown) {
        (void)id;
        bool touched = false;
        for (const auto& r : c.resistors)
            if (idx.rep(r.n1) == node || idx.rep(r.n2) == node) touched = true;
        for (const auto& d : c.diodes)
            if (idx.rep(d.anode) == node || idx.rep(d.cathode) == node) touched = true;
        if (!touched) throw FloatingNode(node);
    }

    const int n_unknown = static_cast<int>(idx.unknown.size());
    const int n_diodes = static_cast<int>(c.diodes.size());
    if (n_diodes > 16) throw NonConvergence();

    auto volt_term = [&](const std::string& node, std::vector<double>& row, double& rhs,
                         double coeff) {
        std::string r = idx.rep(node);
        auto uit = idx.unknown.find(r);
        if (uit != idx.unknown.end()) row[uit->second] += coeff;
        else rhs -= coeff * idx.fixed.at(r);
    };

    for (unsigned mask = 0; mask < (1u << n_diodes); ++mask) {
        // variables: unknown node voltages, then one current per ON diode
        std::vector<int> current_var(n_diodes, -1);
        int n_vars = n_unknown;
        for (int d = 0; d < n_diodes; ++d)
            if (mask & (1u << d)) current_var[d] = n_vars++;

        std::vector<std::vector<double>> a;
        std::vector<double> b;
        // KCL per unknown node
        for (const auto& [node, id] : idx.unknown) {
            (void)id;
            std::vector<double> row(n_vars, 0.0);
            double rhs = 0.0;
            for (const auto& res : c.resistors) {
                double g = 1.0 / res.ohms;
                if (idx.rep(res.n1) == node) {
                    volt_term(res.n1, row, rhs, g);
                    volt_term(res.n2, row, rhs, -g);
                }
                if (idx.rep(res.n2) == node) {
                    volt_term(res.n2, row, rhs, g);
                    volt_term(res.n1, row, rhs, -g);
                }
            }
            for (int d = 0; d < n_diodes; ++d) {
                if (current_var[d] < 0) continue;
                if (idx.rep(c.diodes[d].anode) == node) row[current_var[d]] += 1.0;
                if (idx.rep(c.diodes[d].cathode) == node) row[current_var[d]] -= 1.0;
            }
            a.push_back(std::move(row));
            b.push_back(rhs);
        }
        // ON diode constraint: V_anode - V_cathode = forward threshold
        for (int d = 0; d < n_diodes; ++d) {
            if (current_var[d] < 0) continue;
            std::vector<double> row(n_vars, 0.0);
            double rhs = c.diodes[d].model.forward_threshold;
            volt_term(c.diodes[d].anode, row, rhs, 1.0);
            volt_term(c.diodes[d].cathode, row, rhs, -1.0);
            a.push_back(std::move(row));
            b.push_back(rhs);
        }

        std::vector<double> x;
        if (!solve_linear(a, b, x)) continue;

        auto voltage = [&](const std::string& node) {
            std::string r = idx.rep(node);
            auto uit = idx.unknown.find(r);
            if (uit != idx.unknown.end()) return x[uit->second];
            return idx.fixed.at(r);
        };

        bool consistent = true;
        constexpr double eps = 1e-9;
        for (int d = 0; d < n_diodes; ++d) {
            double drop = voltage(c.diodes[d].anode) - voltage(c.diodes[d].cathode);
            if (current_var[d] >= 0) {
                if (x[current_var[d]] < -eps) consistent = false;
            } else {
                if (drop > c.diodes[d].model.forward_threshold + eps) consistent = false;
            }
        }
        if (!consistent) continue;

        std::map<std::string, double> out;
        for (const std::string& node : c.nodes) out[node] = voltage(node);
        // stash ON-diode currents under reserved keys for the residual check
        for (int d = 0; d < n_diodes; ++d)
            out["__i_diode" + std::to_string(d)] = current_var[d] >= 0 ? x[current_var[d]] : 0.0;
        return out;
    }
    throw NonConvergence();
}

std::map<std::string, double> node_current_residuals(
    const Circuit& c, const std::map<std::string, double>& inputs,
    const std::map<std::string, double>& solution) {
    NodeIndex idx = index_nodes(c, inputs);
    std::map<std::string, double> net;
    for (const std::string& n : c.nodes) net[idx.rep(n)] = 0.0;
    for (const auto& res : c.resistors) {
        double i = (solution.at(res.n1) - solution.at(res.n2)) / res.ohms;
        net[idx.rep(res.n1)] -= i;
        net[idx.rep(res.n2)] += i;
    }
    for (size_t d = 0; d < c.diodes.size(); ++d) {
        double i = solution.at("__i_diode" + std::to_string(d));
        net[idx.rep(c.diodes[d].anode)] -= i;
        net[idx.rep(c.diodes[d].cathode)] += i;
    }
    // only internal (non-source) nodes must balance
    std::map<std::string, double> out;
    for (const auto& [node, id] : idx.unknown) {
        (void)id;
        out[node] = net[node];
    }
    return out;
}

TruthTable truth_table(const Circuit& c, const DeviceConfig& config) {
    TruthTable table;
    table.v_low_max = config.v_low_max;
    table.v_high_min = config.v_high_min;
    const int k = static_cast<int>(c.inputs.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::map<std::string, double> levels;
        for (int i = 0; i < k; ++i)
            levels[c.inputs[i]] = (mask & (1u << (k - 1 - i))) ? config.v_high : config.v_low;
        TruthTableRow row;
        row.input_volts = levels;
        row.node_volts = simulate_circuit(c, levels);
        for (auto it = row.node_volts.begin(); it != row.node_volts.end();) {
            if (it->first.rfind("__", 0) == 0) it = row.node_volts.erase(it);
            else ++it;
        }
        double vc = row.node_volts.at("C");
        if (vc <= config.v_low_max) {
            row.logic_output = 0;
        } else if (vc >= config.v_high_min) {
            row.logic_output = 1;
        } else {
            std::ostringstream os;
            os << "output voltage " << vc << " V lies in the forbidden band ("
               << config.v_low_max << ", " << config.v_high_min << ") for inputs";
            for (int i = 0; i < k; ++i) os << ' ' << c.inputs[i] << '=' << levels[c.inputs[i]];
            throw AmbiguousLogicLevel(os.str());
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

double diode_current(const DiodeModel& m, double bias) {
    if (bias >= m.forward_threshold) return m.on_conductance * (bias - m.forward_threshold);
    if (bias <= -m.reverse_threshold) return -m.on_conductance * (-bias - m.reverse_threshold);
    return 0.0;
}

std::vector<IVPoint> iv_sweep(const DiodeModel& m, double v_max, int steps) {
    std::vector<IVPoint> out;
    out.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        double v = -v_max + 2.0 * v_max * i / steps;
        out.push_back(IVPoint{v, diode_current(m, v)});
    }
    return out;
}

std::string render_iv_sweep(const std::vector<IVPoint>& points) {
    std::ostringstream os;
    os << "# bias_volts current_amps\n";
    os << std::setprecision(12);
    for (const IVPoint& p : points) os << p.bias_volts << ' ' << p.current_amps << '\n';
    return os.str();
}

}  // namespace molsim
