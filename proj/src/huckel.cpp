#include "molsim/huckel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace molsim {

const char* bonding_class_name(BondingClass c) {
    switch (c) {
        case BondingClass::Bonding: return "bonding";
        case BondingClass::Nonbonding: return "nonbonding";
        case BondingClass::Antibonding: return "antibonding";
    }
    return "?";
}

HuckelParameters HuckelParameters::defaults() {
    HuckelParameters p;
    // Calibrated so every catalog donor raises the fragment LUMO relative to
    // bare benzene and every acceptor lowers it. Donors carry an occupied
    // lone-pair-like site below the pi stack; acceptors an empty low-lying
    // site just under the benzene LUMO.
    p.heteroatom_table = {
        {"NH2", {1.5, 0.8, 2, -0.10}},
        {"OH", {2.0, 0.8, 2, -0.08}},
        {"CH3", {2.0, 0.7, 2, -0.05}},
        {"CH2CH3", {2.0, 0.65, 2, -0.05}},
        {"NO2", {-0.5, 0.7, 0, 0.10}},
        {"CN", {-0.3, 0.6, 0, 0.08}},
        {"CHO", {-0.4, 0.6, 0, 0.08}},
        {"NC", {-0.2, 0.5, 0, 0.06}},
    };
    return p;
}

HuckelMatrix build_matrix(const PiSystem& pi, const HuckelParameters& params) {
    if (pi.members.empty()) throw std::invalid_argument("pi system has no sites");
    HuckelMatrix m;
    m.dimension = static_cast<int>(pi.members.size());
    m.entries.assign(static_cast<size_t>(m.dimension) * m.dimension, 0.0);
    m.site_labels.reserve(pi.members.size());
    double ring_shift = 0.0;
    for (const PiSite& s : pi.members) {
        m.site_labels.push_back(s.label);
        if (s.label == "C") continue;
        auto it = params.heteroatom_table.find(s.label);
        if (it == params.heteroatom_table.end()) throw MissingParameter(s.label);
        ring_shift += it->second.h_ring;
    }
    for (int i = 0; i < m.dimension; ++i) {
        const std::string& label = pi.members[i].label;
        if (label == "C") {
            m.at(i, i) = params.alpha + ring_shift * params.beta;
        } else {
            m.at(i, i) = params.alpha + params.heteroatom_table.at(label).h * params.beta;
        }
    }
    for (const auto& [i, j] : pi.adjacency) {
        double k = 1.0;
        if (pi.members[i].label != "C")
            k *= params.heteroatom_table.at(pi.members[i].label).k;
        if (pi.members[j].label != "C")
            k *= params.heteroatom_table.at(pi.members[j].label).k;
        m.at(i, j) = k * params.beta;
        m.at(j, i) = k * params.beta;
    }
    return m;
}

OrbitalSet solve_eigensystem(const HuckelMatrix& m, const HuckelParameters& params) {
    const int n = m.dimension;
    std::vector<double> a = m.entries;           // working copy
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);  // rotations
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * A(i, j) * A(i, j);
        return std::sqrt(s);
    };

    bool converged = n == 1 || off_norm() < params.jacobi_tol;
    for (int sweep = 0; sweep < params.jacobi_max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = A(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = A(i, p), aiq = A(i, q);
                    A(i, p) = c * aip - s * aiq;
                    A(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = A(p, i), aqi = A(q, i);
                    A(p, i) = c * api - s * aqi;
                    A(q, i) = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = V(i, p), viq = V(i, q);
                    V(i, p) = c * vip - s * viq;
                    V(i, q) = s * vip + c * viq;
                }
            }
        }
        if (off_norm() < params.jacobi_tol) converged = true;
    }
    if (!converged) throw ConvergenceFailure();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return A(x, x) < A(y, y); });

    OrbitalSet out;
    out.dimension = n;
    out.energies.resize(n);
    out.coefficients.assign(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        int src = order[j];
        out.energies[j] = A(src, src);
        int max_row = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(V(i, src)) > std::abs(V(max_row, src))) max_row = i;
        double sign = V(max_row, src) >= 0 ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i)
            out.coefficients[static_cast<size_t>(i) * n + j] = sign * V(i, src);
    }
    return out;
}

Occupation occupy(const OrbitalSet& orbitals, int n_electrons, double degeneracy_tol) {
    const int n = orbitals.dimension;
    if (n_electrons < 0 || n_electrons > 2 * n) throw TooManyElectrons();
    Occupation occ;
    occ.counts.assign(n, 0);
    occ.total_electrons = n_electrons;

    int remaining = n_electrons;
    int shell_begin = 0;
    while (remaining > 0 && shell_begin < n) {
        int shell_end = shell_begin + 1;
        while (shell_end < n &&
               orbitals.energies[shell_end] - orbitals.energies[shell_begin] <= degeneracy_tol)
            ++shell_end;
        int width = shell_end - shell_begin;
        int take = std::min(remaining, 2 * width);
        // Hund: singles across the shell first, then pair lowest index first.
        for (int i = 0; i < std::min(take, width); ++i) occ.counts[shell_begin + i] = 1;
        for (int i = 0; i < take - width; ++i) occ.counts[shell_begin + i] = 2;
        remaining -= take;
        shell_begin = shell_end;
    }
    for (int j = 0; j < n; ++j) {
        if (occ.counts[j] > 0) occ.homo_index = j;
        if (occ.counts[j] == 1) occ.is_open_shell = true;
    }
    for (int j = 0; j < n; ++j) {
        if (occ.counts[j] == 0) { occ.lumo_index = j; break; }
    }
    return occ;
}

FrontierReport frontier(const OrbitalSet& orbitals, const Occupation& occ,
                        const HuckelParameters& params) {
    (void)params;
    if (!occ.homo_index) throw NoFrontier("no occupied orbital");
    if (!occ.lumo_index) throw NoFrontier("no unoccupied orbital");
    FrontierReport r;
    r.e_homo = orbitals.energies[*occ.homo_index];
    r.e_lumo = orbitals.energies[*occ.lumo_index];
    r.gap = r.e_lumo - r.e_homo;
    r.ionization_potential = -r.e_homo;
    r.electron_affinity = -r.e_lumo;
    r.transfer_balance = r.electron_affinity - r.ionization_potential;
    return r;
}

std::vector<BondingClass> classify_orbitals(const OrbitalSet& orbitals,
                                            const HuckelParameters& params) {
    constexpr double tol = 1e-8;
    std::vector<BondingClass> out;
    out.reserve(orbitals.energies.size());
    for (double e : orbitals.energies) {
        if (e < params.alpha - tol) out.push_back(BondingClass::Bonding);
        else if (e > params.alpha + tol) out.push_back(BondingClass::Antibonding);
        else out.push_back(BondingClass::Nonbonding);
    }
    return out;
}

double energy_to_ev(double e, const HuckelParameters& params) {
    // internal energies are alpha + x*beta with beta = -1; in eV the same
    // level sits at alpha + x*(-|beta_ev|) = e * |beta_ev| for alpha = 0
    return (e - params.alpha) * std::abs(params.beta_ev) + params.alpha;
}

OrbitalSet to_ev(const OrbitalSet& orbitals, const HuckelParameters& params) {
    OrbitalSet out = orbitals;
    for (double& e : out.energies) e = energy_to_ev(e, params);
    return out;
}

}  // namespace molsim
