#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "molsim/molgraph.hpp"

namespace molsim {

/// Per-group pi parameters, Streitwieser-style. h shifts the pseudo-site
/// Coulomb term (alpha + h*beta), k scales the resonance integral to the
/// attached ring carbon, n_pi is the electron contribution. h_ring is an
/// inductive offset applied to every plain carbon of the conjugated system
/// the group is attached to; negative h_ring raises the carbon levels
/// (donors), positive lowers them (acceptors). The table is a calibrated
/// model, not measured data.
struct HeteroatomParams {
    double h = 0.0;
    double k = 1.0;
    int n_pi = 0;
    double h_ring = 0.0;
};

struct HuckelParameters {
    double alpha = 0.0;
    double beta = -1.0;      // natural units; all internal energies use this
    double beta_ev = 2.4;    // |beta| in eV for the reporting boundary
    double degeneracy_tol = 1e-6;
    double jacobi_tol = 1e-12;   // off-diagonal Frobenius norm target
    int jacobi_max_sweeps = 100;
    std::map<std::string, HeteroatomParams> heteroatom_table;

    static HuckelParameters defaults();
};

struct HuckelMatrix {
    int dimension = 0;
    std::vector<double> entries;  // row-major, symmetric
    std::vector<std::string> site_labels;

    double at(int i, int j) const { return entries[static_cast<size_t>(i) * dimension + j]; }
    double& at(int i, int j) { return entries[static_cast<size_t>(i) * dimension + j]; }
};

struct OrbitalSet {
    int dimension = 0;
    std::vector<double> energies;      // ascending
    std::vector<double> coefficients;  // row-major; row i, column j = C_ij
    double coeff(int site, int orbital) const {
        return coefficients[static_cast<size_t>(site) * dimension + orbital];
    }
};

struct Occupation {
    std::vector<int> counts;
    int total_electrons = 0;
    std::optional<int> homo_index;
    std::optional<int> lumo_index;
    bool is_open_shell = false;
};

struct FrontierReport {
    double e_homo = 0.0;
    double e_lumo = 0.0;
    double gap = 0.0;
    double ionization_potential = 0.0;  // -E_homo
    double electron_affinity = 0.0;     // -E_lumo
    double transfer_balance = 0.0;      // A - I
};

enum class BondingClass { Bonding, Nonbonding, Antibonding };
const char* bonding_class_name(BondingClass c);

struct MissingParameter : std::runtime_error {
    explicit MissingParameter(const std::string& group)
        : std::runtime_error("no Huckel parameters for group '" + group + "'") {}
};
struct ConvergenceFailure : std::runtime_error {
    ConvergenceFailure() : std::runtime_error("Jacobi iteration did not converge") {}
};
struct TooManyElectrons : std::runtime_error {
    TooManyElectrons() : std::runtime_error("electron count exceeds orbital capacity") {}
};
struct NoFrontier : std::runtime_error {
    explicit NoFrontier(const char* what) : std::runtime_error(what) {}
};

HuckelMatrix build_matrix(const PiSystem& pi, const HuckelParameters& params);

/// Cyclic Jacobi diagonalization; eigenpairs sorted ascending by energy.
/// Eigenvector signs are fixed so the largest-magnitude component is
/// positive (deterministic output).
OrbitalSet solve_eigensystem(const HuckelMatrix& m,
                             const HuckelParameters& params = HuckelParameters::defaults());

/// Aufbau filling with Pauli capacity 2 and Hund single-occupation within a
/// degenerate shell; leftover electrons pair into the lowest shell index.
Occupation occupy(const OrbitalSet& orbitals, int n_electrons,
                  double degeneracy_tol = 1e-6);

FrontierReport frontier(const OrbitalSet& orbitals, const Occupation& occ,
                        const HuckelParameters& params);

std::vector<BondingClass> classify_orbitals(const OrbitalSet& orbitals,
                                            const HuckelParameters& params);

/// Reporting-boundary conversion from natural beta units to eV.
OrbitalSet to_ev(const OrbitalSet& orbitals, const HuckelParameters& params);
double energy_to_ev(double e_beta_units, const HuckelParameters& params);

}  // namespace molsim
