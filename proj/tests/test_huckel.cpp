#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "molsim/huckel.hpp"

using namespace molsim;

namespace {

PiSystem chain(int n) {
    PiSystem pi;
    for (int i = 0; i < n; ++i) pi.members.push_back(PiSite{i, "C", 0});
    for (int i = 0; i + 1 < n; ++i) pi.adjacency.emplace_back(i, i + 1);
    pi.electron_count = n;
    return pi;
}

PiSystem ring(int n) {
    PiSystem pi = chain(n);
    pi.adjacency.emplace_back(n - 1, 0);
    pi.ring_count = 1;
    return pi;
}

// Characteristic polynomial oracle: det(H - lambda I) by Gaussian elimination.
double char_poly(const HuckelMatrix& m, double lambda) {
    int n = m.dimension;
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j) - (i == j ? lambda : 0.0);
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-300) return 0.0;
        if (piv != col) { std::swap(a[piv], a[col]); det = -det; }
        det *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("benzene matrix entries") {
    HuckelParameters p = HuckelParameters::defaults();
    HuckelMatrix m = build_matrix(ring(6), p);
    REQUIRE(m.dimension == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(m.at(i, i) == doctest::Approx(0.0));
        CHECK(m.at(i, (i + 1) % 6) == doctest::Approx(-1.0));
        CHECK(m.at(i, (i + 3) % 6) == doctest::Approx(0.0));
        for (int j = 0; j < 6; ++j) CHECK(m.at(i, j) == m.at(j, i));
    }
}

TEST_CASE("benzene spectrum is the analytic sextet") {
    OrbitalSet orb = solve_eigensystem(build_matrix(ring(6), HuckelParameters::defaults()));
    std::vector<double> want = {-2, -1, -1, 1, 1, 2};
    REQUIRE(orb.energies.size() == 6);
    for (int i = 0; i < 6; ++i)
        CHECK(orb.energies[i] == doctest::Approx(want[i]).epsilon(1e-9));
}

TEST_CASE("single site and ethylene") {
    OrbitalSet one = solve_eigensystem(build_matrix(chain(1), HuckelParameters::defaults()));
    REQUIRE(one.energies.size() == 1);
    CHECK(one.energies[0] == doctest::Approx(0.0));

    OrbitalSet two = solve_eigensystem(build_matrix(chain(2), HuckelParameters::defaults()));
    CHECK(two.energies[0] == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(two.energies[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("butadiene gives the golden-ratio quartet") {
    OrbitalSet orb = solve_eigensystem(build_matrix(chain(4), HuckelParameters::defaults()));
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(orb.energies[0] == doctest::Approx(-phi).epsilon(1e-9));
    CHECK(orb.energies[1] == doctest::Approx(-(phi - 1.0)).epsilon(1e-9));
    CHECK(orb.energies[2] == doctest::Approx(phi - 1.0).epsilon(1e-9));
    CHECK(orb.energies[3] == doctest::Approx(phi).epsilon(1e-9));
}

TEST_CASE("polyene chains match the analytic cosine formula") {
    HuckelParameters p = HuckelParameters::defaults();
    for (int n = 2; n <= 8; ++n) {
        OrbitalSet orb = solve_eigensystem(build_matrix(chain(n), p));
        std::vector<double> want;
        for (int j = 1; j <= n; ++j)
            want.push_back(p.alpha + 2.0 * p.beta * std::cos(j * M_PI / (n + 1)));
        std::sort(want.begin(), want.end());
        for (int j = 0; j < n; ++j)
            CHECK(orb.energies[j] == doctest::Approx(want[j]).epsilon(1e-9));
    }
}

TEST_CASE("eigenpairs satisfy the residual, orthonormality and trace checks") {
    HuckelParameters p = HuckelParameters::defaults();
    HuckelMatrix m = build_matrix(ring(6), p);
    OrbitalSet orb = solve_eigensystem(m);
    int n = m.dimension;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            double hv = 0.0;
            for (int j = 0; j < n; ++j) hv += m.at(i, j) * orb.coeff(j, k);
            CHECK(hv == doctest::Approx(orb.energies[k] * orb.coeff(i, k)).epsilon(1e-9));
        }
    }
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += orb.coeff(i, k) * orb.coeff(i, l);
            CHECK(dot == doctest::Approx(k == l ? 1.0 : 0.0).epsilon(1e-9));
        }
    double trace = 0.0, esum = std::accumulate(orb.energies.begin(), orb.energies.end(), 0.0);
    for (int i = 0; i < n; ++i) trace += m.at(i, i);
    CHECK(trace == doctest::Approx(esum).epsilon(1e-9));
}

TEST_CASE("eigenvector signs are deterministic") {
    HuckelMatrix m = build_matrix(ring(6), HuckelParameters::defaults());
    OrbitalSet a = solve_eigensystem(m);
    OrbitalSet b = solve_eigensystem(m);
    CHECK(a.coefficients == b.coefficients);
    for (int k = 0; k < 6; ++k) {
        double best = 0.0;
        for (int i = 0; i < 6; ++i)
            if (std::fabs(a.coeff(i, k)) > std::fabs(best)) best = a.coeff(i, k);
        CHECK(best > 0.0);
    }
}

TEST_CASE("pairing theorem on random bipartite graphs, with determinant oracle") {
    std::mt19937 rng(20240817);
    HuckelParameters p = HuckelParameters::defaults();
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> size(2, 8);
        int n = size(rng);
        // random bipartite tree plus optional even-cycle closure keeps the
        // graph alternant, so the spectrum must be symmetric about alpha
        PiSystem pi = chain(n);
        std::uniform_int_distribution<int> extra(0, 1);
        if (n >= 4 && n % 2 == 0 && extra(rng)) {
            pi.adjacency.emplace_back(n - 1, 0);
        }
        HuckelMatrix m = build_matrix(pi, p);
        OrbitalSet orb = solve_eigensystem(m);
        for (int j = 0; j < n; ++j)
            CHECK(orb.energies[j] == doctest::Approx(-orb.energies[n - 1 - j]).epsilon(1e-9));
        // each computed eigenvalue is a root of det(H - lambda I)
        for (double e : orb.energies) {
            double lo = char_poly(m, e - 1e-6), hi = char_poly(m, e + 1e-6);
            bool root = std::fabs(char_poly(m, e)) < 1e-6 || (lo > 0) != (hi > 0) ||
                        std::fabs(lo) > std::fabs(char_poly(m, e));
            CHECK(root);
        }
    }
}

TEST_CASE("aufbau occupation for benzene") {
    OrbitalSet orb = solve_eigensystem(build_matrix(ring(6), HuckelParameters::defaults()));
    Occupation occ = occupy(orb, 6);
    CHECK(occ.counts == std::vector<int>{2, 2, 2, 0, 0, 0});
    CHECK(occ.homo_index == 2);
    CHECK(occ.lumo_index == 3);
    CHECK_FALSE(occ.is_open_shell);
}

TEST_CASE("Hund singles before pairing in a degenerate shell") {
    // benzene with 5 electrons: shell {-1,-1} gets one each before pairing
    OrbitalSet orb = solve_eigensystem(build_matrix(ring(6), HuckelParameters::defaults()));
    Occupation occ = occupy(orb, 4);
    CHECK(occ.counts == std::vector<int>{2, 1, 1, 0, 0, 0});
    CHECK(occ.is_open_shell);
    Occupation five = occupy(orb, 5);
    CHECK(five.counts == std::vector<int>{2, 2, 1, 0, 0, 0});
}

TEST_CASE("occupation rejects impossible electron counts") {
    OrbitalSet orb = solve_eigensystem(build_matrix(chain(2), HuckelParameters::defaults()));
    CHECK_THROWS_AS(occupy(orb, 5), TooManyElectrons);
    Occupation zero = occupy(orb, 0);
    CHECK(zero.total_electrons == 0);
    CHECK_FALSE(zero.homo_index.has_value());
}

TEST_CASE("occupation is energy-minimal against exhaustive enumeration") {
    HuckelParameters p = HuckelParameters::defaults();
    for (int n : {3, 4, 5, 6}) {
        OrbitalSet orb = solve_eigensystem(build_matrix(n == 6 ? ring(6) : chain(n), p));
        for (int ne = 0; ne <= 2 * n; ++ne) {
            Occupation occ = occupy(orb, ne);
            double got = 0.0;
            for (int i = 0; i < n; ++i) got += occ.counts[i] * orb.energies[i];
            // enumerate every Pauli-feasible assignment of ne electrons
            double best = 1e18;
            std::vector<int> c(n, 0);
            std::function<void(int, int)> rec = [&](int i, int left) {
                if (i == n) {
                    if (left == 0) {
                        double e = 0.0;
                        for (int j = 0; j < n; ++j) e += c[j] * orb.energies[j];
                        best = std::min(best, e);
                    }
                    return;
                }
                for (int k = 0; k <= std::min(2, left); ++k) {
                    c[i] = k;
                    rec(i + 1, left - k);
                }
                c[i] = 0;
            };
            rec(0, ne);
            CHECK(got == doctest::Approx(best).epsilon(1e-9));
        }
    }
}

TEST_CASE("frontier report and Koopmans bookkeeping") {
    HuckelParameters p = HuckelParameters::defaults();
    OrbitalSet orb = solve_eigensystem(build_matrix(ring(6), p));
    Occupation occ = occupy(orb, 6);
    FrontierReport f = frontier(orb, occ, p);
    CHECK(f.e_homo == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(f.e_lumo == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(f.gap == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(f.ionization_potential == doctest::Approx(1.0));
    CHECK(f.electron_affinity == doctest::Approx(-1.0));
    CHECK(f.transfer_balance == doctest::Approx(f.electron_affinity - f.ionization_potential));

    Occupation empty = occupy(orb, 0);
    CHECK_THROWS_AS(frontier(orb, empty, p), NoFrontier);
    Occupation full = occupy(orb, 12);
    CHECK_THROWS_AS(frontier(orb, full, p), NoFrontier);
}

TEST_CASE("orbital classification: allyl has a nonbonding level") {
    HuckelParameters p = HuckelParameters::defaults();
    std::vector<BondingClass> allyl =
        classify_orbitals(solve_eigensystem(build_matrix(chain(3), p)), p);
    CHECK(allyl == std::vector<BondingClass>{BondingClass::Bonding, BondingClass::Nonbonding,
                                             BondingClass::Antibonding});
    std::vector<BondingClass> benzene =
        classify_orbitals(solve_eigensystem(build_matrix(ring(6), p)), p);
    int bonding = 0, anti = 0;
    for (BondingClass c : benzene) {
        if (c == BondingClass::Bonding) ++bonding;
        if (c == BondingClass::Antibonding) ++anti;
    }
    CHECK(bonding == 3);
    CHECK(anti == 3);
}

TEST_CASE("eV conversion scales by |beta_ev| and is invertible in ordering") {
    HuckelParameters p = HuckelParameters::defaults();
    CHECK(energy_to_ev(-1.0, p) == doctest::Approx(-2.4));
    CHECK(energy_to_ev(2.0, p) == doctest::Approx(4.8));
    OrbitalSet orb = solve_eigensystem(build_matrix(ring(6), p));
    OrbitalSet ev = to_ev(orb, p);
    for (size_t i = 0; i < orb.energies.size(); ++i)
        CHECK(ev.energies[i] == doctest::Approx(orb.energies[i] * 2.4));
    CHECK(std::is_sorted(ev.energies.begin(), ev.energies.end()));
}

TEST_CASE("pseudo-site parameters must exist in the table") {
    HuckelParameters p = HuckelParameters::defaults();
    PiSystem pi = ring(6);
    pi.members.push_back(PiSite{6, "XYZZY", 2});
    pi.adjacency.emplace_back(0, 6);
    CHECK_THROWS_AS(build_matrix(pi, p), MissingParameter);
}

TEST_CASE("every catalog donor raises and every acceptor lowers the LUMO") {
    HuckelParameters p = HuckelParameters::defaults();
    OrbitalSet bare = solve_eigensystem(build_matrix(ring(6), p));
    Occupation bocc = occupy(bare, 6);
    double bare_lumo = bare.energies[*bocc.lumo_index];

    auto substituted_lumo = [&](const std::string& group) {
        const HeteroatomParams& hp = p.heteroatom_table.at(group);
        PiSystem pi = ring(6);
        pi.members.push_back(PiSite{6, group, hp.n_pi});
        pi.adjacency.emplace_back(6, 0);
        pi.electron_count = 6 + hp.n_pi;
        OrbitalSet orb = solve_eigensystem(build_matrix(pi, p));
        Occupation occ = occupy(orb, pi.electron_count);
        return orb.energies[*occ.lumo_index];
    };

    for (const char* d : {"NH2", "OH", "CH3", "CH2CH3"})
        CHECK(substituted_lumo(d) > bare_lumo);
    for (const char* a : {"NO2", "CN", "CHO", "NC"})
        CHECK(substituted_lumo(a) < bare_lumo);
}

TEST_CASE("non-convergence guard triggers on an impossible budget") {
    HuckelParameters p = HuckelParameters::defaults();
    p.jacobi_max_sweeps = 0;
    CHECK_THROWS_AS(solve_eigensystem(build_matrix(ring(6), p), p), ConvergenceFailure);
}
