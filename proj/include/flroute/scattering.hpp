// scattering.hpp — Stationary single-photon scattering off the effective
// giant atom: closed-form amplitudes, an independent linear-system oracle,
// and parameter sweeps of the plane-wave coefficients.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "flroute/model.hpp"

namespace flroute {

// Plane wave with wave vector k_f incident from the left of the a-lattice;
// both coupling points share the strength g (= g0_prime = gN), the
// delta0_prime terms are dropped, and the atom sits on resonance.
struct ScatteringInput {
    double g = 0.7;
    double J = 1.0;
    double k_f = kPi / 2.0;
    int n_sep = 3;
    double theta = 0.0;

    double energy() const { return -2.0 * J * std::cos(k_f); }
    double group_velocity() const { return 2.0 * J * std::sin(k_f); }
    void validate() const;  // g >= 0, J > 0, k_f in (0, pi), n_sep >= 1
};

// The eight piecewise plane-wave amplitudes:
//   a-lattice: 1/r_a (left), l_al/l_ar (between the coupling sites), t_a (right)
//   b-lattice: r_b, l_bl/l_br, t_b
// xi = 2 sin(k N) cos(theta) + J^2 sin(2k)/g^2 enters the shared denominator
// D = 2[cos(k N) cos(theta) + 1] + i xi.
struct ScatteringAmplitudes {
    cplx r_a, l_al, l_ar, t_a;
    cplx r_b, l_bl, l_br, t_b;
    double xi = 0.0;

    double T_a() const { return std::norm(t_a); }
    double T_b() const { return std::norm(t_b); }
    double R_a() const { return std::norm(r_a); }
    double R_b() const { return std::norm(r_b); }
    // |r_a|^2 + |t_a|^2 + |r_b|^2 + |t_b|^2; 1 for every non-singular input.
    double flux() const { return R_a() + T_a() + R_b() + T_b(); }
};

// Closed-form evaluation. g == 0 returns the decoupled limit (t_a = 1, all
// other amplitudes 0, xi = +inf). Throws SingularPointError when the common
// denominator vanishes (bound-state resonance).
ScatteringAmplitudes closed_form_amplitudes(const ScatteringInput& in);

// Independent oracle: assembles the 8x8 complex linear system (four bulk
// equations with the atom amplitude eliminated, four continuity conditions)
// and solves it by Gaussian elimination with partial pivoting. The
// elimination of the atom amplitude multiplies the site equations by the
// plane-wave energy, so the system degenerates at k_f = pi/2 exactly
// (E_f = 0); that measure-zero point raises SingularPointError while the
// closed form stays finite.
ScatteringAmplitudes oracle_amplitudes(const ScatteringInput& in);

// Atom amplitude of the stationary state, recovered from the site-0
// equation; used to reconstruct the full wave function.
cplx stationary_atom_amplitude(const ScatteringInput& in, const ScatteringAmplitudes& amp);

// Piecewise wave-function values u_m, v_m for any site m.
cplx wavefunction_a(const ScatteringInput& in, const ScatteringAmplitudes& amp, int m);
cplx wavefunction_b(const ScatteringInput& in, const ScatteringAmplitudes& amp, int m);

enum class SweepKind { theta, separation, coupling, wavevector };

struct SweepRow {
    double value = 0.0;
    double T_a = 0.0, T_b = 0.0, R_a = 0.0, R_b = 0.0;
    bool singular = false;  // denominator pole: coefficients are NaN
};

// Evaluates the closed form at each grid value; singular rows are flagged and
// the sweep continues.
std::vector<SweepRow> sweep_amplitudes(SweepKind kind, const ScatteringInput& base,
                                       std::span<const double> values);

}  // namespace flroute
