// model.hpp — Parameter sets, lattice layout, single-excitation states, and
// assembly of the equation-of-motion generators for the full (driven
// three-level emitter) and effective (two-level giant atom) models.
//
// Units: the hopping strength J fixes the energy scale (J = 1 in all presets);
// times are in 1/J.

#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace flroute {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Driven cyclic three-level emitter coupled to a pair of tight-binding
// lattices: |g>~|f> couples to site 0 with strength g0, |g>~|e> couples to
// site N with strength gN, and an external drive (amplitude eta, phase theta)
// links |f> and |e>.
struct FullModelParams {
    double J = 1.0;         // nearest-neighbour hopping
    double g0 = 0.0;        // |g>~|f> coupling at site 0
    double gN = 0.0;        // |g>~|e> coupling at site N
    double eta = 0.0;       // drive amplitude
    double theta = 0.0;     // drive phase (radians)
    double delta_e = 0.0;   // detuning of |e> from the site-N mode
    double delta_f = 0.0;   // detuning of |f> from the site-0 mode
    double gamma_e = 0.0;   // intrinsic loss of |e>
    double gamma_f = 0.0;   // intrinsic loss of |f>
    int n_sep = 1;          // coupling separation N (sites)

    void validate() const;  // throws ConfigError
};

// Two-level giant-atom reduction of the full model: |e> couples to site 0
// with a phased strength g0_prime e^{i theta} and to site N with gN.
// delta0_prime is the induced self-shift of the site-0 modes and the induced
// a0<->b0 cross-coupling; it is kept only when include_delta0 is set.
struct EffectiveParams {
    double J = 1.0;
    double g0_prime = 0.0;
    double gN = 0.0;
    double delta0_prime = 0.0;
    double delta_e_prime = 0.0;  // induced shift of |e>
    double delta_e = 0.0;        // bare detuning of |e>
    double theta = 0.0;
    double gamma_e = 0.0;
    int n_sep = 1;
    bool include_delta0 = false;

    void validate() const;
};

// Adiabatic parameter map:
//   g0_prime = g0*eta/delta_f, delta0_prime = g0^2/delta_f,
//   delta_e_prime = eta^2/delta_f,
// with J, gN, theta, delta_e, gamma_e, n_sep carried over.
// Appends a diagnostic note to `warnings` (if given) when eta/delta_f or
// g0/delta_f exceeds warn_ratio. Throws ConfigError when delta_f == 0.
EffectiveParams derive_effective_params(const FullModelParams& full,
                                        double warn_ratio = 0.25,
                                        std::vector<std::string>* warnings = nullptr);

// Flat state layout shared by both models:
//   [ u_0 .. u_{n-1} | v_0 .. v_{n-1} | w_e | w_f ]
// Site index m is measured from the phased coupling site; the array position
// of site m is m + site0_index. The effective model simply never touches w_f.
struct LatticeGrid {
    int n_sites = 400;
    int site0_index = 200;

    int dim() const { return 2 * n_sites + 2; }
    int min_site() const { return -site0_index; }
    int max_site() const { return n_sites - 1 - site0_index; }
    bool contains_site(int m) const { return m >= min_site() && m <= max_site(); }
    int index_a(int m) const { return m + site0_index; }
    int index_b(int m) const { return n_sites + m + site0_index; }
    int index_we() const { return 2 * n_sites; }
    int index_wf() const { return 2 * n_sites + 1; }

    void validate() const;
};

struct SingleExcitationState {
    std::vector<cplx> amplitudes;
    double time = 0.0;

    double norm2() const;
    double norm() const;
};

enum class ModelKind { full, effective };

// Linear operator x -> dx/dt for one of the two models. Application cost is
// O(dim): nearest-neighbour hopping with hard-wall boundaries plus a handful
// of atom couplings. Immutable after construction except for the drive phase,
// which the integrator may update through a phase schedule.
class Generator {
public:
    void apply(std::span<const cplx> x, std::span<cplx> dxdt) const;

    void set_theta(double theta);
    double theta() const { return theta_; }
    ModelKind kind() const { return kind_; }
    const LatticeGrid& grid() const { return grid_; }
    int dim() const { return grid_.dim(); }
    int n_sep() const;
    bool lossless() const;

    // Gershgorin-style bound on the spectral radius; used to validate dt.
    double spectral_radius_bound() const;

    const FullModelParams& full_params() const { return full_; }
    const EffectiveParams& effective_params() const { return eff_; }

    friend Generator build_full_generator(const FullModelParams&, const LatticeGrid&);
    friend Generator build_effective_generator(const EffectiveParams&, const LatticeGrid&);

private:
    Generator() = default;

    ModelKind kind_ = ModelKind::effective;
    LatticeGrid grid_{};
    FullModelParams full_{};
    EffectiveParams eff_{};
    double theta_ = 0.0;
    cplx drive_phase_{1.0, 0.0};  // e^{i theta}
};

Generator build_full_generator(const FullModelParams& params, const LatticeGrid& grid);
Generator build_effective_generator(const EffectiveParams& eff, const LatticeGrid& grid);

}  // namespace flroute
