#include "flroute/model.hpp"

#include <cmath>
#include <sstream>

#include "flroute/errors.hpp"

namespace flroute {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
}

}  // namespace

void FullModelParams::validate() const {
    require(J > 0.0, "full model: J must be positive");
    require(n_sep >= 1, "full model: n_sep must be >= 1");
    require(gamma_e >= 0.0, "full model: gamma_e must be >= 0");
    require(gamma_f >= 0.0, "full model: gamma_f must be >= 0");
    require(std::isfinite(g0) && std::isfinite(gN) && std::isfinite(eta),
            "full model: couplings must be finite");
}

void EffectiveParams::validate() const {
    require(J > 0.0, "effective model: J must be positive");
    require(n_sep >= 1, "effective model: n_sep must be >= 1");
    require(gamma_e >= 0.0, "effective model: gamma_e must be >= 0");
    require(std::isfinite(g0_prime) && std::isfinite(gN) && std::isfinite(delta0_prime),
            "effective model: couplings must be finite");
}

void LatticeGrid::validate() const {
    require(n_sites >= 2, "grid: n_sites must be >= 2");
    require(site0_index >= 0 && site0_index < n_sites,
            "grid: site0_index must lie inside the array");
}

EffectiveParams derive_effective_params(const FullModelParams& full,
                                        double warn_ratio,
                                        std::vector<std::string>* warnings) {
    full.validate();
    if (full.delta_f == 0.0) {
        throw ConfigError("derive_effective_params: delta_f must be nonzero");
    }

    EffectiveParams eff;
    eff.J = full.J;
    eff.g0_prime = full.g0 * full.eta / full.delta_f;
    eff.delta0_prime = full.g0 * full.g0 / full.delta_f;
    eff.delta_e_prime = full.eta * full.eta / full.delta_f;
    eff.gN = full.gN;
    eff.delta_e = full.delta_e;
    eff.theta = full.theta;
    eff.gamma_e = full.gamma_e;
    eff.n_sep = full.n_sep;

    if (warnings != nullptr) {
        const double ratio_eta = std::abs(full.eta / full.delta_f);
        const double ratio_g0 = std::abs(full.g0 / full.delta_f);
        auto warn = [&](const char* name, double ratio) {
            std::ostringstream os;
            os << "adiabaticity: " << name << "/delta_f = " << ratio
               << " exceeds " << warn_ratio
               << "; the eliminated level is not far detuned";
            warnings->push_back(os.str());
        };
        if (ratio_eta > warn_ratio) warn("eta", ratio_eta);
        if (ratio_g0 > warn_ratio) warn("g0", ratio_g0);
    }
    return eff;
}

double SingleExcitationState::norm2() const {
    double s = 0.0;
    for (const cplx& a : amplitudes) s += std::norm(a);
    return s;
}

double SingleExcitationState::norm() const { return std::sqrt(norm2()); }

namespace {

void check_sites_inside(const LatticeGrid& grid, int n_sep, const char* which) {
    if (!grid.contains_site(0) || !grid.contains_site(n_sep)) {
        std::ostringstream os;
        os << which << ": coupling sites 0.." << n_sep
           << " do not fit a grid spanning sites [" << grid.min_site() << ", "
           << grid.max_site() << "]";
        throw ConfigError(os.str());
    }
}

}  // namespace

Generator build_full_generator(const FullModelParams& params, const LatticeGrid& grid) {
    params.validate();
    grid.validate();
    check_sites_inside(grid, params.n_sep, "full generator");

    Generator gen;
    gen.kind_ = ModelKind::full;
    gen.grid_ = grid;
    gen.full_ = params;
    gen.set_theta(params.theta);
    return gen;
}

Generator build_effective_generator(const EffectiveParams& eff, const LatticeGrid& grid) {
    eff.validate();
    grid.validate();
    check_sites_inside(grid, eff.n_sep, "effective generator");

    Generator gen;
    gen.kind_ = ModelKind::effective;
    gen.grid_ = grid;
    gen.eff_ = eff;
    gen.set_theta(eff.theta);
    return gen;
}

void Generator::set_theta(double theta) {
    theta_ = theta;
    drive_phase_ = cplx{std::cos(theta), std::sin(theta)};
}

int Generator::n_sep() const {
    return kind_ == ModelKind::full ? full_.n_sep : eff_.n_sep;
}

bool Generator::lossless() const {
    return kind_ == ModelKind::full ? (full_.gamma_e == 0.0 && full_.gamma_f == 0.0)
                                    : (eff_.gamma_e == 0.0);
}

double Generator::spectral_radius_bound() const {
    if (kind_ == ModelKind::full) {
        const double row_site = 2.0 * full_.J + std::abs(full_.g0) + std::abs(full_.gN);
        const double row_e = std::abs(full_.delta_e) + 2.0 * std::abs(full_.gN) + std::abs(full_.eta);
        const double row_f = std::abs(full_.delta_f) + 2.0 * std::abs(full_.g0) + std::abs(full_.eta);
        return std::max({row_site, row_e, row_f});
    }
    const double d0 = eff_.include_delta0 ? eff_.delta0_prime : 0.0;
    const double row_site = 2.0 * eff_.J + std::abs(eff_.g0_prime) + std::abs(eff_.gN) + 2.0 * std::abs(d0);
    const double row_e = std::abs(eff_.delta_e_prime - eff_.delta_e) + 2.0 * std::abs(eff_.g0_prime) +
                         2.0 * std::abs(eff_.gN);
    return std::max(row_site, row_e);
}

namespace {

constexpr cplx kImag{0.0, 1.0};

// dx_m = i*J*(x_{m+1} + x_{m-1}) with hard walls (missing neighbours are zero).
inline void hopping_into(const cplx* x, cplx* dx, int n, double J) {
    if (n == 1) {
        dx[0] = cplx{0.0, 0.0};
        return;
    }
    const cplx iJ = kImag * J;
    dx[0] = iJ * x[1];
    for (int i = 1; i + 1 < n; ++i) {
        dx[i] = iJ * (x[i - 1] + x[i + 1]);
    }
    dx[n - 1] = iJ * x[n - 2];
}

}  // namespace

void Generator::apply(std::span<const cplx> x, std::span<cplx> dxdt) const {
    const int n = grid_.n_sites;
    const cplx* u = x.data();
    const cplx* v = x.data() + n;
    cplx* du = dxdt.data();
    cplx* dv = dxdt.data() + n;
    const int p0 = grid_.site0_index;

    if (kind_ == ModelKind::full) {
        const FullModelParams& p = full_;
        const int pN = p0 + p.n_sep;
        const cplx we = x[grid_.index_we()];
        const cplx wf = x[grid_.index_wf()];

        hopping_into(u, du, n, p.J);
        hopping_into(v, dv, n, p.J);
        du[pN] -= kImag * (p.gN * we);
        dv[pN] -= kImag * (p.gN * we);
        du[p0] -= kImag * (p.g0 * wf);
        dv[p0] -= kImag * (p.g0 * wf);

        // i dw_e/dt = (-i gamma_e - delta_e) w_e + gN (u_N + v_N) + eta e^{i theta} w_f
        // (drive couples w_e <-> w_f with conjugate phases; Hermiticity fixes the pairing)
        dxdt[grid_.index_we()] =
            -kImag * (-p.delta_e * we + p.gN * (u[pN] + v[pN]) + p.eta * drive_phase_ * wf) -
            p.gamma_e * we;
        dxdt[grid_.index_wf()] =
            -kImag * (-p.delta_f * wf + p.g0 * (u[p0] + v[p0]) + p.eta * std::conj(drive_phase_) * we) -
            p.gamma_f * wf;
        return;
    }

    const EffectiveParams& p = eff_;
    const int pN = p0 + p.n_sep;
    const cplx we = x[grid_.index_we()];

    hopping_into(u, du, n, p.J);
    hopping_into(v, dv, n, p.J);
    du[pN] -= kImag * (p.gN * we);
    dv[pN] -= kImag * (p.gN * we);

    // Atom row carries e^{i theta} on site-0 amplitudes; site-0 rows carry
    // e^{-i theta} on w_e.
    cplx site0_src = p.g0_prime * std::conj(drive_phase_) * we;
    if (p.include_delta0) {
        site0_src += p.delta0_prime * (u[p0] + v[p0]);
    }
    du[p0] -= kImag * site0_src;
    dv[p0] -= kImag * site0_src;

    dxdt[grid_.index_we()] =
        -kImag * ((p.delta_e_prime - p.delta_e) * we +
                  p.g0_prime * drive_phase_ * (u[p0] + v[p0]) + p.gN * (u[pN] + v[pN])) -
        p.gamma_e * we;
    dxdt[grid_.index_wf()] = cplx{0.0, 0.0};
}

}  // namespace flroute
