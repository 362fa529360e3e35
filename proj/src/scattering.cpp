#include "flroute/scattering.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "flroute/errors.hpp"

namespace flroute {

namespace {

constexpr cplx kImag{0.0, 1.0};

cplx polar1(double phase) { return cplx{std::cos(phase), std::sin(phase)}; }

[[noreturn]] void throw_singular(const ScatteringInput& in, const char* what) {
    std::ostringstream os;
    os << "singular scattering point (" << what << ") at k_f = " << in.k_f
       << ", N = " << in.n_sep << ", theta = " << in.theta << ", g = " << in.g
       << ": bound-state/resonance condition, amplitudes diverge";
    throw SingularPointError(os.str());
}

}  // namespace

void ScatteringInput::validate() const {
    if (!(g >= 0.0)) throw ConfigError("scattering: g must be >= 0");
    if (!(J > 0.0)) throw ConfigError("scattering: J must be positive");
    if (!(k_f > 0.0 && k_f < kPi)) {
        throw ConfigError("scattering: k_f must lie in the open interval (0, pi)");
    }
    if (n_sep < 1) throw ConfigError("scattering: n_sep must be >= 1");
}

ScatteringAmplitudes closed_form_amplitudes(const ScatteringInput& in) {
    in.validate();

    ScatteringAmplitudes amp{};
    if (in.g == 0.0) {
        amp.t_a = 1.0;
        amp.l_ar = 1.0;
        amp.xi = std::numeric_limits<double>::infinity();
        return amp;
    }

    const double kN = in.k_f * in.n_sep;
    const double cos_kN = std::cos(kN);
    const double sin_kN = std::sin(kN);
    const double cos_th = std::cos(in.theta);
    const cplx Z = polar1(kN);         // e^{i k N}
    const cplx p = polar1(in.theta);   // e^{i theta}

    const double xi = 2.0 * sin_kN * cos_th +
                      in.J * in.J * std::sin(2.0 * in.k_f) / (in.g * in.g);
    const cplx D = cplx{2.0 * (cos_kN * cos_th + 1.0), xi};
    if (std::abs(D) < 1e-12) throw_singular(in, "denominator D = 0");

    amp.xi = xi;
    amp.r_a = -Z * (cos_kN + cos_th) / D;
    amp.r_b = amp.r_a;
    amp.l_al = -0.5 * Z * (p + Z) / D;
    amp.l_bl = amp.l_al;
    amp.l_br = -0.5 * (1.0 + std::conj(p) * Z) / D;
    amp.l_ar = 1.0 + amp.l_br;
    amp.t_b = -(1.0 + std::cos(kN - in.theta)) / D;
    amp.t_a = 1.0 + amp.t_b;
    return amp;
}

ScatteringAmplitudes oracle_amplitudes(const ScatteringInput& in) {
    in.validate();

    // Unknown order: (r_a, l_al, l_ar, t_a, r_b, l_bl, l_br, t_b).
    std::array<std::array<cplx, 8>, 8> A{};
    std::array<cplx, 8> rhs{};

    const double g2 = in.g * in.g;
    const double cc = 4.0 * in.J * in.J * std::cos(in.k_f) * std::cos(in.k_f);
    const double ch = 2.0 * in.J * in.J * std::cos(in.k_f);
    const cplx z = polar1(in.k_f);
    const cplx zb = std::conj(z);
    const cplx Z = polar1(in.k_f * in.n_sep);
    const cplx Zb = std::conj(Z);
    const cplx p = polar1(in.theta);
    const cplx pb = std::conj(p);

    enum { ra, lal, lar, ta, rb, lbl, lbr, tb };

    // Continuity at m = 0 and m = N.
    A[0][ra] = -1.0; A[0][lal] = 1.0; A[0][lar] = 1.0; rhs[0] = 1.0;
    A[1][rb] = -1.0; A[1][lbl] = 1.0; A[1][lbr] = 1.0;
    A[2][lal] = Zb;  A[2][lar] = Z;   A[2][ta] = -Z;
    A[3][lbl] = Zb;  A[3][lbr] = Z;   A[3][tb] = -Z;

    // Bulk equations with the atom amplitude eliminated (each site equation
    // multiplied by the plane-wave energy before substituting the atom row).
    A[4][ra] = -ch * z;
    A[4][lal] = (cc - g2) - ch * zb;
    A[4][lar] = (cc - g2) - ch * z;
    A[4][ta] = -g2 * pb * Z;
    A[4][rb] = -g2;
    A[4][tb] = -g2 * pb * Z;
    rhs[4] = ch * zb;

    A[5][rb] = (cc - g2) - ch * z;
    A[5][lbl] = -ch * zb;
    A[5][lbr] = -ch * z;
    A[5][lal] = -g2;
    A[5][lar] = -g2;
    A[5][ta] = -g2 * pb * Z;
    A[5][tb] = -g2 * pb * Z;

    A[6][lal] = ch * Zb * z + p * g2;
    A[6][lar] = ch * Z * zb + p * g2;
    A[6][ta] = ch * Z * z - (cc - g2) * Z;
    A[6][rb] = p * g2;
    A[6][tb] = g2 * Z;

    A[7][lbl] = ch * Zb * z;
    A[7][lbr] = ch * Z * zb;
    A[7][tb] = ch * Z * z - (cc - g2) * Z;
    A[7][lal] = p * g2;
    A[7][lar] = p * g2;
    A[7][rb] = p * g2;
    A[7][ta] = g2 * Z;

    // Gaussian elimination with partial pivoting.
    double scale = 0.0;
    for (const auto& row : A) {
        for (const cplx& e : row) scale = std::max(scale, std::abs(e));
    }
    const double pivot_tol = 1e-10 * std::max(scale, 1.0);

    std::array<cplx, 8> x = rhs;
    for (int col = 0; col < 8; ++col) {
        int pivot = col;
        double best = std::abs(A[col][col]);
        for (int r = col + 1; r < 8; ++r) {
            const double m = std::abs(A[r][col]);
            if (m > best) {
                best = m;
                pivot = r;
            }
        }
        if (best < pivot_tol) throw_singular(in, "linear system rank-deficient");
        if (pivot != col) {
            std::swap(A[col], A[pivot]);
            std::swap(x[col], x[pivot]);
        }
        for (int r = col + 1; r < 8; ++r) {
            const cplx factor = A[r][col] / A[col][col];
            if (factor == cplx{0.0, 0.0}) continue;
            for (int c = col; c < 8; ++c) A[r][c] -= factor * A[col][c];
            x[r] -= factor * x[col];
        }
    }
    for (int r = 7; r >= 0; --r) {
        cplx s = x[r];
        for (int c = r + 1; c < 8; ++c) s -= A[r][c] * x[c];
        x[r] = s / A[r][r];
    }

    ScatteringAmplitudes amp{};
    amp.r_a = x[ra];
    amp.l_al = x[lal];
    amp.l_ar = x[lar];
    amp.t_a = x[ta];
    amp.r_b = x[rb];
    amp.l_bl = x[lbl];
    amp.l_br = x[lbr];
    amp.t_b = x[tb];
    amp.xi = 2.0 * std::sin(in.k_f * in.n_sep) * std::cos(in.theta) +
             (in.g > 0.0 ? in.J * in.J * std::sin(2.0 * in.k_f) / (in.g * in.g)
                         : std::numeric_limits<double>::infinity());
    return amp;
}

cplx stationary_atom_amplitude(const ScatteringInput& in, const ScatteringAmplitudes& amp) {
    if (in.g == 0.0) return cplx{0.0, 0.0};
    // Site-0 equation: E u_0 = -J (u_1 + u_{-1}) + g e^{-i theta} w_e.
    const cplx u0 = wavefunction_a(in, amp, 0);
    const cplx u1 = amp.l_al * polar1(-in.k_f) + amp.l_ar * polar1(in.k_f);
    const cplx um1 = polar1(-in.k_f) + amp.r_a * polar1(in.k_f);
    return polar1(in.theta) * (in.energy() * u0 + in.J * (u1 + um1)) / in.g;
}

cplx wavefunction_a(const ScatteringInput& in, const ScatteringAmplitudes& amp, int m) {
    const cplx e_plus = polar1(in.k_f * m);
    const cplx e_minus = std::conj(e_plus);
    if (m < 0) return e_plus + amp.r_a * e_minus;
    if (m <= in.n_sep) return amp.l_al * e_minus + amp.l_ar * e_plus;
    return amp.t_a * e_plus;
}

cplx wavefunction_b(const ScatteringInput& in, const ScatteringAmplitudes& amp, int m) {
    const cplx e_plus = polar1(in.k_f * m);
    const cplx e_minus = std::conj(e_plus);
    if (m < 0) return amp.r_b * e_minus;
    if (m <= in.n_sep) return amp.l_bl * e_minus + amp.l_br * e_plus;
    return amp.t_b * e_plus;
}

std::vector<SweepRow> sweep_amplitudes(SweepKind kind, const ScatteringInput& base,
                                       std::span<const double> values) {
    if (values.empty()) throw ConfigError("sweep: value grid must be non-empty");

    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const double value : values) {
        ScatteringInput in = base;
        switch (kind) {
            case SweepKind::theta: in.theta = value; break;
            case SweepKind::coupling: in.g = value; break;
            case SweepKind::wavevector: in.k_f = value; break;
            case SweepKind::separation: {
                const double r = std::round(value);
                if (std::abs(value - r) > 1e-9) {
                    throw ConfigError("sweep: separation values must be integers");
                }
                in.n_sep = static_cast<int>(r);
                break;
            }
        }
        SweepRow row;
        row.value = value;
        try {
            const ScatteringAmplitudes amp = closed_form_amplitudes(in);
            row.T_a = amp.T_a();
            row.T_b = amp.T_b();
            row.R_a = amp.R_a();
            row.R_b = amp.R_b();
        } catch (const SingularPointError&) {
            row.singular = true;
            row.T_a = row.T_b = row.R_a = row.R_b = nan;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace flroute
