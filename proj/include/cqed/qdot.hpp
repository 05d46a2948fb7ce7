// qdot.hpp: quantum-dot level structure in the effective-mass
// approximation: 2D harmonic confinement in-plane, hard-wall well of
// height L along the growth axis.
//
//   E = (nx + ny + 1) hbar*omega0 + (pi hbar nz / L)^2 / (2 m_eff)
//   psi ~ H_nx(a x) H_ny(a y) exp(-a^2 (x^2+y^2)/2) sin(pi nz z / L),
//   a = sqrt(m_eff omega0 / hbar)
//
// Hole energies are measured positively downward into the valence band
// (|m_eff| stored), so photon energies come out positive.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqed/rng.hpp"
#include "cqed/units.hpp"

namespace cqed {

enum class Particle { electron, hole };

struct QDotSpec {
    double m_eff_e = 0.0;  // kg, magnitude
    double m_eff_h = 0.0;  // kg, magnitude (valence-band sign dropped)
    Energy hbar_omega0_e;  // in-plane confinement quantum, electron
    Energy hbar_omega0_h;  // in-plane confinement quantum, hole
    double height = 0.0;   // dot height L, m
    Energy band_gap;       // >= 0

    void validate() const {
        detail::require_positive(m_eff_e, "m_eff_e");
        detail::require_positive(m_eff_h, "m_eff_h");
        detail::require_positive(hbar_omega0_e.value, "hbar_omega0_e");
        detail::require_positive(hbar_omega0_h.value, "hbar_omega0_h");
        detail::require_positive(height, "L");
        detail::require_nonnegative(band_gap.value, "band_gap");
    }

    /// Soft sanity checks (confinement quantum within [1, 500] meV);
    /// violations are worth a warning, not a rejection.
    [[nodiscard]] std::vector<std::string> sanity_warnings() const {
        std::vector<std::string> w;
        const auto check = [&](Energy e, const char* name) {
            const double mev = e.mev();
            if (mev < 1.0 || mev > 500.0)
                w.push_back(std::string(name) + " = " + std::to_string(mev) +
                            " meV is outside the expected [1, 500] meV window");
        };
        check(hbar_omega0_e, "hbar_omega0_e");
        check(hbar_omega0_h, "hbar_omega0_h");
        return w;
    }

    [[nodiscard]] double mass(Particle p) const {
        return p == Particle::electron ? m_eff_e : m_eff_h;
    }
    [[nodiscard]] Energy confinement_quantum(Particle p) const {
        return p == Particle::electron ? hbar_omega0_e : hbar_omega0_h;
    }
};

struct LevelIndex {
    int nx = 0; // >= 0
    int ny = 0; // >= 0
    int nz = 1; // >= 1

    void validate() const {
        if (nx < 0 || ny < 0)
            throw std::invalid_argument("nx/ny: must be >= 0");
        if (nz < 1)
            throw std::invalid_argument("nz: must be >= 1");
    }
    [[nodiscard]] int shell() const { return nx + ny; }
};

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_{n+1} = 2 x H_n - 2 n H_{n-1}.
inline double hermite_polynomial(int n, double x) {
    if (n < 0)
        throw std::invalid_argument("n: Hermite order must be >= 0");
    double h_prev = 1.0;
    if (n == 0) return h_prev;
    double h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double h_next = 2.0 * x * h - 2.0 * k * h_prev;
        h_prev = h;
        h = h_next;
    }
    return h;
}

inline Energy level_energy(const QDotSpec& spec, Particle particle, LevelIndex idx) {
    spec.validate();
    idx.validate();
    const double m = spec.mass(particle);
    const double planar = (idx.nx + idx.ny + 1.0) * spec.confinement_quantum(particle).value;
    const double kz = std::numbers::pi * constants::hbar * idx.nz / spec.height;
    return Energy(planar + kz * kz / (2.0 * m));
}

/// Number of (nx, ny) pairs with nx + ny = shell.
inline int level_degeneracy(int shell) {
    if (shell < 0)
        throw std::invalid_argument("shell: must be >= 0");
    return shell + 1;
}

/// Normalized envelope wavefunction at (x, y, z); zero outside the well.
inline double envelope_wavefunction(const QDotSpec& spec, Particle particle, LevelIndex idx,
                                    double x, double y, double z) {
    spec.validate();
    idx.validate();
    // Hard walls: exactly zero at and beyond the boundaries (sin(pi nz)
    // would leave rounding residue at z = L).
    if (z <= 0.0 || z >= spec.height) return 0.0;

    const double m = spec.mass(particle);
    const double omega0 = spec.confinement_quantum(particle).value / constants::hbar;
    const double alpha = std::sqrt(m * omega0 / constants::hbar);

    const auto ho_1d = [&](int n, double coord) {
        double factorial = 1.0;
        for (int k = 2; k <= n; ++k) factorial *= k;
        const double norm =
            std::sqrt(alpha / (std::sqrt(std::numbers::pi) * std::pow(2.0, n) * factorial));
        const double u = alpha * coord;
        return norm * hermite_polynomial(n, u) * std::exp(-u * u / 2.0);
    };

    const double z_part =
        std::sqrt(2.0 / spec.height) * std::sin(std::numbers::pi * idx.nz * z / spec.height);
    return ho_1d(idx.nx, x) * ho_1d(idx.ny, y) * z_part;
}

struct TransitionLine {
    LevelIndex electron;
    LevelIndex hole;
    Energy photon_energy; // band_gap + E_e + E_h
};

/// All electron-hole recombination lines with both shells <= max_shell
/// and nz = 1 (the usual case for flat dots), sorted by photon energy.
/// No optical selection rules are applied; every pair is listed.
inline std::vector<TransitionLine> transition_lines(const QDotSpec& spec, int max_shell) {
    spec.validate();
    if (max_shell < 0)
        throw std::invalid_argument("max_shell: must be >= 0");

    std::vector<LevelIndex> levels;
    for (int shell = 0; shell <= max_shell; ++shell)
        for (int nx = shell; nx >= 0; --nx)
            levels.push_back({nx, shell - nx, 1});

    std::vector<TransitionLine> out;
    out.reserve(levels.size() * levels.size());
    for (const auto& e : levels)
        for (const auto& h : levels)
            out.push_back({e, h,
                           spec.band_gap + level_energy(spec, Particle::electron, e) +
                               level_energy(spec, Particle::hole, h)});

    std::sort(out.begin(), out.end(), [](const TransitionLine& a, const TransitionLine& b) {
        if (a.photon_energy.value != b.photon_energy.value)
            return a.photon_energy.value < b.photon_energy.value;
        const auto key = [](const TransitionLine& t) {
            return std::array<int, 4>{t.electron.nx, t.electron.ny, t.hole.nx, t.hole.ny};
        };
        return key(a) < key(b);
    });
    return out;
}

namespace detail {

/// Inverse CDF of the nz = 1 well density (2/L) sin^2(pi z / L) in the
/// dimensionless coordinate u = z/L, tabulated once on 4096 bins and
/// linearly interpolated. CDF: F(u) = u - sin(2 pi u)/(2 pi).
class WellInverseCdf {
public:
    static const WellInverseCdf& instance() {
        static const WellInverseCdf table;
        return table;
    }

    [[nodiscard]] double operator()(double v) const {
        const double pos = v * kBins;
        const auto bin = static_cast<std::size_t>(pos);
        if (bin >= kBins) return inv_.back();
        const double frac = pos - static_cast<double>(bin);
        return inv_[bin] * (1.0 - frac) + inv_[bin + 1] * frac;
    }

private:
    static constexpr std::size_t kBins = 4096;

    WellInverseCdf() : inv_(kBins + 1) {
        const auto cdf = [](double u) {
            return u - std::sin(2.0 * std::numbers::pi * u) / (2.0 * std::numbers::pi);
        };
        inv_[0] = 0.0;
        inv_[kBins] = 1.0;
        for (std::size_t k = 1; k < kBins; ++k) {
            const double target = static_cast<double>(k) / kBins;
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 64; ++it) {
                const double mid = 0.5 * (lo + hi);
                (cdf(mid) < target ? lo : hi) = mid;
            }
            inv_[k] = 0.5 * (lo + hi);
        }
    }

    std::vector<double> inv_;
};

} // namespace detail

struct CoulombCorrection {
    Energy delta_e;  // first-order shift, negative (attractive kernel)
    Energy std_err;  // Monte-Carlo standard error
};

/// First-order Coulomb shift <0| -e^2/(4 pi eps0 eps_r |r_e - r_h|) |0>
/// by importance sampling: both particles drawn from their own ground
/// densities |psi_0|^2, the bare kernel averaged. The 1/r singularity is
/// integrable in 3D and leaves the estimator variance finite.
///
/// Draw order per sample is fixed (xe, ye, ze, xh, yh, zh), so a seed
/// pins the result bit-exactly.
inline CoulombCorrection coulomb_correction_mc(const QDotSpec& spec, double epsilon_r,
                                               std::int64_t samples, std::uint64_t seed) {
    spec.validate();
    if (epsilon_r < 1.0)
        throw std::invalid_argument("epsilon_r: must be >= 1");
    if (samples < 10000)
        throw std::invalid_argument("samples: at least 1e4 samples required");

    const auto sigma_planar = [&](Particle p) {
        // |psi|^2 ~ exp(-alpha^2 rho^2) => per-axis std dev 1/(alpha sqrt 2)
        const double omega0 = spec.confinement_quantum(p).value / constants::hbar;
        return std::sqrt(constants::hbar / (2.0 * spec.mass(p) * omega0));
    };
    const double sig_e = sigma_planar(Particle::electron);
    const double sig_h = sigma_planar(Particle::hole);
    const double prefactor = -constants::electron_charge * constants::electron_charge /
                             (4.0 * std::numbers::pi * constants::epsilon0 * epsilon_r);

    const auto& well = detail::WellInverseCdf::instance();
    std::mt19937_64 gen(seed);

    // Welford running mean/variance of the kernel values.
    double mean = 0.0, m2 = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        double dist = 0.0;
        do {
            const double xe = sig_e * rng::standard_normal(gen);
            const double ye = sig_e * rng::standard_normal(gen);
            const double ze = spec.height * well(rng::uniform01(gen));
            const double xh = sig_h * rng::standard_normal(gen);
            const double yh = sig_h * rng::standard_normal(gen);
            const double zh = spec.height * well(rng::uniform01(gen));
            const double dx = xe - xh, dy = ye - yh, dz = ze - zh;
            dist = std::sqrt(dx * dx + dy * dy + dz * dz);
        } while (dist == 0.0);
        const double kernel = prefactor / dist;
        const double delta = kernel - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (kernel - mean);
    }

    const double n = static_cast<double>(samples);
    const double std_err = std::sqrt(m2 / (n - 1.0) / n);
    return CoulombCorrection{Energy(mean), Energy(std_err)};
}

/// The quoted single-charging energy window; metadata for labeling
/// spectra (X vs X-), no computation behind it.
struct ChargingEnergyRange {
    Energy min = Energy::from_mev(10.0);
    Energy max = Energy::from_mev(20.0);
};

inline ChargingEnergyRange charging_energy_note() { return {}; }

} // namespace cqed
