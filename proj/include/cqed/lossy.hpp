// lossy.hpp: coupled emitter-cavity system with losses.
//
// Losses enter through the complex-frequency substitution
//   omega -> omega - i*kappa,   nu -> nu - i*gamma,
// giving the first-manifold eigenfrequencies
//   w(+/-) = (omega+nu)/2 - i(kappa+gamma)/2
//            +/- sqrt( ((delta + i(kappa-gamma))/2)^2 + g^2 ),
// the eigenvalues of [[omega - i kappa, g], [g, nu - i gamma]].
//
// kappa and gamma are FIELD (amplitude) decay rates, the half-width
// half-maxima of the cavity and emitter spectra. Energy decays twice as
// fast; anything energy-rated below says so in its name.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cqed/units.hpp"

namespace cqed {

struct LossySystem {
    AngularFrequency omega;  // cavity
    AngularFrequency nu;     // emitter
    AngularFrequency g;      // coupling, >= 0
    AngularFrequency kappa;  // cavity field decay rate (HWHM), > 0
    AngularFrequency gamma;  // emitter decay rate (HWHM), >= 0

    LossySystem(AngularFrequency cavity, AngularFrequency emitter, AngularFrequency coupling,
                AngularFrequency cavity_field_decay, AngularFrequency emitter_decay)
        : omega(cavity), nu(emitter), g(coupling),
          kappa(cavity_field_decay), gamma(emitter_decay) {
        detail::require_nonnegative(g.value, "g");
        detail::require_positive(kappa.value, "kappa");
        detail::require_nonnegative(gamma.value, "gamma");
    }

    /// kappa = omega / 2Q.
    static LossySystem from_quality_factor(AngularFrequency cavity, AngularFrequency emitter,
                                           AngularFrequency coupling, double q,
                                           AngularFrequency emitter_decay) {
        detail::require_positive(q, "q");
        detail::require_positive(cavity.value, "omega");
        return LossySystem(cavity, emitter, coupling,
                           AngularFrequency(cavity.value / (2.0 * q)), emitter_decay);
    }

    [[nodiscard]] AngularFrequency detuning() const { return nu - omega; }
};

struct ComplexEigenmode {
    AngularFrequency frequency; // Re(w), rad/s
    AngularFrequency damping;   // -Im(w), field rate (HWHM)

    /// Energy decays at twice the field rate: W(t) = W0 exp(-2*damping*t).
    [[nodiscard]] AngularFrequency energy_decay_rate() const {
        return AngularFrequency(2.0 * damping.value);
    }

    static ComplexEigenmode from_complex(std::complex<double> w) {
        return ComplexEigenmode{AngularFrequency(w.real()), AngularFrequency(-w.imag())};
    }
    [[nodiscard]] std::complex<double> as_complex() const {
        return {frequency.value, -damping.value};
    }
};

struct EigenmodePair {
    ComplexEigenmode plus;  // the + branch of the principal square root
    ComplexEigenmode minus;
};

inline EigenmodePair complex_eigenfrequencies(const LossySystem& sys) {
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> cavity = sys.omega.value - i * sys.kappa.value;
    const std::complex<double> emitter = sys.nu.value - i * sys.gamma.value;
    // Half difference of the complex bare frequencies, (delta + i(kappa-gamma))/2.
    // The sign of the imaginary part matters off resonance: it is what keeps
    // the uncoupled limit pairing each frequency with its own damping.
    const std::complex<double> center = (cavity + emitter) / 2.0;
    const std::complex<double> half_gap = (emitter - cavity) / 2.0;
    const std::complex<double> root = std::sqrt(half_gap * half_gap + sys.g.value * sys.g.value);
    return EigenmodePair{ComplexEigenmode::from_complex(center + root),
                         ComplexEigenmode::from_complex(center - root)};
}

/// Re(w+) - Re(w-). Empty when the real parts coincide (no splitting,
/// the Purcell side of the exceptional point), judged against
/// 1e-9 * (kappa + gamma + g + |delta|).
inline std::optional<AngularFrequency> rabi_splitting(const LossySystem& sys) {
    const EigenmodePair modes = complex_eigenfrequencies(sys);
    const double split = modes.plus.frequency.value - modes.minus.frequency.value;
    const double scale =
        sys.kappa.value + sys.gamma.value + sys.g.value + std::abs(sys.detuning().value);
    if (split <= 1e-9 * scale)
        return std::nullopt;
    return AngularFrequency(split);
}

enum class CouplingRegime { strong, purcell, intermediate };

inline const char* to_string(CouplingRegime r) {
    switch (r) {
        case CouplingRegime::strong: return "Strong";
        case CouplingRegime::purcell: return "Purcell";
        default: return "Intermediate";
    }
}

struct RegimeReport {
    CouplingRegime regime = CouplingRegime::intermediate;
    double dominance_factor = 10.0;   // the ">>" threshold used
    // strong coupling: g > kappa/2 and kappa >> gamma
    bool g_exceeds_half_kappa = false;
    bool kappa_dominates_gamma = false;
    // Purcell: kappa/2 >> g and g >> gamma
    bool half_kappa_dominates_g = false;
    bool g_dominates_gamma = false;
};

/// The ">>" dominance threshold defaults to a factor 10.
/// The >= comparisons tolerate 1e-12 relative so that exact-boundary
/// systems (kappa = 10 gamma given in user units) classify predictably.
inline RegimeReport classify_regime(const LossySystem& sys, double dominance_factor = 10.0) {
    detail::require_positive(dominance_factor, "dominance_factor");
    const auto dominates = [](double a, double b) { return a >= b * (1.0 - 1e-12); };
    RegimeReport r;
    r.dominance_factor = dominance_factor;
    r.g_exceeds_half_kappa = sys.g.value > sys.kappa.value / 2.0;
    r.kappa_dominates_gamma = dominates(sys.kappa.value, dominance_factor * sys.gamma.value);
    r.half_kappa_dominates_g = dominates(sys.kappa.value / 2.0, dominance_factor * sys.g.value);
    r.g_dominates_gamma = dominates(sys.g.value, dominance_factor * sys.gamma.value);
    if (r.g_exceeds_half_kappa && r.kappa_dominates_gamma)
        r.regime = CouplingRegime::strong;
    else if (r.half_kappa_dominates_g && r.g_dominates_gamma)
        r.regime = CouplingRegime::purcell;
    else
        r.regime = CouplingRegime::intermediate;
    return r;
}

struct PurcellRates {
    AngularFrequency emitter_like_energy_rate; // 2 g^2 / kappa
    AngularFrequency cavity_like_energy_rate;  // 2 kappa
};

/// Leading-order energy decay rates in the Purcell regime. Rejected
/// outside it; the expansion behind 2g^2/kappa assumes kappa/2 >> g.
inline PurcellRates purcell_regime_rates(const LossySystem& sys) {
    if (classify_regime(sys).regime != CouplingRegime::purcell)
        throw std::invalid_argument("regime: purcell_regime_rates requires the Purcell regime "
                                    "(kappa/2 >> g >> gamma)");
    return PurcellRates{
        AngularFrequency(2.0 * sys.g.value * sys.g.value / sys.kappa.value),
        AngularFrequency(2.0 * sys.kappa.value)};
}

struct SpectrumPoint {
    AngularFrequency probe;
    double intensity = 0.0;
};

/// Probe spectrum as a sum of unit-peak Lorentzians, one per eigenmode:
///   I(p) = sum_m d_m^2 / ((p - f_m)^2 + d_m^2).
/// Amplitude units are arbitrary; the empty-cavity (g = 0) limit is a
/// single Lorentzian at omega with peak 1 and FWHM 2*kappa.
inline std::vector<SpectrumPoint> transmission_spectrum(const LossySystem& sys,
                                                        const std::vector<AngularFrequency>& probe_sweep) {
    if (probe_sweep.empty())
        throw std::invalid_argument("probe_sweep: sweep must be non-empty");

    std::vector<ComplexEigenmode> modes;
    if (sys.g.value == 0.0) {
        // Bare cavity only; the uncoupled emitter is dark in transmission.
        modes.push_back(ComplexEigenmode{sys.omega, sys.kappa});
    } else {
        const EigenmodePair pair = complex_eigenfrequencies(sys);
        modes.push_back(pair.plus);
        modes.push_back(pair.minus);
    }

    std::vector<SpectrumPoint> out;
    out.reserve(probe_sweep.size());
    for (AngularFrequency p : probe_sweep) {
        double intensity = 0.0;
        for (const auto& m : modes) {
            const double d = m.damping.value;
            const double off = p.value - m.frequency.value;
            if (d == 0.0)
                intensity += (off == 0.0) ? 1.0 : 0.0;
            else
                intensity += d * d / (off * off + d * d);
        }
        out.push_back({p, intensity});
    }
    return out;
}

/// One oscillator of the photonic molecule; decay is a field rate (HWHM),
/// zero allowed for idealized lossless modes.
struct OscillatorMode {
    AngularFrequency frequency;
    AngularFrequency decay;
};

/// Eigenfrequencies of two coupled cavity modes (inter-cavity coupling J)
/// plus an emitter coupled to cavity 1 only:
///
///   [ w1 - i k1     J          g      ]
///   [ J             w2 - i k2  0      ]
///   [ g             0          nu - i gamma ]
///
/// solved numerically (non-Hermitian). Returned sorted by frequency
/// ascending. With g = 0 and matched cavities the photonic supermodes
/// split by exactly 2J (bonding/antibonding).
inline std::array<ComplexEigenmode, 3> photonic_molecule_eigenfrequencies(
    OscillatorMode cavity1, OscillatorMode cavity2, AngularFrequency inter_cavity_j,
    OscillatorMode emitter, AngularFrequency g_to_cavity1) {
    detail::require_nonnegative(inter_cavity_j.value, "J");
    detail::require_nonnegative(g_to_cavity1.value, "g");
    detail::require_nonnegative(cavity1.decay.value, "kappa1");
    detail::require_nonnegative(cavity2.decay.value, "kappa2");
    detail::require_nonnegative(emitter.decay.value, "gamma");

    const std::complex<double> i(0.0, 1.0);
    Eigen::Matrix3cd h;
    h << cavity1.frequency.value - i * cavity1.decay.value, inter_cavity_j.value, g_to_cavity1.value,
         inter_cavity_j.value, cavity2.frequency.value - i * cavity2.decay.value, 0.0,
         g_to_cavity1.value, 0.0, emitter.frequency.value - i * emitter.decay.value;

    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(h, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("photonic molecule eigensolver failed to converge");

    std::array<std::complex<double>, 3> vals = {solver.eigenvalues()(0),
                                                solver.eigenvalues()(1),
                                                solver.eigenvalues()(2)};
    std::sort(vals.begin(), vals.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  return a.real() < b.real();
              });
    return {ComplexEigenmode::from_complex(vals[0]), ComplexEigenmode::from_complex(vals[1]),
            ComplexEigenmode::from_complex(vals[2])};
}

} // namespace cqed
