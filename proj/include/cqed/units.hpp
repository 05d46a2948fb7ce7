// units.hpp: physical constants and validated scalar wrappers.
//
// Internal convention used throughout the library:
//   * every rate/frequency is an ANGULAR frequency in rad/s,
//   * every energy is in joules.
// User-facing I/O speaks linear GHz (the "g/2pi" convention), nm and
// meV/eV; the named conversions below are the only place the 2*pi and
// elementary-charge factors appear.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cqed {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double electron_charge = 1.602176634e-19; // C
inline constexpr double electron_mass = 9.1093837e-31;     // kg
inline constexpr double epsilon0 = 8.8541878128e-12;       // F/m
inline constexpr double speed_of_light = 299792458.0;      // m/s
} // namespace constants

namespace detail {
inline void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(name) + ": value must be finite");
}
inline void require_positive(double v, const char* name) {
    require_finite(v, name);
    if (v <= 0.0)
        throw std::invalid_argument(std::string(name) + ": value must be > 0");
}
inline void require_nonnegative(double v, const char* name) {
    require_finite(v, name);
    if (v < 0.0)
        throw std::invalid_argument(std::string(name) + ": value must be >= 0");
}
} // namespace detail

/// Angular frequency in rad/s. Also used for decay rates (kappa, gamma),
/// which are field half-width half-maximum rates unless stated otherwise.
struct AngularFrequency {
    double value = 0.0; // rad/s

    AngularFrequency() = default;
    explicit AngularFrequency(double rad_per_s) : value(rad_per_s) {
        detail::require_finite(rad_per_s, "AngularFrequency");
    }

    [[nodiscard]] double linear_hz() const { return value / (2.0 * std::numbers::pi); }
    [[nodiscard]] double linear_ghz() const { return linear_hz() * 1e-9; }

    friend AngularFrequency operator+(AngularFrequency a, AngularFrequency b) {
        return AngularFrequency(a.value + b.value);
    }
    friend AngularFrequency operator-(AngularFrequency a, AngularFrequency b) {
        return AngularFrequency(a.value - b.value);
    }
    friend auto operator<=>(AngularFrequency, AngularFrequency) = default;
};

/// Energy in joules; eV/meV helpers cover the unit the literature quotes.
struct Energy {
    double value = 0.0; // J

    Energy() = default;
    explicit Energy(double joules) : value(joules) {
        detail::require_finite(joules, "Energy");
    }

    [[nodiscard]] double ev() const { return value / constants::electron_charge; }
    [[nodiscard]] double mev() const { return ev() * 1e3; }

    static Energy from_ev(double ev) { return Energy(ev * constants::electron_charge); }
    static Energy from_mev(double mev) { return from_ev(mev * 1e-3); }

    friend Energy operator+(Energy a, Energy b) { return Energy(a.value + b.value); }
    friend Energy operator-(Energy a, Energy b) { return Energy(a.value - b.value); }
    friend auto operator<=>(Energy, Energy) = default;
};

/// f in linear GHz -> angular rad/s.
inline AngularFrequency linear_ghz_to_angular(double f_ghz) {
    detail::require_finite(f_ghz, "f_ghz");
    return AngularFrequency(2.0 * std::numbers::pi * f_ghz * 1e9);
}

/// Angular rad/s -> linear GHz (inverse of linear_ghz_to_angular).
inline double angular_to_linear_ghz(AngularFrequency w) { return w.linear_ghz(); }

/// Vacuum wavelength in meters -> angular frequency 2*pi*c/lambda0.
inline AngularFrequency vacuum_wavelength_to_angular(double lambda0_m) {
    detail::require_positive(lambda0_m, "lambda0_m");
    return AngularFrequency(2.0 * std::numbers::pi * constants::speed_of_light / lambda0_m);
}

inline AngularFrequency vacuum_wavelength_nm_to_angular(double lambda0_nm) {
    detail::require_positive(lambda0_nm, "lambda0_nm");
    return vacuum_wavelength_to_angular(lambda0_nm * 1e-9);
}

/// Photon energy hbar*omega of a mode at angular frequency omega.
inline Energy photon_energy(AngularFrequency omega) {
    return Energy(constants::hbar * omega.value);
}

} // namespace cqed
