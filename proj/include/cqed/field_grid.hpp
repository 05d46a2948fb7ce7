// field_grid.hpp: sampled cavity field on a rectilinear voxel grid and
// the mode-volume reduction over it.
//
// Grids come from an external solver; this module only integrates them.
// Flat storage is row-major with the z index fastest:
//   flat = (ix * ny + iy) * nz + iz.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cqed/units.hpp"

namespace cqed {

struct Vec3c {
    std::complex<double> x, y, z;

    [[nodiscard]] double norm() const {
        return std::sqrt(std::norm(x) + std::norm(y) + std::norm(z));
    }
};

struct VoxelIndex {
    std::size_t ix = 0, iy = 0, iz = 0;
};

class FieldGrid {
public:
    /// epsilon: relative dielectric constant per voxel (>= 1 everywhere).
    /// e_field: complex E vector per voxel, arbitrary common scale.
    FieldGrid(std::array<std::size_t, 3> dims,
              std::array<double, 3> spacing_m,
              std::vector<double> epsilon,
              std::vector<Vec3c> e_field)
        : dims_(dims), spacing_(spacing_m),
          epsilon_(std::move(epsilon)), e_field_(std::move(e_field)) {
        const std::size_t n = dims_[0] * dims_[1] * dims_[2];
        if (dims_[0] == 0 || dims_[1] == 0 || dims_[2] == 0)
            throw std::invalid_argument("dims: all grid dimensions must be positive");
        for (double s : spacing_)
            detail::require_positive(s, "spacing_m");
        if (epsilon_.size() != n)
            throw std::invalid_argument("epsilon: expected one value per voxel");
        if (e_field_.size() != n)
            throw std::invalid_argument("e_field: expected one vector per voxel");
        for (double eps : epsilon_) {
            detail::require_finite(eps, "epsilon");
            if (eps < 1.0)
                throw std::invalid_argument("epsilon: relative dielectric constant must be >= 1");
        }
        for (const auto& e : e_field_) {
            detail::require_finite(e.x.real(), "e_field");
            detail::require_finite(e.x.imag(), "e_field");
            detail::require_finite(e.y.real(), "e_field");
            detail::require_finite(e.y.imag(), "e_field");
            detail::require_finite(e.z.real(), "e_field");
            detail::require_finite(e.z.imag(), "e_field");
        }
    }

    [[nodiscard]] const std::array<std::size_t, 3>& dims() const { return dims_; }
    [[nodiscard]] const std::array<double, 3>& spacing() const { return spacing_; }
    [[nodiscard]] std::size_t voxel_count() const { return epsilon_.size(); }
    [[nodiscard]] double voxel_volume() const { return spacing_[0] * spacing_[1] * spacing_[2]; }

    [[nodiscard]] std::size_t flat_index(VoxelIndex v) const {
        if (v.ix >= dims_[0] || v.iy >= dims_[1] || v.iz >= dims_[2])
            throw std::out_of_range("location: voxel index out of bounds");
        return (v.ix * dims_[1] + v.iy) * dims_[2] + v.iz;
    }

    [[nodiscard]] double epsilon_at(std::size_t flat) const { return epsilon_[flat]; }
    [[nodiscard]] const Vec3c& field_at(std::size_t flat) const { return e_field_[flat]; }
    [[nodiscard]] double energy_density_at(std::size_t flat) const {
        const auto& e = e_field_[flat];
        return epsilon_[flat] * (std::norm(e.x) + std::norm(e.y) + std::norm(e.z));
    }

    /// Flat index of the voxel maximizing eps*|E|^2, the reference point
    /// for the mode-volume normalization. First occurrence wins on ties.
    [[nodiscard]] std::size_t energy_density_argmax() const {
        std::size_t best = 0;
        double best_val = energy_density_at(0);
        for (std::size_t i = 1; i < voxel_count(); ++i) {
            const double v = energy_density_at(i);
            if (v > best_val) {
                best_val = v;
                best = i;
            }
        }
        return best;
    }

private:
    std::array<std::size_t, 3> dims_;
    std::array<double, 3> spacing_;
    std::vector<double> epsilon_;
    std::vector<Vec3c> e_field_;
};

/// V = sum(eps |E|^2 dV) / max(eps |E|^2), midpoint rule over voxels.
/// Invariant under any nonzero rescaling of the field. Kahan-compensated
/// serial sum so results are deterministic.
inline double mode_volume(const FieldGrid& grid) {
    double sum = 0.0, comp = 0.0, max_density = 0.0;
    for (std::size_t i = 0; i < grid.voxel_count(); ++i) {
        const double d = grid.energy_density_at(i);
        if (d > max_density) max_density = d;
        const double y = d - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    if (max_density <= 0.0)
        throw std::invalid_argument("e_field: all-zero field has no mode volume");
    return sum * grid.voxel_volume() / max_density;
}

} // namespace cqed
