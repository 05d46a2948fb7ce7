// io.hpp: JSON file schemas for externally supplied inputs.
//
// FieldGrid file:
//   {
//     "dims": [nx, ny, nz],
//     "spacing_m": [dx, dy, dz],
//     "epsilon": [...],                  // nx*ny*nz values, row-major (z fastest)
//     "e_field": [re_x, im_x, re_y, im_y, re_z, im_z, ...]   // 6 per voxel
//   }
//
// QDotSpec file:
//   { "m_eff_e_m0": ..., "m_eff_h_m0": ..., "hbar_omega0_e_meV": ...,
//     "hbar_omega0_h_meV": ..., "L_nm": ..., "band_gap_eV": ..., "epsilon_r": ... }

#pragma once

#include <array>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqed/field_grid.hpp"
#include "cqed/qdot.hpp"

namespace cqed {

namespace detail {
inline nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("file: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("file: '" + path + "' is not valid JSON: " + e.what());
    }
    return j;
}

template <typename T>
T json_field(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key))
        throw std::invalid_argument(key + ": required field missing");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument(key + ": field has the wrong type");
    }
}
} // namespace detail

inline FieldGrid field_grid_from_json(const nlohmann::json& j) {
    const auto dims_v = detail::json_field<std::vector<std::size_t>>(j, "dims");
    const auto spacing_v = detail::json_field<std::vector<double>>(j, "spacing_m");
    if (dims_v.size() != 3)
        throw std::invalid_argument("dims: expected 3 entries");
    if (spacing_v.size() != 3)
        throw std::invalid_argument("spacing_m: expected 3 entries");

    const auto epsilon = detail::json_field<std::vector<double>>(j, "epsilon");
    const auto field_flat = detail::json_field<std::vector<double>>(j, "e_field");
    const std::size_t n = dims_v[0] * dims_v[1] * dims_v[2];
    if (field_flat.size() != 6 * n)
        throw std::invalid_argument("e_field: expected 6 values per voxel");

    std::vector<Vec3c> field(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* v = &field_flat[6 * i];
        field[i] = Vec3c{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
    }
    return FieldGrid({dims_v[0], dims_v[1], dims_v[2]},
                     {spacing_v[0], spacing_v[1], spacing_v[2]}, epsilon, std::move(field));
}

inline FieldGrid load_field_grid(const std::string& path) {
    return field_grid_from_json(detail::parse_json_file(path));
}

/// QDotSpec plus the dielectric constant used by the Coulomb correction.
struct QDotConfig {
    QDotSpec spec;
    double epsilon_r = 1.0;
};

inline QDotConfig qdot_config_from_json(const nlohmann::json& j) {
    QDotConfig cfg;
    cfg.spec.m_eff_e = detail::json_field<double>(j, "m_eff_e_m0") * constants::electron_mass;
    cfg.spec.m_eff_h = detail::json_field<double>(j, "m_eff_h_m0") * constants::electron_mass;
    cfg.spec.hbar_omega0_e = Energy::from_mev(detail::json_field<double>(j, "hbar_omega0_e_meV"));
    cfg.spec.hbar_omega0_h = Energy::from_mev(detail::json_field<double>(j, "hbar_omega0_h_meV"));
    cfg.spec.height = detail::json_field<double>(j, "L_nm") * 1e-9;
    cfg.spec.band_gap = Energy::from_ev(detail::json_field<double>(j, "band_gap_eV"));
    cfg.epsilon_r = detail::json_field<double>(j, "epsilon_r");
    cfg.spec.validate();
    if (cfg.epsilon_r < 1.0)
        throw std::invalid_argument("epsilon_r: must be >= 1");
    return cfg;
}

inline QDotConfig load_qdot_config(const std::string& path) {
    return qdot_config_from_json(detail::parse_json_file(path));
}

} // namespace cqed
