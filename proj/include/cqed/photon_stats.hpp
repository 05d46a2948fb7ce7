// photon_stats.hpp: second-order correlation of Fock mixtures,
//
//   g2(0) = sum n(n-1) P_n / (sum n P_n)^2,
//
// plus a Monte-Carlo Hanbury Brown-Twiss simulator (ideal 50/50
// beamsplitter, number-resolving detectors) whose estimator has exactly
// that expectation, so the two routes cross-validate each other.

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqed/rng.hpp"

namespace cqed {

/// Photon-number distribution P_n with finite support. Probabilities
/// must be nonnegative and sum to 1 within 1e-12.
class FockDistribution {
public:
    explicit FockDistribution(std::map<int, double> probs) : probs_(std::move(probs)) {
        double total = 0.0;
        for (const auto& [n, p] : probs_) {
            if (n < 0)
                throw std::invalid_argument("probs: photon number must be >= 0");
            if (!(p >= 0.0) || !std::isfinite(p))
                throw std::invalid_argument("probs: probabilities must be finite and >= 0");
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw std::invalid_argument("probs: probabilities must sum to 1 (within 1e-12)");
    }

    /// P_n = 1 for a single Fock state |n>.
    static FockDistribution fock(int n) { return FockDistribution({{n, 1.0}}); }

    /// Mostly vacuum with sporadic n-photon pulses: P_n = eps, P_0 = 1-eps.
    static FockDistribution sparse(int n, double eps) {
        if (!(eps > 0.0) || eps > 1.0)
            throw std::invalid_argument("eps: must be in (0, 1]");
        if (n == 0) return fock(0);
        return FockDistribution({{0, 1.0 - eps}, {n, eps}});
    }

    /// Poisson distribution truncated where the remaining tail mass drops
    /// below tail_cutoff (not renormalized; the deficit stays below the
    /// sum-to-one tolerance for the default cutoff).
    static FockDistribution poisson(double mean, double tail_cutoff = 1e-15) {
        if (!(mean > 0.0))
            throw std::invalid_argument("mean: must be > 0");
        std::map<int, double> probs;
        double p = std::exp(-mean); // P_0
        double tail = 1.0;
        int n = 0;
        while (tail >= tail_cutoff) {
            probs[n] = p;
            tail -= p;
            ++n;
            p *= mean / n;
        }
        return FockDistribution(std::move(probs));
    }

    [[nodiscard]] const std::map<int, double>& probabilities() const { return probs_; }

    [[nodiscard]] double mean_photon_number() const {
        double m = 0.0;
        for (const auto& [n, p] : probs_) m += n * p;
        return m;
    }

    /// sum n(n-1) P_n.
    [[nodiscard]] double second_factorial_moment() const {
        double m = 0.0;
        for (const auto& [n, p] : probs_) m += static_cast<double>(n) * (n - 1.0) * p;
        return m;
    }

private:
    std::map<int, double> probs_;
};

/// g2(0) of the distribution; empty for all-vacuum input (0/0).
inline std::optional<double> g2_zero(const FockDistribution& dist) {
    const double mean = dist.mean_photon_number();
    if (mean == 0.0) return std::nullopt;
    return dist.second_factorial_moment() / (mean * mean);
}

enum class PhotonStatistics { sub_poissonian, poissonian, super_poissonian };

inline const char* to_string(PhotonStatistics s) {
    switch (s) {
        case PhotonStatistics::sub_poissonian: return "SubPoissonian";
        case PhotonStatistics::poissonian: return "Poissonian";
        default: return "SuperPoissonian";
    }
}

/// g2 < 1: antibunching; g2 > 1: bunching; tolerance 1e-9 around 1.
inline PhotonStatistics classify_statistics(double g2) {
    if (!(g2 >= 0.0))
        throw std::invalid_argument("g2: must be >= 0");
    constexpr double tol = 1e-9;
    if (g2 < 1.0 - tol) return PhotonStatistics::sub_poissonian;
    if (g2 > 1.0 + tol) return PhotonStatistics::super_poissonian;
    return PhotonStatistics::poissonian;
}

/// Per-pulse detector counts behind the beamsplitter.
struct PulseRecord {
    std::int64_t pulse_index = 0;
    int counts_a = 0;
    int counts_b = 0;
};

/// Simulates an HBT run: per pulse, draw n from the distribution, route
/// each photon to detector A or B with probability 1/2. Detectors are
/// ideal and number-resolving. Deterministic per seed.
inline std::vector<PulseRecord> hbt_simulate(const FockDistribution& dist, std::int64_t pulses,
                                             std::uint64_t seed) {
    if (pulses < 1)
        throw std::invalid_argument("pulses: must be >= 1");

    // Cumulative table for inverse-CDF sampling of n.
    std::vector<std::pair<double, int>> cumulative;
    cumulative.reserve(dist.probabilities().size());
    double acc = 0.0;
    for (const auto& [n, p] : dist.probabilities()) {
        acc += p;
        cumulative.emplace_back(acc, n);
    }

    std::mt19937_64 gen(seed);
    std::vector<PulseRecord> records;
    records.reserve(static_cast<std::size_t>(pulses));
    for (std::int64_t i = 0; i < pulses; ++i) {
        const double u = rng::uniform01(gen);
        int n = cumulative.back().second;
        for (const auto& [edge, value] : cumulative) {
            if (u < edge) {
                n = value;
                break;
            }
        }
        int a = 0;
        for (int ph = 0; ph < n; ++ph)
            if (rng::uniform01(gen) < 0.5) ++a;
        records.push_back({i, a, n - a});
    }
    return records;
}

struct G2Estimate {
    double g2 = 0.0;
    double std_err = 0.0; // jackknife
};

/// <n_A n_B> / (<n_A> <n_B>) over pulses, with a leave-one-out jackknife
/// standard error. For the ideal 50/50 split this estimator's
/// expectation equals g2(0) of the source distribution. Empty when the
/// records carry no counts at all (0/0).
inline std::optional<G2Estimate> g2_estimate(const std::vector<PulseRecord>& records) {
    if (records.size() < 2)
        throw std::invalid_argument("records: at least 2 pulse records required");

    const double n = static_cast<double>(records.size());
    double sum_a = 0.0, sum_b = 0.0, sum_ab = 0.0;
    for (const auto& r : records) {
        sum_a += r.counts_a;
        sum_b += r.counts_b;
        sum_ab += static_cast<double>(r.counts_a) * r.counts_b;
    }
    // A silent detector forces sum_ab = 0 as well, so this is always 0/0.
    if (sum_a == 0.0 || sum_b == 0.0) return std::nullopt;

    const double g2 = n * sum_ab / (sum_a * sum_b);

    double mean_loo = 0.0, m2_loo = 0.0;
    std::vector<double> loo(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const double a = sum_a - r.counts_a;
        const double b = sum_b - r.counts_b;
        const double ab = sum_ab - static_cast<double>(r.counts_a) * r.counts_b;
        loo[i] = (a > 0.0 && b > 0.0) ? (n - 1.0) * ab / (a * b) : 0.0;
        const double delta = loo[i] - mean_loo;
        mean_loo += delta / static_cast<double>(i + 1);
        m2_loo += delta * (loo[i] - mean_loo);
    }
    const double std_err = std::sqrt((n - 1.0) / n * m2_loo);
    return G2Estimate{g2, std_err};
}

/// Cross-pulse correlation <n_A(i) n_B(i+offset)> / (<n_A> <n_B>).
/// Pulses are independent, so the expectation is 1 for any offset != 0;
/// offset = 0 recovers g2_estimate's point value.
inline std::optional<double> g2_estimate_at_offset(const std::vector<PulseRecord>& records,
                                                   std::int64_t offset) {
    const auto k = static_cast<std::size_t>(std::abs(offset));
    if (records.size() < k + 2)
        throw std::invalid_argument("records: not enough pulses for the requested offset");
    double sum_a = 0.0, sum_b = 0.0, sum_ab = 0.0;
    const std::size_t pairs = records.size() - k;
    for (std::size_t i = 0; i < pairs; ++i) {
        sum_ab += static_cast<double>(records[i].counts_a) * records[i + k].counts_b;
    }
    for (const auto& r : records) {
        sum_a += r.counts_a;
        sum_b += r.counts_b;
    }
    if (sum_a == 0.0 || sum_b == 0.0) return std::nullopt;
    const double n = static_cast<double>(records.size());
    return (sum_ab / static_cast<double>(pairs)) / ((sum_a / n) * (sum_b / n));
}

// --- PulseRecord CSV interface: pulse_index,counts_a,counts_b ---

inline void write_pulse_records_csv(std::ostream& os, const std::vector<PulseRecord>& records) {
    os << "pulse_index,counts_a,counts_b\n";
    for (const auto& r : records)
        os << r.pulse_index << ',' << r.counts_a << ',' << r.counts_b << '\n';
}

inline std::vector<PulseRecord> read_pulse_records_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("records csv: empty stream");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "pulse_index,counts_a,counts_b")
        throw std::invalid_argument("records csv: expected header pulse_index,counts_a,counts_b");

    std::vector<PulseRecord> records;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        PulseRecord r;
        char c1 = 0, c2 = 0;
        if (!(row >> r.pulse_index >> c1 >> r.counts_a >> c2 >> r.counts_b) || c1 != ',' ||
            c2 != ',')
            throw std::invalid_argument("records csv: malformed row '" + line + "'");
        if (r.counts_a < 0 || r.counts_b < 0)
            throw std::invalid_argument("records csv: counts must be >= 0");
        records.push_back(r);
    }
    return records;
}

} // namespace cqed
