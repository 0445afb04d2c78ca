#pragma once

// Test-only reference computations. Nothing here calls into the closed-form
// solver; the dense and per-element routes are deliberately naive.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "grover/search_config.hpp"
#include "grover/state.hpp"

namespace grover::oracle {

using cvec = std::vector<std::complex<double>>;

/// D_ij = 2/N - delta_ij as a dense matrix.
inline std::vector<std::vector<double>> dense_diffusion(std::size_t n) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 2.0 / static_cast<double>(n)));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] -= 1.0;
    }
    return d;
}

/// D * (oracle-flipped amplitudes), by explicit O(N^2) multiplication.
inline cvec dense_grover_step(const cvec& amps, const std::set<std::uint64_t>& marked) {
    const auto d = dense_diffusion(amps.size());
    cvec flipped = amps;
    for (auto i : marked) {
        flipped[i] = -flipped[i];
    }
    cvec out(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        std::complex<double> acc{};
        for (std::size_t j = 0; j < amps.size(); ++j) {
            acc += d[i][j] * flipped[j];
        }
        out[i] = acc;
    }
    return out;
}

/// k_i -> C + k_i, l_i -> C - l_i with C = -(2/N)[sum marked - sum unmarked].
inline cvec recurrence_step(const cvec& amps, const std::set<std::uint64_t>& marked) {
    std::complex<double> marked_sum{};
    std::complex<double> unmarked_sum{};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        (marked.count(i) ? marked_sum : unmarked_sum) += amps[i];
    }
    const auto c = -(2.0 / static_cast<double>(amps.size())) * (marked_sum - unmarked_sum);
    cvec out(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out[i] = marked.count(i) ? c + amps[i] : c - amps[i];
    }
    return out;
}

/// Uniform-start amplitudes k(t) = sin(w(t + 1/2))/sqrt(r), l(t) = cos(w(t + 1/2))/sqrt(N - r),
/// with w = 2 arcsin(sqrt(r/N)).
struct UniformAmplitudes {
    double marked;
    double unmarked;
};

inline UniformAmplitudes uniform_start_amplitudes(std::uint64_t n, std::uint64_t r, std::uint64_t t) {
    const double nd = static_cast<double>(n);
    const double rd = static_cast<double>(r);
    const double w = 2.0 * std::asin(std::sqrt(rd / nd));
    const double x = w * (static_cast<double>(t) + 0.5);
    return {std::sin(x) / std::sqrt(rd), std::cos(x) / std::sqrt(nd - rd)};
}

/// Normalized random state drawn with std::normal_distribution (independent
/// of the library's generator).
inline AmplitudeState random_state(const SearchConfig& config, std::uint64_t seed, bool complex_values) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    cvec amps(config.n_states());
    double total = 0.0;
    for (auto& a : amps) {
        a = {normal(gen), complex_values ? normal(gen) : 0.0};
        total += std::norm(a);
    }
    for (auto& a : amps) {
        a /= std::sqrt(total);
    }
    return {config, std::move(amps)};
}

/// Random state whose marked and unmarked averages are real multiples of a
/// common random phase (real ratio) but otherwise complex.
inline AmplitudeState random_real_ratio_state(const SearchConfig& config, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
    const auto phase = std::polar(1.0, angle(gen));
    cvec amps(config.n_states());
    double total = 0.0;
    for (auto& a : amps) {
        a = phase * normal(gen);
        total += std::norm(a);
    }
    for (auto& a : amps) {
        a /= std::sqrt(total);
    }
    return {config, std::move(amps)};
}

inline cvec to_vector(const AmplitudeState& s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

inline std::set<std::uint64_t> marked_set(const SearchConfig& c) {
    return {c.marked().begin(), c.marked().end()};
}

inline double max_abs_diff(const cvec& a, const cvec& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

/// Brute-force scan of P(t) by iterating the explicit engine for t = 0..t_max.
/// Returns the earliest argmax.
struct ScanResult {
    std::uint64_t t = 0;
    double probability = -1.0;
};

inline ScanResult brute_force_scan(const AmplitudeState& initial, std::uint64_t t_max) {
    ScanResult best;
    AmplitudeState state = initial;
    for (std::uint64_t t = 0; t <= t_max; ++t) {
        const double p = success_probability(state);
        if (p > best.probability) {
            best = {t, p};
        }
        state = grover_step(std::move(state));
    }
    return best;
}

} // namespace grover::oracle
