#pragma once

#include <cstdint>
#include <optional>

#include "litgame/inference.hpp"
#include "litgame/probability.hpp"

namespace litgame {

/// Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

/// Default agreement threshold, in standard errors.
inline constexpr double kDefaultAgreementZ = 4.0;

struct SimConfig {
    std::uint64_t n_trials = 1'000'000;
    std::uint64_t seed = 42;
    /// Trials per unit of work handed to a worker.
    std::uint64_t chunk_size = 4096;
    /// Worker threads; 0 means one per hardware thread. Never affects counts.
    unsigned threads = 0;

    /// Throws ValidationError unless n_trials >= 1 and chunk_size >= 1.
    void validate() const;
};

/// Outcome tallies. false_positive is a Type I error, false_negative Type II.
struct ConfusionCounts {
    std::uint64_t true_positive = 0;
    std::uint64_t false_positive = 0;
    std::uint64_t true_negative = 0;
    std::uint64_t false_negative = 0;

    [[nodiscard]] std::uint64_t total() const noexcept {
        return true_positive + false_positive + true_negative + false_negative;
    }
    [[nodiscard]] std::uint64_t positives() const noexcept { return true_positive + false_positive; }
    [[nodiscard]] std::uint64_t negatives() const noexcept { return true_negative + false_negative; }
    [[nodiscard]] std::uint64_t guilty() const noexcept { return true_positive + false_negative; }

    ConfusionCounts& operator+=(const ConfusionCounts& other) noexcept;
    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct Interval {
    double lo;
    double hi;

    [[nodiscard]] bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

struct PpvEstimate {
    Probability ppv_hat;
    double standard_error;
    Interval ci95;  ///< Wilson score interval
};

struct SimResult {
    ConfusionCounts counts;
    std::optional<Probability> ppv_hat;
    std::optional<Probability> npv_hat;
    std::optional<double> standard_error_ppv;
    std::optional<Interval> ci95_ppv;
};

/// Wilson score interval for k successes in n trials at normal quantile z.
/// Requires n >= 1.
Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z = kZ95);

/// PPV point estimate, its binomial standard error and Wilson 95% interval.
/// Throws NoPositives when the counts contain no positive verdicts.
PpvEstimate empirical_interval(const ConfusionCounts& counts);

/// Tallies one block of trials [first, first + count). Trial i draws guilt
/// and then the verdict from philox::uniform_pair(seed, i).
ConfusionCounts simulate_range(const PriorBelief& prior, const TestCharacteristics& chars,
                               std::uint64_t seed, std::uint64_t first, std::uint64_t count) noexcept;

/// Simulates config.n_trials defendants. The counts depend only on
/// (prior, chars, n_trials, seed), never on chunk_size or threads.
SimResult simulate(const PriorBelief& prior, const TestCharacteristics& chars, const SimConfig& config);

struct AgreementVerdict {
    bool agrees;
    double simulated_ppv;
    double analytic_ppv;
    double difference;  ///< |simulated - analytic|
    double margin;      ///< z * standard error
    double z;
};

/// Whether the simulated PPV is within z standard errors of the analytic one.
/// Throws NoPositives when the simulation has no PPV estimate and
/// UndefinedPosterior when the analytic report has none; it never passes
/// vacuously.
AgreementVerdict agreement_check(const SimResult& result, const PosteriorReport& analytic,
                                 double z = kDefaultAgreementZ);

}  // namespace litgame
