#include "litgame/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "litgame/errors.hpp"
#include "litgame/philox.hpp"

namespace litgame {

void SimConfig::validate() const {
    if (n_trials < 1) throw ValidationError("n_trials must be at least 1");
    if (chunk_size < 1) throw ValidationError("chunk_size must be at least 1");
}

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& other) noexcept {
    true_positive += other.true_positive;
    false_positive += other.false_positive;
    true_negative += other.true_negative;
    false_negative += other.false_negative;
    return *this;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z) {
    if (n == 0) throw ValidationError("Wilson interval needs at least one trial");
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = (z / denom) * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    // The exact interval always contains p; clamping keeps that true under rounding.
    return {std::clamp(std::min(center - half, p), 0.0, 1.0),
            std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

PpvEstimate empirical_interval(const ConfusionCounts& counts) {
    const std::uint64_t n_pos = counts.positives();
    if (n_pos == 0) throw NoPositives("no positive verdicts were drawn; PPV cannot be estimated");
    const double ppv = static_cast<double>(counts.true_positive) / static_cast<double>(n_pos);
    return {
        Probability::from_computed(ppv),
        std::sqrt(ppv * (1.0 - ppv) / static_cast<double>(n_pos)),
        wilson_interval(counts.true_positive, n_pos),
    };
}

ConfusionCounts simulate_range(const PriorBelief& prior, const TestCharacteristics& chars,
                               std::uint64_t seed, std::uint64_t first, std::uint64_t count) noexcept {
    const double p = prior.p_guilty().value();
    const double sens = chars.sensitivity().value();
    const double fpr = chars.specificity().complement();
    ConfusionCounts c;
    for (std::uint64_t i = first; i < first + count; ++i) {
        const auto u = philox::uniform_pair(seed, i);
        if (u.first < p) {
            if (u.second < sens) ++c.true_positive; else ++c.false_negative;
        } else {
            if (u.second < fpr) ++c.false_positive; else ++c.true_negative;
        }
    }
    return c;
}

SimResult simulate(const PriorBelief& prior, const TestCharacteristics& chars, const SimConfig& config) {
    config.validate();

    const std::uint64_t n = config.n_trials;
    const std::uint64_t chunk = config.chunk_size;
    const std::uint64_t n_chunks = n / chunk + (n % chunk != 0 ? 1 : 0);
    unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_chunks));

    std::vector<ConfusionCounts> partial(workers);
    std::atomic<std::uint64_t> next_chunk{0};
    auto work = [&](ConfusionCounts& acc) {
        for (std::uint64_t k = next_chunk.fetch_add(1); k < n_chunks; k = next_chunk.fetch_add(1)) {
            const std::uint64_t first = k * chunk;
            acc += simulate_range(prior, chars, config.seed, first, std::min(chunk, n - first));
        }
    };

    if (workers <= 1) {
        work(partial.front());
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(partial[w]));
    }

    SimResult result;
    for (const auto& c : partial) result.counts += c;
    if (result.counts.total() != n) {
        throw InvariantViolation("simulated counts do not sum to n_trials");
    }

    if (result.counts.positives() > 0) {
        const PpvEstimate est = empirical_interval(result.counts);
        result.ppv_hat = est.ppv_hat;
        result.standard_error_ppv = est.standard_error;
        result.ci95_ppv = est.ci95;
    }
    if (result.counts.negatives() > 0) {
        result.npv_hat = Probability::from_computed(static_cast<double>(result.counts.true_negative) /
                                                    static_cast<double>(result.counts.negatives()));
    }
    return result;
}

AgreementVerdict agreement_check(const SimResult& result, const PosteriorReport& analytic, double z) {
    if (!(z > 0.0)) throw ValidationError("agreement threshold z must be positive");
    if (!result.ppv_hat || !result.standard_error_ppv) {
        throw NoPositives("simulation drew no positive verdicts; refusing to compare PPV");
    }
    if (!analytic.ppv) {
        throw UndefinedPosterior("analytic PPV is undefined (Pr(+) = 0)");
    }
    const double simulated = result.ppv_hat->value();
    const double expected = analytic.ppv->value();
    const double difference = std::abs(simulated - expected);
    const double margin = z * *result.standard_error_ppv;
    return {difference <= margin, simulated, expected, difference, margin, z};
}

}  // namespace litgame
