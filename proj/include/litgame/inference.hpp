#pragma once

#include <optional>
#include <string>

#include "litgame/probability.hpp"

namespace litgame {

/// A likelihood ratio. Zero-over-zero is Indeterminate, positive-over-zero is
/// Infinite; everything else is a finite nonnegative value.
class LikelihoodRatio {
public:
    enum class Kind { Finite, Infinite, Indeterminate };

    static LikelihoodRatio from_ratio(double numerator, double denominator) noexcept;

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    /// +inf for Infinite, NaN for Indeterminate.
    [[nodiscard]] double value() const noexcept;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const LikelihoodRatio&, const LikelihoodRatio&) noexcept = default;

private:
    Kind kind_ = Kind::Indeterminate;
    double value_ = 0.0;
};

struct LikelihoodRatios {
    LikelihoodRatio positive;  ///< sensitivity / (1 - specificity)
    LikelihoodRatio negative;  ///< (1 - sensitivity) / specificity
};

/// Everything derivable from one (prior, characteristics) pair. Posteriors
/// that would require conditioning on an impossible outcome are absent.
struct PosteriorReport {
    PriorBelief prior;
    TestCharacteristics chars;
    Probability p_positive;
    std::optional<Probability> ppv;                        ///< Pr(guilty | +)
    std::optional<Probability> p_innocent_given_positive;  ///< 1 - ppv
    std::optional<Probability> npv;                        ///< Pr(innocent | -)
    std::optional<Probability> p_guilty_given_negative;    ///< 1 - npv
    LikelihoodRatio lr_positive;
    LikelihoodRatio lr_negative;

    [[nodiscard]] Probability p_negative() const noexcept;
};

/// Pr(+) = sensitivity * Pr(guilty) + (1 - specificity) * Pr(innocent).
Probability p_positive(const PriorBelief& prior, const TestCharacteristics& chars);

/// Pr(guilty | +) by Bayes' rule. Throws UndefinedPosterior when Pr(+) = 0.
Probability posterior_guilty_given_positive(const PriorBelief& prior, const TestCharacteristics& chars);

/// Pr(innocent | -). Throws UndefinedPosterior when Pr(-) = 0.
Probability posterior_innocent_given_negative(const PriorBelief& prior, const TestCharacteristics& chars);

/// Pr(guilty | +) via prior odds times LR+. Falls back to log-odds when the
/// plain product would overflow or underflow. Throws UndefinedPosterior in
/// the same cases as the direct form.
Probability posterior_via_odds(const PriorBelief& prior, const TestCharacteristics& chars);

LikelihoodRatios likelihood_ratios(const TestCharacteristics& chars) noexcept;

/// The prior for which Pr(guilty | +) equals target_ppv.
///
/// Throws UnreachableTarget unless 0 < target < 1, sensitivity > 0 and
/// specificity < 1 (with a perfectly specific test every positive verdict is
/// certain, so no target below one is attainable).
Probability required_prior(const TestCharacteristics& chars, Probability target_ppv);

PosteriorReport full_report(const PriorBelief& prior, const TestCharacteristics& chars);

}  // namespace litgame
