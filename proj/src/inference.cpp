#include "litgame/inference.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

#include "litgame/errors.hpp"

namespace litgame {

namespace {

struct Joint {
    double true_positive;   // Pr(guilty and +)
    double false_positive;  // Pr(innocent and +)
    double true_negative;   // Pr(innocent and -)
    double false_negative;  // Pr(guilty and -)
};

Joint joint_of(const PriorBelief& prior, const TestCharacteristics& chars) noexcept {
    const double p = prior.p_guilty().value();
    const double q = prior.p_guilty().complement();
    const double sens = chars.sensitivity().value();
    const double spec = chars.specificity().value();
    return {sens * p, chars.specificity().complement() * q, spec * q,
            chars.sensitivity().complement() * p};
}

double logistic(double log_odds) noexcept {
    if (log_odds >= 0.0) return 1.0 / (1.0 + std::exp(-log_odds));
    const double e = std::exp(log_odds);
    return e / (1.0 + e);
}

}  // namespace

LikelihoodRatio LikelihoodRatio::from_ratio(double numerator, double denominator) noexcept {
    LikelihoodRatio lr;
    if (denominator > 0.0) {
        lr.kind_ = Kind::Finite;
        lr.value_ = numerator / denominator;
    } else if (numerator > 0.0) {
        lr.kind_ = Kind::Infinite;
        lr.value_ = std::numeric_limits<double>::infinity();
    } else {
        lr.kind_ = Kind::Indeterminate;
        lr.value_ = 0.0;
    }
    return lr;
}

double LikelihoodRatio::value() const noexcept {
    switch (kind_) {
        case Kind::Finite:
        case Kind::Infinite:
            return value_;
        case Kind::Indeterminate:
            break;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::string LikelihoodRatio::to_string() const {
    switch (kind_) {
        case Kind::Infinite:
            return "inf";
        case Kind::Indeterminate:
            return "indeterminate";
        case Kind::Finite:
            break;
    }
    return std::to_string(value_);
}

Probability PosteriorReport::p_negative() const noexcept {
    return Probability::from_computed(p_positive.complement());
}

Probability p_positive(const PriorBelief& prior, const TestCharacteristics& chars) {
    const Joint j = joint_of(prior, chars);
    return Probability::from_computed(j.true_positive + j.false_positive);
}

Probability posterior_guilty_given_positive(const PriorBelief& prior, const TestCharacteristics& chars) {
    const Joint j = joint_of(prior, chars);
    const double positive = j.true_positive + j.false_positive;
    if (positive <= 0.0) {
        throw UndefinedPosterior("Pr(+) = 0: a positive verdict is impossible under these parameters");
    }
    return Probability::from_computed(j.true_positive / positive);
}

Probability posterior_innocent_given_negative(const PriorBelief& prior, const TestCharacteristics& chars) {
    const Joint j = joint_of(prior, chars);
    const double negative = j.true_negative + j.false_negative;
    if (negative <= 0.0) {
        throw UndefinedPosterior("Pr(-) = 0: a negative verdict is impossible under these parameters");
    }
    return Probability::from_computed(j.true_negative / negative);
}

Probability posterior_via_odds(const PriorBelief& prior, const TestCharacteristics& chars) {
    const double p = prior.p_guilty().value();
    const double sens = chars.sensitivity().value();
    const double fpr = chars.specificity().complement();
    if (sens * p + fpr * (1.0 - p) <= 0.0) {
        throw UndefinedPosterior("Pr(+) = 0: a positive verdict is impossible under these parameters");
    }

    // Infinite or zero odds on either factor. The other factor is nonzero
    // and finite here, otherwise Pr(+) would have been zero.
    if (p == 1.0 || fpr == 0.0) return Probability(1.0);
    if (p == 0.0 || sens == 0.0) return Probability(0.0);

    const double prior_odds = p / (1.0 - p);
    const double lr = sens / fpr;
    const double odds = prior_odds * lr;
    if (std::isfinite(odds) && odds >= DBL_MIN) {
        return Probability::from_computed(odds / (1.0 + odds));
    }
    const double log_odds = std::log(p) - std::log1p(-p) + std::log(sens) - std::log(fpr);
    return Probability::from_computed(logistic(log_odds));
}

LikelihoodRatios likelihood_ratios(const TestCharacteristics& chars) noexcept {
    return {
        LikelihoodRatio::from_ratio(chars.sensitivity().value(), chars.specificity().complement()),
        LikelihoodRatio::from_ratio(chars.sensitivity().complement(), chars.specificity().value()),
    };
}

Probability required_prior(const TestCharacteristics& chars, Probability target_ppv) {
    const double t = target_ppv.value();
    const double s = chars.sensitivity().value();
    const double f = chars.specificity().complement();
    if (!(t > 0.0 && t < 1.0)) {
        throw UnreachableTarget("target posterior must lie strictly between 0 and 1");
    }
    if (s == 0.0) {
        throw UnreachableTarget("sensitivity is 0: no guilty defendant is ever found liable");
    }
    if (f == 0.0) {
        throw UnreachableTarget("specificity is 1: every positive verdict is certain, so any target below 1 is unreachable");
    }
    const double weighted_fp = t * f;
    const double prior = weighted_fp / (weighted_fp + s * (1.0 - t));
    if (!(prior > 0.0 && prior < 1.0)) {
        throw UnreachableTarget("required prior is not representable strictly inside (0, 1)");
    }
    return Probability(prior);
}

PosteriorReport full_report(const PriorBelief& prior, const TestCharacteristics& chars) {
    const LikelihoodRatios lrs = likelihood_ratios(chars);
    PosteriorReport report{
        .prior = prior,
        .chars = chars,
        .p_positive = p_positive(prior, chars),
        .ppv = std::nullopt,
        .p_innocent_given_positive = std::nullopt,
        .npv = std::nullopt,
        .p_guilty_given_negative = std::nullopt,
        .lr_positive = lrs.positive,
        .lr_negative = lrs.negative,
    };

    const Joint j = joint_of(prior, chars);
    if (j.true_positive + j.false_positive > 0.0) {
        report.ppv = posterior_guilty_given_positive(prior, chars);
        report.p_innocent_given_positive = Probability::from_computed(report.ppv->complement());
        const double lhs = report.ppv->value() * report.p_positive.value();
        if (std::abs(lhs - j.true_positive) > 1e-12) {
            throw InvariantViolation("ppv * Pr(+) disagrees with sensitivity * Pr(guilty)");
        }
    }
    if (j.true_negative + j.false_negative > 0.0) {
        report.npv = posterior_innocent_given_negative(prior, chars);
        report.p_guilty_given_negative = Probability::from_computed(report.npv->complement());
    }
    return report;
}

}  // namespace litgame
