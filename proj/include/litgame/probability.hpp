#pragma once

#include <compare>
#include <string_view>

namespace litgame {

/// A real number in the closed unit interval. Construction rejects anything
/// else, NaN and infinities included.
class Probability {
public:
    constexpr Probability() noexcept = default;

    /// Throws ValidationError unless 0 <= value <= 1.
    explicit Probability(double value);

    /// For results of arithmetic on valid probabilities: rounding may push
    /// the value a few ulps outside [0, 1], which is clamped away. Anything
    /// further out (or NaN) throws InvariantViolation.
    static Probability from_computed(double value);

    [[nodiscard]] constexpr double value() const noexcept { return value_; }
    [[nodiscard]] constexpr double complement() const noexcept { return 1.0 - value_; }

    friend constexpr auto operator<=>(Probability, Probability) noexcept = default;

private:
    double value_ = 0.0;
};

/// Parses a decimal string into a Probability. Throws ParseError when the
/// text is not a number and ValidationError when it is out of range.
Probability parse_probability(std::string_view text, std::string_view what);

/// Sensitivity and specificity of the adjudication process.
///
/// sensitivity = Pr(+ | guilty), specificity = Pr(- | innocent).
class TestCharacteristics {
public:
    constexpr TestCharacteristics(Probability sensitivity, Probability specificity) noexcept
        : sensitivity_(sensitivity), specificity_(specificity) {}

    TestCharacteristics(double sensitivity, double specificity)
        : sensitivity_(sensitivity), specificity_(specificity) {}

    [[nodiscard]] constexpr Probability sensitivity() const noexcept { return sensitivity_; }
    [[nodiscard]] constexpr Probability specificity() const noexcept { return specificity_; }

    /// Pr(+ | innocent), the Type I error rate.
    [[nodiscard]] Probability false_positive_rate() const noexcept;
    /// Pr(- | guilty), the Type II error rate.
    [[nodiscard]] Probability false_negative_rate() const noexcept;

    friend constexpr bool operator==(const TestCharacteristics&, const TestCharacteristics&) noexcept = default;

private:
    Probability sensitivity_;
    Probability specificity_;
};

/// Prior probability that the named defendant is guilty. Pr(innocent) is
/// always derived.
class PriorBelief {
public:
    constexpr explicit PriorBelief(Probability p_guilty) noexcept : p_guilty_(p_guilty) {}
    explicit PriorBelief(double p_guilty) : p_guilty_(p_guilty) {}

    [[nodiscard]] constexpr Probability p_guilty() const noexcept { return p_guilty_; }
    [[nodiscard]] Probability p_innocent() const noexcept;

    friend constexpr bool operator==(const PriorBelief&, const PriorBelief&) noexcept = default;

private:
    Probability p_guilty_;
};

}  // namespace litgame
