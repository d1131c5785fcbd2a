#include "litgame/probability.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "litgame/errors.hpp"

namespace litgame {

namespace {

// Largest excursion outside [0, 1] accepted as rounding noise.
constexpr double kRoundingSlack = 1e-12;

}  // namespace

Probability::Probability(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ValidationError("probability must lie in [0, 1], got " + std::to_string(value));
    }
}

Probability Probability::from_computed(double value) {
    if (!(value >= -kRoundingSlack && value <= 1.0 + kRoundingSlack)) {
        throw InvariantViolation("derived probability escaped [0, 1]: " + std::to_string(value));
    }
    return Probability(std::clamp(value, 0.0, 1.0));
}

Probability parse_probability(std::string_view text, std::string_view what) {
    // from_chars does not accept a leading '+'.
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError(std::string(what) + ": not a number: '" + std::string(text) + "'");
    }
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ValidationError(std::string(what) + " must lie in [0, 1], got " + std::string(text));
    }
    return Probability(value);
}

Probability TestCharacteristics::false_positive_rate() const noexcept {
    return Probability::from_computed(specificity_.complement());
}

Probability TestCharacteristics::false_negative_rate() const noexcept {
    return Probability::from_computed(sensitivity_.complement());
}

Probability PriorBelief::p_innocent() const noexcept {
    return Probability::from_computed(p_guilty_.complement());
}

}  // namespace litgame
