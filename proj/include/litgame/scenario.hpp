#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "litgame/inference.hpp"
#include "litgame/probability.hpp"

namespace litgame {

/// How reliably the process separates guilty from innocent defendants.
enum class AdjudicationRegime { NonRandom, Random };

/// How certain the moving party must be of guilt before filing.
enum class MovingPartyProfile { RiskAverse, RiskLoving };

/// NonRandom -> (0.9, 0.9); Random -> (0.5, 0.5).
TestCharacteristics characteristics_of(AdjudicationRegime regime) noexcept;

/// RiskAverse -> 0.9; RiskLoving -> 0.6.
PriorBelief prior_of(MovingPartyProfile profile) noexcept;

std::string_view slug(AdjudicationRegime regime) noexcept;
std::string_view slug(MovingPartyProfile profile) noexcept;

/// One cell of the regime x profile matrix.
struct CatalogCell {
    AdjudicationRegime regime;
    MovingPartyProfile profile;

    friend bool operator==(const CatalogCell&, const CatalogCell&) = default;
};

/// User-supplied parameters. Both values are always replaced together.
struct CustomCell {
    TestCharacteristics chars;
    PriorBelief prior;

    friend bool operator==(const CustomCell&, const CustomCell&) = default;
};

struct Scenario {
    std::string name;
    std::variant<CatalogCell, CustomCell> cell;

    [[nodiscard]] bool is_catalog() const noexcept { return std::holds_alternative<CatalogCell>(cell); }
    [[nodiscard]] TestCharacteristics chars() const noexcept;
    [[nodiscard]] PriorBelief prior() const noexcept;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// "non-random/risk-averse" style name for a catalog cell.
std::string default_name(const CatalogCell& cell);

/// The four cells, in table order: (NonRandom, RiskAverse),
/// (NonRandom, RiskLoving), (Random, RiskAverse), (Random, RiskLoving).
const std::vector<Scenario>& catalog();

/// Looks a catalog scenario up by its slug name; nullptr when unknown.
const Scenario* find_scenario(std::string_view name) noexcept;

PosteriorReport evaluate(const Scenario& scenario);

/// Reads a scenario document.
///
/// Grammar: one `key = value` (or `key: value`) pair per line; blank lines
/// and lines starting with `#` are ignored; values may be double-quoted.
/// Recognized keys are `name`, `regime` (`non-random` | `random`),
/// `profile` (`risk-averse` | `risk-loving`), and the numeric overrides
/// `sensitivity`, `specificity`, `prior`. A document names either both tags
/// or all three overrides.
///
/// Throws ParseError for syntax problems, unknown or repeated keys and
/// incomplete documents; ValidationError for out-of-range numbers;
/// AmbiguousScenario when tags and overrides are mixed.
Scenario parse_scenario(std::string_view text);

/// Inverse of parse_scenario. Numbers are written in shortest round-trip form.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace litgame
