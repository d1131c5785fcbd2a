#include "litgame/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "litgame/errors.hpp"

namespace litgame {

namespace {

constexpr std::array<std::string_view, 6> kKeys = {"name", "regime", "profile",
                                                   "sensitivity", "specificity", "prior"};

std::string_view trim(std::string_view s) noexcept {
    const auto ws = " \t\r";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::string shortest(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

AdjudicationRegime parse_regime(std::string_view text) {
    if (text == slug(AdjudicationRegime::NonRandom)) return AdjudicationRegime::NonRandom;
    if (text == slug(AdjudicationRegime::Random)) return AdjudicationRegime::Random;
    throw ParseError("unknown regime '" + std::string(text) + "' (expected non-random or random)");
}

MovingPartyProfile parse_profile(std::string_view text) {
    if (text == slug(MovingPartyProfile::RiskAverse)) return MovingPartyProfile::RiskAverse;
    if (text == slug(MovingPartyProfile::RiskLoving)) return MovingPartyProfile::RiskLoving;
    throw ParseError("unknown profile '" + std::string(text) + "' (expected risk-averse or risk-loving)");
}

std::map<std::string, std::string, std::less<>> read_pairs(std::string_view text) {
    std::map<std::string, std::string, std::less<>> pairs;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const auto raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const auto sep = line.find_first_of("=:");
        const auto where = "line " + std::to_string(line_no);
        if (sep == std::string_view::npos) {
            throw ParseError(where + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, sep));
        auto value = trim(line.substr(sep + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        } else if (!value.empty() && (value.front() == '"' || value.back() == '"')) {
            throw ParseError(where + ": unbalanced quote");
        }
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
            throw ParseError(where + ": unknown key '" + std::string(key) + "'");
        }
        if (!pairs.emplace(std::string(key), std::string(value)).second) {
            throw ParseError(where + ": duplicate key '" + std::string(key) + "'");
        }
    }
    return pairs;
}

}  // namespace

TestCharacteristics characteristics_of(AdjudicationRegime regime) noexcept {
    switch (regime) {
        case AdjudicationRegime::NonRandom:
            return {Probability(0.9), Probability(0.9)};
        case AdjudicationRegime::Random:
            break;
    }
    return {Probability(0.5), Probability(0.5)};
}

PriorBelief prior_of(MovingPartyProfile profile) noexcept {
    switch (profile) {
        case MovingPartyProfile::RiskAverse:
            return PriorBelief(Probability(0.9));
        case MovingPartyProfile::RiskLoving:
            break;
    }
    return PriorBelief(Probability(0.6));
}

std::string_view slug(AdjudicationRegime regime) noexcept {
    return regime == AdjudicationRegime::NonRandom ? "non-random" : "random";
}

std::string_view slug(MovingPartyProfile profile) noexcept {
    return profile == MovingPartyProfile::RiskAverse ? "risk-averse" : "risk-loving";
}

std::string default_name(const CatalogCell& cell) {
    return std::string(slug(cell.regime)) + "/" + std::string(slug(cell.profile));
}

TestCharacteristics Scenario::chars() const noexcept {
    if (const auto* c = std::get_if<CatalogCell>(&cell)) return characteristics_of(c->regime);
    return std::get<CustomCell>(cell).chars;
}

PriorBelief Scenario::prior() const noexcept {
    if (const auto* c = std::get_if<CatalogCell>(&cell)) return prior_of(c->profile);
    return std::get<CustomCell>(cell).prior;
}

const std::vector<Scenario>& catalog() {
    static const std::vector<Scenario> cells = [] {
        std::vector<Scenario> out;
        for (auto regime : {AdjudicationRegime::NonRandom, AdjudicationRegime::Random}) {
            for (auto profile : {MovingPartyProfile::RiskAverse, MovingPartyProfile::RiskLoving}) {
                const CatalogCell cell{regime, profile};
                out.push_back({default_name(cell), cell});
            }
        }
        return out;
    }();
    return cells;
}

const Scenario* find_scenario(std::string_view name) noexcept {
    const auto& cells = catalog();
    const auto it = std::find_if(cells.begin(), cells.end(),
                                 [&](const Scenario& s) { return s.name == name; });
    return it == cells.end() ? nullptr : &*it;
}

PosteriorReport evaluate(const Scenario& scenario) {
    return full_report(scenario.prior(), scenario.chars());
}

Scenario parse_scenario(std::string_view text) {
    const auto pairs = read_pairs(text);

    // Range-check numbers before looking at the document's shape, so an
    // out-of-range value is reported as such even in an incomplete document.
    std::optional<Probability> sens, spec, prior;
    if (auto it = pairs.find("sensitivity"); it != pairs.end()) sens = parse_probability(it->second, "sensitivity");
    if (auto it = pairs.find("specificity"); it != pairs.end()) spec = parse_probability(it->second, "specificity");
    if (auto it = pairs.find("prior"); it != pairs.end()) prior = parse_probability(it->second, "prior");

    const bool any_tag = pairs.contains("regime") || pairs.contains("profile");
    const bool any_override = sens || spec || prior;
    const auto name_it = pairs.find("name");

    if (any_tag && any_override) {
        throw AmbiguousScenario("scenario mixes regime/profile tags with numeric overrides");
    }
    if (any_tag) {
        const auto regime = pairs.find("regime");
        const auto profile = pairs.find("profile");
        if (regime == pairs.end() || profile == pairs.end()) {
            throw ParseError("catalog scenario needs both 'regime' and 'profile'");
        }
        const CatalogCell cell{parse_regime(regime->second), parse_profile(profile->second)};
        return {name_it != pairs.end() ? name_it->second : default_name(cell), cell};
    }
    if (any_override) {
        if (!sens || !spec || !prior) {
            throw ParseError("custom scenario needs all of 'sensitivity', 'specificity' and 'prior'");
        }
        return {name_it != pairs.end() ? name_it->second : "custom",
                CustomCell{TestCharacteristics(*sens, *spec), PriorBelief(*prior)}};
    }
    throw ParseError("scenario document names neither regime/profile nor numeric parameters");
}

std::string serialize_scenario(const Scenario& scenario) {
    std::ostringstream out;
    out << "name = \"" << scenario.name << "\"\n";
    if (const auto* c = std::get_if<CatalogCell>(&scenario.cell)) {
        out << "regime = " << slug(c->regime) << "\n";
        out << "profile = " << slug(c->profile) << "\n";
    } else {
        const auto& custom = std::get<CustomCell>(scenario.cell);
        out << "sensitivity = " << shortest(custom.chars.sensitivity().value()) << "\n";
        out << "specificity = " << shortest(custom.chars.specificity().value()) << "\n";
        out << "prior = " << shortest(custom.prior.p_guilty().value()) << "\n";
    }
    return out.str();
}

}  // namespace litgame
