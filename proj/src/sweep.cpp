#include "litgame/sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "litgame/errors.hpp"

namespace litgame {

namespace {

constexpr double kEndpointSlack = 1e-9;
// Lattice values are snapped to this resolution so that 0.1 * 3 reads as 0.3.
constexpr double kSnap = 1e12;

std::size_t saturating_mul(std::size_t a, std::size_t b) noexcept {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        return std::numeric_limits<std::size_t>::max();
    }
    return a * b;
}

void put_number(std::ostream& out, double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    out.write(buf.data(), ptr - buf.data());
}

void put_optional(std::ostream& out, const std::optional<Probability>& p) {
    if (p) put_number(out, p->value());
}

}  // namespace

Axis Axis::fixed(Probability value) noexcept { return Axis(value, value, 0.0); }

Axis Axis::range(Probability lo, Probability hi, double step) {
    if (lo > hi) throw ValidationError("axis lower bound exceeds upper bound");
    if (!(step > 0.0) || !std::isfinite(step)) throw ValidationError("axis step must be positive");
    return Axis(lo, hi, step);
}

Axis Axis::parse(std::string_view text, std::string_view what) {
    const auto first_colon = text.find(':');
    if (first_colon == std::string_view::npos) {
        return fixed(parse_probability(text, what));
    }
    const auto second_colon = text.find(':', first_colon + 1);
    if (second_colon == std::string_view::npos || text.find(':', second_colon + 1) != std::string_view::npos) {
        throw ParseError(std::string(what) + ": expected lo:hi:step or a single number, got '" +
                         std::string(text) + "'");
    }
    const Probability lo = parse_probability(text.substr(0, first_colon), what);
    const Probability hi = parse_probability(text.substr(first_colon + 1, second_colon - first_colon - 1), what);

    auto step_text = text.substr(second_colon + 1);
    double step = 0.0;
    const auto [ptr, ec] = std::from_chars(step_text.data(), step_text.data() + step_text.size(), step);
    if (step_text.empty() || ec != std::errc{} || ptr != step_text.data() + step_text.size()) {
        throw ParseError(std::string(what) + ": step is not a number: '" + std::string(step_text) + "'");
    }
    return range(lo, hi, step);
}

std::size_t Axis::size() const noexcept {
    if (step_ == 0.0) return 1;
    const double steps = std::floor((hi_.value() - lo_.value() + kEndpointSlack) / step_);
    if (steps >= 1e18) return std::numeric_limits<std::size_t>::max();
    auto n = static_cast<std::size_t>(steps) + 1;
    const double last = lo_.value() + static_cast<double>(n - 1) * step_;
    if (last < hi_.value() - kEndpointSlack) ++n;
    return n;
}

std::vector<Probability> Axis::materialize() const {
    if (step_ == 0.0) return {lo_};
    const double steps = std::floor((hi_.value() - lo_.value() + kEndpointSlack) / step_);
    const auto on_lattice = static_cast<std::size_t>(steps) + 1;
    std::vector<Probability> values;
    values.reserve(on_lattice + 1);
    for (std::size_t k = 0; k < on_lattice; ++k) {
        double v = lo_.value() + static_cast<double>(k) * step_;
        v = std::round(v * kSnap) / kSnap;
        values.push_back(Probability(std::clamp(v, lo_.value(), hi_.value())));
    }
    const double last = lo_.value() + static_cast<double>(on_lattice - 1) * step_;
    if (last < hi_.value() - kEndpointSlack) values.push_back(hi_);
    return values;
}

std::size_t GridSpec::cell_count() const noexcept {
    return saturating_mul(saturating_mul(prior.size(), sensitivity.size()), specificity.size());
}

std::vector<SweepRow> run_sweep(const GridSpec& grid) {
    const std::size_t cells = grid.cell_count();
    if (cells > grid.max_cells) {
        throw GridTooLarge("grid has " + std::to_string(cells) + " cells, limit is " +
                           std::to_string(grid.max_cells));
    }
    const auto priors = grid.prior.materialize();
    const auto sens = grid.sensitivity.materialize();
    const auto specs = grid.specificity.materialize();

    std::vector<SweepRow> rows;
    rows.reserve(cells);
    for (const auto p : priors) {
        for (const auto s : sens) {
            for (const auto c : specs) {
                const auto report = full_report(PriorBelief(p), TestCharacteristics(s, c));
                rows.push_back({p, s, c, report.p_positive, report.ppv, report.npv});
            }
        }
    }
    return rows;
}

std::vector<BreakEvenPoint> break_even_curve(const std::vector<TestCharacteristics>& chars_axis,
                                             Probability target_ppv) {
    std::vector<BreakEvenPoint> curve;
    curve.reserve(chars_axis.size());
    for (const auto& chars : chars_axis) {
        BreakEvenPoint point{chars, std::nullopt};
        try {
            point.required_prior = required_prior(chars, target_ppv);
        } catch (const UnreachableTarget&) {
        }
        curve.push_back(point);
    }
    return curve;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << '\n';
    for (const auto& row : rows) {
        put_number(out, row.prior.value());
        out << ',';
        put_number(out, row.sensitivity.value());
        out << ',';
        put_number(out, row.specificity.value());
        out << ',';
        put_number(out, row.p_positive.value());
        out << ',';
        put_optional(out, row.ppv);
        out << ',';
        put_optional(out, row.npv);
        out << '\n';
    }
}

}  // namespace litgame
