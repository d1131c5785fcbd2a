#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "litgame/inference.hpp"
#include "litgame/probability.hpp"

namespace litgame {

/// An inclusive range [lo, hi] walked in steps of `step`, or a single value.
///
/// Materialization yields lo, lo + step, ... and always ends with hi, which
/// is appended when the last step falls short of it by more than 1e-9.
class Axis {
public:
    static Axis fixed(Probability value) noexcept;
    /// Throws ValidationError unless lo <= hi and step > 0 (and finite).
    static Axis range(Probability lo, Probability hi, double step);

    /// Accepts `lo:hi:step` or a single number. Throws ParseError or
    /// ValidationError.
    static Axis parse(std::string_view text, std::string_view what);

    [[nodiscard]] std::vector<Probability> materialize() const;
    /// Number of values materialize() returns, without allocating them.
    [[nodiscard]] std::size_t size() const noexcept;

private:
    Axis(Probability lo, Probability hi, double step) noexcept : lo_(lo), hi_(hi), step_(step) {}

    Probability lo_;
    Probability hi_;
    double step_;  // 0 for a fixed axis
};

inline constexpr std::size_t kDefaultMaxCells = 1'000'000;

struct GridSpec {
    Axis prior;
    Axis sensitivity;
    Axis specificity;
    std::size_t max_cells = kDefaultMaxCells;

    [[nodiscard]] std::size_t cell_count() const noexcept;
};

/// One lattice point projected out of full_report.
struct SweepRow {
    Probability prior;
    Probability sensitivity;
    Probability specificity;
    Probability p_positive;
    std::optional<Probability> ppv;
    std::optional<Probability> npv;
};

/// One row per lattice point, ordered by (prior, sensitivity, specificity).
/// Throws GridTooLarge when the lattice exceeds grid.max_cells.
std::vector<SweepRow> run_sweep(const GridSpec& grid);

struct BreakEvenPoint {
    TestCharacteristics chars;
    std::optional<Probability> required_prior;  ///< absent when unreachable
};

/// required_prior for each entry. Unreachable entries are marked, never thrown.
std::vector<BreakEvenPoint> break_even_curve(const std::vector<TestCharacteristics>& chars_axis,
                                             Probability target_ppv);

inline constexpr std::string_view kSweepCsvHeader = "prior,sensitivity,specificity,p_positive,ppv,npv";

/// CSV with kSweepCsvHeader, LF line endings, absent cells left empty and
/// numbers in shortest round-trip form.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace litgame
