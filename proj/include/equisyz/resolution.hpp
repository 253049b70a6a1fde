#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "equisyz/symfunc.hpp"

namespace equisyz {

/// Equivariant Betti table of a module with a linear resolution: column i is
/// the character of Tor_i, concentrated in internal degree i + t.
struct BettiTable {
    int t = 0;
    /// Truncation degree of the series the table was read from.
    int degree = 0;
    std::vector<SchurSeries> columns;

    int max_index() const noexcept { return static_cast<int>(columns.size()) - 1; }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Reads Tor characters off sigma^{-m} H. Throws ValidationError when the
/// series cannot come from a linear resolution generated in degree t: a
/// nonzero term below degree t, an empty degree-t part for nonzero H, or a
/// coefficient in degree d whose sign is not (-1)^{d-t}.
BettiTable betti_from_series(const SchurSeries& h, int ambient_dim, int t);

/// Least s with deg Tor_i <= s + i for every computed column. Throws
/// InputError for a table with no nonzero column.
int regularity(const BettiTable& table);

/// Applies omega to every column.
BettiTable transpose_table(const BettiTable& table);

/// sum_i (-1)^i sigma^m * column_i, truncated to the table's degree.
SchurSeries series_from_betti(const BettiTable& table, int ambient_dim);

/// Total multiplicity sum_lambda a_lambda of a column.
Integer total_multiplicity(const SchurSeries& column);

nlohmann::json to_json(const BettiTable& table);
std::string to_markdown(const BettiTable& table);
std::string to_latex(const BettiTable& table);

/// "S_{(2,1)}^{3} + S_{(1,1,1)}" style rendering used by the text formats.
std::string render_terms(const SchurSeries& column, bool latex);

} // namespace equisyz
