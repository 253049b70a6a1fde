#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "equisyz/arrangement.hpp"
#include "equisyz/oracle.hpp"
#include "equisyz/resolution.hpp"

namespace equisyz {

enum class IdealKind { Product, Intersection };
enum class Side { Symmetric, Exterior, Both };
enum class OutputFormat { Json, Markdown, Latex };

/// Process exit codes of the command-line tool.
enum class ExitCode : int { Success = 0, ValidationFailure = 1, InputError = 2, SizeCap = 3 };

struct JobConfig {
    /// Exactly one of these is set.
    std::optional<std::string> input_path;
    std::optional<std::string> inline_document;

    int max_degree = 4;
    IdealKind ideal = IdealKind::Product;
    Side side = Side::Both;
    /// Top degree of the brute-force comparison; 0 disables it. Intersection
    /// jobs need it enabled because their series comes from the oracle.
    int oracle_d_max = 0;
    /// dim V for the oracle; defaults to max(oracle_d_max, max_degree for
    /// intersection jobs).
    std::optional<int> dim_v;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> output_path;
    OracleCaps caps;
    int max_subspaces = kDefaultMaxSubspaces;
};

/// Arrangement document:
///   {"ambient_dim": m, "subspaces": [[v, ...], ...]}
/// where each subspace is a (possibly empty) list of spanning vectors of
/// length m, and entries are integers or "p/q" strings. Throws InputError on
/// schema or dimension problems and CapExceeded when there are more than
/// max_subspaces subspaces.
Arrangement parse_arrangement(const nlohmann::json& document,
                              int max_subspaces = kDefaultMaxSubspaces);
Arrangement parse_arrangement_text(const std::string& text, int max_subspaces = kDefaultMaxSubspaces);

struct Validation {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SideReport {
    std::optional<BettiTable> table;
    std::optional<int> regularity;
};

struct OracleDegree {
    int degree = 0;
    WeightTable weights;
    std::optional<SchurSeries> schur;
    std::optional<SchurSeries> expected;
    std::optional<bool> match;
    std::optional<WeightTable> wedge_weights;
    std::optional<SchurSeries> wedge_schur;
    std::optional<SchurSeries> wedge_expected;
    std::optional<bool> wedge_match;
};

struct OracleReport {
    int n = 0;
    int d_max = 0;
    std::vector<OracleDegree> degrees;
};

struct Report {
    Arrangement arrangement{1, {}};
    IdealKind ideal = IdealKind::Product;
    Side side = Side::Both;
    int max_degree = 0;
    std::vector<std::pair<SubsetMask, int>> ranks;
    std::optional<SchurSeries> p_polynomial;
    SchurSeries hilbert{0};
    int generation_degree = 0;
    SideReport symmetric;
    SideReport exterior;
    std::optional<OracleReport> oracle;
    std::vector<Validation> validations;

    bool ok() const;
    ExitCode exit_code() const { return ok() ? ExitCode::Success : ExitCode::ValidationFailure; }
};

/// Loads the arrangement named by cfg and runs the full pipeline. Validation
/// failures (sign pattern, oracle mismatches) are recorded in the report;
/// input problems and caps throw. Progress notes such as the monomial-space
/// size go to `log` when given.
Report run_job(const JobConfig& cfg, std::ostream* log = nullptr);
Report run_job(const JobConfig& cfg, const Arrangement& arr, std::ostream* log = nullptr);

nlohmann::json to_json(const Report& report);
std::string render(const Report& report, OutputFormat format);

IdealKind parse_ideal_kind(const std::string& text);
Side parse_side(const std::string& text);
OutputFormat parse_format(const std::string& text);

} // namespace equisyz
