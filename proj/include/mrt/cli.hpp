#pragma once

// Subcommands of the `mrt` tool as library calls, plus their JSON and DOT
// serializations.
//
// Reports follow one versioned schema: {"schema", "command", "input",
// "results", "passed"}.  Element sets are ascending integer arrays,
// rationals are strings, and every list has a fixed documented order, so
// equal inputs give byte-identical reports.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mrt/ingest.hpp"
#include "mrt/matroid.hpp"
#include "mrt/tflats.hpp"

namespace mrt {

inline constexpr const char* kReportSchema = "mrt-report/1";

/// A subcommand precondition that fails; the tool exits with status 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

/// Accepts "1234", "1,2,3,4" and "{1,2,3,4}"; digits without separators are
/// single elements.  Throws UsageError.
ElementSet parse_element_set(const std::string& text);

nlohmann::json set_json(ElementSet s);
std::string rat_string(const Rat& q);

/// "1234" when every element is a digit, else "1,2,12".
std::string compact(ElementSet s);

/// The T-flats inside `a` that contain min a, with the covers between them.
/// Qualified covers carry their label; qualified covers on no decreasing
/// chain are dashed.
std::string lattice_dot(const Matroid& m, const TFlatLattice& l, ElementSet a);

/// An r x n matrix with entries p/q, |p| <= 5, 1 <= q <= 3, every r columns
/// independent.  Deterministic in the seed; resamples until generic.
QMatrix generate_uniform(int r, int n, std::uint64_t seed);

struct CommandOptions {
    std::optional<ElementSet> tflat;
    int r = 0, n = 0;  // gen-uniform
    std::uint64_t seed = 0;
};

struct CommandOutput {
    nlohmann::json report;
    std::string text;
    std::string dot;  // tflats only
    int exit_code = 0;
};

/// The known subcommand names, in help order.
const std::vector<std::string>& command_names();

/// `input` is ignored by gen-uniform and required by every other command.
/// Throws UsageError for unknown commands and failed preconditions.
CommandOutput run_command(const std::string& command, const InputMatrix* input, const CommandOptions& options);

}  // namespace mrt
