#pragma once

// Presentation matrices read from text or JSON.
//
// Text format: one row per line, entries separated by whitespace, `#`
// starts a comment, and an optional `variables: x y` line declares the
// variable names.  JSON format: {"variables": [...], "rows": [[...], ...]}
// with string or integer entries.
//
// An entry is a rational ("3", "-2/5") or a signed monomial term such as
// "x^2y", "2xy", "-3*x*y^2", "1/2*x".  Without a declaration a variable is a
// letter followed by optional digits.  Every variable is sent to 1, so the
// coefficient matrix keeps only the coefficients; the exponents are kept for
// display.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrt/exactq.hpp"

namespace mrt {

class ParseError : public std::runtime_error {
  public:
    /// row and column are 1-based positions in the matrix; 0 when the
    /// error is not tied to an entry.
    ParseError(std::size_t row, std::size_t column, const std::string& what);
    [[nodiscard]] std::size_t row() const { return row_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t row_;
    std::size_t column_;
};

struct Entry {
    std::string text;
    Rat coefficient;
    /// Exponents over InputMatrix::variables; absent for a zero entry.
    std::optional<std::vector<int>> degree;
};

struct InputMatrix {
    std::vector<std::string> variables;
    std::vector<std::vector<Entry>> rows;
    /// The raw bytes the matrix was read from.
    std::string source;

    [[nodiscard]] std::size_t nrows() const { return rows.size(); }
    [[nodiscard]] std::size_t ncols() const { return rows.empty() ? 0 : rows.front().size(); }
    /// Entries evaluated at all variables = 1.
    [[nodiscard]] QMatrix coefficients() const;
};

/// Parses one entry.  With an empty `variables` list the names are inferred
/// and the exponents follow their alphabetical order.
Entry parse_entry(const std::string& text, const std::vector<std::string>& variables = {});

/// Dispatches on the first non-blank character: '{' means JSON.
InputMatrix ingest_text(const std::string& text);
/// Reads a file, or standard input for "-".  Throws ParseError on I/O
/// failure as well.
InputMatrix ingest_file(const std::string& path);

}  // namespace mrt
