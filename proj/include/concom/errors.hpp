#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace concom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// normalize() on an empty count block
struct ZeroTrials : Error {
    using Error::Error;
};

// malformed row in a CSV stream; line is 1-based, column names the offending field
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::string column)
        : Error(what + " (line " + std::to_string(line) + ", column " + column + ")"),
          line(line),
          column(std::move(column)) {}
    std::size_t line;
    std::string column;
};

// table JSON that parses but does not satisfy block invariants
struct ValidationError : Error {
    ValidationError(const std::string& what, std::string block, int cell = -1)
        : Error(what + " (block " + block + (cell >= 0 ? ", cell " + std::to_string(cell) : "") + ")"),
          block(std::move(block)),
          cell(cell) {}
    std::string block;
    int cell;
};

// aggregation found a combination with no trials in one or more conditions
struct IncompleteTable : Error {
    IncompleteTable(std::string combination, std::vector<std::string> missing_conditions)
        : Error("combination '" + combination + "' has no trials for: " + join(missing_conditions)),
          combination(std::move(combination)),
          missing(std::move(missing_conditions)) {}
    std::string combination;
    std::vector<std::string> missing;

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
        return out;
    }
};

// statistical marginal-selectivity test requested on a table without per-block n
struct MissingSampleSizes : Error {
    using Error::Error;
};

// chi-square called with an empty sample
struct InvalidSampleSize : Error {
    using Error::Error;
};

// simplex exceeded its pivot budget; carries the best residual seen
struct IterationLimit : Error {
    IterationLimit(int pivots, double best_residual)
        : Error("simplex pivot budget exhausted after " + std::to_string(pivots) +
                " pivots (best residual " + std::to_string(best_residual) + ")"),
          pivots(pivots),
          best_residual(best_residual) {}
    int pivots;
    double best_residual;
};

}  // namespace concom
