#pragma once

// Parsing of raw experimental data: per-trial CSV, table JSON, and
// free-association norms CSV. Parsers either succeed completely or throw;
// no partial silent acceptance.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "concom/model.hpp"

namespace concom {

struct TrialRecord {
    std::string combination;
    PrimingCondition condition;
    SenseOutcome a_outcome = SenseOutcome::InPrimedSense;
    SenseOutcome b_outcome = SenseOutcome::InPrimedSense;
    std::optional<std::string> subject_id;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Free-association production probabilities for one cue word.
struct AssociationNorm {
    std::string cue;
    std::vector<std::pair<std::string, double>> associates;
};

// CSV with header `combination,a_index,b_index,a_outcome,b_outcome[,subject_id]`.
// Outcomes accept +1/1/-1. Throws ParseError with line number and column on
// any malformed row.
std::vector<TrialRecord> parse_trials(std::istream& in);

std::string serialize_trials(const std::vector<TrialRecord>& records);

// Tables keyed by combination name, in order of first appearance. Counts
// per (condition, outcome pair) are normalized per condition; any
// combination with an empty condition raises IncompleteTable.
using TableSet = std::vector<std::pair<std::string, CombinationTable>>;
TableSet aggregate(const std::vector<TrialRecord>& records);

// JSON object with four blocks `a1b1,a1b2,a2b1,a2b2`, each either a 4-array
// in canonical cell order or {"p": [...], "n": N}; optional "name",
// "primes" ({"a1":..,"a2":..,"b1":..,"b2":..}) and table-wide "n". Throws
// ValidationError naming the failing block and cell.
CombinationTable parse_table(std::istream& in);
CombinationTable parse_table(const std::string& json_text);

std::string serialize_table(const CombinationTable& table, int indent = -1);

// CSV `cue,word,probability`, grouped by cue in order of first appearance.
std::vector<AssociationNorm> parse_norms(std::istream& in);

// Total production probability of the associates naming a sense; words
// missing from the norm contribute 0.
double sense_probability(const AssociationNorm& norm, const std::set<std::string>& sense_words);

}  // namespace concom
