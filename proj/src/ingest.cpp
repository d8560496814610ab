#include "concom/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace concom {

namespace {

using nlohmann::json;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

int parse_index(const std::string& text, const char* column, std::size_t line) {
    if (text != "1" && text != "2")
        throw ParseError(std::string(column) + " out of range: '" + text + "'", line, column);
    return text[0] - '0';
}

SenseOutcome parse_outcome(const std::string& text, const char* column, std::size_t line) {
    if (text == "+1" || text == "1") return SenseOutcome::InPrimedSense;
    if (text == "-1") return SenseOutcome::OtherSense;
    throw ParseError(std::string(column) + " must be +1 or -1, got '" + text + "'", line, column);
}

double parse_probability(const std::string& text, const char* column, std::size_t line) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string(column) + " is not a number: '" + text + "'", line, column);
    }
    if (pos != text.size() || !std::isfinite(value))
        throw ParseError(std::string(column) + " is not a number: '" + text + "'", line, column);
    return value;
}

constexpr const char* kTrialsHeader = "combination,a_index,b_index,a_outcome,b_outcome";

}  // namespace

std::vector<TrialRecord> parse_trials(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line))
        throw ParseError("empty input, expected header '" + std::string(kTrialsHeader) + "'", 1,
                         "header");
    ++lineno;
    line = strip_cr(line);
    const bool with_subject = line == std::string(kTrialsHeader) + ",subject_id";
    if (!with_subject && line != kTrialsHeader)
        throw ParseError("bad header '" + line + "'", lineno, "header");

    std::vector<TrialRecord> records;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        const std::size_t expected = with_subject ? 6 : 5;
        if (fields.size() != expected)
            throw ParseError("expected " + std::to_string(expected) + " fields, got " +
                                 std::to_string(fields.size()),
                             lineno, "row");
        TrialRecord rec;
        rec.combination = fields[0];
        if (rec.combination.empty()) throw ParseError("empty combination name", lineno, "combination");
        rec.condition.a_index = parse_index(fields[1], "a_index", lineno);
        rec.condition.b_index = parse_index(fields[2], "b_index", lineno);
        rec.a_outcome = parse_outcome(fields[3], "a_outcome", lineno);
        rec.b_outcome = parse_outcome(fields[4], "b_outcome", lineno);
        if (with_subject && !fields[5].empty()) rec.subject_id = fields[5];
        records.push_back(std::move(rec));
    }
    return records;
}

std::string serialize_trials(const std::vector<TrialRecord>& records) {
    const bool with_subject =
        std::any_of(records.begin(), records.end(),
                    [](const TrialRecord& r) { return r.subject_id.has_value(); });
    std::string out = kTrialsHeader;
    if (with_subject) out += ",subject_id";
    out += '\n';
    for (const auto& r : records) {
        out += r.combination;
        out += ',' + std::to_string(r.condition.a_index);
        out += ',' + std::to_string(r.condition.b_index);
        out += ',';
        out += sign_of(r.a_outcome) > 0 ? "+1" : "-1";
        out += ',';
        out += sign_of(r.b_outcome) > 0 ? "+1" : "-1";
        if (with_subject) out += ',' + r.subject_id.value_or("");
        out += '\n';
    }
    return out;
}

TableSet aggregate(const std::vector<TrialRecord>& records) {
    std::vector<std::string> order;
    std::map<std::string, std::array<CountBlock, 4>> counts;
    for (const auto& rec : records) {
        auto it = counts.find(rec.combination);
        if (it == counts.end()) {
            order.push_back(rec.combination);
            std::array<CountBlock, 4> fresh;
            for (const auto& cond : all_conditions()) fresh[cond.slot()].condition = cond;
            it = counts.emplace(rec.combination, fresh).first;
        }
        CountBlock& blk = it->second[rec.condition.slot()];
        ++blk.n[cell_index(sign_of(rec.a_outcome), sign_of(rec.b_outcome))];
    }

    TableSet tables;
    for (const auto& name : order) {
        const auto& blocks = counts.at(name);
        std::vector<std::string> missing;
        for (const auto& cond : all_conditions())
            if (blocks[cond.slot()].total() == 0) missing.push_back(cond.label());
        if (!missing.empty()) throw IncompleteTable(name, missing);

        CombinationTable table;
        table.name = name;
        for (const auto& cond : all_conditions())
            table.blocks[cond.slot()] = normalize(blocks[cond.slot()]);
        tables.emplace_back(name, std::move(table));
    }
    return tables;
}

namespace {

constexpr double kParseSumTolerance = 1e-6;

ConditionBlock block_from_json(const json& value, const std::string& key, PrimingCondition cond,
                               std::optional<std::int64_t> default_n) {
    ConditionBlock blk;
    blk.condition = cond;
    blk.n = default_n;
    const json* cells = &value;
    if (value.is_object()) {
        if (!value.contains("p")) throw ValidationError("block object needs a 'p' array", key);
        cells = &value.at("p");
        if (value.contains("n")) blk.n = value.at("n").get<std::int64_t>();
    }
    if (!cells->is_array() || cells->size() != 4)
        throw ValidationError("block must be a 4-array in cell order (pp, pm, mp, mm)", key);
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        const json& c = (*cells)[i];
        if (!c.is_number()) throw ValidationError("cell is not a number", key, i);
        blk.p[i] = c.get<double>();
        if (blk.p[i] < 0.0) throw ValidationError("negative cell", key, i);
        sum += blk.p[i];
    }
    if (std::abs(sum - 1.0) > kParseSumTolerance)
        throw ValidationError("cells sum to " + std::to_string(sum) + ", expected 1", key);
    return blk;
}

}  // namespace

CombinationTable parse_table(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("not valid JSON: ") + e.what(), "<document>");
    }
    if (!doc.is_object()) throw ValidationError("table must be a JSON object", "<document>");

    CombinationTable table;
    if (doc.contains("name")) table.name = doc.at("name").get<std::string>();
    std::optional<std::int64_t> default_n;
    if (doc.contains("n")) default_n = doc.at("n").get<std::int64_t>();
    if (doc.contains("primes")) {
        const json& p = doc.at("primes");
        table.primes = std::array<std::string, 4>{
            p.value("a1", ""), p.value("a2", ""), p.value("b1", ""), p.value("b2", "")};
    }
    for (const auto& cond : all_conditions()) {
        const std::string key = cond.label();
        if (!doc.contains(key)) throw ValidationError("missing block", key);
        table.blocks[cond.slot()] = block_from_json(doc.at(key), key, cond, default_n);
    }
    return table;
}

CombinationTable parse_table(const std::string& json_text) {
    std::istringstream in(json_text);
    return parse_table(in);
}

std::string serialize_table(const CombinationTable& table, int indent) {
    json doc;
    if (!table.name.empty()) doc["name"] = table.name;
    if (table.primes) {
        doc["primes"] = {{"a1", (*table.primes)[0]},
                         {"a2", (*table.primes)[1]},
                         {"b1", (*table.primes)[2]},
                         {"b2", (*table.primes)[3]}};
    }
    for (const auto& cond : all_conditions()) {
        const ConditionBlock& blk = table.blocks[cond.slot()];
        json cells = json::array({blk.p[0], blk.p[1], blk.p[2], blk.p[3]});
        if (blk.n)
            doc[cond.label()] = {{"p", std::move(cells)}, {"n", *blk.n}};
        else
            doc[cond.label()] = std::move(cells);
    }
    return doc.dump(indent);
}

std::vector<AssociationNorm> parse_norms(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line))
        throw ParseError("empty input, expected header 'cue,word,probability'", 1, "header");
    ++lineno;
    if (strip_cr(line) != "cue,word,probability")
        throw ParseError("bad header '" + line + "'", lineno, "header");

    std::vector<AssociationNorm> norms;
    std::map<std::string, std::size_t> index;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw ParseError("expected 3 fields, got " + std::to_string(fields.size()), lineno,
                             "row");
        const double p = parse_probability(fields[2], "probability", lineno);
        if (p < 0.0) throw ParseError("negative probability", lineno, "probability");
        auto it = index.find(fields[0]);
        if (it == index.end()) {
            index.emplace(fields[0], norms.size());
            norms.push_back({fields[0], {}});
            it = index.find(fields[0]);
        }
        norms[it->second].associates.emplace_back(fields[1], p);
    }
    for (const auto& norm : norms) {
        double sum = 0.0;
        for (const auto& [word, p] : norm.associates) sum += p;
        if (sum > 1.0 + 1e-9)
            throw ParseError("associates of '" + norm.cue + "' sum to " + std::to_string(sum),
                             lineno, "probability");
    }
    return norms;
}

double sense_probability(const AssociationNorm& norm, const std::set<std::string>& sense_words) {
    if (sense_words.empty()) throw Error("sense_words must be nonempty");
    double total = 0.0;
    for (const auto& [word, p] : norm.associates)
        if (sense_words.count(word)) total += p;
    return total;
}

}  // namespace concom
