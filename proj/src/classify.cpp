#include "fanok/classify.hpp"

#include <algorithm>
#include <sstream>

#include "fanok/errors.hpp"

namespace fanok {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (const char ch : line) {
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

long parse_nonneg_int(const std::string& text, std::size_t line_no, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw ParseError("line " + std::to_string(line_no) + ": " + what +
                     " must be a nonnegative integer, got \"" + text + "\"");
  try {
    return std::stol(text);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what + " out of range");
  }
}

}  // namespace

std::vector<FamilyRecord> load_table(std::istream& source) {
  std::vector<FamilyRecord> table;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && source.eof()) break;
    if (!saw_header) {
      if (line != "id,b2,b3,degree")
        throw ParseError("line 1: expected header \"id,b2,b3,degree\", got \"" + line + "\"");
      saw_header = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 4)
      throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                       std::to_string(fields.size()));
    FamilyRecord rec;
    rec.id = fields[0];
    if (rec.id.empty())
      throw ParseError("line " + std::to_string(line_no) + ": empty family id");
    rec.b2 = parse_nonneg_int(fields[1], line_no, "b2");
    rec.b3 = parse_nonneg_int(fields[2], line_no, "b3");
    try {
      rec.degree = Rational::parse(fields[3]);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    for (const auto& prev : table)
      if (prev.id == rec.id) throw InputError("duplicate family id \"" + rec.id + "\"");
    table.push_back(std::move(rec));
  }
  if (!saw_header) throw ParseError("line 1: missing header \"id,b2,b3,degree\"");
  return table;
}

std::string serialize_table(const std::vector<FamilyRecord>& table) {
  std::ostringstream os;
  os << "id,b2,b3,degree\n";
  for (const auto& rec : table)
    os << rec.id << "," << rec.b2 << "," << rec.b3 << "," << rec.degree.str() << "\n";
  return os.str();
}

std::vector<std::string> match_invariants(const std::vector<FamilyRecord>& table, long b2,
                                          long b3, const Rational& degree) {
  std::vector<std::string> ids;
  for (const auto& rec : table)
    if (rec.b2 == b2 && rec.b3 == b3 && rec.degree == degree) ids.push_back(rec.id);
  return ids;
}

std::string smooth_limit_report(const std::vector<std::string>& matches,
                                const StabilityVerdict& verdict) {
  if (matches.empty()) return "inconclusive (no family matched the invariant triple)";
  if (verdict.admits_krs != Claim::No)
    return "inconclusive (soliton exclusion not established for the matched families)";
  std::ostringstream os;
  os << "limit must be singular: a smooth limit would deform the variety within ";
  if (matches.size() == 1)
    os << "family " << matches[0];
  else {
    os << "one of the families {";
    for (std::size_t i = 0; i < matches.size(); ++i) os << (i ? ", " : "") << matches[i];
    os << "}";
  }
  os << " (Betti numbers and anticanonical degree are deformation invariants), every member "
        "of which admits no Kahler-Ricci soliton, while a smooth limit of the flow would "
        "carry one; the contradiction forces a singular limit (type II flow)";
  return os.str();
}

}  // namespace fanok
