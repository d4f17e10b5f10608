#include "discont/dataset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace discont {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view token, std::size_t line) {
  token = trim(token);
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    throw ParseError(line,
                     "invalid number '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, "non-finite value '" + std::string(token) + "'",
                     Errc::nonfinite_value);
  }
  return value;
}

struct NumberedValue {
  double value = 0.0;
  std::size_t line = 0;  // 1-based CSV line, or element index for JSON
};

// Reports tol-duplicates with the later offending location, before the
// set/function constructor sees them.
void reject_duplicates(std::vector<NumberedValue> values, double tol,
                       Errc code, const char* what) {
  std::stable_sort(values.begin(), values.end(),
                   [](const NumberedValue& a, const NumberedValue& b) {
                     return a.value < b.value;
                   });
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i + 1].value - values[i].value <= tol) {
      std::ostringstream os;
      os << "duplicate " << what << ": " << values[i].value << " and "
         << values[i + 1].value << " are within tol " << tol;
      throw ParseError(std::max(values[i].line, values[i + 1].line), os.str(),
                       code);
    }
  }
}

struct CsvTable {
  std::vector<std::string_view> header;
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
};

CsvTable split_csv(std::string_view text) {
  CsvTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(
          start, comma == std::string_view::npos ? line.size() - start
                                                 : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!saw_header) {
      table.header = std::move(fields);
      saw_header = true;
    } else {
      table.rows.emplace_back(line_no, std::move(fields));
    }
  }
  return table;
}

void require_header(const CsvTable& table,
                    const std::vector<std::string_view>& expected) {
  std::vector<std::string_view> got;
  got.reserve(table.header.size());
  for (auto f : table.header) got.push_back(trim(f));
  if (got != expected) {
    std::string want;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) want += ",";
      want += expected[i];
    }
    throw ParseError(1, "expected CSV header '" + want + "'");
  }
}

std::vector<NumberedValue> csv_single_column(std::string_view text) {
  CsvTable table = split_csv(text);
  require_header(table, {"x"});
  std::vector<NumberedValue> values;
  values.reserve(table.rows.size());
  for (const auto& [line, fields] : table.rows) {
    if (fields.size() != 1) {
      throw ParseError(line, "expected a single column");
    }
    values.push_back(NumberedValue{parse_number(fields[0], line), line});
  }
  return values;
}

DiscreteSet parse_set_csv(std::string_view text, double tol) {
  auto values = csv_single_column(text);
  if (values.empty()) throw ParseError(0, "no data rows", Errc::empty_input);
  reject_duplicates(values, tol, Errc::duplicate_point, "point");
  std::vector<double> pts(values.size());
  std::transform(values.begin(), values.end(), pts.begin(),
                 [](const NumberedValue& v) { return v.value; });
  return DiscreteSet::from_values(std::move(pts), tol);
}

SampledFunction parse_function_csv(std::string_view text, double tol) {
  CsvTable table = split_csv(text);
  require_header(table, {"x", "y"});
  std::vector<NumberedValue> xs;
  std::vector<std::pair<double, double>> pairs;
  for (const auto& [line, fields] : table.rows) {
    if (fields.size() != 2) {
      throw ParseError(line, "expected two columns");
    }
    const double x = parse_number(fields[0], line);
    const double y = parse_number(fields[1], line);
    xs.push_back(NumberedValue{x, line});
    pairs.emplace_back(x, y);
  }
  if (pairs.empty()) throw ParseError(0, "no data rows", Errc::empty_input);
  reject_duplicates(xs, tol, Errc::duplicate_abscissa, "abscissa");
  return SampledFunction::from_pairs(std::move(pairs), tol);
}

RealSubset parse_subset_csv(std::string_view text) {
  auto values = csv_single_column(text);
  if (values.empty()) throw ParseError(0, "no data rows", Errc::empty_input);
  std::vector<double> pts(values.size());
  std::transform(values.begin(), values.end(), pts.begin(),
                 [](const NumberedValue& v) { return v.value; });
  return RealSubset::from_points(pts);
}

json parse_json_array(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  if (!doc.is_array()) {
    throw ParseError(0, "expected a JSON array");
  }
  return doc;
}

double json_number(const json& v, std::size_t index) {
  if (!v.is_number()) {
    throw ParseError(index, "expected a number at element " +
                                std::to_string(index));
  }
  return v.get<double>();
}

std::vector<std::array<double, 2>> json_pairs(const json& doc) {
  std::vector<std::array<double, 2>> out;
  out.reserve(doc.size());
  std::size_t index = 0;
  for (const auto& item : doc) {
    ++index;
    if (!item.is_array() || item.size() != 2) {
      throw ParseError(index, "expected [a, b] at element " +
                                  std::to_string(index));
    }
    out.push_back({json_number(item[0], index), json_number(item[1], index)});
  }
  return out;
}

DiscreteSet parse_set_json(std::string_view text, double tol) {
  json doc = parse_json_array(text);
  if (doc.empty()) throw ParseError(0, "empty array", Errc::empty_input);
  std::vector<NumberedValue> values;
  values.reserve(doc.size());
  std::size_t index = 0;
  for (const auto& item : doc) {
    ++index;
    values.push_back(NumberedValue{json_number(item, index), index});
  }
  reject_duplicates(values, tol, Errc::duplicate_point, "point");
  std::vector<double> pts(values.size());
  std::transform(values.begin(), values.end(), pts.begin(),
                 [](const NumberedValue& v) { return v.value; });
  return DiscreteSet::from_values(std::move(pts), tol);
}

SampledFunction parse_function_json(std::string_view text, double tol) {
  json doc = parse_json_array(text);
  if (doc.empty()) throw ParseError(0, "empty array", Errc::empty_input);
  auto raw = json_pairs(doc);
  std::vector<NumberedValue> xs;
  std::vector<std::pair<double, double>> pairs;
  xs.reserve(raw.size());
  pairs.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    xs.push_back(NumberedValue{raw[i][0], i + 1});
    pairs.emplace_back(raw[i][0], raw[i][1]);
  }
  reject_duplicates(xs, tol, Errc::duplicate_abscissa, "abscissa");
  return SampledFunction::from_pairs(std::move(pairs), tol);
}

RealSubset parse_subset_json(std::string_view text) {
  json doc = parse_json_array(text);
  auto raw = json_pairs(doc);
  std::vector<ClosedInterval> pieces;
  pieces.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i][0] > raw[i][1]) {
      throw ParseError(i + 1, "interval bounds out of order at element " +
                                  std::to_string(i + 1),
                       Errc::invalid_interval);
    }
    pieces.push_back(ClosedInterval{raw[i][0], raw[i][1]});
  }
  return RealSubset::from_intervals(std::move(pieces));
}

}  // namespace

Dataset parse_dataset(std::string_view text, std::string_view source_name,
                      DatasetKind kind, double tol) {
  const bool looks_json = !trim(text).empty() && trim(text).front() == '[';
  Dataset ds;
  ds.kind = kind;
  ds.source = std::string(source_name);
  try {
    switch (kind) {
      case DatasetKind::set:
        ds.payload = looks_json ? parse_set_json(text, tol)
                                : parse_set_csv(text, tol);
        break;
      case DatasetKind::function:
        ds.payload = looks_json ? parse_function_json(text, tol)
                                : parse_function_csv(text, tol);
        break;
      case DatasetKind::subset:
        ds.payload =
            looks_json ? parse_subset_json(text) : parse_subset_csv(text);
        break;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    // Constructor rejection that the pre-checks did not attribute to a line.
    throw ParseError(0, e.what(), e.code());
  }
  return ds;
}

Dataset load_dataset(const std::string& path_or_dash, DatasetKind kind,
                     double tol) {
  std::string text;
  if (path_or_dash == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path_or_dash, std::ios::binary);
    if (!in) {
      throw ParseError(0, "cannot open input file '" + path_or_dash + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return parse_dataset(text, path_or_dash == "-" ? "<stdin>" : path_or_dash,
                       kind, tol);
}

}  // namespace discont
