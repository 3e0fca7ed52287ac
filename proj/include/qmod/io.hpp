#pragma once

// Dataset serialization. CSV layout: header line, then a '#'-prefixed
// parameter echo, then rows; floats use '.' decimals and 17 significant
// digits regardless of locale. JSON mirrors the columns plus a meta
// block (NaN serializes as null).

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qmod::io {

using json = nlohmann::ordered_json;

// Locale-independent float rendering, 17 significant digits.
std::string format_double(double v);

struct Column {
  std::string name;
  std::vector<double> num;
  std::vector<std::string> str;  // used instead of num when is_text

  bool is_text() const { return !str.empty() || num.empty(); }
  size_t size() const { return is_text() ? str.size() : num.size(); }
};

struct Dataset {
  std::vector<Column> columns;
  std::string param_echo;  // single line, without the leading '#'
  json meta;               // serialized only in JSON output
};

enum class Format { csv, json };

std::string render_csv(const Dataset& ds);
std::string render_json(const Dataset& ds);
void write_file(const std::string& path, const std::string& content);
void write_dataset(const Dataset& ds, const std::string& path, Format fmt);

}  // namespace qmod::io
