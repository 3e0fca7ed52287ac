#include "qmod/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace qmod::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string render_csv(const Dataset& ds) {
  if (ds.columns.empty()) throw std::invalid_argument("dataset has no columns");
  const size_t rows = ds.columns.front().size();
  for (const auto& c : ds.columns)
    if (c.size() != rows) throw std::invalid_argument("dataset columns have unequal lengths");

  std::string out;
  for (size_t c = 0; c < ds.columns.size(); ++c) {
    if (c) out += ',';
    out += ds.columns[c].name;
  }
  out += '\n';
  out += "# " + ds.param_echo + "\n";
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < ds.columns.size(); ++c) {
      if (c) out += ',';
      const Column& col = ds.columns[c];
      out += col.is_text() ? col.str[r] : format_double(col.num[r]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Dataset& ds) {
  json root;
  root["meta"] = ds.meta;
  root["meta"]["param_echo"] = ds.param_echo;
  json cols = json::object();
  for (const auto& c : ds.columns) {
    if (c.is_text()) {
      cols[c.name] = c.str;
    } else {
      cols[c.name] = c.num;
    }
  }
  root["columns"] = cols;
  return root.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

void write_dataset(const Dataset& ds, const std::string& path, Format fmt) {
  write_file(path, fmt == Format::csv ? render_csv(ds) : render_json(ds));
}

}  // namespace qmod::io
