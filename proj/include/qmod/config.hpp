#pragma once

// Run configuration shared by the CLI subcommands. Config files are
// flat key=value text, one pair per line, '#' comments; flags given on
// the command line win over file values.

#include <optional>
#include <string>

#include "qmod/params.hpp"

namespace qmod {

struct RunConfig {
  enum class Model { cavity, freespace };
  enum class Format { csv, json };

  Model model = Model::cavity;
  CavityParams cavity;
  FreeSpaceParams fs;
  double t_max = 40.0;
  double dt = 0.01;
  std::optional<int> n_bar;  // fixed truncation override; auto when absent
  double tol = 1e-8;
  std::string output = "trace.csv";
  Format format = Format::csv;

  bool operator==(const RunConfig&) const = default;
};

// Serializes every key relevant to the selected model; the result
// re-parses to an identical RunConfig.
std::string dump_config(const RunConfig& cfg);

// Parses dump_config output or a hand-written file. Unknown keys and
// malformed values raise std::invalid_argument naming the key.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

}  // namespace qmod
