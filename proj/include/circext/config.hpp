#pragma once

#include <map>
#include <string>
#include <vector>

#include "circext/measure.hpp"

namespace circext {

/// "3/4" or "0.75" -> double; throws std::invalid_argument on junk.
double parse_rational(const std::string& text);

struct ConfigSection {
  std::string kind;  // first token of the [header]
  std::string name;  // remainder (may be empty)
  std::map<std::string, std::string> values;

  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
};

/// Plain-text key = value config with [section name] headers and # comments.
std::vector<ConfigSection> parse_config(const std::string& text);
std::vector<ConfigSection> parse_config_file(const std::string& path);

/// Build a measure from a section with keys m, rho, digits.
SelfSimilarMeasure measure_from_section(const ConfigSection& section);

/// All [measure ...] sections of a config file, in file order.
std::vector<SelfSimilarMeasure> measures_from_config(const std::string& path);

}  // namespace circext
