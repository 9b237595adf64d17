#include "circext/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace circext {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

double parse_rational(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty numeric value");
  std::size_t slash = t.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      double v = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument("");
      return v;
    }
    std::string num = trim(t.substr(0, slash)), den = trim(t.substr(slash + 1));
    double n = std::stod(num, &used);
    if (used != num.size()) throw std::invalid_argument("");
    double d = std::stod(den, &used);
    if (used != den.size()) throw std::invalid_argument("");
    if (d == 0.0) throw std::invalid_argument("");
    return n / d;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number: '" + t + "'");
  }
}

const std::string& ConfigSection::get(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end())
    throw std::invalid_argument("config section [" + kind + " " + name +
                                "] missing key '" + key + "'");
  return it->second;
}

std::string ConfigSection::get_or(const std::string& key,
                                  const std::string& fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

std::vector<ConfigSection> parse_config(const std::string& text) {
  std::vector<ConfigSection> sections;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("malformed section header: " + line);
      std::string header = trim(line.substr(1, line.size() - 2));
      ConfigSection s;
      std::size_t sp = header.find_first_of(" \t");
      if (sp == std::string::npos) {
        s.kind = header;
      } else {
        s.kind = header.substr(0, sp);
        s.name = trim(header.substr(sp + 1));
      }
      sections.push_back(std::move(s));
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key = value, got: " + line);
    if (sections.empty())
      throw std::invalid_argument("key before any [section]: " + line);
    sections.back().values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return sections;
}

std::vector<ConfigSection> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

SelfSimilarMeasure measure_from_section(const ConfigSection& section) {
  int m = static_cast<int>(parse_rational(section.get("m")));
  double rho = parse_rational(section.get("rho"));
  std::vector<double> digits;
  std::string list = section.get("digits");
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    std::string item = comma == std::string::npos ? list.substr(start)
                                                  : list.substr(start, comma - start);
    digits.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return SelfSimilarMeasure(m, rho, std::move(digits),
                            section.name.empty() ? "measure" : section.name);
}

std::vector<SelfSimilarMeasure> measures_from_config(const std::string& path) {
  std::vector<SelfSimilarMeasure> out;
  for (const auto& s : parse_config_file(path))
    if (s.kind == "measure") out.push_back(measure_from_section(s));
  return out;
}

}  // namespace circext
