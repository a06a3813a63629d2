#include "splitcheck/scheme_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "splitcheck/errors.hpp"

namespace splitcheck::splitting {

SplittingScheme read_scheme(std::istream& is) {
  std::string name = "unnamed";
  bool canonical = false;
  std::vector<Operand> operands;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string value, extra;
    if (!(ls >> value) || (ls >> extra)) {
      throw ConfigError("scheme line " + std::to_string(lineno) + ": expected '<key> <value>'");
    }
    if (key == "name") {
      name = value;
    } else if (key == "canonical") {
      if (value != "true" && value != "false") {
        throw ConfigError("scheme line " + std::to_string(lineno) + ": canonical must be true|false");
      }
      canonical = value == "true";
    } else {
      std::size_t used = 0;
      double coefficient = 0.0;
      try {
        coefficient = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || used == 0) {
        throw ConfigError("scheme line " + std::to_string(lineno) + ": bad coefficient '" + value + "'");
      }
      operands.push_back({key, coefficient});
    }
  }
  return SplittingScheme(name, std::move(operands), canonical);
}

void write_scheme(std::ostream& os, const SplittingScheme& scheme) {
  os << "name " << scheme.name() << '\n';
  os << "canonical " << (scheme.canonical() ? "true" : "false") << '\n';
  char buf[64];
  for (const auto& op : scheme.operands()) {
    std::snprintf(buf, sizeof buf, "%.17g", op.coefficient);
    os << op.ref << ' ' << buf << '\n';
  }
}

SplittingScheme load_scheme(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open scheme file " + path.string());
  return read_scheme(is);
}

}  // namespace splitcheck::splitting
