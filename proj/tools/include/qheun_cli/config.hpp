#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qheun/grid.hpp"

namespace qheun::cli {

using Json = nlohmann::ordered_json;

/// Check families in their fixed report order.
inline const std::vector<std::string>& all_modes() {
  static const std::vector<std::string> m = {"construct", "apply", "raising", "identities",
                                             "gauge",     "w2w1",  "elliptic", "classical"};
  return m;
}

struct RunConfig {
  std::string source;
  GridParams grid;
  std::string parametrization = "eta";  // rho | eta | epsilon
  std::optional<std::array<Rational, 9>> eta;
  std::optional<std::array<Rational, 11>> rho;
  std::optional<std::array<Rational, 6>> c;
  Rational c0{0};
  int n_max = 6;
  int m_max = 6;
  std::vector<std::string> modes;
  long precision = 256;
  std::vector<std::string> p_list{"1e-3", "1e-4", "1e-5"};
  std::vector<std::string> classical_p_list{"1e-3", "1e-4", "1e-5", "1e-6"};
  std::vector<std::string> z_list{"0.37", "0.61", "1.9", "2.7", "0.83"};
  Rational t{1, 3};
  std::uint64_t seed = 1;
  int points = 3;
  std::string out = "report.json";
};

/// ParseError for unreadable files and malformed fields (field named in the
/// message); InvalidParameters when a grid or parameter invariant fails.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_json(const Json& j, const std::string& source);

/// Re-checks every invariant after command-line overrides.
void validate_config(const RunConfig& c);

/// Canonical echo of the configuration, exact scalars as text.
Json to_json(const RunConfig& c);

}  // namespace qheun::cli
