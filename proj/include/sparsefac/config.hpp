#pragma once

#include <cstddef>
#include <string>

namespace sparsefac {

struct Config {
  std::size_t max_dense_cells = 50'000'000;
  unsigned max_delta = 3;
  // Degree bound used to size the Psi isolation scheme; 0 means "use delta".
  unsigned iso_degree_cap = 0;
  std::size_t su_cap = 2'000'000;
  std::size_t su_sample = 4096;
  std::size_t cd_oracle_limit = 64;
  unsigned jobs = 1;
  bool verbose = false;
};

// key = value lines; '#' starts a comment; unknown keys raise ParseError.
Config load_config(const std::string& path);
Config parse_config(const std::string& text);

}  // namespace sparsefac
