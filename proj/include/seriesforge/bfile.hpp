#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seriesforge/bigint.hpp"

namespace seriesforge {

class BFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// OEIS b-file: "n a(n)" per line, '#' comment lines and blank lines ignored,
/// indices strictly increasing.
struct BFile {
  std::vector<std::pair<std::int64_t, BigInt>> entries;
};

/// Throws BFileError with the offending line number.
BFile parse_bfile(std::istream& in);
/// Throws BFileError when the file cannot be opened or parsed.
BFile load_bfile(const std::string& path);

}  // namespace seriesforge
