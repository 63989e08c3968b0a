#include "seriesforge/bfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace seriesforge {

BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw BFileError("b-file line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    if (!(fields >> index_text) || index_text.front() == '#') continue;
    if (!(fields >> value_text)) fail("missing value");
    if (fields >> extra) fail("unexpected text '" + extra + "'");

    std::int64_t index = 0;
    auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if (ec != std::errc() || ptr != index_text.data() + index_text.size()) fail("bad index '" + index_text + "'");
    if (!out.entries.empty() && index <= out.entries.back().first) fail("indices must be strictly increasing");
    try {
      out.entries.emplace_back(index, BigInt(value_text));
    } catch (const std::invalid_argument&) {
      fail("bad value '" + value_text + "'");
    }
  }
  return out;
}

BFile load_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BFileError("cannot open b-file " + path);
  return parse_bfile(in);
}

}  // namespace seriesforge
