#include "sortforge/key_io.hpp"

#include <charconv>
#include <string>

namespace sortforge {

KeyList read_keys(std::istream& in) {
  KeyList keys;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) throw KeyFormatError(number, "empty line");
    Key value = 0;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(line.data(), end, value);
    if (ec == std::errc::result_out_of_range)
      throw KeyFormatError(number, "key out of 64-bit range: \"" + line + "\"");
    if (ec != std::errc() || ptr != end)
      throw KeyFormatError(number, "not a decimal integer: \"" + line + "\"");
    // No padding: reject "+1", "01", "-0".
    if (line != std::to_string(value))
      throw KeyFormatError(number, "non-canonical integer: \"" + line + "\"");
    keys.push_back(value);
  }
  return keys;
}

void write_keys(std::ostream& out, const KeyList& keys) {
  std::string buffer;
  for (Key k : keys) {
    buffer += std::to_string(k);
    buffer += '\n';
  }
  out << buffer;
}

}  // namespace sortforge
