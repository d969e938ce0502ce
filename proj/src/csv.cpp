#include "molandscape/csv.hpp"

#include <array>
#include <charconv>

namespace molandscape::csv {

std::string number(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), ec == std::errc{} ? ptr : buf.data()};
}

}  // namespace molandscape::csv
