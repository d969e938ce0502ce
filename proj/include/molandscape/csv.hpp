#ifndef MOLANDSCAPE_CSV_HPP
#define MOLANDSCAPE_CSV_HPP

#include <string>

namespace molandscape::csv {

/// Shortest decimal text that round-trips to the same double.
std::string number(double value);

}  // namespace molandscape::csv

#endif  // MOLANDSCAPE_CSV_HPP
