#ifndef H2MP_TYPES_HPP
#define H2MP_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace h2mp {

using index_t = std::uint32_t;

enum class Side { images, tags };

inline Side other(Side s) { return s == Side::images ? Side::tags : Side::images; }

// Base error for anything the library rejects at runtime (bad graph input,
// violated preconditions, degenerate instances).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised while reading edge files; the message carries file and line context.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace h2mp

#endif
