#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qtanner {

// Malformed caller input: dimension mismatches, unknown families, bad files.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A stated precondition does not hold; callers may catch and fall back.
class precondition_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Internal consistency violation (e.g. a CSS pair with Hx*Hz^T != 0).
class integrity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Side { X, Z };

inline const char* to_string(Side s) { return s == Side::X ? "X" : "Z"; }

// Minimum distance of a code; the zero code has infinite distance.
// Infinity is a distinguished state, not a sentinel integer, and sorts
// after every finite value.
class Distance {
public:
  Distance() = default;
  static Distance infinite() { return Distance{}; }
  static Distance finite(std::uint32_t w) {
    Distance d;
    d.value_ = w;
    return d;
  }

  bool is_finite() const { return value_.has_value(); }
  std::uint32_t value() const {
    if (!value_) throw precondition_error("Distance: value() on infinite distance");
    return *value_;
  }

  friend bool operator==(const Distance&, const Distance&) = default;
  friend std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
    if (a.value_ && b.value_) return *a.value_ <=> *b.value_;
    if (a.value_) return std::strong_ordering::less;     // finite < infinite
    if (b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Distance min(const Distance& a, const Distance& b) { return a < b ? a : b; }

  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

private:
  std::optional<std::uint32_t> value_;  // nullopt = infinite
};

}  // namespace qtanner
