#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cy3 {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line = -1)
      : Error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_number(line) {}
  int line_number;
};

// Fundamental group of a crepant resolution, in the catalog's labelling.
// Zero: trivial; A: extension of Z/2 by Z^2; B: extension of (Z/2)^2 by Z^6;
// C: Z/2; D: (Z/2)^2.
enum class Pi1 : std::uint8_t { Zero, A, B, C, D };

inline const char* to_string(Pi1 p) {
  switch (p) {
    case Pi1::Zero: return "0";
    case Pi1::A: return "A";
    case Pi1::B: return "B";
    case Pi1::C: return "C";
    case Pi1::D: return "D";
  }
  return "?";
}

// Case label (r-n): r = rank of the shift subgroup, n = index within rank.
struct Label {
  int r = 0;
  int n = 0;

  std::string str() const { return std::to_string(r) + "-" + std::to_string(n); }
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

}  // namespace cy3
