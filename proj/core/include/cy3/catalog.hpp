#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cy3/common.hpp"

namespace cy3 {

// One symbol of the twist/shift notation.  base encodes the half-period
// translation part as a bit pair (x, tau) with 1 meaning translation by 1/2
// (resp. tau/2) on that elliptic factor; sign is the z -> +-z part.
struct FactorSymbol {
  std::uint8_t base = 0;  // bit0 = x-half, bit1 = tau-half
  int sign = +1;          // +1 or -1; shifts always +1
  bool has_sign = true;   // false for pure-shift entries

  friend bool operator==(const FactorSymbol&, const FactorSymbol&) = default;
};

std::string render_symbol(const FactorSymbol& s);

using SymbolTriple = std::array<FactorSymbol, 3>;

struct CatalogEntry {
  Label label;
  std::array<SymbolTriple, 2> twist_gens;
  std::vector<SymbolTriple> shift_gens;  // size r, sign-free
  int expected_h11 = 0;
  int expected_h21 = 0;
  Pi1 expected_pi1 = Pi1::Zero;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// Parses one non-comment catalog line
//   label | twist1 twist2 | shift1;...;shiftr or "-" | h11 h21 | pi1
// and validates: base tokens in {0,1,t,1t}; each twist has an even number of
// minus signs; shifts carry no signs; shift count equals the declared rank.
CatalogEntry parse_case_notation(const std::string& text);

// Canonical text of an entry (the exact shipped-file format).
std::string render_case(const CatalogEntry& e);

// Loads the shipped catalog: exactly 35 validated entries, unique labels,
// deleted case (3-2) rejected.  Errors carry 1-based line numbers.
std::vector<CatalogEntry> load_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

const CatalogEntry* find_case(const std::vector<CatalogEntry>& catalog,
                              const std::string& label);

}  // namespace cy3
