#include "cy3/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace cy3 {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::uint8_t parse_base(const std::string& tok) {
  if (tok == "0") return 0;
  if (tok == "1") return 1;
  if (tok == "t") return 2;
  if (tok == "1t") return 3;
  throw ParseError("invalid base token \"" + tok + "\" (expected 0, 1, t or 1t)");
}

const char* base_name(std::uint8_t b) {
  switch (b) {
    case 0: return "0";
    case 1: return "1";
    case 2: return "t";
    case 3: return "1t";
  }
  throw Error("bad base bits");
}

FactorSymbol parse_symbol(std::string tok, bool expect_sign) {
  tok = trim(tok);
  if (tok.empty()) throw ParseError("empty factor symbol");
  FactorSymbol s;
  char last = tok.back();
  if (last == '+' || last == '-') {
    if (!expect_sign) throw ParseError("sign present on a shift entry \"" + tok + "\"");
    s.sign = (last == '+') ? +1 : -1;
    s.has_sign = true;
    tok.pop_back();
  } else {
    if (expect_sign) throw ParseError("missing sign on twist entry \"" + tok + "\"");
    s.sign = +1;
    s.has_sign = false;
  }
  s.base = parse_base(trim(tok));
  return s;
}

SymbolTriple parse_triple(const std::string& text, bool expect_sign) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw ParseError("generator \"" + t + "\" is not parenthesized");
  auto parts = split(t.substr(1, t.size() - 2), ',');
  if (parts.size() != 3)
    throw ParseError("generator \"" + t + "\" does not have three factors");
  SymbolTriple out;
  for (int i = 0; i < 3; ++i) out[i] = parse_symbol(parts[i], expect_sign);
  return out;
}

std::string render_triple(const SymbolTriple& t) {
  std::string out = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += render_symbol(t[i]);
  }
  out += ")";
  return out;
}

Label parse_label(const std::string& text) {
  auto parts = split(trim(text), '-');
  if (parts.size() != 2) throw ParseError("bad label \"" + text + "\"");
  Label l;
  try {
    size_t pos = 0;
    l.r = std::stoi(parts[0], &pos);
    if (pos != parts[0].size()) throw std::invalid_argument("");
    l.n = std::stoi(parts[1], &pos);
    if (pos != parts[1].size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("bad label \"" + text + "\"");
  }
  if (l.r < 0 || l.r > 4) throw ParseError("label rank " + std::to_string(l.r) + " outside 0..4");
  if (l.n < 1) throw ParseError("label index must be positive");
  return l;
}

Pi1 parse_pi1(const std::string& text) {
  std::string t = trim(text);
  if (t == "0") return Pi1::Zero;
  if (t == "A") return Pi1::A;
  if (t == "B") return Pi1::B;
  if (t == "C") return Pi1::C;
  if (t == "D") return Pi1::D;
  throw ParseError("unknown pi1 label \"" + t + "\"");
}

}  // namespace

std::string render_symbol(const FactorSymbol& s) {
  std::string out = base_name(s.base);
  if (s.has_sign) out += (s.sign > 0 ? "+" : "-");
  return out;
}

CatalogEntry parse_case_notation(const std::string& text) {
  auto fields = split(text, '|');
  if (fields.size() != 5)
    throw ParseError("expected 5 |-separated fields, got " +
                     std::to_string(fields.size()));

  CatalogEntry e;
  e.label = parse_label(fields[0]);

  // Twist generators: exactly two, space separated, even minus count each.
  {
    std::istringstream in(trim(fields[1]));
    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok) toks.push_back(tok);
    if (toks.size() != 2)
      throw ParseError("expected 2 twist generators, got " +
                       std::to_string(toks.size()));
    for (int k = 0; k < 2; ++k) {
      e.twist_gens[k] = parse_triple(toks[k], true);
      int minus = 0;
      for (const auto& s : e.twist_gens[k]) minus += (s.sign < 0);
      if (minus % 2 != 0)
        throw ParseError("twist generator " + toks[k] +
                         " has an odd number of minus signs");
    }
  }

  // Shift generators: "-" or semicolon-separated triples, count = rank.
  {
    std::string f = trim(fields[2]);
    if (f != "-") {
      for (const auto& part : split(f, ';'))
        e.shift_gens.push_back(parse_triple(part, false));
    }
    if ((int)e.shift_gens.size() != e.label.r)
      throw ParseError("rank " + std::to_string(e.label.r) + " declared but " +
                       std::to_string(e.shift_gens.size()) +
                       " shift generators given");
  }

  {
    std::istringstream in(trim(fields[3]));
    if (!(in >> e.expected_h11 >> e.expected_h21))
      throw ParseError("bad Hodge number field \"" + trim(fields[3]) + "\"");
    std::string rest;
    if (in >> rest) throw ParseError("trailing tokens in Hodge number field");
    if (e.expected_h11 < 0 || e.expected_h21 < 0)
      throw ParseError("negative Hodge number");
  }

  e.expected_pi1 = parse_pi1(fields[4]);
  return e;
}

std::string render_case(const CatalogEntry& e) {
  std::string out = e.label.str() + " | ";
  out += render_triple(e.twist_gens[0]) + " " + render_triple(e.twist_gens[1]);
  out += " | ";
  if (e.shift_gens.empty()) {
    out += "-";
  } else {
    for (size_t i = 0; i < e.shift_gens.size(); ++i) {
      if (i) out += ";";
      out += render_triple(e.shift_gens[i]);
    }
  }
  out += " | " + std::to_string(e.expected_h11) + " " +
         std::to_string(e.expected_h21) + " | ";
  out += to_string(e.expected_pi1);
  return out;
}

std::vector<CatalogEntry> load_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    CatalogEntry e;
    try {
      e = parse_case_notation(t);
    } catch (const ParseError& pe) {
      throw ParseError(std::string(pe.what()), lineno);
    }
    if (e.label == Label{3, 2})
      throw ParseError("deleted case present: (3-2)", lineno);
    for (const auto& prev : entries)
      if (prev.label == e.label)
        throw ParseError("duplicate label " + e.label.str(), lineno);
    entries.push_back(std::move(e));
  }
  if (entries.size() != 35)
    throw ParseError("entry count " + std::to_string(entries.size()) +
                     " != 35");
  if (!std::is_sorted(entries.begin(), entries.end(),
                      [](const CatalogEntry& a, const CatalogEntry& b) {
                        return a.label < b.label;
                      }))
    throw ParseError("entries out of catalog order");
  return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);
  return load_catalog(in);
}

const CatalogEntry* find_case(const std::vector<CatalogEntry>& catalog,
                              const std::string& label) {
  std::string t = label;
  if (!t.empty() && t.front() == '(' && t.back() == ')')
    t = t.substr(1, t.size() - 2);
  for (const auto& e : catalog)
    if (e.label.str() == t) return &e;
  return nullptr;
}

}  // namespace cy3
