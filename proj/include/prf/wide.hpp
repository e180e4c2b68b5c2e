#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "prf/errors.hpp"

namespace prf {

// Counts reach ~1e12 for the tabulated range and grow as q^9 beyond it.
using Wide = unsigned __int128;

inline std::string to_decimal(Wide value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline Wide parse_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal string");
  Wide value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw ParseError("bad decimal digit in '" + std::string(text) + "'");
    Wide next = value * 10 + static_cast<unsigned>(ch - '0');
    if (next / 10 != value) throw ParseError("decimal overflow in '" + std::string(text) + "'");
    value = next;
  }
  return value;
}

// "1,234,567" style, matching how the reference tables print counts.
inline std::string with_commas(Wide value) {
  std::string digits = to_decimal(value);
  std::string out;
  int since = static_cast<int>(digits.size() % 3);
  if (since == 0) since = 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && since == 0) {
      out.push_back(',');
      since = 3;
    }
    out.push_back(digits[i]);
    --since;
  }
  return out;
}

inline Wide ipow(Wide base, unsigned exp) {
  Wide r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace prf
