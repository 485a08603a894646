#pragma once

#include "weil.hpp"

#include <string>

namespace rcn {

// LMFDB-style isogeny class labels "g.q.c1_c2_..._cg".  Each c_i encodes the
// integer a_i in base 26 with digits a=0..z=25, most significant first; a
// leading extra 'a' negates.  Canonical form: "a" is zero, positive numbers
// never start with 'a', and "aa" is rejected.

inline std::string base26(Int x) {
  if (x == 0) return "a";
  std::string prefix;
  if (x < 0) {
    prefix = "a";
    x = -x;
  }
  std::string digits;
  while (x > 0) {
    digits += static_cast<char>('a' + static_cast<int>(x % 26));
    x /= 26;
  }
  return prefix + std::string(digits.rbegin(), digits.rend());
}

inline Int base26_decode(const std::string& s) {
  if (s.empty()) throw WeilError("empty coefficient code");
  bool neg = false;
  size_t start = 0;
  if (s[0] == 'a' && s.size() > 1) {
    neg = true;
    start = 1;
  }
  if (s.size() - start > 1 && s[start] == 'a')
    throw WeilError("non-canonical coefficient code: " + s);
  Int x = 0;
  for (size_t i = start; i < s.size(); ++i) {
    if (s[i] < 'a' || s[i] > 'z') throw WeilError("bad character in coefficient code: " + s);
    x = x * 26 + (s[i] - 'a');
  }
  if (neg && x == 0) throw WeilError("non-canonical coefficient code: " + s);
  return neg ? Int(-x) : x;
}

inline std::string encode_label(const IPoly& P, long q) {
  int g = weil_genus(P);
  std::string s = std::to_string(g) + "." + std::to_string(q) + ".";
  for (int i = 1; i <= g; ++i) {
    if (i > 1) s += "_";
    s += base26(coeff_a(P, i));
  }
  return s;
}

struct DecodedLabel {
  long q = 0;
  int g = 0;
  IPoly P;
};

inline DecodedLabel decode_label(const std::string& label) {
  DecodedLabel out;
  size_t d1 = label.find('.');
  size_t d2 = d1 == std::string::npos ? std::string::npos : label.find('.', d1 + 1);
  if (d1 == std::string::npos || d2 == std::string::npos)
    throw WeilError("bad label format: " + label);
  try {
    out.g = std::stoi(label.substr(0, d1));
    out.q = std::stol(label.substr(d1 + 1, d2 - d1 - 1));
  } catch (const std::exception&) {
    throw WeilError("bad label format: " + label);
  }
  if (out.g < 1 || out.q < 2) throw WeilError("bad label format: " + label);
  std::vector<Int> a(2 * out.g + 1, Int(0));
  a[0] = 1;
  std::string rest = label.substr(d2 + 1);
  int i = 0;
  size_t pos = 0;
  while (pos <= rest.size() && i < out.g) {
    size_t us = rest.find('_', pos);
    std::string tok = rest.substr(pos, us == std::string::npos ? std::string::npos : us - pos);
    a[++i] = base26_decode(tok);
    if (us == std::string::npos) {
      pos = rest.size() + 1;
      break;
    }
    pos = us + 1;
  }
  if (i != out.g || pos <= rest.size())
    throw WeilError("label coefficient count mismatch: " + label);
  for (int j = out.g + 1; j <= 2 * out.g; ++j)
    a[j] = pow_int(Int(out.q), static_cast<unsigned>(j - out.g)) * a[2 * out.g - j];
  std::vector<Int> c(2 * out.g + 1);
  for (int j = 0; j <= 2 * out.g; ++j) c[2 * out.g - j] = a[j];
  out.P = IPoly(std::move(c));
  return out;
}

}  // namespace rcn
