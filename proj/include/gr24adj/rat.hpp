#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace gr24 {

using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline int sign(const Rat& x) { return x.sign(); }
inline int sign(const BigInt& x) { return x.sign(); }

inline Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline BigInt numerator(const Rat& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator(const Rat& x) { return boost::multiprecision::denominator(x); }

// Serialized as "num/den", or just "num" when den = 1.
inline std::string rat_to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline std::optional<Rat> try_parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto ok = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!ok(s)) return std::nullopt;
      return Rat(BigInt(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!ok(num) || !ok(den)) return std::nullopt;
    BigInt d(den);
    if (d == 0) return std::nullopt;
    return Rat(BigInt(num), d);
  } catch (...) {
    return std::nullopt;
  }
}

inline Rat parse_rat(const std::string& s) {
  auto r = try_parse_rat(s);
  if (!r) throw std::invalid_argument("not a rational: '" + s + "'");
  return *r;
}

// True when x is the square of a rational; root returned through *root.
inline bool is_square(const Rat& x, Rat* root = nullptr) {
  if (x < 0) return false;
  BigInt n = numerator(x), d = denominator(x);
  BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  if (root) *root = Rat(rn, rd);
  return true;
}

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

}  // namespace gr24
