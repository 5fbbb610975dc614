#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfan {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;
using MatZ = std::vector<VecZ>;
using MatQ = std::vector<VecQ>;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int ilcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}
inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// denominator is always positive, so floor/ceil only depend on the numerator
inline Int rat_floor(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}
inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

inline std::string int_to_string(const Int& n) { return n.str(); }

inline std::string rat_to_string(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

// strict format: -?digits(/digits)?, nonzero denominator, no spaces or signs
// anywhere else
inline Rat parse_rational(const std::string& s) {
  auto fail = [&]() -> Rat { throw Error("malformed rational: \"" + s + "\""); };
  size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  size_t numStart = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == numStart) return fail();
  Int num(s.substr(0, i));
  if (i == s.size()) return Rat(num);
  if (s[i] != '/') return fail();
  ++i;
  size_t denStart = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == denStart || i != s.size()) return fail();
  Int den(s.substr(denStart));
  if (den == 0) return fail();
  return Rat(num, den);
}

inline VecQ to_vecq(const VecZ& v) {
  VecQ out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline long long env_limit(const char* name, long long fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0) return fallback;
  return v;
}

}  // namespace kfan
