#pragma once

#include <numeric>

#include "numeric.hpp"

namespace kfan {

// polynomial in one variable, coefficients ascending, no trailing zeros
using Poly = std::vector<Int>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_const(const Int& c) {
  Poly p;
  if (c != 0) p.push_back(c);
  return p;
}

inline Poly poly_monomial(const Int& c, int e) {
  Poly p(e + 1, Int(0));
  p[e] = c;
  poly_trim(p);
  return p;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  poly_trim(out);
  return out;
}

inline Poly poly_neg(const Poly& a) {
  Poly out = a;
  for (auto& x : out) x = -x;
  return out;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

inline Poly poly_pow(const Poly& a, int e) {
  Poly out = poly_const(1);
  for (int i = 0; i < e; ++i) out = poly_mul(out, a);
  return out;
}

// substitute t -> t^k
inline Poly poly_stretch(const Poly& a, long long k) {
  if (a.empty()) return {};
  Poly out((a.size() - 1) * k + 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i * k] = a[i];
  return out;
}

// inverse of poly_stretch; every nonzero exponent must be divisible by k
inline Poly poly_compress(const Poly& a, long long k) {
  if (a.empty()) return {};
  Poly out((a.size() - 1) / k + 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (i % k != 0) throw Error("internal: exponent not divisible during root reduction");
    out[i / k] = a[i];
  }
  poly_trim(out);
  return out;
}

inline Int poly_content(const Poly& a) {
  Int g = 0;
  for (const auto& x : a) g = igcd(g, x);
  return g;
}

inline long long poly_exponent_gcd(const Poly& a, long long g) {
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) g = static_cast<long long>(igcd(Int(g), Int(i)));
  return g;
}

inline VecQ poly_to_q(const Poly& a) {
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = Rat(a[i]);
  return out;
}

// remainder of a by b over the rationals
inline VecQ polyq_mod(VecQ a, const VecQ& b) {
  auto trim = [](VecQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  VecQ d = b;
  trim(d);
  trim(a);
  while (a.size() >= d.size() && !d.empty()) {
    Rat f = a.back() / d.back();
    size_t off = a.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) a[off + i] -= f * d[i];
    trim(a);
    if (!a.empty() && a.size() >= d.size() && a.back() == 0) trim(a);
  }
  return a;
}

// primitive gcd with positive leading coefficient, 1 for coprime inputs
inline Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  if (a.empty()) std::swap(a, b);
  if (a.empty()) return {};
  VecQ x = poly_to_q(a), y = poly_to_q(b);
  while (!y.empty()) {
    VecQ r = polyq_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  Int l = 1;
  for (const auto& q : x) l = ilcm(l, rat_den(q));
  Poly g(x.size());
  for (size_t i = 0; i < x.size(); ++i) g[i] = rat_num(x[i]) * (l / rat_den(x[i]));
  Int c = poly_content(g);
  for (auto& v : g) v /= c;
  if (g.back() < 0)
    for (auto& v : g) v = -v;
  return g;
}

// exact division; the divisor must divide and the quotient must be integral
inline Poly poly_div_exact(const Poly& a, const Poly& b) {
  if (poly_is_zero(a)) return {};
  if (poly_is_zero(b)) throw Error("internal: polynomial division by zero");
  VecQ x = poly_to_q(a);
  VecQ d = poly_to_q(b);
  VecQ q(a.size() - b.size() + 1, Rat(0));
  while (x.size() >= d.size() && !x.empty()) {
    Rat f = x.back() / d.back();
    size_t off = x.size() - d.size();
    q[off] = f;
    for (size_t i = 0; i < d.size(); ++i) x[off + i] -= f * d[i];
    while (!x.empty() && x.back() == 0) x.pop_back();
  }
  if (!x.empty()) throw Error("internal: polynomial division is not exact");
  Poly out(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (rat_den(q[i]) != 1) throw Error("internal: polynomial quotient is not integral");
    out[i] = rat_num(q[i]);
  }
  poly_trim(out);
  return out;
}

// element of the localized polynomial ring in L, stored over Z[t] with
// L = t^rootIndex; canonical form: coprime primitive-compatible fraction,
// positive leading denominator, smallest possible root index
struct GrothClass {
  long long rootIndex = 1;
  Poly numerator;
  Poly denominator = poly_const(1);
};

inline GrothClass groth_canonical(GrothClass g) {
  if (poly_is_zero(g.numerator)) return GrothClass{1, {}, poly_const(1)};
  Poly common = poly_gcd(g.numerator, g.denominator);
  Poly num = poly_div_exact(g.numerator, common);
  Poly den = poly_div_exact(g.denominator, common);
  Int cn = poly_content(num), cd = poly_content(den);
  Int k = igcd(cn, cd);
  if (k > 1) {
    for (auto& x : num) x /= k;
    for (auto& x : den) x /= k;
  }
  if (den.back() < 0) {
    num = poly_neg(num);
    den = poly_neg(den);
  }
  long long e = poly_exponent_gcd(num, 0);
  e = poly_exponent_gcd(den, e);
  long long root = g.rootIndex;
  long long shrink = e == 0 ? root : static_cast<long long>(igcd(Int(e), Int(root)));
  if (shrink > 1) {
    num = poly_compress(num, shrink);
    den = poly_compress(den, shrink);
    root /= shrink;
  }
  return GrothClass{root, std::move(num), std::move(den)};
}

inline GrothClass groth_zero() { return GrothClass{1, {}, poly_const(1)}; }

inline GrothClass groth_int(const Int& c) { return GrothClass{1, poly_const(c), poly_const(1)}; }

inline GrothClass groth_L_power(int k) { return GrothClass{1, poly_monomial(1, k), poly_const(1)}; }

inline GrothClass groth_from_poly(const Poly& inL) {
  return groth_canonical(GrothClass{1, inL, poly_const(1)});
}

inline GrothClass groth_fraction(long long root, Poly num, Poly den) {
  return groth_canonical(GrothClass{root, std::move(num), std::move(den)});
}

inline GrothClass groth_add(const GrothClass& a, const GrothClass& b) {
  long long root = std::lcm(a.rootIndex, b.rootIndex);
  Poly an = poly_stretch(a.numerator, root / a.rootIndex);
  Poly ad = poly_stretch(a.denominator, root / a.rootIndex);
  Poly bn = poly_stretch(b.numerator, root / b.rootIndex);
  Poly bd = poly_stretch(b.denominator, root / b.rootIndex);
  return groth_canonical(
      GrothClass{root, poly_add(poly_mul(an, bd), poly_mul(bn, ad)), poly_mul(ad, bd)});
}

inline GrothClass groth_neg(const GrothClass& a) {
  return GrothClass{a.rootIndex, poly_neg(a.numerator), a.denominator};
}

inline GrothClass groth_sub(const GrothClass& a, const GrothClass& b) {
  return groth_add(a, groth_neg(b));
}

inline GrothClass groth_mul(const GrothClass& a, const GrothClass& b) {
  long long root = std::lcm(a.rootIndex, b.rootIndex);
  Poly an = poly_stretch(a.numerator, root / a.rootIndex);
  Poly ad = poly_stretch(a.denominator, root / a.rootIndex);
  Poly bn = poly_stretch(b.numerator, root / b.rootIndex);
  Poly bd = poly_stretch(b.denominator, root / b.rootIndex);
  return groth_canonical(GrothClass{root, poly_mul(an, bn), poly_mul(ad, bd)});
}

inline bool groth_equal(const GrothClass& a, const GrothClass& b) {
  return a.rootIndex == b.rootIndex && a.numerator == b.numerator &&
         a.denominator == b.denominator;
}

// sum of the first b+1 powers of L
inline GrothClass projective_space_class(int b) {
  Poly p(b + 1, Int(1));
  return groth_from_poly(p);
}

inline std::string poly_to_string(const Poly& p, const std::string& var) {
  if (poly_is_zero(p)) return "0";
  std::string out;
  for (int e = poly_deg(p); e >= 0; --e) {
    const Int& c = p[e];
    if (c == 0) continue;
    bool negative = c < 0;
    Int mag = negative ? Int(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string coeff = mag.str();
    if (e == 0) {
      out += coeff;
      continue;
    }
    if (mag != 1) out += coeff + "*";
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string groth_to_string(const GrothClass& g) {
  std::string var = g.rootIndex > 1 ? "t" : "L";
  std::string out;
  bool denOne = g.denominator == poly_const(1);
  if (denOne)
    out = poly_to_string(g.numerator, var);
  else
    out = "(" + poly_to_string(g.numerator, var) + ")/(" + poly_to_string(g.denominator, var) + ")";
  if (g.rootIndex > 1) out += " where L = t^" + std::to_string(g.rootIndex);
  return out;
}

}  // namespace kfan
