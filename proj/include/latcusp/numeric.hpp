#pragma once

// Arbitrary-precision integer/rational scalars used throughout.
// No floating point appears anywhere in this library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace latcusp {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Malformed input (spec files, vectors, group descriptions).
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured search/enumeration guard was exceeded.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// mpq_class(p, q) does not canonicalize; route every ratio through here.
inline Rat frac(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}
inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integral(q)) throw SpecError("expected an integer, got " + q.get_str());
  return q.get_num();
}

inline Rat to_rat(const Int& n) { return Rat(n); }

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

// "p/q" with the "/q" omitted when q == 1.
inline std::string rat_to_string(const Rat& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw SpecError("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

inline Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

// Least common multiple of the denominators.
inline Int common_denominator(const RatVec& v) {
  Int d = 1;
  for (const Rat& x : v) d = lcm(d, x.get_den());
  return d;
}

inline bool all_integral(const RatVec& v) {
  for (const Rat& x : v)
    if (!is_integral(x)) return false;
  return true;
}

}  // namespace latcusp
