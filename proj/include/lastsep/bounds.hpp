#pragma once

// Exact evaluation of the bounds on M(n,k), the matching and class counts
// behind them, and the Gilbert bound for binary codes. Nothing here touches
// floating point.

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "lastsep/core.hpp"

namespace lastsep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline Integer power(int base, int exponent) {
  return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exponent));
}

inline Integer binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  Integer out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Smallest integer >= q.
inline Integer ceil(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  Integer quot = num / den;
  if (quot * den < num) ++quot;
  return quot;
}

inline std::string to_string(const Integer& x) { return x.str(); }

// "p" for integers, "p/q" in lowest terms otherwise.
inline std::string to_string(const Rational& q) {
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

enum class Theorem { None, T1, T2, T3, GV };

inline std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::None: return "none";
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::GV: return "GV";
  }
  return "none";
}

struct BoundReport {
  int n = 0;
  int k = 0;
  Theorem theorem = Theorem::None;
  bool applicable = false;
  std::string reason;
  Rational lower = 0;
  Rational upper = 0;
  // max(1, ceil(lower)): family sizes are integers and one path is always a family.
  Integer effective_lower = 0;
  // k = 2 only: the number of (near-)perfect matchings, which also caps M(n,2).
  Integer matching_cap = 0;
};

// n! / (2^floor(n/2) floor(n/2)!): perfect matchings of K_n for even n,
// near-perfect matchings for odd n.
inline Integer count_matchings(int n) {
  if (n < 2) throw BadParameters("count_matchings needs n >= 2");
  return factorial(n) / (power(2, n / 2) * factorial(n / 2));
}

// (n/k)! 2^(n/k) (n - 2n/k)!: the number of vertex orders that place a fixed
// set of n/k disjoint edges at every k-th edge position.
inline Integer class_size(int n, int k) {
  if (k < 1 || n < 1 || n % k != 0) throw BadParameters("class_size needs k | n");
  const int blocks = n / k;
  if (n - 2 * blocks < 0) throw BadParameters("class_size needs n - 2n/k >= 0");
  return factorial(blocks) * power(2, blocks) * factorial(n - 2 * blocks);
}

inline BoundReport bounds_m(int n, int k) {
  if (n < 2 || k < 2) throw BadParameters("bounds_m needs n >= 2 and k >= 2");
  BoundReport r;
  r.n = n;
  r.k = k;
  if (k == 2) {
    const int lo = n / 2;
    const int hi = (n + 1) / 2;
    r.theorem = Theorem::T1;
    r.applicable = true;
    r.lower = Rational(factorial(lo), power(2, lo));
    r.upper = Rational(power(2, hi) * factorial(hi));
    r.matching_cap = count_matchings(n);
  } else if (n % k != 0) {
    r.reason = "divisibility hypothesis fails: " + std::to_string(k) + " does not divide " + std::to_string(n);
    return r;
  } else if (k % 2 == 0) {
    r.theorem = Theorem::T2;
    r.applicable = true;
    r.lower = Rational(factorial(n / k));
    r.upper = Rational(power(3, n) * factorial(n / k));
  } else {
    r.theorem = Theorem::T3;
    r.applicable = true;
    r.lower = Rational(factorial(n / k - 1));
    r.upper = Rational(power(3, n) * factorial(n / k));
  }
  r.effective_lower = ceil(r.lower);
  if (r.effective_lower < 1) r.effective_lower = 1;
  return r;
}

// count_matchings(n) <= 2^ceil(n/2) ceil(n/2)!.
inline bool check_t1_upper(int n) {
  const int hi = (n + 1) / 2;
  return count_matchings(n) <= power(2, hi) * factorial(hi);
}

// Members of the inequality chain closing the even-k upper bound argument.
struct ChainT2 {
  Rational half_quotient;      // n! / (2 C)
  Rational quotient;           // n! / C
  Rational expanded_quotient;  // n! (n/k)! / (C (n/k)!)
  Rational damped_bound;       // 3^n (n/k)! 2^(-n/k)
  Rational bound;              // 3^n (n/k)!

  bool holds() const {
    return half_quotient <= quotient && quotient == expanded_quotient && expanded_quotient < damped_bound &&
           damped_bound < bound;
  }
};

inline ChainT2 chain_t2(int n, int k) {
  if (k <= 2 || k % 2 != 0 || n % k != 0) throw BadParameters("chain check needs even k > 2 dividing n");
  const Integer c = class_size(n, k);
  const Integer nf = factorial(n);
  const Integer bf = factorial(n / k);
  const Integer top = power(3, n) * bf;
  return {Rational(nf, 2 * c), Rational(nf, c), Rational(nf * bf, c * bf), Rational(top, power(2, n / k)),
          Rational(top)};
}

inline bool check_chain_t2(int n, int k) { return chain_t2(n, k).holds(); }

// sum_{i < d} C(n, i): size of a Hamming ball of radius d-1.
inline Integer hamming_ball(int n, int radius) {
  Integer total = 0;
  for (int i = 0; i <= radius; ++i) total += binomial(n, i);
  return total;
}

// 2^n / sum_{i<d} C(n,i).
inline Rational gilbert_bound(int n, int d) {
  if (d < 1 || d > n) throw BadParameters("gilbert_bound needs 1 <= d <= n");
  return Rational(power(2, n), hamming_ball(n, d - 1));
}

// Whether sum_{i<=6} C(n,i) <= n^6, i.e. whether 2^n/n^6 is implied by the
// distance-7 Gilbert bound at this n.
inline bool gilbert_n6_weakening_holds(int n) { return hamming_ball(n, 6) <= power(n, 6); }

}  // namespace lastsep
