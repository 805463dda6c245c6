#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "orthofold/geometry.hpp"
#include "orthofold/random.hpp"
#include "orthofold/rational.hpp"

namespace testing_support {

using orthofold::Point;
using orthofold::Rational;
using orthofold::Segment;

inline Rational R(const char* s) { return orthofold::parse_rational(s); }
inline Rational R(long n, long d = 1) { return Rational(n) / d; }
inline Point P(long x, long y) { return {Rational(x), Rational(y)}; }
inline Segment S(long x0, long y0, long x1, long y1) { return Segment(P(x0, y0), P(x1, y1)); }

inline std::vector<Rational> Rs(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(R(x));
  return out;
}

// Uniform multiple of 1/den in [lo, hi].
inline Rational random_rational(orthofold::SplitMix64& rng, const Rational& lo, const Rational& hi,
                                long den) {
  const Rational a = lo * den, b = hi * den;
  mpz_class lo_n, hi_n;
  mpz_cdiv_q(lo_n.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  mpz_fdiv_q(hi_n.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  return Rational(rng.between(lo_n.get_si(), hi_n.get_si())) / den;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing_support
