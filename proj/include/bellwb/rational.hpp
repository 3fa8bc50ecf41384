#ifndef BELLWB_RATIONAL_HPP
#define BELLWB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bell {

// All polytope arithmetic is exact. Floats appear only in the quantum
// sampler and in SDP problem files.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "num/den" (or plain "num") with canonical reduced form.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(std::string_view s);

double rat_to_double(const Rat& r);

// Decimal rendering used by problem-file writers: shortest form with 17
// significant digits, C locale, deterministic.
std::string rat_to_decimal17(const Rat& r);

// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t seed = 14695981039346656037ull) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Simplest rational in the closed interval [lo, hi] (Stern-Brocot descent):
// the unique fraction minimising the denominator, then the numerator.
Rat simplest_in_interval(const Rat& lo, const Rat& hi);

// Rank of a dense rational matrix (row-major), by Gaussian elimination.
int rat_rank(std::vector<std::vector<Rat>> m);

// Rank of a dense integer matrix via fraction-free (Bareiss) elimination.
int int_rank(std::vector<std::vector<Int>> m);

// Rank modulo a fixed 62-bit prime. Never exceeds the rational rank, so a
// full-rank answer here is exact while a deficient one needs confirmation.
int modp_rank(const std::vector<std::vector<std::uint64_t>>& m);

}  // namespace bell

#endif
