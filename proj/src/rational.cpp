#include "bellwb/rational.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bell {

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  r.canonicalize();
  return r;
}

double rat_to_double(const Rat& r) { return r.get_d(); }

std::string rat_to_decimal17(const Rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", r.get_d());
  return buf;
}

namespace {
// 0 < a <= b. Walks the continued-fraction expansions of a and b in lockstep.
Rat simplest_pos(Rat a, Rat b) {
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // convergent frame of the shared prefix
  for (;;) {
    Int fl = a.get_num() / a.get_den();  // floor, a > 0
    if (Rat(fl) == a || Rat(fl + 1) <= b) {
      Int take = (Rat(fl) == a) ? fl : fl + 1;
      Rat res(take * p1 + p0, take * q1 + q0);
      res.canonicalize();
      return res;
    }
    Int np1 = fl * p1 + p0, nq1 = fl * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = np1;
    q1 = nq1;
    Rat na = 1 / (b - Rat(fl));
    Rat nb = 1 / (a - Rat(fl));
    a = na;
    b = nb;
  }
}
}  // namespace

Rat simplest_in_interval(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return Rat(-simplest_pos(-hi, -lo));
  return simplest_pos(lo, hi);
}

int rat_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const int rows = (int)m.size(), cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    const Rat inv = 1 / m[rank][c];
    for (int j = c; j < cols; ++j) m[rank][j] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rat f = m[r][c];
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

int int_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const int rows = (int)m.size(), cols = (int)m[0].size();
  int rank = 0;
  Int prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = cols - 1; j >= c; --j) {
        m[r][j] = m[rank][c] * m[r][j] - m[r][c] * m[rank][j];
        m[r][j] /= prev;  // exact by the Bareiss identity
      }
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

namespace {
constexpr std::uint64_t kPrime = 0x3FFFFFFFFFFFFFF5ull;  // 2^62 - 11

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return (std::uint64_t)((unsigned __int128)a * b % kPrime);
}
}  // namespace

int modp_rank(const std::vector<std::vector<std::uint64_t>>& in) {
  if (in.empty()) return 0;
  auto m = in;
  const int rows = (int)m.size(), cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % kPrime != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    // scale pivot row so that the pivot becomes 1 (Fermat inverse)
    std::uint64_t p = m[rank][c] % kPrime, inv = 1, e = kPrime - 2, base = p;
    while (e) {
      if (e & 1) inv = mulmod(inv, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    for (int j = c; j < cols; ++j) m[rank][j] = mulmod(m[rank][j] % kPrime, inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::uint64_t f = m[r][c] % kPrime;
      if (!f) continue;
      for (int j = c; j < cols; ++j) {
        std::uint64_t t = mulmod(f, m[rank][j]);
        m[r][j] = (m[r][j] % kPrime + kPrime - t) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace bell
