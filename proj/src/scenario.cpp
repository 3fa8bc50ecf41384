#include "bellwb/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace bell {

Scenario::Scenario(int ma, int mb, int ka, int kb) : mA(ma), mB(mb), kA(ka), kB(kb) {
  if (ma < 1 || mb < 1 || ka < 2 || kb < 2)
    throw std::invalid_argument("invalid scenario " + str());
}

long Scenario::vertex_count() const {
  long n = 1;
  for (int i = 0; i < mA; ++i) n *= kA;
  for (int i = 0; i < mB; ++i) n *= kB;
  return n;
}

namespace {
unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= (unsigned)i;
  return f;
}
unsigned long long ipow(unsigned long long b, int e) {
  unsigned long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

unsigned long long Scenario::relabelling_count() const {
  unsigned long long n = ipow(factorial(kA), mA) * ipow(factorial(kB), mB) *
                         factorial(mA) * factorial(mB);
  if (square()) n *= 2;
  return n;
}

std::string Scenario::str() const {
  return "(" + std::to_string(mA) + "," + std::to_string(mB) + "," +
         std::to_string(kA) + "," + std::to_string(kB) + ")";
}

Distribution::Distribution(const Scenario& s, std::vector<Rat> entries)
    : sc(s), p(std::move(entries)) {
  if ((long)p.size() != s.table_size())
    throw std::invalid_argument("entry count does not match scenario " + s.str());
}

Rat Distribution::marginal_a(int a, int x) const {
  Rat m(0);
  for (int b = 0; b < sc.kB; ++b) m += at(a, b, x, 0);
  return m;
}

Rat Distribution::marginal_b(int b, int y) const {
  Rat m(0);
  for (int a = 0; a < sc.kA; ++a) m += at(a, b, 0, y);
  return m;
}

bool Distribution::is_normalized() const {
  for (const Rat& v : p)
    if (v < 0) return false;
  for (int x = 0; x < sc.mA; ++x)
    for (int y = 0; y < sc.mB; ++y) {
      Rat s(0);
      for (int a = 0; a < sc.kA; ++a)
        for (int b = 0; b < sc.kB; ++b) s += at(a, b, x, y);
      if (s != 1) return false;
    }
  return true;
}

bool is_no_signalling(const Distribution& d) {
  const Scenario& s = d.sc;
  for (int x = 0; x < s.mA; ++x)
    for (int a = 0; a < s.kA; ++a) {
      Rat ref(0);
      for (int b = 0; b < s.kB; ++b) ref += d.at(a, b, x, 0);
      for (int y = 1; y < s.mB; ++y) {
        Rat m(0);
        for (int b = 0; b < s.kB; ++b) m += d.at(a, b, x, y);
        if (m != ref) return false;
      }
    }
  for (int y = 0; y < s.mB; ++y)
    for (int b = 0; b < s.kB; ++b) {
      Rat ref(0);
      for (int a = 0; a < s.kA; ++a) ref += d.at(a, b, 0, y);
      for (int x = 1; x < s.mA; ++x) {
        Rat m(0);
        for (int a = 0; a < s.kA; ++a) m += d.at(a, b, x, y);
        if (m != ref) return false;
      }
    }
  return true;
}

Distribution DeterministicVertex::expand() const {
  Distribution d(sc);
  for (int x = 0; x < sc.mA; ++x)
    for (int y = 0; y < sc.mB; ++y) d.at(aOut[x], bOut[y], x, y) = 1;
  return d;
}

long DeterministicVertex::index() const {
  long v = 0;
  for (int x = 0; x < sc.mA; ++x) v = v * sc.kA + aOut[x];
  for (int y = 0; y < sc.mB; ++y) v = v * sc.kB + bOut[y];
  return v;
}

DeterministicVertex vertex_from_index(const Scenario& s, long idx) {
  DeterministicVertex v{s, std::vector<int>(s.mA), std::vector<int>(s.mB)};
  for (int y = s.mB - 1; y >= 0; --y) {
    v.bOut[y] = (int)(idx % s.kB);
    idx /= s.kB;
  }
  for (int x = s.mA - 1; x >= 0; --x) {
    v.aOut[x] = (int)(idx % s.kA);
    idx /= s.kA;
  }
  return v;
}

std::vector<DeterministicVertex> enumerate_deterministic(const Scenario& s) {
  const long n = s.vertex_count();
  std::vector<DeterministicVertex> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(vertex_from_index(s, i));
  return out;
}

Distribution uniform_distribution(const Scenario& s) {
  Distribution d(s);
  const Rat u(1, (long)s.kA * s.kB);
  for (Rat& v : d.p) v = u;
  return d;
}

Distribution pr_box() {
  const Scenario s(2, 2, 2, 2);
  Distribution d(s);
  const Rat h(1, 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          if (((a + b) & 1) == (x & y)) d.at(a, b, x, y) = h;
  return d;
}

namespace {

enum Block { S, A, K, L, M };

void put_block(Distribution& d, int x, int y, Block blk) {
  const Rat h(1, 2), one(1);
  switch (blk) {
    case S:
      d.at(0, 0, x, y) = h;
      d.at(1, 1, x, y) = h;
      break;
    case A:
      d.at(0, 1, x, y) = h;
      d.at(1, 0, x, y) = h;
      break;
    case K:
      d.at(0, 0, x, y) = h;
      d.at(0, 1, x, y) = h;
      break;
    case L:
      d.at(0, 0, x, y) = h;
      d.at(1, 0, x, y) = h;
      break;
    case M:
      d.at(0, 0, x, y) = one;
      break;
  }
}

void require_binary(const Scenario& s, const char* who) {
  if (s.kA != 2 || s.kB != 2)
    throw NonBinaryScenario(std::string(who) + " requires binary outcomes, got " + s.str());
}

// All S/A fillings of the free region (rows/cols past the pinned corner) of
// an (ma - kRows) x (mb - lCols) grid, with M on the K-row/L-column overlap.
void emit_canonical(const Scenario& s, int kRows, int lCols, std::vector<Distribution>& out) {
  const int freeA = s.mA - kRows, freeB = s.mB - lCols;
  // pinned: (0,*) and (*,0) are S inside the free region; (1,1) is A
  const long nFree = (long)(freeA - 1) * (freeB - 1) - 1;
  for (long mask = 0; mask < (1L << nFree); ++mask) {
    Distribution d(s);
    long bit = 0;
    for (int x = 0; x < s.mA; ++x)
      for (int y = 0; y < s.mB; ++y) {
        if (x >= freeA && y >= freeB) put_block(d, x, y, M);
        else if (x >= freeA) put_block(d, x, y, K);
        else if (y >= freeB) put_block(d, x, y, L);
        else if (x == 0 || y == 0) put_block(d, x, y, S);
        else if (x == 1 && y == 1) put_block(d, x, y, A);
        else put_block(d, x, y, (mask >> bit++) & 1 ? A : S);
      }
    out.push_back(std::move(d));
  }
}

}  // namespace

std::vector<Distribution> enumerate_ns_extremal_sa(const Scenario& s) {
  require_binary(s, "enumerate_ns_extremal_sa");
  if (s.mA < 2 || s.mB < 2)
    throw std::invalid_argument("canonical form needs at least 2 measurements per party");
  std::vector<Distribution> out;
  emit_canonical(s, 0, 0, out);
  return out;
}

std::vector<Distribution> enumerate_ns_canonical(const Scenario& s) {
  require_binary(s, "enumerate_ns_canonical");
  if (s.mA < 2 || s.mB < 2)
    throw std::invalid_argument("canonical form needs at least 2 measurements per party");
  std::vector<Distribution> out;
  for (int kRows = 0; kRows <= s.mA - 2; ++kRows)
    for (int lCols = 0; lCols <= s.mB - 2; ++lCols) emit_canonical(s, kRows, lCols, out);
  return out;
}

std::vector<Rat> reduced_coords(const Distribution& d) {
  const Scenario& s = d.sc;
  std::vector<Rat> v;
  v.reserve(s.dimension());
  for (int x = 0; x < s.mA; ++x)
    for (int a = 0; a < s.kA - 1; ++a) v.push_back(d.marginal_a(a, x));
  for (int y = 0; y < s.mB; ++y)
    for (int b = 0; b < s.kB - 1; ++b) v.push_back(d.marginal_b(b, y));
  for (int x = 0; x < s.mA; ++x)
    for (int y = 0; y < s.mB; ++y)
      for (int a = 0; a < s.kA - 1; ++a)
        for (int b = 0; b < s.kB - 1; ++b) v.push_back(d.at(a, b, x, y));
  return v;
}

std::vector<ReducedExpansionRow> reduced_expansion(const Scenario& s) {
  const int ra = s.kA - 1, rb = s.kB - 1;
  auto idxA = [&](int x, int a) { return (long)x * ra + a; };
  auto idxB = [&](int y, int b) { return (long)s.mA * ra + (long)y * rb + b; };
  auto idxP = [&](int x, int y, int a, int b) {
    return (long)s.mA * ra + (long)s.mB * rb + (((long)x * s.mB + y) * ra + a) * rb + b;
  };
  std::vector<ReducedExpansionRow> rows(s.table_size());
  for (int x = 0; x < s.mA; ++x)
    for (int y = 0; y < s.mB; ++y)
      for (int a = 0; a < s.kA; ++a)
        for (int b = 0; b < s.kB; ++b) {
          ReducedExpansionRow& r = rows[s.flat(a, b, x, y)];
          r.offset = 0;
          if (a < ra && b < rb) {
            r.terms.push_back({idxP(x, y, a, b), Rat(1)});
          } else if (a == ra && b < rb) {
            r.terms.push_back({idxB(y, b), Rat(1)});
            for (int aa = 0; aa < ra; ++aa) r.terms.push_back({idxP(x, y, aa, b), Rat(-1)});
          } else if (a < ra && b == rb) {
            r.terms.push_back({idxA(x, a), Rat(1)});
            for (int bb = 0; bb < rb; ++bb) r.terms.push_back({idxP(x, y, a, bb), Rat(-1)});
          } else {
            r.offset = 1;
            for (int aa = 0; aa < ra; ++aa) r.terms.push_back({idxA(x, aa), Rat(-1)});
            for (int bb = 0; bb < rb; ++bb) r.terms.push_back({idxB(y, bb), Rat(-1)});
            for (int aa = 0; aa < ra; ++aa)
              for (int bb = 0; bb < rb; ++bb) r.terms.push_back({idxP(x, y, aa, bb), Rat(1)});
          }
        }
  return rows;
}

bool is_ns_extremal(const Distribution& d) {
  const Scenario& s = d.sc;
  const long t = s.dimension();
  const auto expansion = reduced_expansion(s);
  std::vector<std::vector<Rat>> tight;
  for (long i = 0; i < s.table_size(); ++i) {
    if (d.p[i] != 0) continue;
    std::vector<Rat> row(t, Rat(0));
    for (const auto& [j, c] : expansion[i].terms) row[j] += c;
    tight.push_back(std::move(row));
  }
  if ((long)tight.size() < t) return false;
  return rat_rank(std::move(tight)) == t;
}

}  // namespace bell
