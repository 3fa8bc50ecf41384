#ifndef BELLWB_SCENARIO_HPP
#define BELLWB_SCENARIO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellwb/rational.hpp"

namespace bell {

struct NonBinaryScenario : std::domain_error {
  using std::domain_error::domain_error;
};
struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bipartite Bell scenario: measurement counts mA, mB and outcome counts
// kA, kB. Measurements and outcomes are 0-based throughout the code.
struct Scenario {
  int mA = 0, mB = 0, kA = 0, kB = 0;

  Scenario() = default;
  Scenario(int ma, int mb, int ka, int kb);

  bool operator==(const Scenario&) const = default;

  // Affine dimension t of the no-signalling (and local) polytope.
  long dimension() const {
    return (long)mA * mB * (kA - 1) * (kB - 1) + (long)mA * (kA - 1) +
           (long)mB * (kB - 1);
  }
  // Same quantity in product form; the two must always agree.
  long dimension_product_form() const {
    return ((long)mA * (kA - 1) + 1) * ((long)mB * (kB - 1) + 1) - 1;
  }

  long vertex_count() const;
  long table_size() const { return (long)mA * mB * kA * kB; }
  bool square() const { return mA == mB && kA == kB; }

  // Size of the relabelling group (doubled by the party swap when square).
  unsigned long long relabelling_count() const;

  // Flat index of p(ab|xy): row-major over (x, y, a, b).
  long flat(int a, int b, int x, int y) const {
    return (((long)x * mB + y) * kA + a) * kB + b;
  }

  std::string str() const;
};

// Conditional probability table p(ab|xy), exact rationals, flat layout.
struct Distribution {
  Scenario sc;
  std::vector<Rat> p;

  Distribution() = default;
  explicit Distribution(const Scenario& s) : sc(s), p(s.table_size(), Rat(0)) {}
  Distribution(const Scenario& s, std::vector<Rat> entries);

  const Rat& at(int a, int b, int x, int y) const { return p[sc.flat(a, b, x, y)]; }
  Rat& at(int a, int b, int x, int y) { return p[sc.flat(a, b, x, y)]; }

  // Marginals evaluated against a fixed partner measurement (y=0 / x=0);
  // well defined on no-signalling tables.
  Rat marginal_a(int a, int x) const;
  Rat marginal_b(int b, int y) const;

  bool is_normalized() const;
  bool operator==(const Distribution&) const = default;
};

bool is_no_signalling(const Distribution& d);

// One outcome per measurement and party; expands to the product table
// p(ab|xy) = [a == aOut[x]] * [b == bOut[y]].
struct DeterministicVertex {
  Scenario sc;
  std::vector<int> aOut, bOut;

  Distribution expand() const;
  long index() const;  // position in the lexicographic enumeration
};

// All k_A^m_A * k_B^m_B deterministic vertices, lexicographic by assignment
// (Alice's outcomes are the most significant digits).
std::vector<DeterministicVertex> enumerate_deterministic(const Scenario& s);
DeterministicVertex vertex_from_index(const Scenario& s, long idx);

Distribution uniform_distribution(const Scenario& s);
Distribution pr_box();  // the (2,2,2,2) box maximally violating CHSH

// ---- binary-outcome extremal no-signalling points ------------------------
//
// Canonical block form for k=2: a grid of 2x2 blocks over (x, y) built from
//   S = [[1/2,0],[0,1/2]]  A = [[0,1/2],[1/2,0]]  K = [[1/2,1/2],[0,0]]
//   L = [[1/2,0],[1/2,0]]  M = [[1,0],[0,0]]
// with the upper-left corner pinned to [S S; S A], a suffix of K-rows for
// Alice, a suffix of L-columns for Bob and M on their intersection.

// Only S/A blocks (no K/L/M): the canonical extremal seed set.
std::vector<Distribution> enumerate_ns_extremal_sa(const Scenario& s);

// Every member of the canonical form, K/L/M rows and columns included.
// No extremality filtering is applied; use is_ns_extremal to filter.
std::vector<Distribution> enumerate_ns_canonical(const Scenario& s);

// Zero-dimensional-face test: the positivity constraints tight at d,
// restricted to the no-signalling affine subspace, must have full rank t.
bool is_ns_extremal(const Distribution& d);

// ---- reduced (Collins-Gisin style) coordinates ---------------------------
//
// Coordinates of the t-dimensional no-signalling affine subspace: the
// marginals pA(a|x) for a in [0, kA-1), pB(b|y) for b in [0, kB-1), and the
// joint entries p(ab|xy) for a in [0, kA-1), b in [0, kB-1). Index order:
// Alice marginals (x major, a minor), Bob marginals, then (x, y, a, b).
std::vector<Rat> reduced_coords(const Distribution& d);

// Rows of the affine map taking a reduced coordinate vector back to one
// full-table entry: full[i] = dot(row_i, coords) + offset_i.
struct ReducedExpansionRow {
  std::vector<std::pair<long, Rat>> terms;  // (reduced index, coefficient)
  Rat offset;
};
std::vector<ReducedExpansionRow> reduced_expansion(const Scenario& s);

}  // namespace bell

#endif
