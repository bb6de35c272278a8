#pragma once

#include <string>
#include <vector>

#include "hca/matrix.hpp"

namespace hca {

enum class BandVerdict { Inside, Boundary, Outside };
enum class BandMode { Exact, Numeric };

std::string band_verdict_name(BandVerdict v);

/// Monic characteristic polynomial with exact integer coefficients,
/// ascending order (c[0] + c[1] x + ... + x^dim). Uses the trace-recursion
/// scheme whose divisions are exact for integer input; non-exact division
/// or a nonreal trace raises InternalError.
std::vector<Int> characteristic_polynomial(const HermitianMatrix& h);

/// Distinct-root counts of an integer polynomial relative to the closed
/// band [-2, 2], computed from sign-variation sequences of the full
/// Sturm chain in exact rational arithmetic.
struct BandCounts {
  long long below = 0;    // distinct roots < -2
  long long inside = 0;   // distinct roots in (-2, 2)
  long long above = 0;    // distinct roots > 2
  bool edge_minus = false;  // -2 is a root
  bool edge_plus = false;   // +2 is a root
};

BandCounts band_root_counts(const std::vector<Int>& poly);

struct BandTestResult {
  BandVerdict verdict = BandVerdict::Inside;
  BandMode mode = BandMode::Exact;
  std::vector<double> eigenvalues;   // numeric witnesses (numeric mode)
  std::vector<Int> char_poly;        // exact witnesses (exact mode)
  BandCounts counts;                 // exact witnesses (exact mode)
};

/// Three-way band membership: inside when every eigenvalue lies in the
/// open interval (-2, 2), boundary when all lie in the closed band with at
/// least one at an edge, outside otherwise. Numeric mode classifies the
/// eigensolve output with a 1e-9 edge tolerance; exact mode counts roots
/// of the integer characteristic polynomial and is authoritative at the
/// edges. Exact mode requires dim <= 12.
BandTestResult spectrum_in_band(const HermitianMatrix& h, BandMode mode);
BandTestResult spectrum_in_band(const IntMatrix& symmetric, BandMode mode);

/// Lexicographically smallest representative of the orbit of (s, a) under
/// simultaneous row/column permutation combined with diagonal +-1
/// switching; such conjugations preserve the spectrum. The antisymmetric
/// part rides along so Hermitian pairs canonicalize consistently.
struct CanonicalPair {
  IntMatrix s;
  IntMatrix a;
};

CanonicalPair canonical_form(const IntMatrix& s, const IntMatrix& a);
IntMatrix canonical_form(const IntMatrix& symmetric);

struct SurvivorRecord {
  IntMatrix s;        // as enumerated
  IntMatrix a;        // zero for real scans
  IntMatrix canon_s;
  IntMatrix canon_a;
  BandVerdict verdict;  // Inside or Boundary
};

struct EnumerationResult {
  std::vector<SurvivorRecord> survivors;  // sorted by (canonical, raw) keys
  long long raw_count = 0;
  long long dedup_count = 0;
  long long candidates = 0;
  long long prefilter_rejects = 0;  // Frobenius cut: sum of squares > 4 dim
  bool deduplicated = false;
};

/// Exhaustive scan over integer symmetric matrices (optionally Hermitian
/// pairs, dim <= 3) with entries in [-entry_bound, entry_bound], keeping
/// those whose spectrum lies in the closed band [-2, 2]. With dedup the
/// survivor list is reduced to one canonical representative per orbit;
/// raw and deduplicated counts are always both reported. Work is split
/// deterministically over leading-row prefixes and merged into a sorted
/// list, so the output is identical for any worker count.
EnumerationResult enumerate_bounded_spectrum(int dim, int entry_bound, bool dedup,
                                             BandMode mode = BandMode::Exact, int jobs = 1,
                                             bool hermitian = false);

enum class GraphFamily { Path, Cycle };

/// Adjacency matrix of the n-vertex path (n >= 1) or cycle (n >= 3):
/// ready-made inputs whose band verdicts are known (paths inside, cycles
/// boundary via the eigenvalue 2 of the all-ones vector).
IntMatrix known_family(GraphFamily family, int n);

}  // namespace hca
