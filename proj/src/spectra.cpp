#include "hca/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <utility>

#include "hca/bridge.hpp"
#include "hca/errors.hpp"

namespace hca {

namespace {

constexpr double kEdgeTol = 1e-9;

using RatPoly = std::vector<Rat>;  // ascending coefficients, no trailing zeros

void strip_poly(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long long>(i)));
  strip_poly(d);
  return d;
}

// Remainder of a divided by b (b nonzero), dense long division.
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rat q = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    a.pop_back();
    strip_poly(a);
  }
  return a;
}

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign_at(const RatPoly& p, const Rat& x) {
  Rat acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sign_of(acc);
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  chain.push_back(p);
  RatPoly d = derivative(p);
  while (!d.empty()) {
    chain.push_back(d);
    if (chain.back().size() == 1) break;
    RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    d = std::move(r);
  }
  return chain;
}

long long sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
  long long v = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Int eval_int(const std::vector<Int>& p, const Int& x) {
  Int acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Exact synthetic division by (x - r); caller guarantees p(r) == 0.
std::vector<Int> deflate_root(const std::vector<Int>& p, const Int& r) {
  std::vector<Int> q(p.size() - 1);
  Int carry(0);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + r * carry;
    q[i - 1] = carry;
  }
  if (p[0] + r * carry != 0) throw InternalError("deflation at a claimed root left a remainder");
  return q;
}

void add_scaled_identity(GaussMatrix& m, const Int& c) {
  for (int i = 0; i < m.dim(); ++i) m.at(i, i).re += c;
}

BandVerdict classify(long long strictly_outside, bool any_edge) {
  if (strictly_outside > 0) return BandVerdict::Outside;
  return any_edge ? BandVerdict::Boundary : BandVerdict::Inside;
}

struct ScanTask {
  int dim = 0;
  int entry_bound = 0;
  BandMode mode = BandMode::Exact;
  bool hermitian = false;
};

// Positions of the free entries: symmetric upper triangle (with diagonal),
// then the strictly-upper antisymmetric slots for Hermitian scans. The
// first `dim` positions are exactly the leading row of S, which is the
// partitioning prefix for parallel runs.
struct SlotLayout {
  std::vector<std::pair<int, int>> s_slots;
  std::vector<std::pair<int, int>> a_slots;
  std::size_t total() const { return s_slots.size() + a_slots.size(); }
};

SlotLayout make_layout(const ScanTask& t) {
  SlotLayout lay;
  for (int i = 0; i < t.dim; ++i)
    for (int j = i; j < t.dim; ++j) lay.s_slots.push_back({i, j});
  if (t.hermitian)
    for (int i = 0; i < t.dim; ++i)
      for (int j = i + 1; j < t.dim; ++j) lay.a_slots.push_back({i, j});
  return lay;
}

void fill_from_digits(const ScanTask& t, const SlotLayout& lay, const std::vector<int>& digits,
                      IntMatrix& s, IntMatrix& a) {
  for (std::size_t k = 0; k < lay.s_slots.size(); ++k) {
    const auto [i, j] = lay.s_slots[k];
    const Int v(digits[k] - t.entry_bound);
    s.at(i, j) = v;
    s.at(j, i) = v;
  }
  for (std::size_t k = 0; k < lay.a_slots.size(); ++k) {
    const auto [i, j] = lay.a_slots[k];
    const Int v(digits[lay.s_slots.size() + k] - t.entry_bound);
    a.at(i, j) = v;
    a.at(j, i) = -v;
  }
}

bool frobenius_reject(const IntMatrix& s, const IntMatrix& a, int dim) {
  Int acc(0);
  for (const Int& v : s.flat()) acc += v * v;
  for (const Int& v : a.flat()) acc += v * v;
  return acc > 4 * dim;
}

bool pair_lex_less(const IntMatrix& s1, const IntMatrix& a1, const IntMatrix& s2,
                   const IntMatrix& a2) {
  if (s1.lex_less(s2)) return true;
  if (s2.lex_less(s1)) return false;
  return a1.lex_less(a2);
}

}  // namespace

std::string band_verdict_name(BandVerdict v) {
  switch (v) {
    case BandVerdict::Inside:
      return "inside";
    case BandVerdict::Boundary:
      return "boundary";
    case BandVerdict::Outside:
      return "outside";
  }
  throw InternalError("unknown verdict");
}

std::vector<Int> characteristic_polynomial(const HermitianMatrix& h) {
  const int d = h.dim();
  std::vector<Int> c(static_cast<std::size_t>(d) + 1);
  c[static_cast<std::size_t>(d)] = 1;

  GaussMatrix mk = GaussMatrix::identity(d);
  for (int k = 1; k <= d; ++k) {
    const GaussMatrix hm = h.matrix() * mk;
    if (!hm.trace_is_real()) throw InternalError("characteristic recursion trace is not real");
    const Int t = hm.trace_real();
    if (t % k != 0) throw InternalError("characteristic recursion division is not exact");
    c[static_cast<std::size_t>(d - k)] = -t / k;
    if (k < d) {
      mk = hm;
      add_scaled_identity(mk, c[static_cast<std::size_t>(d - k)]);
    }
  }
  return c;
}

BandCounts band_root_counts(const std::vector<Int>& poly) {
  if (poly.empty() || poly.back() == 0)
    throw ValidationError("polynomial must have a nonzero leading coefficient");

  BandCounts out;
  std::vector<Int> q = poly;
  while (q.size() > 1 && eval_int(q, Int(2)) == 0) {
    out.edge_plus = true;
    q = deflate_root(q, Int(2));
  }
  while (q.size() > 1 && eval_int(q, Int(-2)) == 0) {
    out.edge_minus = true;
    q = deflate_root(q, Int(-2));
  }
  if (q.size() == 1) return out;  // only edge roots

  // Cauchy bound: every root of the deflated polynomial has magnitude
  // below 1 + max |c_i / c_lead|; pushing it past 2 keeps the outer
  // interval endpoints root-free.
  Rat maxratio(0);
  const Rat lead(q.back());
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    Rat r = Rat(q[i]) / lead;
    if (r < 0) r = -r;
    if (r > maxratio) maxratio = r;
  }
  Rat bound = maxratio + 2;

  RatPoly rq(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) rq[i] = Rat(q[i]);
  const auto chain = sturm_chain(rq);

  const long long v_lo = sign_variations(chain, -bound);
  const long long v_m2 = sign_variations(chain, Rat(-2));
  const long long v_p2 = sign_variations(chain, Rat(2));
  const long long v_hi = sign_variations(chain, bound);

  out.below = v_lo - v_m2;
  out.inside = v_m2 - v_p2;
  out.above = v_p2 - v_hi;
  return out;
}

BandTestResult spectrum_in_band(const HermitianMatrix& h, BandMode mode) {
  BandTestResult res;
  res.mode = mode;
  if (mode == BandMode::Numeric) {
    const EigenResult eig = eigen_decompose(h);
    res.eigenvalues = eig.eigenvalues;
    long long outside = 0;
    bool edge = false;
    for (double e : res.eigenvalues) {
      if (e > 2.0 + kEdgeTol || e < -2.0 - kEdgeTol)
        ++outside;
      else if (e > 2.0 - kEdgeTol || e < -2.0 + kEdgeTol)
        edge = true;
    }
    res.verdict = classify(outside, edge);
    return res;
  }

  if (h.dim() > 12) throw ValidationError("exact mode supports dim <= 12");
  res.char_poly = characteristic_polynomial(h);
  res.counts = band_root_counts(res.char_poly);
  res.verdict = classify(res.counts.below + res.counts.above,
                         res.counts.edge_minus || res.counts.edge_plus);
  return res;
}

BandTestResult spectrum_in_band(const IntMatrix& symmetric, BandMode mode) {
  return spectrum_in_band(HermitianMatrix::from_symmetric(symmetric), mode);
}

CanonicalPair canonical_form(const IntMatrix& s, const IntMatrix& a) {
  const int d = s.dim();
  if (a.dim() != d) throw ValidationError("matrix dimensions differ");

  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);

  CanonicalPair best{s, a};
  bool first = true;
  IntMatrix cs(d), ca(d);
  do {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      for (int i = 0; i < d; ++i) {
        const int si = (mask >> i) & 1 ? -1 : 1;
        for (int j = 0; j < d; ++j) {
          const int sj = (mask >> j) & 1 ? -1 : 1;
          const int f = si * sj;
          const auto pi = perm[static_cast<std::size_t>(i)];
          const auto pj = perm[static_cast<std::size_t>(j)];
          cs.at(i, j) = f > 0 ? s.at(pi, pj) : -s.at(pi, pj);
          ca.at(i, j) = f > 0 ? a.at(pi, pj) : -a.at(pi, pj);
        }
      }
      if (first || pair_lex_less(cs, ca, best.s, best.a)) {
        best.s = cs;
        best.a = ca;
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

IntMatrix canonical_form(const IntMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw ValidationError("matrix is not symmetric");
  return canonical_form(symmetric, IntMatrix::zero(symmetric.dim())).s;
}

EnumerationResult enumerate_bounded_spectrum(int dim, int entry_bound, bool dedup, BandMode mode,
                                             int jobs, bool hermitian) {
  if (dim < 1 || dim > 5) throw ValidationError("dim must be between 1 and 5");
  if (entry_bound < 1) throw ValidationError("entry bound must be positive");
  if (jobs < 1) throw ValidationError("jobs must be positive");
  if (hermitian && dim > 3) throw ValidationError("Hermitian scans support dim <= 3");

  ScanTask task{dim, entry_bound, mode, hermitian};
  const SlotLayout layout = make_layout(task);

  const Int radix(2 * entry_bound + 1);
  Int space(1);
  for (std::size_t i = 0; i < layout.total(); ++i) space *= radix;
  if (space > 1'000'000'000) throw ValidationError("search space exceeds 10^9 candidates");
  const auto total = space.convert_to<long long>();

  // Split over leading-row prefixes: every worker owns a deterministic,
  // contiguous range of first-row assignments and walks the remaining
  // slots as a plain odometer.
  Int prefix_space(1);
  for (int i = 0; i < dim; ++i) prefix_space *= radix;
  const auto prefixes = prefix_space.convert_to<long long>();
  const long long per_prefix = total / prefixes;

  struct WorkerOut {
    std::vector<SurvivorRecord> survivors;
    long long prefilter_rejects = 0;
  };
  const int nworkers = static_cast<int>(std::min<long long>(jobs, prefixes));
  std::vector<WorkerOut> outs(static_cast<std::size_t>(nworkers));

  auto run_range = [&](long long prefix_lo, long long prefix_hi, WorkerOut& out) {
    const int base = 2 * task.entry_bound + 1;
    std::vector<int> digits(layout.total(), 0);
    IntMatrix s(dim), a(dim);
    for (long long pf = prefix_lo; pf < prefix_hi; ++pf) {
      long long rem = pf;
      for (int i = 0; i < dim; ++i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(rem % base);
        rem /= base;
      }
      std::fill(digits.begin() + dim, digits.end(), 0);
      for (long long inner = 0; inner < per_prefix; ++inner) {
        fill_from_digits(task, layout, digits, s, a);
        if (frobenius_reject(s, a, dim)) {
          ++out.prefilter_rejects;
        } else {
          const HermitianMatrix h(s, a);
          const BandTestResult r = spectrum_in_band(h, task.mode);
          if (r.verdict != BandVerdict::Outside) {
            CanonicalPair canon = canonical_form(s, a);
            out.survivors.push_back(
                {s, a, std::move(canon.s), std::move(canon.a), r.verdict});
          }
        }
        for (std::size_t k = static_cast<std::size_t>(dim); k < digits.size(); ++k) {
          if (++digits[k] < base) break;
          digits[k] = 0;
        }
      }
    }
  };

  if (nworkers == 1) {
    run_range(0, prefixes, outs[0]);
  } else {
    std::vector<std::thread> pool;
    const long long chunk = (prefixes + nworkers - 1) / nworkers;
    for (int w = 0; w < nworkers; ++w) {
      const long long lo = std::min<long long>(static_cast<long long>(w) * chunk, prefixes);
      const long long hi = std::min<long long>(lo + chunk, prefixes);
      pool.emplace_back(run_range, lo, hi, std::ref(outs[static_cast<std::size_t>(w)]));
    }
    for (auto& th : pool) th.join();
  }

  EnumerationResult res;
  res.candidates = total;
  res.deduplicated = dedup;
  for (auto& o : outs) {
    res.prefilter_rejects += o.prefilter_rejects;
    for (auto& rec : o.survivors) res.survivors.push_back(std::move(rec));
  }
  res.raw_count = static_cast<long long>(res.survivors.size());

  std::sort(res.survivors.begin(), res.survivors.end(),
            [](const SurvivorRecord& l, const SurvivorRecord& r) {
              if (pair_lex_less(l.canon_s, l.canon_a, r.canon_s, r.canon_a)) return true;
              if (pair_lex_less(r.canon_s, r.canon_a, l.canon_s, l.canon_a)) return false;
              return pair_lex_less(l.s, l.a, r.s, r.a);
            });

  long long classes = 0;
  for (std::size_t i = 0; i < res.survivors.size(); ++i) {
    if (i == 0 || res.survivors[i - 1].canon_s != res.survivors[i].canon_s ||
        res.survivors[i - 1].canon_a != res.survivors[i].canon_a)
      ++classes;
  }
  res.dedup_count = classes;

  if (dedup) {
    std::vector<SurvivorRecord> reps;
    for (std::size_t i = 0; i < res.survivors.size(); ++i) {
      if (i == 0 || res.survivors[i - 1].canon_s != res.survivors[i].canon_s ||
          res.survivors[i - 1].canon_a != res.survivors[i].canon_a) {
        SurvivorRecord rep = res.survivors[i];
        rep.s = rep.canon_s;
        rep.a = rep.canon_a;
        reps.push_back(std::move(rep));
      }
    }
    res.survivors = std::move(reps);
  }
  return res;
}

IntMatrix known_family(GraphFamily family, int n) {
  if (family == GraphFamily::Path) {
    if (n < 1) throw ValidationError("path needs n >= 1");
    IntMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) {
      m.at(i, i + 1) = 1;
      m.at(i + 1, i) = 1;
    }
    return m;
  }
  if (n < 3) throw ValidationError("cycle needs n >= 3");
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    m.at(i, j) = 1;
    m.at(j, i) = 1;
  }
  return m;
}

}  // namespace hca
