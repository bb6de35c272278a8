#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "hca/dynamics.hpp"
#include "hca/errors.hpp"
#include "hca/spectra.hpp"

using namespace hca;

namespace {

IntMatrix random_symmetric(std::mt19937_64& rng, int d, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const Int v(entry(rng));
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

IntMatrix conjugate_signed_perm(const IntMatrix& m, const std::vector<int>& perm,
                                const std::vector<int>& sign) {
  const int d = m.dim();
  IntMatrix out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Int v = m.at(perm[i], perm[j]);
      out.at(i, j) = sign[i] * sign[j] > 0 ? v : Int(-v);
    }
  return out;
}

// All roots of x^2 - (a+c) x + (ac - b^2) lie in [-2, 2] iff the parabola
// is nonnegative at both band edges and its vertex sits inside the band.
bool closed_form_2x2_survives(long long a, long long b, long long c) {
  const long long p2 = 4 - 2 * (a + c) + (a * c - b * b);
  const long long pm2 = 4 + 2 * (a + c) + (a * c - b * b);
  return p2 >= 0 && pm2 >= 0 && a + c >= -4 && a + c <= 4;
}

}  // namespace

TEST_CASE("characteristic polynomial: scalar, closed-form 2x2, determinant cross-check") {
  const auto p1 = characteristic_polynomial(HermitianMatrix::from_symmetric(IntMatrix::from({{7}})));
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == -7);
  CHECK(p1[1] == 1);

  std::mt19937_64 rng(404);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int it = 0; it < 50; ++it) {
    const long long a = entry(rng), b = entry(rng), c = entry(rng);
    IntMatrix m = IntMatrix::from({{a, b}, {b, c}});
    const auto p = characteristic_polynomial(HermitianMatrix::from_symmetric(m));
    REQUIRE(p.size() == 3);
    CHECK(p[2] == 1);
    CHECK(p[1] == -(a + c));
    CHECK(p[0] == a * c - b * b);
  }

  // Constant term against a hand-rolled 3x3 Leibniz determinant.
  for (int it = 0; it < 30; ++it) {
    IntMatrix m = random_symmetric(rng, 3, 4);
    auto e = [&](int i, int j) { return m.at(i, j); };
    const Int det = e(0, 0) * e(1, 1) * e(2, 2) + e(0, 1) * e(1, 2) * e(2, 0) +
                    e(0, 2) * e(1, 0) * e(2, 1) - e(0, 2) * e(1, 1) * e(2, 0) -
                    e(0, 0) * e(1, 2) * e(2, 1) - e(0, 1) * e(1, 0) * e(2, 2);
    const auto p = characteristic_polynomial(HermitianMatrix::from_symmetric(m));
    REQUIRE(p.size() == 4);
    CHECK(p[0] == -det);  // p(0) = det(0 - M) = (-1)^3 det M
  }
}

TEST_CASE("characteristic polynomial of Hermitian input stays integer and annihilates") {
  IntMatrix s = IntMatrix::zero(2);
  IntMatrix a = IntMatrix::from({{0, 1}, {-1, 0}});
  const HermitianMatrix h(s, a);  // [[0, i], [-i, 0]]
  const auto p = characteristic_polynomial(h);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == -1);
  CHECK(p[1] == 0);
  CHECK(p[2] == 1);
}

TEST_CASE("band root counts on pinned integer polynomials") {
  {  // x^2 - 1
    const auto c = band_root_counts({Int(-1), Int(0), Int(1)});
    CHECK(c.inside == 2);
    CHECK(c.below == 0);
    CHECK(c.above == 0);
    CHECK_FALSE(c.edge_minus);
    CHECK_FALSE(c.edge_plus);
  }
  {  // x^2 - 4
    const auto c = band_root_counts({Int(-4), Int(0), Int(1)});
    CHECK(c.inside == 0);
    CHECK(c.edge_minus);
    CHECK(c.edge_plus);
    CHECK(c.below == 0);
    CHECK(c.above == 0);
  }
  {  // x^2 - 5
    const auto c = band_root_counts({Int(-5), Int(0), Int(1)});
    CHECK(c.below == 1);
    CHECK(c.above == 1);
    CHECK(c.inside == 0);
  }
  {  // (x - 2)^2, repeated edge root only
    const auto c = band_root_counts({Int(4), Int(-4), Int(1)});
    CHECK(c.edge_plus);
    CHECK_FALSE(c.edge_minus);
    CHECK(c.inside == 0);
    CHECK(c.below + c.above == 0);
  }
  {  // x^3 - x, three distinct interior roots
    const auto c = band_root_counts({Int(0), Int(-1), Int(0), Int(1)});
    CHECK(c.inside == 3);
  }
  {  // x^2 (x - 3): repeated interior root counted once, one above
    const auto c = band_root_counts({Int(0), Int(0), Int(-3), Int(1)});
    CHECK(c.inside == 1);
    CHECK(c.above == 1);
  }
  CHECK_THROWS_AS((void)band_root_counts({Int(1), Int(0)}), ValidationError);
}

TEST_CASE("band membership verdicts on the pinned matrices") {
  for (BandMode mode : {BandMode::Exact, BandMode::Numeric}) {
    CHECK(spectrum_in_band(IntMatrix::from({{0, 1}, {1, 0}}), mode).verdict ==
          BandVerdict::Inside);
    CHECK(spectrum_in_band(IntMatrix::from({{2, 0}, {0, -2}}), mode).verdict ==
          BandVerdict::Boundary);
    CHECK(spectrum_in_band(IntMatrix::from({{3}}), mode).verdict == BandVerdict::Outside);
  }
  CHECK(band_verdict_name(BandVerdict::Inside) == "inside");
  CHECK(band_verdict_name(BandVerdict::Boundary) == "boundary");
  CHECK(band_verdict_name(BandVerdict::Outside) == "outside");

  const auto exact = spectrum_in_band(IntMatrix::from({{0, 1}, {1, 0}}), BandMode::Exact);
  CHECK(exact.counts.inside == 2);
  CHECK(exact.char_poly == std::vector<Int>{Int(-1), Int(0), Int(1)});
  const auto numeric = spectrum_in_band(IntMatrix::from({{0, 1}, {1, 0}}), BandMode::Numeric);
  REQUIRE(numeric.eigenvalues.size() == 2);
  CHECK(numeric.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(numeric.eigenvalues[1] == doctest::Approx(1.0));

  CHECK_THROWS_AS((void)spectrum_in_band(IntMatrix::from({{0, 1}, {0, 0}}), BandMode::Exact),
                  ValidationError);
  CHECK_THROWS_AS((void)spectrum_in_band(HermitianMatrix::from_symmetric(IntMatrix::zero(13)),
                                         BandMode::Exact),
                  ValidationError);
  CHECK(spectrum_in_band(HermitianMatrix::from_symmetric(IntMatrix::zero(13)), BandMode::Numeric)
            .verdict == BandVerdict::Inside);
}

TEST_CASE("exact and numeric verdicts agree on random matrices") {
  std::mt19937_64 rng(9090);
  std::uniform_int_distribution<int> dims(1, 4);
  for (int it = 0; it < 1000; ++it) {
    IntMatrix m = random_symmetric(rng, dims(rng), 3);
    const auto ex = spectrum_in_band(m, BandMode::Exact);
    const auto nu = spectrum_in_band(m, BandMode::Numeric);
    CHECK(ex.verdict == nu.verdict);
  }
}

TEST_CASE("scalar scan at bound three keeps exactly the five band entries") {
  const auto res = enumerate_bounded_spectrum(1, 3, false);
  CHECK(res.raw_count == 5);
  CHECK(res.candidates == 7);
  REQUIRE(res.survivors.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(res.survivors[static_cast<std::size_t>(k)].s.at(0, 0) == k - 2);
    CHECK(res.survivors[static_cast<std::size_t>(k)].a == IntMatrix::zero(1));
  }
  CHECK(res.survivors[0].verdict == BandVerdict::Boundary);
  CHECK(res.survivors[2].verdict == BandVerdict::Inside);
  CHECK(res.survivors[4].verdict == BandVerdict::Boundary);
}

TEST_CASE("two-dimensional scan count matches the closed-form root conditions") {
  long long expect = 0;
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -2; b <= 2; ++b)
      for (long long c = -2; c <= 2; ++c)
        if (closed_form_2x2_survives(a, b, c)) ++expect;

  const auto exact = enumerate_bounded_spectrum(2, 2, false, BandMode::Exact);
  const auto numeric = enumerate_bounded_spectrum(2, 2, false, BandMode::Numeric);
  CHECK(exact.raw_count == expect);
  CHECK(numeric.raw_count == expect);
  CHECK(exact.candidates == 125);
  REQUIRE(exact.survivors.size() == numeric.survivors.size());
  for (std::size_t i = 0; i < exact.survivors.size(); ++i) {
    CHECK(exact.survivors[i].s == numeric.survivors[i].s);
    CHECK(exact.survivors[i].verdict == numeric.survivors[i].verdict);
  }
}

TEST_CASE("survivor lists are identical for any worker count") {
  const auto one = enumerate_bounded_spectrum(2, 2, false, BandMode::Exact, 1);
  const auto eight = enumerate_bounded_spectrum(2, 2, false, BandMode::Exact, 8);
  CHECK(one.raw_count == eight.raw_count);
  CHECK(one.dedup_count == eight.dedup_count);
  CHECK(one.prefilter_rejects == eight.prefilter_rejects);
  REQUIRE(one.survivors.size() == eight.survivors.size());
  for (std::size_t i = 0; i < one.survivors.size(); ++i) {
    CHECK(one.survivors[i].s == eight.survivors[i].s);
    CHECK(one.survivors[i].a == eight.survivors[i].a);
    CHECK(one.survivors[i].canon_s == eight.survivors[i].canon_s);
    CHECK(one.survivors[i].verdict == eight.survivors[i].verdict);
  }

  const auto h1 = enumerate_bounded_spectrum(2, 1, false, BandMode::Exact, 1, true);
  const auto h5 = enumerate_bounded_spectrum(2, 1, false, BandMode::Exact, 5, true);
  REQUIRE(h1.survivors.size() == h5.survivors.size());
  for (std::size_t i = 0; i < h1.survivors.size(); ++i) {
    CHECK(h1.survivors[i].s == h5.survivors[i].s);
    CHECK(h1.survivors[i].a == h5.survivors[i].a);
  }
  CHECK(h1.candidates == 81);  // three symmetric slots plus one imaginary slot
}

TEST_CASE("the Frobenius cut only discards matrices that fail the full test") {
  std::mt19937_64 rng(515);
  int checked = 0;
  while (checked < 50) {
    IntMatrix m = random_symmetric(rng, 2, 3);
    Int acc(0);
    for (const Int& v : m.flat()) acc += v * v;
    if (acc <= 8) continue;  // not cut by the pre-filter
    CHECK(spectrum_in_band(m, BandMode::Exact).verdict == BandVerdict::Outside);
    ++checked;
  }

  const auto res = enumerate_bounded_spectrum(2, 3, false, BandMode::Exact);
  CHECK(res.prefilter_rejects > 0);
  // Survivors plus explicit spectral rejects plus pre-filter rejects
  // exhaust the candidate space; verify the arithmetic is consistent.
  CHECK(res.prefilter_rejects < res.candidates);
  CHECK(res.raw_count + res.prefilter_rejects <= res.candidates);
}

TEST_CASE("canonicalization is idempotent and orbit-invariant") {
  std::mt19937_64 rng(2718);
  for (int it = 0; it < 10; ++it) {
    const int d = 2 + static_cast<int>(rng() % 3);
    IntMatrix m = random_symmetric(rng, d, 2);
    const IntMatrix canon = canonical_form(m);
    CHECK(canonical_form(canon) == canon);
    CHECK(spectrum_in_band(canon, BandMode::Exact).verdict ==
          spectrum_in_band(m, BandMode::Exact).verdict);

    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<int> sign(static_cast<std::size_t>(d), 1);
    for (int rep = 0; rep < 100; ++rep) {
      std::shuffle(perm.begin(), perm.end(), rng);
      for (auto& s : sign) s = (rng() & 1) ? 1 : -1;
      const IntMatrix conj = conjugate_signed_perm(m, perm, sign);
      CHECK(canonical_form(conj) == canon);
    }
  }
}

TEST_CASE("survivor set is closed under negation and signed-permutation conjugation") {
  const auto res = enumerate_bounded_spectrum(2, 2, false, BandMode::Exact);
  std::set<std::vector<Int>> raw;
  for (const auto& rec : res.survivors) raw.insert(rec.s.flat());
  for (const auto& rec : res.survivors) {
    CHECK(raw.count((-rec.s).flat()) == 1);
    const IntMatrix swapped = conjugate_signed_perm(rec.s, {1, 0}, {1, -1});
    CHECK(raw.count(swapped.flat()) == 1);
  }

  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    IntMatrix m = random_symmetric(rng, 3, 3);
    const auto v = spectrum_in_band(m, BandMode::Exact).verdict;
    CHECK(spectrum_in_band(IntMatrix(-m), BandMode::Exact).verdict == v);
  }
}

TEST_CASE("deduplication keeps one canonical representative per orbit") {
  const auto raw = enumerate_bounded_spectrum(2, 2, false, BandMode::Exact);
  const auto dd = enumerate_bounded_spectrum(2, 2, true, BandMode::Exact);
  CHECK(dd.raw_count == raw.raw_count);
  CHECK(dd.dedup_count == raw.dedup_count);
  CHECK(static_cast<long long>(dd.survivors.size()) == dd.dedup_count);
  CHECK(dd.deduplicated);

  std::set<std::vector<Int>> canon_raw;
  for (const auto& rec : raw.survivors) {
    CHECK(canonical_form(rec.s) == rec.canon_s);
    canon_raw.insert(rec.canon_s.flat());
  }
  CHECK(static_cast<long long>(canon_raw.size()) == raw.dedup_count);

  for (const auto& rec : dd.survivors) {
    CHECK(rec.s == rec.canon_s);  // representatives are canonical
    CHECK(canon_raw.count(rec.s.flat()) == 1);
    CHECK(spectrum_in_band(rec.s, BandMode::Exact).verdict == rec.verdict);
  }
}

TEST_CASE("ready-made graph families land on the advertised verdicts") {
  const IntMatrix p3 = known_family(GraphFamily::Path, 3);
  CHECK(p3 == IntMatrix::from({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
  CHECK(spectrum_in_band(p3, BandMode::Exact).verdict == BandVerdict::Inside);
  const auto p3n = spectrum_in_band(p3, BandMode::Numeric);
  REQUIRE(p3n.eigenvalues.size() == 3);
  CHECK(p3n.eigenvalues[0] == doctest::Approx(-std::sqrt(2.0)));
  CHECK(p3n.eigenvalues[1] == doctest::Approx(0.0));
  CHECK(p3n.eigenvalues[2] == doctest::Approx(std::sqrt(2.0)));

  CHECK(spectrum_in_band(known_family(GraphFamily::Path, 1), BandMode::Exact).verdict ==
        BandVerdict::Inside);
  for (int n = 1; n <= 7; ++n)
    CHECK(spectrum_in_band(known_family(GraphFamily::Path, n), BandMode::Exact).verdict ==
          BandVerdict::Inside);
  for (int n = 3; n <= 7; ++n) {
    const auto r = spectrum_in_band(known_family(GraphFamily::Cycle, n), BandMode::Exact);
    CHECK(r.verdict == BandVerdict::Boundary);
    CHECK(r.counts.edge_plus);  // the all-ones vector carries eigenvalue 2
  }
  CHECK_THROWS_AS((void)known_family(GraphFamily::Path, 0), ValidationError);
  CHECK_THROWS_AS((void)known_family(GraphFamily::Cycle, 2), ValidationError);
}

TEST_CASE("interior survivors drive bounded periodic orbits") {
  const auto res = enumerate_bounded_spectrum(2, 2, true, BandMode::Exact);
  int checked = 0;
  for (const auto& rec : res.survivors) {
    if (rec.verdict != BandVerdict::Inside) continue;
    if (checked >= 10) break;
    const AutomatonSpec spec = validate_spec(rec.s, IntMatrix::zero(2));
    StatePair s;
    s.x_prev = {Int(1), Int(0)};
    s.p_prev = {Int(0), Int(1)};
    s.x_curr = {Int(1), Int(0)};
    s.p_curr = {Int(0), Int(1)};
    s.tick = 0;
    const auto period = detect_period(spec, s, 1'000'000);
    REQUIRE(period.has_value());
    CHECK(*period >= 1);
    ++checked;
  }
  CHECK(checked >= 5);  // the scan yields plenty of interior survivors
}

TEST_CASE("scan input validation") {
  CHECK_THROWS_AS((void)enumerate_bounded_spectrum(0, 2, false), ValidationError);
  CHECK_THROWS_AS((void)enumerate_bounded_spectrum(6, 1, false), ValidationError);
  CHECK_THROWS_AS((void)enumerate_bounded_spectrum(2, 0, false), ValidationError);
  CHECK_THROWS_AS((void)enumerate_bounded_spectrum(2, 2, false, BandMode::Exact, 0),
                  ValidationError);
  CHECK_THROWS_AS((void)enumerate_bounded_spectrum(5, 4, false), ValidationError);  // 9^15
  CHECK_THROWS_AS((void)enumerate_bounded_spectrum(4, 2, false, BandMode::Exact, 1, true),
                  ValidationError);
}
