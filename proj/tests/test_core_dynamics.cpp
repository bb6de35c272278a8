#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "hca/dynamics.hpp"
#include "hca/errors.hpp"

using namespace hca;

namespace {

// Independent scalar oracle for dim=1, S=[[s]], A=0, c=1, written on plain
// machine integers with no shared code: re' = re_prev + s*im, im' = im_prev
// - s*re. Valid while values stay far from the int64 range.
struct ScalarOracle {
  std::int64_t s;
  std::int64_t re_prev, im_prev, re_curr, im_curr;

  void step() {
    const std::int64_t re_next = re_prev + s * im_curr;
    const std::int64_t im_next = im_prev - s * re_curr;
    re_prev = re_curr;
    im_prev = im_curr;
    re_curr = re_next;
    im_curr = im_next;
  }
};

AutomatonSpec scalar_spec(long long s) {
  return validate_spec(IntMatrix::from({{s}}), IntMatrix::zero(1));
}

StatePair scalar_state(long long xp, long long pp, long long xc, long long pc) {
  StatePair st;
  st.x_prev = {Int(xp)};
  st.p_prev = {Int(pp)};
  st.x_curr = {Int(xc)};
  st.p_curr = {Int(pc)};
  return st;
}

AutomatonSpec random_spec(std::mt19937_64& rng, int max_dim = 4, int entry_bound = 2) {
  std::uniform_int_distribution<int> dim_d(1, max_dim);
  std::uniform_int_distribution<long long> e(-entry_bound, entry_bound);
  const int d = dim_d(rng);
  IntMatrix S(d), A(d);
  for (int r = 0; r < d; ++r) {
    S.at(r, r) = e(rng);
    for (int c = r + 1; c < d; ++c) {
      S.at(r, c) = e(rng);
      S.at(c, r) = S.at(r, c);
      A.at(r, c) = e(rng);
      A.at(c, r) = -A.at(r, c);
    }
  }
  std::uniform_int_distribution<int> clen_d(1, 3);
  std::vector<Int> c;
  const int clen = clen_d(rng);
  for (int i = 0; i < clen; ++i) c.emplace_back(e(rng));
  return validate_spec(std::move(S), std::move(A), std::move(c));
}

StatePair random_state(std::mt19937_64& rng, int dim, long long bound = 5) {
  std::uniform_int_distribution<long long> e(-bound, bound);
  StatePair s;
  for (int i = 0; i < dim; ++i) {
    s.x_prev.emplace_back(e(rng));
    s.p_prev.emplace_back(e(rng));
    s.x_curr.emplace_back(e(rng));
    s.p_curr.emplace_back(e(rng));
  }
  s.tau_prev = e(rng);
  s.tau_curr = e(rng);
  s.pi2_prev = e(rng);
  s.pi2_curr = e(rng);
  s.tick = std::uniform_int_distribution<long long>(-4, 4)(rng);
  return s;
}

}  // namespace

TEST_CASE("spec validation accepts/rejects by the structural conditions") {
  CHECK_NOTHROW(validate_spec(IntMatrix::from({{0, 1}, {1, 0}}), IntMatrix::zero(2)));
  CHECK_NOTHROW(validate_spec(IntMatrix::zero(2), IntMatrix::from({{0, 1}, {-1, 0}})));
  CHECK_THROWS_WITH_AS(
      validate_spec(IntMatrix::from({{0, 1}, {2, 0}}), IntMatrix::zero(2)),
      "S not symmetric", ValidationError);
  CHECK_THROWS_AS(validate_spec(IntMatrix::from({{0, 1}, {1, 0}}),
                                IntMatrix::from({{0, 1}, {1, 0}})),
                  ValidationError);
  CHECK_THROWS_AS(validate_spec(IntMatrix::from({{1}}), IntMatrix::zero(2)), ValidationError);
  CHECK_THROWS_AS(validate_spec(IntMatrix::from({{1}}), IntMatrix::zero(1), {Int(1)}, 0.0),
                  ValidationError);
  CHECK_THROWS_AS(validate_spec(IntMatrix::from({{1}}), IntMatrix::zero(1), {}), ValidationError);
  // A omitted (dimension 0) defaults to the zero matrix.
  CHECK(validate_spec(IntMatrix::from({{1}}), IntMatrix()).A == IntMatrix::zero(1));
}

TEST_CASE("coupling matrix is S + iA and Hermitian") {
  auto h1 = hamiltonian_matrix(scalar_spec(1));
  CHECK(h1.at(0, 0) == GaussInt(Int(1)));

  auto spec2 = validate_spec(IntMatrix::zero(2), IntMatrix::from({{0, 1}, {-1, 0}}));
  auto h2 = hamiltonian_matrix(spec2);
  CHECK(h2.at(0, 1) == GaussInt(Int(0), Int(1)));
  CHECK(h2.at(1, 0) == GaussInt(Int(0), Int(-1)));
  CHECK(h2.matrix().is_hermitian());

  auto spec3 =
      validate_spec(IntMatrix::from({{0, 1}, {1, 0}}), IntMatrix::from({{0, 1}, {-1, 0}}));
  auto h3 = hamiltonian_matrix(spec3);
  CHECK(h3.at(0, 1) == GaussInt(Int(1), Int(1)));
  CHECK(h3.at(1, 0) == GaussInt(Int(1), Int(-1)));
}

TEST_CASE("forward step matches an independent scalar iteration") {
  const auto spec = scalar_spec(1);
  StatePair s = scalar_state(1, 0, 1, 0);
  ScalarOracle o{1, 1, 0, 1, 0};
  for (int n = 0; n < 50; ++n) {
    s = step_forward(spec, s);
    o.step();
    CAPTURE(n);
    REQUIRE(s.x_curr[0] == Int(o.re_curr));
    REQUIRE(s.p_curr[0] == Int(o.im_curr));
  }
}

TEST_CASE("first ticks of the unit scalar run") {
  const auto spec = scalar_spec(1);
  StatePair s = scalar_state(1, 0, 1, 0);
  s = step_forward(spec, s);  // tick 1
  CHECK(s.x_curr[0] == 1);
  CHECK(s.p_curr[0] == -1);
  s = step_forward(spec, s);  // tick 2
  CHECK(s.x_curr[0] == 0);
  CHECK(s.p_curr[0] == -1);
  s = step_forward(spec, s);  // tick 3
  CHECK(s.x_curr[0] == 0);
  CHECK(s.p_curr[0] == -1);
  s = step_forward(spec, s);  // tick 4
  CHECK(s.x_curr[0] == -1);
  CHECK(s.p_curr[0] == -1);
}

TEST_CASE("tau advances by c from two ticks back") {
  const auto spec = scalar_spec(1);
  StatePair s = scalar_state(1, 0, 1, 0);  // tau_prev = tau_curr = 0
  s = step_forward(spec, s);
  CHECK(s.tau_curr == 1);
  s = step_forward(spec, s);
  CHECK(s.tau_curr == 1);
  s = step_forward(spec, s);
  CHECK(s.tau_curr == 2);
}

TEST_CASE("doubled momentum tracks the doubled energy difference") {
  // Unit scalar run from (1, 1): 2H = x^2 + p^2 gives 1,1,2,1 at ticks
  // -1..2, so 2pi_1 = 0 + 2 - 1 = 1 and 2pi_2 = 0 + 1 - 1 = 0.
  const auto spec = scalar_spec(1);
  StatePair s = scalar_state(1, 0, 1, 0);
  CHECK(doubled_energy(spec, s.x_curr, s.p_curr) == 1);
  s = step_forward(spec, s);
  CHECK(doubled_energy(spec, s.x_curr, s.p_curr) == 2);
  CHECK(s.pi2_curr == 1);
  s = step_forward(spec, s);
  CHECK(s.pi2_curr == 0);
}

TEST_CASE("zero coupling copies states across tick parity") {
  const auto spec = scalar_spec(0);
  StatePair s = scalar_state(3, -2, 7, 5);
  auto t = step_forward(spec, s);
  CHECK(t.x_curr[0] == 3);
  CHECK(t.p_curr[0] == -2);
  auto u = step_forward(spec, t);
  CHECK(u.x_curr[0] == 7);
  CHECK(u.p_curr[0] == 5);
}

TEST_CASE("backward step inverts the forward step bitwise") {
  std::mt19937_64 rng(20260815);
  for (int it = 0; it < 300; ++it) {
    const auto spec = random_spec(rng);
    const auto s = random_state(rng, spec.dim);
    CAPTURE(it);
    REQUIRE(step_backward(spec, step_forward(spec, s)) == s);
    REQUIRE(step_forward(spec, step_backward(spec, s)) == s);
  }
}

TEST_CASE("backward step recovers the seed of the unit scalar run") {
  const auto spec = scalar_spec(1);
  // Pair at ticks (0, 1): psi_0 = 1, psi_1 = 1 - i.
  StatePair s = scalar_state(1, 0, 1, -1);
  s.tick = 1;
  auto back = step_backward(spec, s);
  CHECK(back.x_prev[0] == 1);
  CHECK(back.p_prev[0] == 0);
  CHECK(back.tick == 0);
}

TEST_CASE("evolve produces contiguous ticks and round-trips") {
  const auto spec = scalar_spec(1);
  const StatePair s = scalar_state(1, 0, 1, 0);

  auto zero = evolve(spec, s, 0);
  CHECK(zero.first_tick() == -1);
  CHECK(zero.last_tick() == 0);
  CHECK(zero.final_pair() == s);

  auto run = evolve(spec, s, 12);
  CHECK(run.last_tick() == 12);
  CHECK(run.at(11).x == std::vector<Int>{Int(1)});
  CHECK(run.at(11).p == std::vector<Int>{Int(0)});
  CHECK(run.at(12).x == std::vector<Int>{Int(1)});
  CHECK(run.at(12).p == std::vector<Int>{Int(0)});
  CHECK(run.final_pair().tick == 12);

  // Forward k then backward k is the identity on the state pair.
  auto fwd = evolve(spec, s, 7).final_pair();
  auto back = evolve(spec, fwd, -7).initial_pair();
  CHECK(back == s);
}

TEST_CASE("evolve backward covers the visited ticks in ascending order") {
  const auto spec = scalar_spec(1);
  StatePair s = scalar_state(1, 0, 1, -1);
  s.tick = 1;
  auto run = evolve(spec, s, -2);
  CHECK(run.first_tick() == -2);
  CHECK(run.last_tick() == 1);
  CHECK(run.at(-1).x == std::vector<Int>{Int(1)});
  CHECK(run.at(-1).p == std::vector<Int>{Int(0)});
}

TEST_CASE("trajectory adjacency satisfies the step recurrences") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 20; ++it) {
    const auto spec = random_spec(rng, 3);
    const auto s = random_state(rng, spec.dim, 3);
    auto run = evolve(spec, s, 10, {.bitcap = 1 << 20});
    for (long long n = run.first_tick() + 1; n < run.last_tick(); ++n) {
      REQUIRE(step_forward(spec, run.pair_at(n)) == run.pair_at(n + 1));
    }
  }
}

TEST_CASE("strong coupling grows past 64-bit components without error") {
  const auto spec = scalar_spec(3);
  StatePair s = scalar_state(1, 0, 1, 0);
  std::size_t max_bits = 0;
  long long first_over_64 = -1;
  std::size_t bits_at_100 = 0;
  for (int n = 1; n <= 200; ++n) {
    s = step_forward(spec, s);
    const std::size_t b =
        std::max(bit_length(s.x_curr[0]), bit_length(s.p_curr[0]));
    if (b > 64 && first_over_64 < 0) first_over_64 = n;
    if (n == 100) bits_at_100 = b;
    max_bits = std::max(max_bits, b);
  }
  CHECK(first_over_64 > 0);
  CHECK(first_over_64 <= 200);
  CHECK(max_bits > bits_at_100);  // still growing in the second half
}

TEST_CASE("unit scalar components stay within a fixed bound forever") {
  const auto spec = scalar_spec(1);
  StatePair s = scalar_state(1, 0, 1, 0);
  for (int n = 0; n < 2000; ++n) {
    s = step_forward(spec, s);
    REQUIRE(boost::multiprecision::abs(s.x_curr[0]) <= 2);
    REQUIRE(boost::multiprecision::abs(s.p_curr[0]) <= 2);
  }
}

TEST_CASE("bit-length cap raises a resource error") {
  const auto spec = scalar_spec(3);
  const StatePair s = scalar_state(1, 0, 1, 0);
  CHECK_THROWS_AS(evolve(spec, s, 500, {.bitcap = 32}), ResourceError);
}

TEST_CASE("period of the unit scalar automaton is 12") {
  const auto spec = scalar_spec(1);
  const StatePair s = scalar_state(1, 0, 1, 0);
  auto t = detect_period(spec, s, 100);
  REQUIRE(t.has_value());
  CHECK(*t == 12);
}

TEST_CASE("zero coupling has period 1 or 2 depending on the seed pair") {
  const auto spec = scalar_spec(0);
  CHECK(detect_period(spec, scalar_state(2, 3, 2, 3), 10) == 1);
  CHECK(detect_period(spec, scalar_state(2, 3, 5, 7), 10) == 2);
}

TEST_CASE("two-site exchange coupling period divides 12") {
  auto spec = validate_spec(IntMatrix::from({{0, 1}, {1, 0}}), IntMatrix::zero(2));
  StatePair s;
  s.x_prev = {Int(1), Int(0)};
  s.p_prev = {Int(0), Int(0)};
  s.x_curr = {Int(1), Int(0)};
  s.p_curr = {Int(0), Int(0)};
  auto t = detect_period(spec, s, 100);
  REQUIRE(t.has_value());
  CHECK(12 % *t == 0);
}

TEST_CASE("growing orbit reports no period within the step budget") {
  const auto spec = scalar_spec(3);
  CHECK_FALSE(detect_period(spec, scalar_state(1, 0, 1, 0), 300).has_value());
}

TEST_CASE("two-point form evaluates as 2 Re(psi_prev^dag G psi_curr)") {
  const auto spec = scalar_spec(1);
  const auto G = HermitianMatrix::from_symmetric(IntMatrix::identity(1));
  StatePair s = scalar_state(1, 0, 1, 0);
  CHECK(two_point_invariant(G, s) == 2);
  s = step_forward(spec, s);
  CHECK(two_point_invariant(G, s) == 2);  // 2 Re(conj(1)(1-i)) = 2
}

TEST_CASE("identity and coupling powers are conserved exactly") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 10; ++it) {
    const auto spec0 = random_spec(rng, 3);
    // Constant c keeps the telescoping identity exact.
    const auto spec = validate_spec(spec0.S, spec0.A, {Int(1)});
    const auto H = hamiltonian_matrix(spec);
    const auto H2 = HermitianMatrix(H.matrix() * H.matrix());
    const HermitianMatrix gs[] = {HermitianMatrix::from_symmetric(IntMatrix::identity(spec.dim)),
                                  H, H2};
    StatePair s = random_state(rng, spec.dim, 2);
    Int q0[3];
    for (int g = 0; g < 3; ++g) q0[g] = two_point_invariant(gs[g], s);
    for (int n = 0; n < 200; ++n) {
      s = step_forward(spec, s);
      for (int g = 0; g < 3; ++g) {
        CAPTURE(it);
        CAPTURE(n);
        CAPTURE(g);
        REQUIRE(two_point_invariant(gs[g], s) == q0[g]);
      }
    }
  }
}

TEST_CASE("a non-commuting observable is not conserved (negative control)") {
  auto spec = validate_spec(IntMatrix::from({{0, 1}, {1, 0}}), IntMatrix::zero(2));
  auto G = HermitianMatrix::from_symmetric(IntMatrix::from({{1, 0}, {0, 0}}));
  StatePair s;
  s.x_prev = {Int(1), Int(0)};
  s.p_prev = {Int(0), Int(0)};
  s.x_curr = {Int(1), Int(0)};
  s.p_curr = {Int(0), Int(0)};
  const Int q0 = two_point_invariant(G, s);
  bool changed = false;
  for (int n = 0; n < 12 && !changed; ++n) {
    s = step_forward(spec, s);
    changed = two_point_invariant(G, s) != q0;
  }
  CHECK(changed);
}

TEST_CASE("doubled momentum minus doubled energy is constant per tick parity") {
  std::mt19937_64 rng(4242);
  for (int it = 0; it < 20; ++it) {
    const auto spec = random_spec(rng, 3);
    const auto s = random_state(rng, spec.dim, 3);
    auto run = evolve(spec, s, 16, {.bitcap = 1 << 20});
    const auto& ticks = run.ticks();
    Int even_const, odd_const;
    bool even_set = false, odd_set = false;
    for (const auto& t : ticks) {
      const Int v = t.pi2 - doubled_energy(spec, t.x, t.p);
      if (((t.n % 2) + 2) % 2 == 0) {
        if (!even_set) {
          even_const = v;
          even_set = true;
        }
        REQUIRE(v == even_const);
      } else {
        if (!odd_set) {
          odd_const = v;
          odd_set = true;
        }
        REQUIRE(v == odd_const);
      }
    }
  }
}

TEST_CASE("periodic c sequence uses floor indexing on negative ticks") {
  auto spec = validate_spec(IntMatrix::from({{1}}), IntMatrix::zero(1), {Int(2), Int(5)});
  CHECK(spec.c_at(0) == 2);
  CHECK(spec.c_at(1) == 5);
  CHECK(spec.c_at(2) == 2);
  CHECK(spec.c_at(-1) == 5);
  CHECK(spec.c_at(-2) == 2);

  // Inversion still holds with a non-constant cycle.
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    const auto st = random_state(rng, 1);
    REQUIRE(step_backward(spec, step_forward(spec, st)) == st);
  }
}

TEST_CASE("complex pair round trip preserves components") {
  std::vector<GaussInt> prev = {GaussInt(Int(1), Int(-2)), GaussInt(Int(0), Int(4))};
  std::vector<GaussInt> curr = {GaussInt(Int(-3), Int(5)), GaussInt(Int(2), Int(0))};
  auto s = StatePair::from_psi(prev, curr, 3);
  CHECK(s.tick == 3);
  CHECK(s.psi_prev() == prev);
  CHECK(s.psi_curr() == curr);
}
