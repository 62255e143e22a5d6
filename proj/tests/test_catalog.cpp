#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "divtower/bit_matrix.hpp"
#include "divtower/catalog.hpp"
#include "divtower/css_code.hpp"
#include "divtower/lifting.hpp"
#include "divtower/ortho.hpp"

using namespace divtower;

namespace {

using U64 = std::uint64_t;

InnerCodeSpec as_inner(const OrthoPair& pair) {
  return {pair.logical, pair.stab, pair.coeff};
}

CodeBlocks lift_blocks(const LiftResult& lift) {
  return {lift.c_ell, BitMatrix::vstack(lift.c_out, lift.c_in)};
}

// All 2^rows row-span weights.
std::set<std::size_t> span_weights(const BitMatrix& m) {
  REQUIRE(m.rows() <= 16);
  std::set<std::size_t> weights;
  for (U64 combo = 0; combo < (U64{1} << m.rows()); ++combo) {
    Bits v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if ((combo >> r) & 1)
        for (std::size_t c = 0; c < m.cols(); ++c) v[c] ^= m.get(r, c);
    std::size_t w = 0;
    for (auto b : v) w += b;
    weights.insert(w);
  }
  return weights;
}

bool same_span(const BitMatrix& a, const BitMatrix& b) {
  return rank(a) == rank(b) && rank(BitMatrix::vstack(a, b)) == rank(a);
}

}  // namespace

TEST_CASE("the 7-qubit catalog entry") {
  const OrthoPair st = steane();
  CHECK(st.stab == BitMatrix::from_strings({"1010101", "0110011", "0001111"}));
  CHECK(st.logical == BitMatrix::ones(1, 7));
  CHECK(st.coeff.nu == 2);
  const CssCode code = build_css(st);
  CHECK(code.n == 7);
  CHECK(code.k == 1);
  CHECK(distance_z(code, 4) == 3);

  // The uniform vector of threes also validates.
  CHECK(verify_pair({st.logical, st.stab, make_coeff_vector(std::vector<U64>(7, 3), 2)}).all_pass);
}

TEST_CASE("H-code family shapes and products") {
  for (std::size_t k : {2, 4, 6, 8}) {
    const OrthoPair h = hcode(k);
    CHECK(h.logical.rows() == k);
    CHECK(h.logical.cols() == k + 4);
    CHECK(h.stab.rows() == 2);
    for (std::size_t r = 0; r < k; ++r) CHECK(h.logical.row_weight(r) == 3);
    for (std::size_t r = 0; r < 2; ++r) CHECK(h.stab.row_weight(r) == k + 2);

    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) CHECK_FALSE(h.stab.dot_rows(a, h.stab, b));
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < k; ++b) CHECK_FALSE(h.stab.dot_rows(a, h.logical, b));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        CHECK(h.logical.dot_rows(a, h.logical, b) == (a == b));

    CHECK(distance_z(build_css(h), 3) == 2);
  }
  CHECK_THROWS_AS(hcode(3), std::invalid_argument);
  CHECK_THROWS_AS(hcode(0), std::invalid_argument);
}

TEST_CASE("shortened first-order generators and their span weights") {
  CHECK(shortened_rm(2) == BitMatrix::from_strings({"101", "011"}));

  const BitMatrix s3 = shortened_rm(3);
  CHECK(same_span(s3, BitMatrix::from_strings({"1010101", "0110011", "0001111"})));
  CHECK(span_weights(s3) == std::set<std::size_t>{0, 4});

  const BitMatrix s4 = shortened_rm(4);
  CHECK(s4.rows() == 4);
  CHECK(s4.cols() == 15);
  CHECK(span_weights(s4) == std::set<std::size_t>{0, 8});

  for (unsigned m = 2; m <= 6; ++m) {
    const std::set<std::size_t> w = span_weights(shortened_rm(m));
    CHECK(w == std::set<std::size_t>{0, std::size_t{1} << (m - 1)});
  }
  CHECK_THROWS_AS(shortened_rm(1), std::invalid_argument);
}

TEST_CASE("doubled first-order code family") {
  const CssCode rm4 = rm_code(4);
  CHECK(rm4.n == 15);
  CHECK(rm4.k == 1);
  CHECK(rm4.nu == 3);
  CHECK(distance_z(rm4, 4) == 3);

  const CssCode rm5 = rm_code(5);
  CHECK(rm5.n == 31);
  CHECK(rm5.k == 1);
  CHECK(rm5.nu == 4);
  CHECK(distance_z(rm5, 4) == 3);

  for (unsigned m = 3; m <= 5; ++m) CHECK(verify_transversal_phase(rm_code(m)).ok);
  CHECK_THROWS_AS(rm_code(2), std::invalid_argument);
}

TEST_CASE("triorthogonal family matrix") {
  for (std::size_t k : {2, 4, 6}) {
    const BitMatrix bh = bh_triorthogonal(k);
    CHECK(bh.rows() == k + 3);
    CHECK(bh.cols() == 3 * k + 8);
    CHECK(is_triorthogonal(bh).ok);
    std::size_t odd = 0;
    for (std::size_t r = 0; r < bh.rows(); ++r) odd += bh.row_weight(r) % 2;
    CHECK(odd == k);  // the identity-block rows; the three lower rows are even
  }
  CHECK_THROWS_AS(bh_triorthogonal(5), std::invalid_argument);
}

TEST_CASE("equivalence_witness accepts the identity transform") {
  const OrthoPair st = steane();
  const CodeBlocks blocks{st.logical, st.stab};
  CHECK(equivalence_witness(blocks, blocks, identity_permutation(7), {}).ok);
}

TEST_CASE("equivalence_witness rejects malformed transforms") {
  const OrthoPair st = steane();
  const CodeBlocks blocks{st.logical, st.stab};
  std::vector<std::size_t> dup(7, 0);
  CHECK_THROWS_AS(equivalence_witness(blocks, blocks, dup, {}), std::invalid_argument);
  CHECK_THROWS_AS(equivalence_witness(blocks, blocks, identity_permutation(6), {}),
                  std::invalid_argument);
  // Row operations may only target stabilizer rows.
  CHECK_THROWS_AS(equivalence_witness(blocks, blocks, identity_permutation(7), {{0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("equivalence_witness distinguishes genuinely different codes") {
  const OrthoPair st = steane();
  CodeBlocks other{st.logical, BitMatrix::from_strings({"1010101", "0110011"})};
  const EquivalenceVerdict v =
      equivalence_witness({st.logical, st.stab}, other, identity_permutation(7), {});
  CHECK_FALSE(v.ok);
  CHECK(!v.detail.empty());
}

TEST_CASE("the lifted H-code matches the triorthogonal family presentation") {
  for (std::size_t k : {2, 4, 6}) {
    const LiftResult lift = assemble_lift({as_inner(hcode(k))});
    const BitMatrix bh = bh_triorthogonal(k);
    const CodeBlocks target{bh.sliced_rows(0, k), bh.sliced_rows(k, k + 3)};
    const EquivalenceVerdict v = equivalence_witness(
        lift_blocks(lift), target, bh_lift_permutation(k), {{k + 2, k + 1}});
    CHECK(v.ok);
  }
}

TEST_CASE("the double-length lift matches the next shortened generator") {
  // One step: the 7-column code lifts onto the 15-column generator set.
  const OrthoPair st = steane();
  const LiftResult lift = assemble_lift({as_inner(st)});
  const CodeBlocks rm_target{BitMatrix::ones(1, 15), shortened_rm(4)};
  const EquivalenceVerdict one =
      equivalence_witness(lift_blocks(lift), rm_target, rm_lift_permutation(identity_permutation(7)), {});
  CHECK(one.ok);

  // Second step: lift the lifted code and compare with the 31-column set.
  const OrthoPair mid{lift.c_ell, BitMatrix::vstack(lift.c_out, lift.c_in), lift.t_lift};
  const LiftResult lift2 = assemble_lift({as_inner(mid)});
  const CodeBlocks rm5_target{BitMatrix::ones(1, 31), shortened_rm(5)};
  const EquivalenceVerdict two = equivalence_witness(
      lift_blocks(lift2), rm5_target,
      rm_lift_permutation(rm_lift_permutation(identity_permutation(7))), {});
  CHECK(two.ok);
}

TEST_CASE("lifting the catalog doubled codes climbs the family") {
  for (unsigned m : {3u, 4u}) {
    const CssCode lower = rm_code(m);
    const LiftResult lift = assemble_lift({as_inner(lower.pair)});
    const CssCode upper = rm_code(m + 1);
    const std::size_t n = lower.n;
    std::vector<std::size_t> perm = rm_lift_permutation(identity_permutation(n));
    const EquivalenceVerdict v = equivalence_witness(
        lift_blocks(lift), {upper.pair.logical, upper.pair.stab}, perm, {});
    CHECK(v.ok);
  }
}

TEST_CASE("random weakly self-dual search honours its contracts") {
  const auto yes = random_weakly_selfdual(7, 1, 3, 1);
  if (yes) {
    CHECK(verify_pair(*yes).all_pass);
    CHECK_FALSE(distance_z(yes->logical, yes->stab, 2).has_value());
  }

  const auto small = random_weakly_selfdual(4, 2, 2, 0);
  if (small) CHECK(verify_pair(*small).all_pass);

  CHECK_FALSE(random_weakly_selfdual(6, 2, 8, 1).has_value());  // d > n
  CHECK_THROWS_AS(random_weakly_selfdual(31, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_weakly_selfdual(7, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("several seeds yield verified random codes") {
  int produced = 0;
  for (std::uint64_t seed = 0; seed < 30 && produced < 10; ++seed) {
    const auto pair = random_weakly_selfdual(10, 2, 2, seed);
    if (!pair) continue;
    CHECK(verify_pair(*pair).all_pass);
    const CssCode code = build_css(*pair);
    const auto dz = distance_z(code, 10);
    REQUIRE(dz.has_value());
    CHECK(*dz >= 2);
    ++produced;
  }
  CHECK(produced == 10);
}
