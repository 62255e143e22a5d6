#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "divtower/bit_matrix.hpp"

using namespace divtower;

namespace {

// The weight-4 self-orthogonal 3x7 matrix used throughout.
BitMatrix seven_cols() {
  return BitMatrix::from_strings({"1010101", "0110011", "0001111"});
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (rng() & 1) != 0);
  return m;
}

Bits random_bits(std::mt19937_64& rng, std::size_t n) {
  Bits v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng() & 1);
  return v;
}

// Brute-force solver over all 2^cols candidates; cols must stay small.
std::optional<Bits> brute_solve(const BitMatrix& a, const Bits& b) {
  const std::size_t n = a.cols();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    Bits cand(n);
    for (std::size_t i = 0; i < n; ++i) cand[i] = static_cast<std::uint8_t>((x >> i) & 1);
    if (mat_vec_f2(a, cand) == b) return cand;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("rank on zero, identity, and the 3x7 matrix") {
  CHECK(rank(BitMatrix::zeros(3, 5)) == 0);
  CHECK(rank(BitMatrix::identity(4)) == 4);
  CHECK(rank(seven_cols()) == 3);
}

TEST_CASE("rref of the identity is the identity") {
  const RrefResult r = rref(BitMatrix::identity(4));
  CHECK(r.matrix == BitMatrix::identity(4));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("rref collapses dependent rows") {
  const RrefResult r = rref(BitMatrix::from_strings({"11", "11"}));
  CHECK(r.matrix == BitMatrix::from_strings({"11", "00"}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref of the 3x7 matrix keeps it fixed") {
  const RrefResult r = rref(seven_cols());
  CHECK(r.matrix == seven_cols());
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("nullspace shapes and membership") {
  CHECK(nullspace(BitMatrix::identity(5)).rows() == 0);
  const BitMatrix pair = nullspace(BitMatrix::from_strings({"11"}));
  REQUIRE(pair.rows() == 1);
  CHECK(pair.row_bits(0) == Bits{1, 1});

  const BitMatrix m = seven_cols();
  const BitMatrix ns = nullspace(m);
  REQUIRE(ns.rows() == 4);
  for (std::size_t r = 0; r < ns.rows(); ++r) {
    const Bits x = ns.row_bits(r);
    CHECK(mat_vec_f2(m, x) == Bits(m.rows(), 0));
  }
}

TEST_CASE("in_span basics") {
  const BitMatrix m = seven_cols();
  CHECK(in_span(m, Bits(7, 0)));
  CHECK_FALSE(in_span(m, Bits(7, 1)));  // odd weight, span is even-weight
  CHECK(in_span(m, Bits{1, 1, 0, 0, 1, 1, 0}));  // row0 + row1
}

TEST_CASE("solve_f2 on the stated cases") {
  const Bits b{1, 0, 1};
  auto x = solve_f2(BitMatrix::identity(3), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  auto y = solve_f2(BitMatrix::from_strings({"11"}), Bits{1});
  REQUIRE(y.has_value());
  CHECK(mat_vec_f2(BitMatrix::from_strings({"11"}), *y) == Bits{1});

  CHECK_FALSE(solve_f2(BitMatrix::from_strings({"11", "11"}), Bits{1, 0}).has_value());
}

TEST_CASE("solve_f2_bottom_right returns valid solutions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 8;
    const BitMatrix a = random_matrix(rng, rows, cols);
    const Bits b = random_bits(rng, rows);
    const auto fast = solve_f2_bottom_right(a, b);
    const auto slow = brute_solve(a, b);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) CHECK(mat_vec_f2(a, *fast) == b);
  }
}

TEST_CASE("rank plus nullity equals the column count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = rng() % 6, cols = 1 + rng() % 12;
    const BitMatrix m = random_matrix(rng, rows, cols);
    const BitMatrix ns = nullspace(m);
    CHECK(rank(m) + ns.rows() == cols);
    for (std::size_t r = 0; r < ns.rows(); ++r)
      CHECK(mat_vec_f2(m, ns.row_bits(r)) == Bits(m.rows(), 0));
  }
}

TEST_CASE("rref preserves the row span") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 10;
    const BitMatrix m = random_matrix(rng, rows, cols);
    const BitMatrix r = rref(m).matrix;
    for (int probe = 0; probe < 50; ++probe) {
      const Bits v = random_bits(rng, cols);
      CHECK(in_span(m, v) == in_span(r, v));
    }
  }
}

TEST_CASE("solve_f2 agrees with brute force on small systems") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 10;
    const BitMatrix a = random_matrix(rng, rows, cols);
    const Bits b = random_bits(rng, rows);
    const auto fast = solve_f2(a, b);
    const auto slow = brute_solve(a, b);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) CHECK(mat_vec_f2(a, *fast) == b);
  }
}

TEST_CASE("stacking, slicing, and permutation round trips") {
  const BitMatrix m = seven_cols();
  const BitMatrix st = BitMatrix::vstack(m, BitMatrix::ones(1, 7));
  CHECK(st.rows() == 4);
  CHECK(st.sliced_rows(0, 3) == m);

  const BitMatrix wide = BitMatrix::hstack(m, m);
  CHECK(wide.cols() == 14);
  CHECK(wide.row_weight(0) == 2 * m.row_weight(0));

  std::vector<std::size_t> rot(7);
  for (std::size_t j = 0; j < 7; ++j) rot[j] = (j + 1) % 7;
  const BitMatrix p = m.permuted_columns(rot);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 7; ++c) CHECK(p.get(r, c) == m.get(r, rot[c]));

  CHECK(m.transposed().transposed() == m);
}

TEST_CASE("nonzero_rows filters and reports positions") {
  BitMatrix m(3, 4);
  m.set(1, 2, true);
  std::vector<std::size_t> where;
  const BitMatrix nz = m.nonzero_rows(&where);
  CHECK(nz.rows() == 1);
  CHECK(where == std::vector<std::size_t>{1});
}

TEST_CASE("empty matrices behave as degenerate cases") {
  const BitMatrix e(0, 5);
  CHECK(rank(e) == 0);
  CHECK(nullspace(e).rows() == 5);
  CHECK(in_span(e, Bits(5, 0)));
  CHECK_FALSE(in_span(e, Bits{1, 0, 0, 0, 0}));
  const BitMatrix none(0, 0);
  CHECK(rank(none) == 0);
}
