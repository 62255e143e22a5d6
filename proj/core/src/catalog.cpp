#include "divtower/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace divtower {

namespace {

CoeffVector synthesize_or_throw(const BitMatrix& logical, const BitMatrix& stab, unsigned nu,
                                const std::string& name) {
  std::optional<CoeffVector> t = find_coefficient_vector(logical, stab, nu);
  if (!t)
    throw std::runtime_error(name + ": no coefficient vector exists at level " +
                             std::to_string(nu));
  return *t;
}

}  // namespace

OrthoPair steane() {
  const BitMatrix stab = BitMatrix::from_strings({"1010101", "0110011", "0001111"});
  const BitMatrix logical = BitMatrix::ones(1, 7);
  return {logical, stab, synthesize_or_throw(logical, stab, 2, "steane")};
}

OrthoPair hcode(std::size_t k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("hcode: k must be even and >= 2, got " + std::to_string(k));
  const std::size_t n = k + 4;
  BitMatrix logical(k, n);
  for (std::size_t r = 0; r < k; ++r) {
    logical.set(r, 2 + r, true);
    logical.set(r, n - 2, true);
    logical.set(r, n - 1, true);
  }
  BitMatrix stab(2, n);
  for (std::size_t r = 0; r < 2; ++r) {
    stab.set(r, r, true);
    for (std::size_t c = 2; c < 2 + k; ++c) stab.set(r, c, true);
    stab.set(r, n - 2 + r, true);
  }
  return {logical, stab, synthesize_or_throw(logical, stab, 2, "hcode")};
}

BitMatrix shortened_rm(unsigned m) {
  if (m < 2) throw std::invalid_argument("shortened_rm: m must be >= 2");
  BitMatrix g = BitMatrix::from_strings({"11", "01"});
  for (unsigned level = 2; level <= m; ++level) {
    const BitMatrix doubled = BitMatrix::hstack(g, g);
    BitMatrix last(1, doubled.cols());
    for (std::size_t c = g.cols(); c < doubled.cols(); ++c) last.set(0, c, true);
    g = BitMatrix::vstack(doubled, last);
  }
  // Shorten: drop the all-ones first row and the first column.
  BitMatrix out(g.rows() - 1, g.cols() - 1);
  for (std::size_t r = 1; r < g.rows(); ++r)
    for (std::size_t c = 1; c < g.cols(); ++c)
      if (g.get(r, c)) out.set(r - 1, c - 1, true);
  return out;
}

CssCode rm_code(unsigned m) {
  if (m < 3) throw std::invalid_argument("rm_code: m must be >= 3");
  const BitMatrix stab = shortened_rm(m);
  const BitMatrix logical = BitMatrix::ones(1, stab.cols());
  const CoeffVector t = synthesize_or_throw(logical, stab, m - 1, "rm_code");
  return build_css({logical, stab, t});
}

BitMatrix bh_triorthogonal(std::size_t k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("bh_triorthogonal: k must be even and >= 2, got " +
                                std::to_string(k));
  const std::size_t n = 3 * k + 8;
  BitMatrix g(k + 3, n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 4; c < 8; ++c) g.set(r, c, true);
    g.set(r, 8 + r, true);
    g.set(r, 8 + k + r, true);
    g.set(r, 8 + 2 * k + r, true);
  }
  const auto set_quad = [&](std::size_t r, const char* bits) {
    for (std::size_t c = 0; c < 4; ++c)
      if (bits[c] == '1') {
        g.set(r, c, true);
        g.set(r, 4 + c, true);
      }
  };
  const auto set_block = [&](std::size_t r, std::size_t block) {
    for (std::size_t c = 0; c < k; ++c) g.set(r, 8 + block * k + c, true);
  };
  set_quad(k, "0011");
  set_block(k, 0);
  set_block(k, 2);
  set_quad(k + 1, "1010");
  set_block(k + 1, 1);
  set_block(k + 1, 2);
  set_quad(k + 2, "1111");
  return g;
}

EquivalenceVerdict equivalence_witness(const CodeBlocks& a, const CodeBlocks& b,
                                       const std::vector<std::size_t>& perm,
                                       const std::vector<StabRowOp>& rowops) {
  const std::size_t n = a.logical.cols();
  if (perm.size() != n)
    throw std::invalid_argument("equivalence_witness: permutation has " +
                                std::to_string(perm.size()) + " entries for " +
                                std::to_string(n) + " columns");
  {
    std::vector<bool> seen(n, false);
    for (std::size_t s : perm) {
      if (s >= n || seen[s])
        throw std::invalid_argument("equivalence_witness: not a permutation (source index " +
                                    std::to_string(s) + ")");
      seen[s] = true;
    }
  }

  BitMatrix stacked = BitMatrix::vstack(a.logical, a.stab).permuted_columns(perm);
  const std::size_t k = a.logical.rows();
  for (const StabRowOp& op : rowops) {
    if (op.target < k || op.target >= stacked.rows() || op.source >= stacked.rows() ||
        op.source == op.target)
      throw std::invalid_argument(
          "equivalence_witness: row operation must add a row into a distinct stabilizer row");
    stacked.xor_rows(op.target, op.source);
  }

  EquivalenceVerdict verdict;
  const auto fail = [&](std::string why) {
    verdict.ok = false;
    verdict.detail = std::move(why);
    return verdict;
  };
  if (b.logical.cols() != n) return fail("column counts differ");
  if (b.logical.rows() != k) return fail("logical row counts differ");

  const BitMatrix sa = stacked.sliced_rows(k, stacked.rows());
  const std::size_t rank_a = rank(sa);
  const std::size_t rank_b = rank(b.stab);
  if (rank_a != rank_b || rank(BitMatrix::vstack(sa, b.stab)) != rank_b)
    return fail("stabilizer spans differ");
  for (std::size_t r = 0; r < k; ++r) {
    Bits diff = stacked.row_bits(r);
    for (std::size_t c = 0; c < n; ++c) diff[c] ^= b.logical.get(r, c) ? 1 : 0;
    if (!in_span(b.stab, diff))
      return fail("logical row " + std::to_string(r) +
                  " lands in a different stabilizer coset");
  }
  return verdict;
}

std::vector<std::size_t> bh_lift_permutation(std::size_t k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("bh_lift_permutation: k must be even and >= 2");
  // Lift columns: [0..k-1] output block; first half k..2k+3 as
  // (p1 p2 m_1..m_k q1 q2); second half 2k+4..3k+7 primed likewise.
  std::vector<std::size_t> src;
  src.reserve(3 * k + 8);
  src.push_back(2 * k + 4);  // p1'
  src.push_back(2 * k + 5);  // p2'
  src.push_back(k);          // p1
  src.push_back(k + 1);      // p2
  src.push_back(3 * k + 6);  // q1'
  src.push_back(3 * k + 7);  // q2'
  src.push_back(2 * k + 2);  // q1
  src.push_back(2 * k + 3);  // q2
  for (std::size_t i = 0; i < k; ++i) src.push_back(i);              // output block
  for (std::size_t i = 0; i < k; ++i) src.push_back(2 * k + 6 + i);  // m'
  for (std::size_t i = 0; i < k; ++i) src.push_back(k + 2 + i);      // m
  return src;
}

std::vector<std::size_t> rm_lift_permutation(const std::vector<std::size_t>& inner) {
  const std::size_t n = inner.size();
  std::vector<std::size_t> src(2 * n + 1);
  for (std::size_t p = 0; p < n; ++p) src[p] = n + 1 + inner[p];  // second half
  src[n] = 0;                                                     // output column
  for (std::size_t p = 0; p < n; ++p) src[n + 1 + p] = 1 + inner[p];  // first half
  return src;
}

std::vector<std::size_t> identity_permutation(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return id;
}

std::optional<OrthoPair> random_weakly_selfdual(std::size_t n, std::size_t k, std::size_t d,
                                                std::uint64_t seed) {
  if (n > 30) throw std::invalid_argument("random_weakly_selfdual: n must be <= 30");
  if (k > n || (n - k) % 2 != 0)
    throw std::invalid_argument("random_weakly_selfdual: need n - k even and nonnegative");
  if (d > n) return std::nullopt;
  const std::size_t r = (n - k) / 2;

  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 200;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    // Grow S one row at a time inside the even-weight vectors orthogonal to
    // the rows so far (all linear conditions), rejecting dependent picks.
    BitMatrix stab(0, n);
    Bits all_ones(n, 1);
    bool built = true;
    for (std::size_t row = 0; row < r && built; ++row) {
      BitMatrix constraints = BitMatrix::vstack(BitMatrix::row_vector(all_ones), stab);
      const BitMatrix basis = nullspace(constraints);
      bool placed = false;
      for (int tries = 0; tries < 64 && !placed; ++tries) {
        Bits v(n, 0);
        bool any = false;
        for (std::size_t bi = 0; bi < basis.rows(); ++bi)
          if (rng() & 1) {
            any = true;
            for (std::size_t c = 0; c < n; ++c) v[c] ^= basis.get(bi, c) ? 1 : 0;
          }
        if (!any || in_span(stab, v)) continue;
        stab = BitMatrix::vstack(stab, BitMatrix::row_vector(v));
        placed = true;
      }
      built = placed;
    }
    if (!built || in_span(stab, all_ones)) continue;

    const std::optional<BitMatrix> logical = normal_basis(stab, nullspace(stab));
    if (!logical || logical->rows() != k) continue;
    const std::optional<CoeffVector> t = find_coefficient_vector(*logical, stab, 2);
    if (!t) continue;
    if (d >= 2 && distance_z(*logical, stab, d - 1).has_value()) continue;  // too close
    return OrthoPair{*logical, stab, *t};
  }
  return std::nullopt;
}

}  // namespace divtower
