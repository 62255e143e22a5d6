#include "divtower/mod2k.hpp"

#include <bit>
#include <stdexcept>
#include <tuple>

namespace divtower {

namespace {

std::uint64_t mask_of(unsigned nu) { return (nu >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << nu) - 1); }

unsigned val2(std::uint64_t x, unsigned nu) {
  if ((x & mask_of(nu)) == 0) return nu;
  return static_cast<unsigned>(std::countr_zero(x));
}

// Inverse of an odd element modulo 2^64; masking gives the inverse at any
// smaller power of two.  Newton iteration doubles correct bits each step.
std::uint64_t inv_odd(std::uint64_t a) {
  std::uint64_t x = a;  // correct mod 2^3
  for (int i = 0; i < 5; ++i) x *= 2 - a * x;
  return x;
}

// Core elimination over Z/2^m, no seed.  Entries of `rows`/`rhs` are
// reduced mod 2^m on entry.
std::optional<std::vector<std::uint64_t>> solve_core(std::vector<std::vector<std::uint64_t>> rows,
                                                     std::vector<std::uint64_t> rhs, unsigned m) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows ? rows.front().size() : 0;
  const std::uint64_t mask = mask_of(m);

  std::vector<bool> row_done(n_rows, false);
  std::vector<bool> col_done(n_cols, false);
  // (row, col, valuation) in elimination order.
  std::vector<std::tuple<std::size_t, std::size_t, unsigned>> pivots;

  for (;;) {
    // Global pivot of minimal 2-adic valuation; ties prefer the bottom-most
    // row, then the rightmost column.
    unsigned best_val = m;
    std::size_t best_r = 0, best_c = 0;
    bool found = false;
    for (std::size_t ri = n_rows; ri-- > 0;) {
      if (row_done[ri]) continue;
      for (std::size_t ci = n_cols; ci-- > 0;) {
        if (col_done[ci]) continue;
        const unsigned e = val2(rows[ri][ci], m);
        if (e < best_val) {
          best_val = e;
          best_r = ri;
          best_c = ci;
          found = true;
          if (e == 0) break;
        }
      }
      if (found && best_val == 0) break;
    }
    if (!found || best_val >= m) break;

    const std::uint64_t p = rows[best_r][best_c] & mask;
    const unsigned e = best_val;
    const std::uint64_t unit = p >> e;
    const std::uint64_t unit_inv = inv_odd(unit);
    // Clear the pivot column from the rows still in play.  Finished rows are
    // frozen: an entry there can sit below the pivot valuation, so no
    // integral multiple of the pivot row could cancel it anyway.  In the
    // open rows val2(b) >= e by pivot minimality, so the factor is exact.
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (row_done[r] || r == best_r) continue;
      const std::uint64_t b = rows[r][best_c] & mask;
      if (b == 0) continue;
      const std::uint64_t f = ((b >> e) * unit_inv) & mask;
      for (std::size_t c = 0; c < n_cols; ++c)
        rows[r][c] = (rows[r][c] - f * rows[best_r][c]) & mask;
      rhs[r] = (rhs[r] - f * rhs[best_r]) & mask;
    }
    row_done[best_r] = true;
    col_done[best_c] = true;
    pivots.emplace_back(best_r, best_c, e);
  }

  for (std::size_t r = 0; r < n_rows; ++r)
    if (!row_done[r] && (rhs[r] & mask) != 0) return std::nullopt;

  // Back-substitute in reverse pivot order.  A frozen pivot row is zero at
  // every earlier pivot column, and each entry at a later or free column
  // has valuation >= its own pivot's, which also makes an unsatisfiable
  // residue a genuine certificate (no other choice of the later variables
  // or of the zeroed free variables can repair it).
  std::vector<std::uint64_t> x(n_cols, 0);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto& [r, c, e] = *it;
    std::uint64_t acc = rhs[r];
    for (std::size_t cc = 0; cc < n_cols; ++cc)
      if (cc != c) acc -= rows[r][cc] * x[cc];
    acc &= mask;
    if (val2(acc, m) < e) return std::nullopt;
    const std::uint64_t unit = (rows[r][c] & mask) >> e;
    x[c] = ((acc >> e) * inv_odd(unit)) & mask_of(m - e);
  }
  return x;
}

}  // namespace

CongruenceSystem make_congruence_system(std::vector<std::vector<std::uint64_t>> rows,
                                        std::vector<std::uint64_t> rhs, unsigned nu) {
  if (nu < 1 || nu > 62) throw std::invalid_argument("make_congruence_system: nu must be in [1, 62]");
  if (rows.size() != rhs.size()) throw std::invalid_argument("make_congruence_system: row/rhs count mismatch");
  const std::uint64_t mask = mask_of(nu);
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("make_congruence_system: ragged rows");
    for (auto& e : row) e &= mask;
  }
  for (auto& e : rhs) e &= mask;
  return CongruenceSystem{std::move(rows), std::move(rhs), nu};
}

std::optional<std::vector<std::uint64_t>> solve_mod2k(const CongruenceSystem& sys,
                                                      const std::optional<ModSeed>& seed) {
  const unsigned nu = sys.nu;
  const std::uint64_t mask = mask_of(nu);
  const std::size_t n_cols = sys.rows.empty() ? 0 : sys.rows.front().size();

  if (!seed) {
    auto rows = sys.rows;
    auto rhs = sys.rhs;
    return solve_core(std::move(rows), std::move(rhs), nu);
  }

  const unsigned sl = seed->level;
  if (sl < 1 || sl > nu) throw std::invalid_argument("solve_mod2k: seed level out of range");
  if (seed->values.size() != n_cols) throw std::invalid_argument("solve_mod2k: seed length mismatch");

  // Only the seed's residues mod 2^sl bind.  Substituting x = s + 2^sl z
  // with s the reduced seed leaves the residual below, which must vanish
  // mod 2^sl or the constrained system has no solution.
  std::vector<std::uint64_t> residual(sys.rows.size());
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < n_cols; ++c)
      acc += sys.rows[r][c] * (seed->values[c] & mask_of(sl));
    residual[r] = (sys.rhs[r] - acc) & mask;
    if ((residual[r] & mask_of(sl)) != 0) return std::nullopt;
  }

  if (sl == nu) {
    std::vector<std::uint64_t> x(seed->values);
    for (auto& e : x) e &= mask;
    return x;
  }

  const unsigned rem = nu - sl;
  std::vector<std::vector<std::uint64_t>> rows(sys.rows.size());
  std::vector<std::uint64_t> rhs(sys.rows.size());
  const std::uint64_t rem_mask = mask_of(rem);
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    rows[r].resize(n_cols);
    for (std::size_t c = 0; c < n_cols; ++c) rows[r][c] = sys.rows[r][c] & rem_mask;
    rhs[r] = (residual[r] >> sl) & rem_mask;
  }
  auto z = solve_core(std::move(rows), std::move(rhs), rem);
  if (!z) return std::nullopt;
  std::vector<std::uint64_t> x(n_cols);
  for (std::size_t c = 0; c < n_cols; ++c)
    x[c] = ((seed->values[c] & mask_of(sl)) + ((*z)[c] << sl)) & mask;
  return x;
}

std::vector<std::uint64_t> lift_solution(const BitMatrix& a, const std::vector<std::uint64_t>& v,
                                         const std::vector<std::uint64_t>& u, unsigned nu) {
  if (nu < 2 || nu > 62) throw std::invalid_argument("lift_solution: nu must be in [2, 62]");
  if (v.size() != a.rows()) throw std::invalid_argument("lift_solution: rhs length mismatch");
  if (u.size() != a.cols()) throw std::invalid_argument("lift_solution: seed length mismatch");
  if (rank(a) != a.rows()) throw std::invalid_argument("lift_solution: rows must be F2-independent");

  const std::uint64_t mask = mask_of(nu);
  const std::uint64_t half = std::uint64_t{1} << (nu - 1);

  // A u - v lives in {0, 2^{nu-1}} mod 2^nu on each row; the bit pattern of
  // those defects is solvable over F2 because the rows are independent.
  Bits defect(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) acc += u[c];
    const std::uint64_t d = (acc - v[r]) & mask;
    if ((d & (half - 1)) != 0)
      throw std::invalid_argument("lift_solution: seed does not solve the system mod 2^(nu-1)");
    defect[r] = (d >> (nu - 1)) & 1;
  }

  const auto eps = solve_f2_bottom_right(a, defect);
  if (!eps) throw std::invalid_argument("lift_solution: unexpected inconsistency");
  std::vector<std::uint64_t> out(u.size());
  for (std::size_t c = 0; c < u.size(); ++c) out[c] = (u[c] + ((*eps)[c] ? half : 0)) & mask;
  return out;
}

}  // namespace divtower
