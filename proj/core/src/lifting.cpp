#include "divtower/lifting.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "divtower/css_code.hpp"
#include "divtower/mod2k.hpp"

namespace divtower {

namespace {

std::uint64_t mask_of(unsigned nu) { return (std::uint64_t{1} << nu) - 1; }

std::uint64_t weighted_row_sum(const BitMatrix& m, std::size_t r,
                               const std::vector<std::uint64_t>& t) {
  std::uint64_t acc = 0;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m.get(r, c)) acc += t[c];
  return acc;
}

void validate_inner(const InnerCodeSpec& inner, std::size_t index, unsigned nu,
                    std::size_t n_out) {
  const std::string tag = "assemble_lift: inner " + std::to_string(index) + ": ";
  if (inner.coeff.nu != nu)
    throw std::invalid_argument(tag + "level " + std::to_string(inner.coeff.nu) +
                                " differs from inner 0's level " + std::to_string(nu));
  if (inner.logical.rows() != n_out)
    throw std::invalid_argument(tag + "logical has " + std::to_string(inner.logical.rows()) +
                                " rows, inner 0 has " + std::to_string(n_out));
  const PairReport report = verify_pair({inner.logical, inner.stab, inner.coeff});
  if (!report.all_pass) {
    std::string msg = tag + "generator pair invalid:";
    for (const PairCheck& c : report.checks)
      if (!c.pass) msg += " [" + c.name + ": " + c.witness + "]";
    throw std::invalid_argument(msg);
  }
  const std::uint64_t mask = mask_of(nu);
  std::uint64_t lhs = 0;
  for (std::size_t k = 0; k < inner.logical.rows(); ++k)
    lhs += weighted_row_sum(inner.logical, k, inner.coeff.t);
  std::uint64_t rhs = 0;
  for (std::uint64_t ti : inner.coeff.t) rhs += ti;
  if ((lhs & mask) != (rhs & mask))
    throw std::invalid_argument(tag + "lifted-sum congruence fails: logical t-sum " +
                                std::to_string(lhs & mask) + " != coefficient sum " +
                                std::to_string(rhs & mask) + " mod 2^" + std::to_string(nu));
}

std::uint64_t furthermore_lhs(const BitMatrix& c_ell, const std::vector<std::uint64_t>& t) {
  std::uint64_t acc = 0;
  for (std::size_t r = 0; r < c_ell.rows(); ++r) acc += weighted_row_sum(c_ell, r, t);
  return acc;
}

bool furthermore_identity(const BitMatrix& c_ell, const CoeffVector& coeff) {
  const std::uint64_t mask = mask_of(coeff.nu);
  std::uint64_t rhs = 0;
  for (std::uint64_t ti : coeff.t) rhs += ti;
  return (furthermore_lhs(c_ell, coeff.t) & mask) == (rhs & mask);
}

}  // namespace

BitMatrix derive_m(const std::vector<InnerCodeSpec>& inners) {
  if (inners.empty()) return BitMatrix(0, 0);
  const std::size_t n_out = inners[0].logical.rows();
  for (std::size_t a = 1; a < inners.size(); ++a)
    if (inners[a].logical.rows() != n_out)
      throw std::invalid_argument("derive_m: inner " + std::to_string(a) + " has " +
                                  std::to_string(inners[a].logical.rows()) +
                                  " logical rows, inner 0 has " + std::to_string(n_out));
  BitMatrix m(inners.size(), n_out);
  for (std::size_t a = 0; a < inners.size(); ++a)
    for (std::size_t k = 0; k < n_out; ++k)
      if (!inners[a].logical.row_is_zero(k)) m.set(a, k, true);
  return m;
}

LiftResult assemble_lift(const std::vector<InnerCodeSpec>& inners) {
  if (inners.empty())
    throw std::invalid_argument("assemble_lift: at least one inner code required");
  const unsigned nu = inners[0].coeff.nu;
  const std::size_t n_out = inners[0].logical.rows();
  for (std::size_t a = 0; a < inners.size(); ++a) validate_inner(inners[a], a, nu, n_out);

  LiftResult result;
  result.layout.n_out = n_out;
  for (const InnerCodeSpec& inner : inners)
    result.layout.inner_cols.push_back(inner.coeff.t.size());
  const std::size_t n_total = result.layout.total_cols();
  const std::size_t n_c = inners.size();
  const BitMatrix m = derive_m(inners);

  // c_ell: identity on the output block, each inner's logical block repeated
  // in both halves.
  BitMatrix c_ell(n_out, n_total);
  for (std::size_t k = 0; k < n_out; ++k) {
    c_ell.set(k, k, true);
    for (std::size_t a = 0; a < n_c; ++a) {
      const std::size_t off = result.layout.inner_offset(a);
      const std::size_t w = result.layout.inner_cols[a];
      for (std::size_t i = 0; i < w; ++i)
        if (inners[a].logical.get(k, i)) {
          c_ell.set(k, off + i, true);
          c_ell.set(k, off + w + i, true);
        }
    }
  }

  // c_out row a: membership row, propagated logical blocks of earlier
  // inners in both halves, all-ones in inner a's first half only.
  BitMatrix c_out(n_c, n_total);
  for (std::size_t a = 0; a < n_c; ++a) {
    for (std::size_t k = 0; k < n_out; ++k)
      if (m.get(a, k)) c_out.set(a, k, true);
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t off = result.layout.inner_offset(b);
      const std::size_t w = result.layout.inner_cols[b];
      for (std::size_t i = 0; i < w; ++i) {
        bool bit = false;
        for (std::size_t k = 0; k < n_out; ++k)
          if (m.get(a, k) && inners[b].logical.get(k, i)) bit = !bit;
        if (bit) {
          c_out.set(a, off + i, true);
          c_out.set(a, off + w + i, true);
        }
      }
    }
    const std::size_t off = result.layout.inner_offset(a);
    for (std::size_t i = 0; i < result.layout.inner_cols[a]; ++i) c_out.set(a, off + i, true);
  }

  // c_in: block diagonal, each stabilizer row repeated in both halves.
  std::size_t in_rows = 0;
  for (const InnerCodeSpec& inner : inners) in_rows += inner.stab.rows();
  BitMatrix c_in(in_rows, n_total);
  {
    std::size_t r = 0;
    for (std::size_t a = 0; a < n_c; ++a) {
      const std::size_t off = result.layout.inner_offset(a);
      const std::size_t w = result.layout.inner_cols[a];
      for (std::size_t s = 0; s < inners[a].stab.rows(); ++s, ++r)
        for (std::size_t i = 0; i < w; ++i)
          if (inners[a].stab.get(s, i)) {
            c_in.set(r, off + i, true);
            c_in.set(r, off + w + i, true);
          }
    }
  }

  // Structural coefficient vector [1 | (-t, t) per inner] mod 2^{nu+1}.
  const unsigned nu1 = nu + 1;
  const std::uint64_t mask1 = mask_of(nu1);
  std::vector<std::uint64_t> structural(n_total, 1);
  for (std::size_t a = 0; a < n_c; ++a) {
    const std::size_t off = result.layout.inner_offset(a);
    const std::size_t w = result.layout.inner_cols[a];
    for (std::size_t i = 0; i < w; ++i) {
      structural[off + i] = ((std::uint64_t{1} << nu1) - inners[a].coeff.t[i]) & mask1;
      structural[off + w + i] = inners[a].coeff.t[i];
    }
  }

  // Norm defects relative to the targets (1 for c_ell rows, 0 otherwise).
  // Theory puts each defect at a multiple of 2^nu; anything else means the
  // inputs slipped past validation.
  const BitMatrix stacked = BitMatrix::vstack(c_ell, c_out, c_in);
  Bits defect(stacked.rows(), 0);
  for (std::size_t r = 0; r < stacked.rows(); ++r) {
    const std::uint64_t expected = r < n_out ? 1 : 0;
    const std::uint64_t gap = (weighted_row_sum(stacked, r, structural) - expected) & mask1;
    if (gap & mask_of(nu))
      throw std::runtime_error("assemble_lift: adjustment infeasible: row " + std::to_string(r) +
                               " has norm defect " + std::to_string(gap) +
                               ", not a multiple of 2^" + std::to_string(nu));
    defect[r] = static_cast<std::uint8_t>(gap >> nu);
  }

  // Bump indicator: solve the full norm system, preferring an even number
  // of bumps so the coefficient-sum identity survives at level nu+1.
  std::optional<Bits> eps;
  {
    Bits ones_row(n_total, 1);
    BitMatrix with_parity = BitMatrix::vstack(stacked, BitMatrix::row_vector(ones_row));
    Bits rhs = defect;
    rhs.push_back(0);
    eps = solve_f2(with_parity, rhs);
    result.adjustment.parity_constraint_applied = eps.has_value();
    if (!eps) eps = solve_f2(stacked, defect);
    if (!eps)
      throw std::runtime_error(
          "assemble_lift: adjustment infeasible: the bump system has no solution even without "
          "the parity constraint");
  }

  std::vector<std::uint64_t> adjusted = structural;
  for (std::size_t c = 0; c < n_total; ++c)
    if ((*eps)[c]) {
      adjusted[c] = (adjusted[c] + (std::uint64_t{1} << nu)) & mask1;
      result.adjustment.bumped_columns.push_back(c);
    }

  result.c_ell = std::move(c_ell);
  result.c_out = std::move(c_out);
  result.c_in = std::move(c_in);
  result.t_lift = make_coeff_vector(adjusted, nu1);

  // Re-verify every claimed property of the lift; nothing is assumed.
  const BitMatrix null_rows = BitMatrix::vstack(result.c_out, result.c_in);
  const PairReport post = verify_pair({result.c_ell, null_rows, result.t_lift});
  result.adjustment.furthermore_holds = furthermore_identity(result.c_ell, result.t_lift);
  if (!post.all_pass ||
      (result.adjustment.parity_constraint_applied && !result.adjustment.furthermore_holds)) {
    std::string msg = "assemble_lift: post-verification failed:";
    for (const PairCheck& c : post.checks)
      if (!c.pass) msg += " [" + c.name + ": " + c.witness + "]";
    if (!result.adjustment.furthermore_holds) msg += " [coefficient-sum identity violated]";
    throw std::runtime_error(msg);
  }

  // For comparison, adjust via the outer-syndrome rows alone and record
  // whether that weaker repair would have produced a valid code.
  try {
    const std::vector<std::uint64_t> zeros(n_c, 0);
    const std::vector<std::uint64_t> naive =
        lift_solution(result.c_out, zeros, structural, nu1);
    for (std::size_t c = 0; c < n_total; ++c)
      if (naive[c] != structural[c]) result.adjustment.naive_bumped_columns.push_back(c);
    const PairReport naive_report =
        verify_pair({result.c_ell, null_rows, make_coeff_vector(naive, nu1)});
    result.adjustment.naive_cout_only_valid =
        naive_report.all_pass &&
        furthermore_identity(result.c_ell, make_coeff_vector(naive, nu1));
  } catch (const std::exception&) {
    result.adjustment.naive_cout_only_valid = false;
  }

  return result;
}

std::pair<BitMatrix, BitMatrix> complete_check_matrix(const std::vector<InnerCodeSpec>& inners) {
  if (inners.empty()) return {BitMatrix(0, 0), BitMatrix(0, 0)};
  LiftResult lift = assemble_lift(inners);
  return {BitMatrix::vstack(lift.c_out, lift.c_in), std::move(lift.c_ell)};
}

ErrorClass classify_error(const BitMatrix& c0, const BitMatrix& c1, const Bits& y) {
  if (y.size() != c0.cols() || y.size() != c1.cols())
    throw std::invalid_argument("classify_error: pattern length " + std::to_string(y.size()) +
                                " does not match " + std::to_string(c0.cols()) + " columns");
  const Bits s0 = mat_vec_f2(c0, y);
  if (std::any_of(s0.begin(), s0.end(), [](std::uint8_t b) { return b != 0; }))
    return ErrorClass::rejected;
  const Bits s1 = mat_vec_f2(c1, y);
  if (std::any_of(s1.begin(), s1.end(), [](std::uint8_t b) { return b != 0; }))
    return ErrorClass::accepted_faulty;
  return ErrorClass::accepted_clean;
}

std::optional<std::size_t> undetected_min_weight(const BitMatrix& c0, const BitMatrix& c1,
                                                 std::size_t w_max) {
  return distance_z(c1, c0, w_max);
}

namespace {

struct SyndromeColumns {
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> col;

  explicit SyndromeColumns(const BitMatrix& m) {
    words = (m.rows() + 63) / 64;
    col.assign(m.cols(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.get(r, c)) col[c][r / 64] ^= std::uint64_t{1} << (r % 64);
  }
};

bool sensitivity_search(const SyndromeColumns& cols, std::size_t n, std::size_t d,
                        std::size_t weight, std::size_t start, std::size_t remaining,
                        std::vector<std::uint64_t>& syn, std::vector<std::size_t>& support,
                        SensitivityVerdict& verdict) {
  if (remaining == 0) {
    std::size_t me = 0;
    for (std::uint64_t w : syn) me += static_cast<std::size_t>(std::popcount(w));
    if (weight + 2 * me < d) {
      verdict.ok = false;
      verdict.witness.assign(n, 0);
      for (std::size_t c : support) verdict.witness[c] = 1;
      verdict.witness_weight = weight;
      verdict.syndrome_weight = me;
      return true;
    }
    return false;
  }
  for (std::size_t c = start; c + remaining <= n; ++c) {
    for (std::size_t w = 0; w < syn.size(); ++w) syn[w] ^= cols.col[c][w];
    support.push_back(c);
    if (sensitivity_search(cols, n, d, weight, c + 1, remaining - 1, syn, support, verdict))
      return true;
    support.pop_back();
    for (std::size_t w = 0; w < syn.size(); ++w) syn[w] ^= cols.col[c][w];
  }
  return false;
}

}  // namespace

SensitivityVerdict check_sensitivity(const BitMatrix& m, std::size_t d) {
  SensitivityVerdict verdict;
  const std::size_t n = m.cols();
  if (d <= 1 || n == 0) return verdict;

  double total = 0;
  for (std::size_t w = 1; w <= std::min(d - 1, n); ++w) {
    double binom = 1;
    for (std::size_t i = 0; i < w; ++i)
      binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
    total += binom;
  }
  if (total > 1e8)
    throw std::invalid_argument("check_sensitivity: instance too large: ~" +
                                std::to_string(static_cast<std::uint64_t>(total)) +
                                " supports to enumerate");

  const SyndromeColumns cols(m);
  std::vector<std::uint64_t> syn(cols.words, 0);
  std::vector<std::size_t> support;
  for (std::size_t w = 1; w <= std::min(d - 1, n); ++w)
    if (sensitivity_search(cols, n, d, w, 0, w, syn, support, verdict)) return verdict;
  return verdict;
}

Rational tower_rate(long long n_mu, long long k_mu, long long s, unsigned mu, unsigned nu) {
  if (mu < 2 || nu < mu)
    throw std::invalid_argument("tower_rate: levels must satisfy nu >= mu >= 2");
  if (s < 2) throw std::invalid_argument("tower_rate: repetition parameter s must be >= 2");
  if (n_mu < 1 || k_mu < 1)
    throw std::invalid_argument("tower_rate: n and k must be positive");
  long long factor = 1;
  for (unsigned i = mu; i < nu; ++i)
    if (__builtin_mul_overflow(factor, 2 * s, &factor))
      throw std::overflow_error("tower_rate: growth factor overflows");
  const Rational corner(1, 2 * s - 1);
  return Rational(factor) * (Rational(n_mu, k_mu) + corner) - corner;
}

}  // namespace divtower
