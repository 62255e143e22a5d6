#include "divtower/ortho.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "divtower/mod2k.hpp"

namespace divtower {

namespace {

std::uint64_t mask_of(unsigned nu) { return (std::uint64_t{1} << nu) - 1; }

// Advances a combination of `size` indices out of n in lexicographic order.
// Returns false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::uint64_t> and_of_rows(const BitMatrix& a, const std::vector<std::size_t>& subset) {
  std::vector<std::uint64_t> acc(a.row_words(subset.front()).begin(), a.row_words(subset.front()).end());
  for (std::size_t i = 1; i < subset.size(); ++i) {
    const auto w = a.row_words(subset[i]);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] &= w[j];
  }
  return acc;
}

std::uint64_t weighted_sum_of_words(const std::vector<std::uint64_t>& words, const CoeffVector& t) {
  std::uint64_t acc = 0;
  for (std::size_t c = 0; c < t.t.size(); ++c)
    if ((words[c / 64] >> (c % 64)) & 1u) acc += t.t[c];
  return acc;
}

}  // namespace

CoeffVector make_coeff_vector(std::vector<std::uint64_t> t, unsigned nu) {
  if (nu < 2 || nu > 62) throw std::invalid_argument("make_coeff_vector: nu must be in [2, 62]");
  const std::uint64_t mask = mask_of(nu);
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] &= mask;
    if ((t[i] & 1u) == 0)
      throw std::invalid_argument("make_coeff_vector: entry " + std::to_string(i) + " is even");
  }
  return CoeffVector{std::move(t), nu};
}

std::uint64_t nu_norm(const Bits& v, const CoeffVector& t) {
  if (v.size() != t.t.size()) throw std::invalid_argument("nu_norm: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) acc += t.t[i];
  return acc & mask_of(t.nu);
}

std::uint64_t weighted_overlap(const BitMatrix& a, const std::vector<std::size_t>& subset,
                               const CoeffVector& t) {
  if (subset.empty()) throw std::invalid_argument("weighted_overlap: empty subset");
  if (a.cols() != t.t.size()) throw std::invalid_argument("weighted_overlap: length mismatch");
  for (std::size_t r : subset)
    if (r >= a.rows()) throw std::invalid_argument("weighted_overlap: row index out of range");
  return weighted_sum_of_words(and_of_rows(a, subset), t);
}

OrthogonalityVerdict is_nu_orthogonal(const BitMatrix& a, const CoeffVector& t) {
  if (a.cols() != t.t.size()) throw std::invalid_argument("is_nu_orthogonal: length mismatch");
  if (rank(a) != a.rows())
    throw std::invalid_argument("is_nu_orthogonal: rows must be F2-independent");
  const std::uint64_t mask = mask_of(t.nu);
  const std::size_t max_size = std::min<std::size_t>(t.nu, a.rows());
  for (std::size_t size = 2; size <= max_size; ++size) {
    std::vector<std::size_t> subset(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = i;
    do {
      const std::uint64_t overlap = weighted_sum_of_words(and_of_rows(a, subset), t);
      const std::uint64_t lhs = ((overlap & mask) << (size - 1)) & mask;
      if (lhs != 0) return {false, subset, overlap, lhs};
    } while (next_combination(subset, a.rows()));
  }
  return {};
}

namespace {
NormVerdict check_norms(const BitMatrix& a, const CoeffVector& t, std::uint64_t expected) {
  if (a.cols() != t.t.size()) throw std::invalid_argument("norm check: length mismatch");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const std::uint64_t norm =
        weighted_sum_of_words({a.row_words(r).begin(), a.row_words(r).end()}, t) & mask_of(t.nu);
    if (norm != expected) return {false, r, norm, expected};
  }
  return {true, std::nullopt, expected, expected};
}
}  // namespace

NormVerdict is_nu_null(const BitMatrix& a, const CoeffVector& t) { return check_norms(a, t, 0); }

NormVerdict is_nu_orthonormal(const BitMatrix& a, const CoeffVector& t) { return check_norms(a, t, 1); }

AdditivityVerdict additivity_oracle(const BitMatrix& a, const CoeffVector& t) {
  if (a.cols() != t.t.size()) throw std::invalid_argument("additivity_oracle: length mismatch");
  if (a.rows() > 20) throw std::invalid_argument("additivity_oracle: more than 20 rows");
  const std::uint64_t mask = mask_of(t.nu);

  std::vector<std::uint64_t> row_norm(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    row_norm[r] = weighted_sum_of_words({a.row_words(r).begin(), a.row_words(r).end()}, t) & mask;

  const std::size_t words = a.words_per_row();
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << a.rows()); ++subset) {
    std::vector<std::uint64_t> acc(words, 0);
    std::uint64_t rhs = 0;
    std::vector<std::size_t> members;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if ((subset >> r) & 1u) {
        const auto w = a.row_words(r);
        for (std::size_t j = 0; j < words; ++j) acc[j] ^= w[j];
        rhs = (rhs + row_norm[r]) & mask;
        members.push_back(r);
      }
    }
    const std::uint64_t lhs = weighted_sum_of_words(acc, t) & mask;
    if (lhs != rhs) return {false, members, lhs, rhs};
  }
  return {};
}

TriorthogonalityVerdict is_triorthogonal(const BitMatrix& g) {
  const std::size_t n = g.rows();
  for (std::size_t size = 2; size <= 3 && size <= n; ++size) {
    std::vector<std::size_t> subset(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = i;
    do {
      const auto words = and_of_rows(g, subset);
      std::uint64_t overlap = 0;
      for (std::uint64_t w : words) overlap += static_cast<std::uint64_t>(std::popcount(w));
      if (overlap & 1u) return {false, subset, overlap};
    } while (next_combination(subset, n));
  }
  return {};
}

std::optional<CoeffVector> find_coefficient_vector(const BitMatrix& logical, const BitMatrix& stab,
                                                   unsigned nu) {
  if (nu < 2 || nu > 61) throw std::invalid_argument("find_coefficient_vector: nu must be in [2, 61]");
  if (logical.cols() != stab.cols() && logical.rows() > 0 && stab.rows() > 0)
    throw std::invalid_argument("find_coefficient_vector: column mismatch");
  const std::size_t n = logical.rows() > 0 ? logical.cols() : stab.cols();

  std::vector<std::size_t> nonzero_logical;
  const BitMatrix lnz = logical.nonzero_rows(&nonzero_logical);

  // Mod-2 shadow of the target: even stab/stab and stab/logical overlaps,
  // odd logical self-overlap, even logical/logical cross overlaps.
  for (std::size_t a = 0; a < stab.rows(); ++a)
    for (std::size_t b = a; b < stab.rows(); ++b)
      if (stab.dot_rows(a, stab, b))
        throw std::invalid_argument("find_coefficient_vector: S S^T entry (" + std::to_string(a) +
                                    "," + std::to_string(b) + ") is odd");
  for (std::size_t a = 0; a < stab.rows(); ++a)
    for (std::size_t b = 0; b < lnz.rows(); ++b)
      if (stab.dot_rows(a, lnz, b))
        throw std::invalid_argument("find_coefficient_vector: S L^T entry (" + std::to_string(a) +
                                    "," + std::to_string(nonzero_logical[b]) + ") is odd");
  for (std::size_t a = 0; a < lnz.rows(); ++a)
    for (std::size_t b = a; b < lnz.rows(); ++b) {
      const bool odd = lnz.dot_rows(a, lnz, b);
      if (odd != (a == b))
        throw std::invalid_argument("find_coefficient_vector: L L^T entry (" +
                                    std::to_string(nonzero_logical[a]) + "," +
                                    std::to_string(nonzero_logical[b]) + ") violates identity");
    }

  const BitMatrix g = BitMatrix::vstack(lnz, stab);
  if (g.rows() == 0) return make_coeff_vector(std::vector<std::uint64_t>(n, 1), nu);

  // Congruence rows: one norm row per generator, plus for nu > 2 one row
  // per subset of size 2..nu scaled by 2^{size-1}.
  std::size_t total_rows = g.rows();
  if (nu > 2) {
    const std::size_t max_size = std::min<std::size_t>(nu, g.rows());
    for (std::size_t size = 2; size <= max_size; ++size) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < size; ++i) count = count * (g.rows() - i) / (i + 1);
      total_rows += count;
      if (total_rows > (std::size_t{1} << 16))
        throw std::invalid_argument("find_coefficient_vector: instance too large");
    }
  }

  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::uint64_t> rhs;
  rows.reserve(total_rows);
  for (std::size_t r = 0; r < lnz.rows(); ++r) {
    std::vector<std::uint64_t> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = lnz.get(r, c) ? 1 : 0;
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  for (std::size_t r = 0; r < stab.rows(); ++r) {
    std::vector<std::uint64_t> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = stab.get(r, c) ? 1 : 0;
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  if (nu > 2) {
    const std::size_t max_size = std::min<std::size_t>(nu, g.rows());
    for (std::size_t size = 2; size <= max_size; ++size) {
      const std::uint64_t scale = std::uint64_t{1} << (size - 1);
      std::vector<std::size_t> subset(size);
      for (std::size_t i = 0; i < size; ++i) subset[i] = i;
      do {
        std::vector<std::uint64_t> row(n, 0);
        bool any = false;
        for (std::size_t c = 0; c < n; ++c) {
          bool all = true;
          for (std::size_t r : subset)
            if (!g.get(r, c)) {
              all = false;
              break;
            }
          if (all) {
            row[c] = scale;
            any = true;
          }
        }
        if (any) {
          rows.push_back(std::move(row));
          rhs.push_back(0);
        }
      } while (next_combination(subset, g.rows()));
    }
  }

  const CongruenceSystem sys = make_congruence_system(std::move(rows), std::move(rhs), nu);
  const ModSeed seed{std::vector<std::uint64_t>(n, 1), 1};
  auto t = solve_mod2k(sys, seed);
  if (!t) return std::nullopt;
  return make_coeff_vector(std::move(*t), nu);
}

}  // namespace divtower
