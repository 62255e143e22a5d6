#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "divtower/bit_matrix.hpp"

namespace divtower {

/// Odd coefficient vector t at level nu >= 2.  Entries are canonical in
/// [0, 2^nu); the factory reduces raw values, so bumping an entry by 2^nu
/// yields the same object.  The weighted norm of a 0/1 vector v is
/// sum_i v_i t_i mod 2^nu; "null" means norm 0, "orthonormal" norm 1.
struct CoeffVector {
  std::vector<std::uint64_t> t;
  unsigned nu = 2;
};

/// Builds a CoeffVector, canonicalising entries mod 2^nu.  Throws
/// std::invalid_argument if nu is outside [2, 62] or an entry is even.
CoeffVector make_coeff_vector(std::vector<std::uint64_t> t, unsigned nu);

/// Logical/stabilizer generator pair sharing one coefficient vector.
/// logical may contain all-zero rows (slots not used by a check routine);
/// stab rows must be F2-independent for the pair to validate.
struct OrthoPair {
  BitMatrix logical;
  BitMatrix stab;
  CoeffVector coeff;
};

/// sum_i v_i t_i mod 2^nu.  Throws on length mismatch.
std::uint64_t nu_norm(const Bits& v, const CoeffVector& t);

/// Exact integer sum_i (AND of the selected rows)_i t_i.  The subset must
/// be nonempty with valid, distinct row indices.
std::uint64_t weighted_overlap(const BitMatrix& a, const std::vector<std::size_t>& subset,
                               const CoeffVector& t);

struct OrthogonalityVerdict {
  bool ok = true;
  std::vector<std::size_t> subset;   // first failing subset, empty when ok
  std::uint64_t overlap_weight = 0;  // exact integer overlap of that subset
  std::uint64_t lhs = 0;             // 2^{|subset|-1} * overlap mod 2^nu (should be 0)
};

/// Checks that the rows of `a` form an orthogonal set at level t.nu: for
/// every row subset of size 2..nu the weighted overlap scaled by
/// 2^{size-1} vanishes mod 2^nu.  Rows must be F2-independent (throws
/// otherwise; the equivalence with set orthogonality needs independence).
/// Subsets are scanned by ascending size, lexicographic within a size, and
/// the first failure is reported.
OrthogonalityVerdict is_nu_orthogonal(const BitMatrix& a, const CoeffVector& t);

struct NormVerdict {
  bool ok = true;
  std::optional<std::size_t> row;  // first failing row
  std::uint64_t norm = 0;
  std::uint64_t expected = 0;
};

/// Every row has norm 0.  All-zero rows pass.
NormVerdict is_nu_null(const BitMatrix& a, const CoeffVector& t);
/// Every row has norm 1.  All-zero rows fail (their norm is 0).
NormVerdict is_nu_orthonormal(const BitMatrix& a, const CoeffVector& t);

struct AdditivityVerdict {
  bool ok = true;
  std::vector<std::size_t> subset;
  std::uint64_t lhs = 0;  // norm of the mod-2 row sum
  std::uint64_t rhs = 0;  // sum of the row norms mod 2^nu
};

/// Independent oracle for orthogonality: norm additivity over every row
/// subset, ||sum_{r in K} A_r mod 2|| = sum_{r in K} ||A_r|| mod 2^nu.
/// Enumerates all 2^rows subsets; rows must be <= 20.
AdditivityVerdict additivity_oracle(const BitMatrix& a, const CoeffVector& t);

struct TriorthogonalityVerdict {
  bool ok = true;
  std::vector<std::size_t> rows;  // failing pair or triple
  std::uint64_t overlap = 0;
};

/// Every pair and every triple of distinct rows has even overlap.
TriorthogonalityVerdict is_triorthogonal(const BitMatrix& g);

/// Searches for an odd t making stab rows null, nonzero logical rows
/// orthonormal, and the stacked matrix nu-orthogonal.  Preconditions (mod-2
/// shadows): stab.stab^T = 0, stab.logical^T = 0, and logical.logical^T
/// agrees with the identity on nonzero rows; violations throw with the
/// failing product entry.  For nu = 2 the norm congruences alone are
/// assembled (pairwise orthogonality is then automatic); for nu > 2 each
/// row subset of size 2..nu adds a congruence scaled by 2^{size-1}.  The
/// system is solved mod 2^nu seeded with the all-ones vector mod 2, which
/// forces oddness.  Returns nullopt when the system is unsolvable.  Throws
/// if the system would exceed 2^16 rows.
std::optional<CoeffVector> find_coefficient_vector(const BitMatrix& logical, const BitMatrix& stab,
                                                   unsigned nu);

}  // namespace divtower
