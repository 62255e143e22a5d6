#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "divtower/bit_matrix.hpp"
#include "divtower/ortho.hpp"

namespace divtower {

/// One inner code feeding the level-lifting construction: a generator pair
/// (logical, stab, coeff) at level nu whose logical block has one row per
/// output-code qubit (zero rows mark qubits this inner code does not touch),
/// subject additionally to the lifted-sum congruence
///   sum_k sum_i logical_ki t_i = sum_i t_i  mod 2^nu.
struct InnerCodeSpec {
  BitMatrix logical;
  BitMatrix stab;
  CoeffVector coeff;
};

/// Column layout of a lifted code: output block first, then per inner code
/// a block of twice its column count (pre-interaction half, then
/// post-interaction half).
struct LiftLayout {
  std::size_t n_out = 0;
  std::vector<std::size_t> inner_cols;

  std::size_t total_cols() const {
    std::size_t total = n_out;
    for (std::size_t n : inner_cols) total += 2 * n;
    return total;
  }
  /// First column of inner block `alpha`.
  std::size_t inner_offset(std::size_t alpha) const {
    std::size_t off = n_out;
    for (std::size_t b = 0; b < alpha; ++b) off += 2 * inner_cols[b];
    return off;
  }
};

/// How the structural coefficient vector was adjusted to reach level nu+1,
/// plus the behavior of the textbook single-block adjustment for comparison.
struct AdjustmentDiagnostics {
  /// Columns whose coefficient was bumped by 2^nu (full-system solve).
  std::vector<std::size_t> bumped_columns;
  /// Whether the bump-parity constraint (even number of bumps) was kept;
  /// it is dropped when it makes the system unsolvable.
  bool parity_constraint_applied = true;
  /// Whether sum_{r,i} (c_ell)_{ri} t_i = sum_i t_i mod 2^{nu+1} holds for
  /// the adjusted vector.
  bool furthermore_holds = true;
  /// Bump columns chosen by adjusting the outer-syndrome rows alone
  /// (bottom-right pivot convention), ignoring the other blocks.
  std::vector<std::size_t> naive_bumped_columns;
  /// Whether that single-block adjustment happens to satisfy every lifted
  /// invariant.  On typical inputs it breaks c_ell orthonormality.
  bool naive_cout_only_valid = false;
};

/// A level-(nu+1) divisible code assembled from level-nu inner codes:
/// c_ell rows are (nu+1)-orthonormal, c_out and c_in rows (nu+1)-null, and
/// the whole stack is (nu+1)-orthogonal with respect to t_lift.
struct LiftResult {
  BitMatrix c_ell;
  BitMatrix c_out;
  BitMatrix c_in;
  CoeffVector t_lift;
  LiftLayout layout;
  AdjustmentDiagnostics adjustment;
};

/// Membership matrix: one row per inner code, one column per output qubit,
/// entry (alpha, k) = 1 iff row k of inner alpha's logical block is nonzero.
/// Throws when the inner codes disagree on the output row count.
BitMatrix derive_m(const std::vector<InnerCodeSpec>& inners);

/// The level-lifting construction.  Validates every InnerCodeSpec invariant
/// (throws std::invalid_argument naming the inner index and failing
/// congruence), assembles the block matrix
///   c_ell  = [ I | (11)x L^(1) | (11)x L^(2) | ... ]
///   c_out  row a = [ M_a | M_a((11)x L^(b<a)) | (10)x 1 | 0 ... ]
///   c_in   = blockdiag( (11)x S^(a) ),
/// seeds the coefficient vector with [1 | (-t, t) per inner] mod 2^{nu+1},
/// and repairs the remaining norm defects by bumping coefficients by 2^nu:
/// the bump indicator solves the full F2 system over all stacked rows, with
/// an appended even-bump-count constraint when consistent.  Every claimed
/// property of the result is re-verified; failures throw std::runtime_error.
LiftResult assemble_lift(const std::vector<InnerCodeSpec>& inners);

/// Check matrices of the distillation protocol: C0 stacks the outer- and
/// inner-syndrome rows [c_out; c_in] (acceptance test), C1 = c_ell maps an
/// error pattern to the logical error it propagates to the output.
/// An empty inner list yields empty 0-column matrices.
std::pair<BitMatrix, BitMatrix> complete_check_matrix(const std::vector<InnerCodeSpec>& inners);

enum class ErrorClass { rejected, accepted_clean, accepted_faulty };

/// rejected if C0 y != 0; accepted_clean if C0 y = 0 and C1 y = 0;
/// accepted_faulty otherwise.  Throws on length mismatch.
ErrorClass classify_error(const BitMatrix& c0, const BitMatrix& c1, const Bits& y);

/// Minimum weight of y with C0 y = 0 and C1 y != 0 (an accepted error that
/// corrupts the output), or nullopt if none exists with weight <= w_max.
std::optional<std::size_t> undetected_min_weight(const BitMatrix& c0, const BitMatrix& c1,
                                                 std::size_t w_max);

struct SensitivityVerdict {
  bool ok = true;
  Bits witness;                     // first violating e (ascending weight, lex)
  std::size_t witness_weight = 0;   // |e|
  std::size_t syndrome_weight = 0;  // |M e|
};

/// Checks |e| + 2 |M e| >= d for every nonzero e (only |e| <= d-1 can
/// violate it).  Throws when the enumeration would exceed 10^8 supports.
SensitivityVerdict check_sensitivity(const BitMatrix& m, std::size_t d);

using Rational = boost::rational<long long>;

/// Inverse-rate recursion for a tower of codes between levels mu and nu
/// built with s-fold outer repetition:
///   n_nu/k_nu = (2s)^(nu-mu) * (n_mu/k_mu + 1/(2s-1)) - 1/(2s-1).
/// Exact rational result; requires nu >= mu >= 2 and s >= 2.
Rational tower_rate(long long n_mu, long long k_mu, long long s, unsigned mu, unsigned nu);

}  // namespace divtower
