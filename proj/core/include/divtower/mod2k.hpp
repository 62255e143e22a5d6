#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "divtower/bit_matrix.hpp"

namespace divtower {

/// Linear system A x = v over Z/2^nu.  Entries are canonical: every matrix
/// and right-hand-side entry lies in [0, 2^nu).
struct CongruenceSystem {
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::uint64_t> rhs;
  unsigned nu = 1;
};

/// Builds a CongruenceSystem, reducing all entries modulo 2^nu.  Throws
/// std::invalid_argument on shape mismatch or nu outside [1, 62].
CongruenceSystem make_congruence_system(std::vector<std::vector<std::uint64_t>> rows,
                                        std::vector<std::uint64_t> rhs, unsigned nu);

/// Optional partial solution: x must agree with `values` modulo 2^level.
struct ModSeed {
  std::vector<std::uint64_t> values;
  unsigned level = 1;
};

/// One solution of A x = v mod 2^nu, or nullopt when the system (together
/// with the seed constraint, if any) has none.  Uses elimination over the
/// local ring Z/2^nu: pivots take the entry of minimal 2-adic valuation,
/// ties broken toward the last row and then the rightmost column, matching
/// the bottom-right echelon convention.  Rows whose entries are all even
/// are handled by valuation bookkeeping rather than rejected.  Entries of
/// the result are canonical in [0, 2^nu), free components zero.
std::optional<std::vector<std::uint64_t>> solve_mod2k(const CongruenceSystem& sys,
                                                      const std::optional<ModSeed>& seed = std::nullopt);

/// Given a 0/1 matrix A with F2-independent rows and u with
/// A u = v mod 2^{nu-1}, returns u' with u' = u mod 2^{nu-1} and
/// A u' = v mod 2^nu.  Such a u' always exists; the correction bumps the
/// components picked by the bottom-right pivot convention.  Throws
/// std::invalid_argument if the rows are dependent or the seed fails the
/// mod 2^{nu-1} equation.
std::vector<std::uint64_t> lift_solution(const BitMatrix& a, const std::vector<std::uint64_t>& v,
                                         const std::vector<std::uint64_t>& u, unsigned nu);

}  // namespace divtower
