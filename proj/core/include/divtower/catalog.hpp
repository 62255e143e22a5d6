#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divtower/bit_matrix.hpp"
#include "divtower/css_code.hpp"
#include "divtower/ortho.hpp"

namespace divtower {

/// The [[7,1,3]] pair: S rows {1010101, 0110011, 0001111}, L the all-ones
/// row, coefficient vector synthesized at level 2.
OrthoPair steane();

/// The H-code on k+4 qubits (k even, >= 2): L = [0_{k x 2} I_k 1_{k x 2}],
/// S = [I_2 1_{2 x k} I_2], coefficient vector synthesized at level 2.
OrthoPair hcode(std::size_t k);

/// Shortened first-order Reed-Muller generator: take
/// G_{1,1} = [11; 01], G_{1,m} = [G_{1,m-1} G_{1,m-1}; 0 1], then drop the
/// first row and column.  m rows, 2^m - 1 columns; every nonzero row-span
/// element has weight 2^{m-1}.  Requires m >= 2.
BitMatrix shortened_rm(unsigned m);

/// The [[2^m - 1, 1, 3]] code at level m-1: S = shortened_rm(m), L = all
/// ones, coefficient vector synthesized at level m-1.  Requires m >= 3.
CssCode rm_code(unsigned m);

/// The (k+3) x (3k+8) triorthogonal matrix (k even, >= 2): k odd-weight
/// upper rows [0_{k x 4} 1_{k x 4} I_k I_k I_k] over even-weight rows
/// [0011 0011 1 0 1; 1010 1010 0 1 1; 1111 1111 0 0 0].
BitMatrix bh_triorthogonal(std::size_t k);

/// Logical/stabilizer blocks of a code presentation, for equivalence
/// checking.  Stacked row indices: 0..logical.rows()-1 are logical rows,
/// the rest stabilizer rows.
struct CodeBlocks {
  BitMatrix logical;
  BitMatrix stab;
};

/// Adds stacked row `source` into stacked row `target`; the target must lie
/// in the stabilizer block.
struct StabRowOp {
  std::size_t target = 0;
  std::size_t source = 0;
};

struct EquivalenceVerdict {
  bool ok = true;
  std::string detail;
};

/// Applies the column permutation (result column j = source column perm[j])
/// and then the row operations to A, and checks that the outcome presents
/// the same code as B: equal stabilizer row spans, and each logical row of
/// the transformed A congruent to the same-index logical row of B modulo
/// the stabilizer span.  Throws std::invalid_argument on a malformed
/// permutation or row operation; a mere mismatch yields ok = false with the
/// reason in `detail`.
EquivalenceVerdict equivalence_witness(const CodeBlocks& a, const CodeBlocks& b,
                                       const std::vector<std::size_t>& perm,
                                       const std::vector<StabRowOp>& rowops);

/// Column permutation (as a source-index array) taking the lift of hcode(k)
/// to the bh_triorthogonal(k) column order; combined with adding the
/// second-to-last stabilizer row into the last one, the lifted blocks
/// reproduce bh_triorthogonal(k) row for row.
std::vector<std::size_t> bh_lift_permutation(std::size_t k);

/// Column permutation (as a source-index array) taking a single-inner lift
/// on n columns to the doubled shortened Reed-Muller column order
/// [second half | output | first half] on 2n+1 columns.  `inner` is the
/// permutation already accumulated for the inner code's columns (identity
/// for a catalog Reed-Muller inner); pass the result back in to follow a
/// tower upward.
std::vector<std::size_t> rm_lift_permutation(const std::vector<std::size_t>& inner);

std::vector<std::size_t> identity_permutation(std::size_t n);

/// Seeded random search for a normal weakly self-dual pair: S with
/// S S^T = 0 and independent rows, all-ones not in span(S), an orthonormal
/// logical basis from normal_basis, a level-2 coefficient vector, and
/// distance_z >= d.  Returns nullopt after bounded attempts (in particular
/// whenever d > n).  Requires n <= 30 and n - k even and nonnegative.
std::optional<OrthoPair> random_weakly_selfdual(std::size_t n, std::size_t k, std::size_t d,
                                                std::uint64_t seed);

}  // namespace divtower
