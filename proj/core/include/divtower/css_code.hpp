#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divtower/bit_matrix.hpp"
#include "divtower/ortho.hpp"

namespace divtower {

/// CSS code determined by an OrthoPair: X-stabilizers are spanned by
/// pair.stab, the X-representatives of the logical qubits are the nonzero
/// rows of pair.logical, and the Z-stabilizers are the nullspace of the
/// stacked generators.
struct CssCode {
  OrthoPair pair;
  BitMatrix zstab;
  std::size_t n = 0;
  std::size_t k = 0;  // number of nonzero logical rows
  unsigned nu = 2;
};

/// One named predicate checked on a generator pair, with a human-readable
/// witness when it fails.
struct PairCheck {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct PairReport {
  std::vector<PairCheck> checks;
  bool all_pass = true;
};

/// Runs every OrthoPair validity predicate (column agreement, stacked-row
/// independence, nu-orthogonality, stab nullity, nonzero-logical
/// orthonormality) and reports each verdict with its witness.
PairReport verify_pair(const OrthoPair& pair);

/// Validates the pair as in verify_pair and assembles the CssCode.  Throws
/// std::invalid_argument listing the failed predicates otherwise.
CssCode build_css(const OrthoPair& pair);

/// Gram-Schmidt over F2 for the overlap form on span(candidates) modulo
/// span(stab): returns L with L L^T = I, stab L^T = 0 and
/// span(L) + span(stab) = span(candidates) + span(stab), or nullopt when
/// the induced form admits no orthonormal basis (it is alternating, i.e.
/// hyperbolic, or degenerate).  Candidates with odd self-overlap are taken
/// lowest index first; when only even self-overlap vectors remain, a
/// hyperbolic pair is repaired by recombining it with the most recently
/// produced basis vector.  Preconditions: stab.stab^T = 0 and
/// stab.candidate^T = 0 (throws with the failing entry).
std::optional<BitMatrix> normal_basis(const BitMatrix& stab, const BitMatrix& candidates);

/// Smallest weight w <= w_max of an f with stab f^T = 0 and
/// logical f^T != 0, i.e. a Z-logical representative; nullopt if none
/// exists within the bound.  Supports are enumerated by ascending weight,
/// lexicographic within a weight.
std::optional<std::size_t> distance_z(const BitMatrix& logical, const BitMatrix& stab,
                                      std::size_t w_max);
std::optional<std::size_t> distance_z(const CssCode& code, std::size_t w_max);

/// Minimum weight over span([logical; stab]) \ span(stab), enumerating all
/// 2^rank span elements by Gray code.  Throws if rank exceeds dim_cap.
std::size_t distance_x(const BitMatrix& logical, const BitMatrix& stab, std::size_t dim_cap = 24);
std::size_t distance_x(const CssCode& code, std::size_t dim_cap = 24);

struct PhaseVerdict {
  bool ok = true;
  Bits codeword;               // first failing codeword
  std::uint64_t norm = 0;      // its weighted norm mod 2^nu
  std::uint64_t expected = 0;  // number of logical generators used, mod 2^nu
};

/// Checks, over every element f = s + sum_a x_a L_a of the span, that
/// sum_i f_i t_i = sum_a x_a mod 2^nu (the transversal-phase identity).
/// Enumerates all 2^rank coefficient vectors; throws if rank > dim_cap.
PhaseVerdict verify_transversal_phase(const CssCode& code, std::size_t dim_cap = 24);

/// True iff the all-ones vector lies in span([logical; stab]) and
/// sum_k sum_i L_ki t_i = sum_i t_i mod 2^nu, i.e. transversal X acts as
/// the logical X on every logical qubit.
bool has_transversal_x(const CssCode& code);

}  // namespace divtower
