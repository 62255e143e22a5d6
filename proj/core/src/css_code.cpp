#include "divtower/css_code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace divtower {

namespace {

std::uint64_t mask_of(unsigned nu) { return (std::uint64_t{1} << nu) - 1; }

std::string fmt_subset(const std::vector<std::size_t>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(subset[i]);
  }
  return out + "}";
}

bool dot_bits(const Bits& a, const Bits& b) {
  bool acc = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) acc = !acc;
  return acc;
}

void xor_bits(Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

}  // namespace

PairReport verify_pair(const OrthoPair& pair) {
  PairReport report;
  const auto add = [&](std::string name, bool pass, std::string witness) {
    report.checks.push_back({std::move(name), pass, std::move(witness)});
    report.all_pass = report.all_pass && report.checks.back().pass;
  };

  const std::size_t n = pair.coeff.t.size();
  const bool cols_ok = pair.logical.cols() == n && pair.stab.cols() == n;
  add("columns-agree", cols_ok,
      cols_ok ? ""
              : "logical has " + std::to_string(pair.logical.cols()) + " cols, stab " +
                    std::to_string(pair.stab.cols()) + ", t " + std::to_string(n));
  if (!cols_ok) return report;

  const BitMatrix lnz = pair.logical.nonzero_rows();
  const BitMatrix g = BitMatrix::vstack(lnz, pair.stab);
  const std::size_t g_rank = rank(g);
  const bool independent = g_rank == g.rows();
  add("stacked-rows-independent", independent,
      independent ? "" : "rank " + std::to_string(g_rank) + " < rows " + std::to_string(g.rows()));

  if (independent) {
    const OrthogonalityVerdict v = is_nu_orthogonal(g, pair.coeff);
    add("g-nu-orthogonal", v.ok,
        v.ok ? ""
             : "subset " + fmt_subset(v.subset) + " overlap " + std::to_string(v.overlap_weight) +
                   " scaled " + std::to_string(v.lhs) + " != 0 mod 2^" +
                   std::to_string(pair.coeff.nu));
  } else {
    add("g-nu-orthogonal", false, "not evaluated: rows are dependent");
  }

  const NormVerdict nullv = is_nu_null(pair.stab, pair.coeff);
  add("s-nu-null", nullv.ok,
      nullv.ok ? ""
               : "row " + std::to_string(*nullv.row) + " norm " + std::to_string(nullv.norm) +
                     " != 0");
  const NormVerdict onv = is_nu_orthonormal(lnz, pair.coeff);
  add("l-nu-orthonormal", onv.ok,
      onv.ok ? ""
             : "row " + std::to_string(*onv.row) + " norm " + std::to_string(onv.norm) + " != 1");
  return report;
}

CssCode build_css(const OrthoPair& pair) {
  const PairReport report = verify_pair(pair);
  if (!report.all_pass) {
    std::string msg = "build_css: pair invalid:";
    for (const PairCheck& c : report.checks)
      if (!c.pass) msg += " [" + c.name + ": " + c.witness + "]";
    throw std::invalid_argument(msg);
  }
  CssCode code;
  code.pair = pair;
  code.n = pair.coeff.t.size();
  code.k = pair.logical.nonzero_rows().rows();
  code.nu = pair.coeff.nu;
  code.zstab = nullspace(BitMatrix::vstack(pair.logical, pair.stab));
  return code;
}

std::optional<BitMatrix> normal_basis(const BitMatrix& stab, const BitMatrix& candidates) {
  for (std::size_t a = 0; a < stab.rows(); ++a)
    for (std::size_t b = a; b < stab.rows(); ++b)
      if (stab.dot_rows(a, stab, b))
        throw std::invalid_argument("normal_basis: S S^T entry (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") is odd");
  for (std::size_t a = 0; a < stab.rows(); ++a)
    for (std::size_t c = 0; c < candidates.rows(); ++c)
      if (stab.dot_rows(a, candidates, c))
        throw std::invalid_argument("normal_basis: S cand^T entry (" + std::to_string(a) + "," +
                                    std::to_string(c) + ") is odd");

  const std::size_t n = candidates.rows() > 0 ? candidates.cols() : stab.cols();

  // Quotient representatives: candidates reduced modulo span(stab) and the
  // representatives accepted so far.
  std::vector<Bits> quotient;
  {
    BitMatrix acc = stab;
    RrefResult red = rref(acc);
    for (std::size_t c = 0; c < candidates.rows(); ++c) {
      Bits v = candidates.row_bits(c);
      for (std::size_t p = 0; p < red.pivots.size(); ++p)
        if (v[red.pivots[p]])
          for (std::size_t j = 0; j < n; ++j) v[j] ^= red.matrix.get(p, j) ? 1 : 0;
      if (std::any_of(v.begin(), v.end(), [](std::uint8_t b) { return b != 0; })) {
        quotient.push_back(v);
        acc = BitMatrix::vstack(acc, BitMatrix::row_vector(v));
        red = rref(acc);
      }
    }
  }

  // Symmetric Gram-Schmidt over F2.  The self-overlap functional is linear
  // over F2, so once every remaining vector is even the whole remaining
  // space is; a hyperbolic pair can then only be absorbed by recombining it
  // with an odd vector produced earlier.
  std::vector<Bits> basis;
  std::vector<Bits> work = std::move(quotient);
  while (!work.empty()) {
    std::size_t odd_at = work.size();
    for (std::size_t i = 0; i < work.size(); ++i)
      if (dot_bits(work[i], work[i])) {
        odd_at = i;
        break;
      }
    if (odd_at < work.size()) {
      Bits b = work[odd_at];
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(odd_at));
      for (Bits& other : work)
        if (dot_bits(other, b)) xor_bits(other, b);
      basis.push_back(std::move(b));
      continue;
    }
    // All remaining self-overlaps even: find a hyperbolic partner for the
    // first vector.  No partner means it sits in the radical.
    Bits b1 = work.front();
    std::size_t partner = work.size();
    for (std::size_t j = 1; j < work.size(); ++j)
      if (dot_bits(b1, work[j])) {
        partner = j;
        break;
      }
    if (partner == work.size()) return std::nullopt;  // degenerate form
    Bits b2 = work[partner];
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(partner));
    work.erase(work.begin());
    for (Bits& other : work) {
      if (dot_bits(other, b2)) xor_bits(other, b1);
      if (dot_bits(other, b1)) xor_bits(other, b2);
    }
    if (basis.empty()) return std::nullopt;  // fully alternating: hyperbolic
    Bits last = basis.back();
    basis.pop_back();
    Bits u1 = last, u2 = last, u3 = last;
    xor_bits(u1, b1);
    xor_bits(u2, b2);
    xor_bits(u3, b1);
    xor_bits(u3, b2);
    basis.push_back(std::move(u1));
    basis.push_back(std::move(u2));
    basis.push_back(std::move(u3));
  }

  if (basis.empty()) return BitMatrix(0, n);
  return BitMatrix::from_rows(basis);
}

namespace {

struct ColumnSyndromes {
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> col;  // per column, packed over rows

  explicit ColumnSyndromes(const BitMatrix& m) {
    words = (m.rows() + 63) / 64;
    col.assign(m.cols(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.get(r, c)) col[c][r / 64] ^= std::uint64_t{1} << (r % 64);
  }
};

bool all_zero(const std::vector<std::uint64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
}

void xor_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

// Lexicographically first support of the given weight with A f = 0 and
// B f != 0, recursively extending from `start`.
bool search_support(const ColumnSyndromes& a, const ColumnSyndromes& b, std::size_t n,
                    std::size_t start, std::size_t remaining, std::vector<std::uint64_t>& syn_a,
                    std::vector<std::uint64_t>& syn_b) {
  if (remaining == 0) return all_zero(syn_a) && !all_zero(syn_b);
  for (std::size_t c = start; c + remaining <= n; ++c) {
    xor_into(syn_a, a.col[c]);
    xor_into(syn_b, b.col[c]);
    if (search_support(a, b, n, c + 1, remaining - 1, syn_a, syn_b)) return true;
    xor_into(syn_a, a.col[c]);
    xor_into(syn_b, b.col[c]);
  }
  return false;
}

std::optional<std::size_t> min_weight_in_kernel_outside(const BitMatrix& keep_zero,
                                                        const BitMatrix& want_nonzero,
                                                        std::size_t w_max) {
  if (keep_zero.cols() != want_nonzero.cols())
    throw std::invalid_argument("distance search: column mismatch");
  const std::size_t n = keep_zero.cols();
  const ColumnSyndromes a(keep_zero), b(want_nonzero);
  std::vector<std::uint64_t> syn_a(a.words, 0), syn_b(b.words, 0);
  for (std::size_t w = 1; w <= std::min(w_max, n); ++w)
    if (search_support(a, b, n, 0, w, syn_a, syn_b)) return w;
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> distance_z(const BitMatrix& logical, const BitMatrix& stab,
                                      std::size_t w_max) {
  if (w_max < 1) throw std::invalid_argument("distance_z: w_max must be >= 1");
  return min_weight_in_kernel_outside(stab, logical, w_max);
}

std::optional<std::size_t> distance_z(const CssCode& code, std::size_t w_max) {
  return distance_z(code.pair.logical, code.pair.stab, w_max);
}

std::size_t distance_x(const BitMatrix& logical, const BitMatrix& stab, std::size_t dim_cap) {
  const BitMatrix lnz = logical.nonzero_rows();
  const BitMatrix g = BitMatrix::vstack(lnz, stab);
  if (g.rows() > dim_cap)
    throw std::invalid_argument("distance_x: rank " + std::to_string(g.rows()) +
                                " exceeds dim_cap " + std::to_string(dim_cap));
  if (rank(g) != g.rows())
    throw std::invalid_argument("distance_x: generator rows must be F2-independent");
  if (lnz.rows() == 0)
    throw std::invalid_argument("distance_x: no nonzero logical rows");

  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> current(words, 0);
  const std::uint64_t logical_mask = (lnz.rows() >= 64) ? ~std::uint64_t{0}
                                                        : ((std::uint64_t{1} << lnz.rows()) - 1);
  std::size_t best = g.cols() + 1;
  const std::uint64_t total = std::uint64_t{1} << g.rows();
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::size_t flip = static_cast<std::size_t>(std::countr_zero(i));
    const auto rw = g.row_words(flip);
    for (std::size_t w = 0; w < words; ++w) current[w] ^= rw[w];
    const std::uint64_t gray = i ^ (i >> 1);
    if ((gray & logical_mask) == 0) continue;  // inside span(stab)
    std::size_t weight = 0;
    for (std::uint64_t w : current) weight += static_cast<std::size_t>(std::popcount(w));
    best = std::min(best, weight);
  }
  return best;
}

std::size_t distance_x(const CssCode& code, std::size_t dim_cap) {
  return distance_x(code.pair.logical, code.pair.stab, dim_cap);
}

PhaseVerdict verify_transversal_phase(const CssCode& code, std::size_t dim_cap) {
  const BitMatrix lnz = code.pair.logical.nonzero_rows();
  const BitMatrix g = BitMatrix::vstack(lnz, code.pair.stab);
  if (g.rows() > dim_cap)
    throw std::invalid_argument("verify_transversal_phase: rank " + std::to_string(g.rows()) +
                                " exceeds dim_cap " + std::to_string(dim_cap));
  const std::uint64_t mask = mask_of(code.nu);
  const auto& t = code.pair.coeff.t;

  Bits f(code.n, 0);
  std::uint64_t norm = 0;
  std::uint64_t logical_count = 0;
  const std::uint64_t total = std::uint64_t{1} << g.rows();
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::size_t flip = static_cast<std::size_t>(std::countr_zero(i));
    for (std::size_t c = 0; c < code.n; ++c) {
      if (!g.get(flip, c)) continue;
      norm += f[c] ? (0 - t[c]) : t[c];
      f[c] ^= 1;
    }
    if (flip < lnz.rows()) {
      const std::uint64_t gray = i ^ (i >> 1);
      logical_count += ((gray >> flip) & 1u) ? 1 : (0 - std::uint64_t{1});
    }
    if ((norm & mask) != (logical_count & mask))
      return {false, f, norm & mask, logical_count & mask};
  }
  return {};
}

bool has_transversal_x(const CssCode& code) {
  const Bits ones(code.n, 1);
  if (!in_span(BitMatrix::vstack(code.pair.logical, code.pair.stab), ones)) return false;
  const std::uint64_t mask = mask_of(code.nu);
  std::uint64_t lhs = 0;
  for (std::size_t r = 0; r < code.pair.logical.rows(); ++r)
    for (std::size_t c = 0; c < code.n; ++c)
      if (code.pair.logical.get(r, c)) lhs += code.pair.coeff.t[c];
  std::uint64_t rhs = 0;
  for (std::size_t c = 0; c < code.n; ++c) rhs += code.pair.coeff.t[c];
  return (lhs & mask) == (rhs & mask);
}

}  // namespace divtower
