#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace divtower {

/// A 0/1 vector, one entry per element.
using Bits = std::vector<std::uint8_t>;

/// Dense matrix over GF(2), rows packed 64 entries per machine word.
/// Unused high bits of the trailing word in each row are kept zero, so
/// whole-object comparison and row hashing work on the raw words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix zeros(std::size_t rows, std::size_t cols);
  static BitMatrix ones(std::size_t rows, std::size_t cols);
  /// Rows given as strings of '0'/'1'.  Throws std::invalid_argument on a
  /// foreign character or ragged row lengths.
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix from_rows(const std::vector<Bits>& rows);
  /// 1 x n matrix from a bit vector.
  static BitMatrix row_vector(const Bits& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);

  std::span<const std::uint64_t> row_words(std::size_t r) const;
  std::span<std::uint64_t> row_words(std::size_t r);

  /// dst ^= src, both rows of *this.
  void xor_rows(std::size_t dst, std::size_t src);
  /// Row dst of *this ^= row src of other (same column count).
  void xor_row_from(std::size_t dst, const BitMatrix& other, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  std::size_t row_weight(std::size_t r) const;
  bool row_is_zero(std::size_t r) const;

  Bits row_bits(std::size_t r) const;
  void set_row(std::size_t r, const Bits& v);

  /// Parity of the overlap between row r of *this and row s of other.
  bool dot_rows(std::size_t r, const BitMatrix& other, std::size_t s) const;
  /// Parity of the overlap between row r and a loose bit vector.
  bool dot_row(std::size_t r, const Bits& v) const;

  BitMatrix transposed() const;
  /// Result column j is source column source_of[j]; source_of must be a
  /// permutation of 0..cols-1.
  BitMatrix permuted_columns(std::span<const std::size_t> source_of) const;
  BitMatrix sliced_rows(std::size_t begin, std::size_t end) const;
  /// Rows of *this whose weight is nonzero, in order; out_index (optional)
  /// receives their original positions.
  BitMatrix nonzero_rows(std::vector<std::size_t>* out_index = nullptr) const;

  static BitMatrix vstack(std::span<const BitMatrix> parts);
  static BitMatrix hstack(std::span<const BitMatrix> parts);
  static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);
  static BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
  template <typename... Rest>
  static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b, const Rest&... rest) {
    return vstack(vstack(a, b), rest...);
  }
  template <typename... Rest>
  static BitMatrix hstack(const BitMatrix& a, const BitMatrix& b, const Rest&... rest) {
    return hstack(hstack(a, b), rest...);
  }

  bool operator==(const BitMatrix& other) const = default;

  /// One row per line of '0'/'1' characters (the text matrix format used by
  /// all CLI subcommands).
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct RrefResult {
  BitMatrix matrix;
  std::vector<std::size_t> pivots;  // pivot column of row i, ascending
};

/// Rank over GF(2).
std::size_t rank(const BitMatrix& m);

/// Reduced row echelon form.  Pivot ties break toward the lowest column
/// index, then the lowest row index, so the output is deterministic.
/// Zero rows sink to the bottom; pivot columns are strictly increasing.
RrefResult rref(const BitMatrix& m);

/// Basis of { x : M x = 0 }, one vector per row, ordered by ascending free
/// column.  rank(m) + nullspace(m).rows() == m.cols().
BitMatrix nullspace(const BitMatrix& m);

/// Is v in the row span of m?  v.size() must equal m.cols().
bool in_span(const BitMatrix& m, const Bits& v);

/// One solution x of A x = b over GF(2) (free variables zero), or nullopt
/// if the system is inconsistent.  Pivots scan columns left to right.
std::optional<Bits> solve_f2(const BitMatrix& a, const Bits& b);

/// Same contract as solve_f2 but pivots are chosen scanning rows from the
/// last upward taking the rightmost available column, matching the
/// bottom-right echelon convention used by the congruence lifter.
std::optional<Bits> solve_f2_bottom_right(const BitMatrix& a, const Bits& b);

/// A x over GF(2) for a loose vector x of length a.cols().
Bits mat_vec_f2(const BitMatrix& a, const Bits& x);

}  // namespace divtower
