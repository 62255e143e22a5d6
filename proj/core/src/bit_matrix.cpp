#include "divtower/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace divtower {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }
}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), bits_(rows * wpr_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::zeros(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }

BitMatrix BitMatrix::ones(std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, true);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return BitMatrix(0, 0);
  const std::size_t cols = rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_strings: ragged row lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw std::invalid_argument("from_strings: entry must be '0' or '1'");
      if (ch == '1') m.set(r, c, true);
    }
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<Bits>& rows) {
  if (rows.empty()) return BitMatrix(0, 0);
  const std::size_t cols = rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged row lengths");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c]) m.set(r, c, true);
  }
  return m;
}

BitMatrix BitMatrix::row_vector(const Bits& v) { return from_rows({v}); }

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (bits_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  std::uint64_t& w = bits_[r * wpr_ + c / kWordBits];
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  if (v)
    w |= mask;
  else
    w &= ~mask;
}

std::span<const std::uint64_t> BitMatrix::row_words(std::size_t r) const {
  return {bits_.data() + r * wpr_, wpr_};
}

std::span<std::uint64_t> BitMatrix::row_words(std::size_t r) {
  return {bits_.data() + r * wpr_, wpr_};
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
  std::uint64_t* d = bits_.data() + dst * wpr_;
  const std::uint64_t* s = bits_.data() + src * wpr_;
  for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::xor_row_from(std::size_t dst, const BitMatrix& other, std::size_t src) {
  if (other.cols_ != cols_) throw std::invalid_argument("xor_row_from: column mismatch");
  std::uint64_t* d = bits_.data() + dst * wpr_;
  const std::uint64_t* s = other.bits_.data() + src * other.wpr_;
  for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::uint64_t* pa = bits_.data() + a * wpr_;
  std::uint64_t* pb = bits_.data() + b * wpr_;
  for (std::size_t w = 0; w < wpr_; ++w) std::swap(pa[w], pb[w]);
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t total = 0;
  const std::uint64_t* p = bits_.data() + r * wpr_;
  for (std::size_t w = 0; w < wpr_; ++w) total += static_cast<std::size_t>(std::popcount(p[w]));
  return total;
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  const std::uint64_t* p = bits_.data() + r * wpr_;
  for (std::size_t w = 0; w < wpr_; ++w)
    if (p[w]) return false;
  return true;
}

Bits BitMatrix::row_bits(std::size_t r) const {
  Bits v(cols_, 0);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = get(r, c) ? 1 : 0;
  return v;
}

void BitMatrix::set_row(std::size_t r, const Bits& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v[c] != 0);
}

bool BitMatrix::dot_rows(std::size_t r, const BitMatrix& other, std::size_t s) const {
  if (other.cols_ != cols_) throw std::invalid_argument("dot_rows: column mismatch");
  const std::uint64_t* a = bits_.data() + r * wpr_;
  const std::uint64_t* b = other.bits_.data() + s * other.wpr_;
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < wpr_; ++w) acc ^= a[w] & b[w];
  return (std::popcount(acc) & 1) != 0;
}

bool BitMatrix::dot_row(std::size_t r, const Bits& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dot_row: length mismatch");
  bool acc = false;
  for (std::size_t c = 0; c < cols_; ++c)
    if (v[c] && get(r, c)) acc = !acc;
  return acc;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) m.set(c, r, true);
  return m;
}

BitMatrix BitMatrix::permuted_columns(std::span<const std::size_t> source_of) const {
  if (source_of.size() != cols_) throw std::invalid_argument("permuted_columns: length mismatch");
  std::vector<bool> seen(cols_, false);
  for (std::size_t s : source_of) {
    if (s >= cols_ || seen[s]) throw std::invalid_argument("permuted_columns: not a permutation");
    seen[s] = true;
  }
  BitMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, source_of[c])) m.set(r, c, true);
  return m;
}

BitMatrix BitMatrix::sliced_rows(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw std::invalid_argument("sliced_rows: bad range");
  BitMatrix m(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r) m.xor_row_from(r - begin, *this, r);
  return m;
}

BitMatrix BitMatrix::nonzero_rows(std::vector<std::size_t>* out_index) const {
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!row_is_zero(r)) keep.push_back(r);
  BitMatrix m(keep.size(), cols_);
  for (std::size_t i = 0; i < keep.size(); ++i) m.xor_row_from(i, *this, keep[i]);
  if (out_index) *out_index = std::move(keep);
  return m;
}

BitMatrix BitMatrix::vstack(std::span<const BitMatrix> parts) {
  std::size_t total_rows = 0;
  std::size_t cols = 0;
  bool cols_known = false;
  for (const BitMatrix& p : parts) {
    total_rows += p.rows();
    if (!cols_known && (p.rows() > 0 || p.cols() > 0)) {
      cols = p.cols();
      cols_known = true;
    }
    if (cols_known && p.cols() != cols && p.rows() > 0)
      throw std::invalid_argument("vstack: column mismatch");
  }
  BitMatrix m(total_rows, cols);
  std::size_t r = 0;
  for (const BitMatrix& p : parts)
    for (std::size_t i = 0; i < p.rows(); ++i, ++r) m.xor_row_from(r, p, i);
  return m;
}

BitMatrix BitMatrix::hstack(std::span<const BitMatrix> parts) {
  std::size_t total_cols = 0;
  std::size_t rows = 0;
  bool rows_known = false;
  for (const BitMatrix& p : parts) {
    total_cols += p.cols();
    if (!rows_known) {
      rows = p.rows();
      rows_known = true;
    } else if (p.rows() != rows) {
      throw std::invalid_argument("hstack: row mismatch");
    }
  }
  BitMatrix m(rows, total_cols);
  std::size_t base = 0;
  for (const BitMatrix& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c)
        if (p.get(r, c)) m.set(r, base + c, true);
    base += p.cols();
  }
  return m;
}

BitMatrix BitMatrix::vstack(const BitMatrix& a, const BitMatrix& b) {
  const BitMatrix parts[] = {a, b};
  return vstack(std::span<const BitMatrix>(parts, 2));
}

BitMatrix BitMatrix::hstack(const BitMatrix& a, const BitMatrix& b) {
  const BitMatrix parts[] = {a, b};
  return hstack(std::span<const BitMatrix>(parts, 2));
}

std::string BitMatrix::to_string() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::size_t rank(const BitMatrix& m) {
  BitMatrix w = m;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < w.cols() && rk < w.rows(); ++c) {
    std::size_t pivot = rk;
    while (pivot < w.rows() && !w.get(pivot, c)) ++pivot;
    if (pivot == w.rows()) continue;
    w.swap_rows(rk, pivot);
    for (std::size_t r = rk + 1; r < w.rows(); ++r)
      if (w.get(r, c)) w.xor_rows(r, rk);
    ++rk;
  }
  return rk;
}

RrefResult rref(const BitMatrix& m) {
  BitMatrix w = m;
  std::vector<std::size_t> pivots;
  std::size_t done = 0;
  for (std::size_t c = 0; c < w.cols() && done < w.rows(); ++c) {
    std::size_t pivot = done;
    while (pivot < w.rows() && !w.get(pivot, c)) ++pivot;
    if (pivot == w.rows()) continue;
    w.swap_rows(done, pivot);
    for (std::size_t r = 0; r < w.rows(); ++r)
      if (r != done && w.get(r, c)) w.xor_rows(r, done);
    pivots.push_back(c);
    ++done;
  }
  return {std::move(w), std::move(pivots)};
}

BitMatrix nullspace(const BitMatrix& m) {
  const RrefResult red = rref(m);
  std::vector<std::size_t> free_cols;
  {
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (next < red.pivots.size() && red.pivots[next] == c)
        ++next;
      else
        free_cols.push_back(c);
    }
  }
  BitMatrix basis(free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    basis.set(i, fc, true);
    for (std::size_t p = 0; p < red.pivots.size(); ++p)
      if (red.matrix.get(p, fc)) basis.set(i, red.pivots[p], true);
  }
  return basis;
}

bool in_span(const BitMatrix& m, const Bits& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("in_span: length mismatch");
  const RrefResult red = rref(m);
  Bits rest = v;
  for (std::size_t p = 0; p < red.pivots.size(); ++p) {
    if (rest[red.pivots[p]]) {
      for (std::size_t c = 0; c < m.cols(); ++c) rest[c] ^= red.matrix.get(p, c) ? 1 : 0;
    }
  }
  return std::all_of(rest.begin(), rest.end(), [](std::uint8_t b) { return b == 0; });
}

namespace {

std::optional<Bits> solve_f2_impl(const BitMatrix& a, const Bits& b, bool bottom_right) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_f2: rhs length mismatch");
  BitMatrix w = a;
  Bits rhs = b;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::vector<bool> used(a.cols(), false);

  const auto process_row = [&](std::size_t r) -> bool {
    std::size_t col = a.cols();
    if (bottom_right) {
      for (std::size_t c = a.cols(); c-- > 0;)
        if (!used[c] && w.get(r, c)) {
          col = c;
          break;
        }
    } else {
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!used[c] && w.get(r, c)) {
          col = c;
          break;
        }
    }
    if (col == a.cols()) return rhs[r] == 0;  // zero row: consistent iff rhs is 0
    used[col] = true;
    pivots.emplace_back(r, col);
    for (std::size_t r2 = 0; r2 < a.rows(); ++r2) {
      if (r2 != r && w.get(r2, col)) {
        w.xor_rows(r2, r);
        rhs[r2] ^= rhs[r];
      }
    }
    return true;
  };

  if (bottom_right) {
    for (std::size_t r = a.rows(); r-- > 0;)
      if (!process_row(r)) return std::nullopt;
  } else {
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!process_row(r)) return std::nullopt;
  }

  Bits x(a.cols(), 0);
  for (const auto& [r, c] : pivots) x[c] = rhs[r];
  return x;
}

}  // namespace

std::optional<Bits> solve_f2(const BitMatrix& a, const Bits& b) {
  return solve_f2_impl(a, b, /*bottom_right=*/false);
}

std::optional<Bits> solve_f2_bottom_right(const BitMatrix& a, const Bits& b) {
  return solve_f2_impl(a, b, /*bottom_right=*/true);
}

Bits mat_vec_f2(const BitMatrix& a, const Bits& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("mat_vec_f2: length mismatch");
  Bits y(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) y[r] = a.dot_row(r, x) ? 1 : 0;
  return y;
}

}  // namespace divtower
