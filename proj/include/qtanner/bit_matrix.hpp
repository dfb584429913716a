#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtanner/types.hpp"

namespace qtanner {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Dense GF(2) row vector, bit-packed little-endian: bit c lives in
// word c/64 at position c%64. Trailing bits past size() are kept zero.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), w_(words_for(size), 0) {}

  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        v.set(i, true);
      else if (bits[i] != '0')
        throw input_error("BitVector: bit string must contain only 0/1");
    }
    return v;
  }

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool b) {
    const Word mask = Word{1} << (i % kWordBits);
    if (b)
      w_[i / kWordBits] |= mask;
    else
      w_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { w_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::span<const Word> words() const { return w_; }
  std::span<Word> words() { return w_; }

  void xor_in(const BitVector& o) {
    if (o.size_ != size_) throw input_error("BitVector: xor size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (Word x : w_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
  }

  bool is_zero() const {
    return std::all_of(w_.begin(), w_.end(), [](Word x) { return x == 0; });
  }

  bool dot_parity(const BitVector& o) const {
    if (o.size_ != size_) throw input_error("BitVector: dot size mismatch");
    Word acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1u;
  }

  std::string str() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

private:
  std::size_t size_ = 0;
  std::vector<Word> w_;
};

// Dense GF(2) matrix with word-packed rows (row-major, machine-word stride).
// 0 x n and n x 0 shapes are valid. All free-function operations below are
// pure: inputs are never observably mutated, so values are freely shared
// across worker threads.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  // Rows as 0/1 strings, e.g. {"100011", "010101"}. All rows same length.
  static BitMatrix from_strings(const std::vector<std::string>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw input_error("BitMatrix: ragged row strings");
      for (std::size_t j = 0; j < c; ++j) {
        if (rows[i][j] == '1')
          m.set(i, j, true);
        else if (rows[i][j] != '0')
          throw input_error("BitMatrix: bit string must contain only 0/1");
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row(r)[c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool b) {
    const Word mask = Word{1} << (c % kWordBits);
    if (b)
      row(r)[c / kWordBits] |= mask;
    else
      row(r)[c / kWordBits] &= ~mask;
  }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * wpr_, wpr_}; }

  void xor_rows(std::size_t dst, std::size_t src) {
    Word* d = data_.data() + dst * wpr_;
    const Word* s = data_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    Word* pa = data_.data() + a * wpr_;
    Word* pb = data_.data() + b * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
  }

  std::size_t row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (Word x : row(r)) w += static_cast<std::size_t>(std::popcount(x));
    return w;
  }

  BitVector row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy(row(r).begin(), row(r).end(), v.words().begin());
    return v;
  }

  void set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw input_error("BitMatrix: set_row length mismatch");
    std::copy(v.words().begin(), v.words().end(), row(r).begin());
  }

  bool row_is_zero(std::size_t r) const {
    for (Word x : row(r))
      if (x) return false;
    return true;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  // Lexicographic order: by shape, then row-major over bits with earlier
  // columns more significant and '0' < '1'. Canonical orderings (code dedup,
  // multiset normal forms) rely on this being total and platform-stable.
  friend std::strong_ordering operator<=>(const BitMatrix& a, const BitMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      const Word x = a.data_[i], y = b.data_[i];
      if (x != y) {
        // lowest differing bit = earliest differing column
        const Word diff = x ^ y;
        const int bit = std::countr_zero(diff);
        return ((x >> bit) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
      s += '\n';
    }
    return s;
  }

private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<Word> data_;
};

// ---------------------------------------------------------------------------
// Elementary operations

inline BitMatrix transpose(const BitMatrix& m) {
  BitMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    for (std::size_t w = 0; w < row.size(); ++w) {
      Word x = row[w];
      while (x) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
        t.set(c, r, true);
        x &= x - 1;
      }
    }
  }
  return t;
}

inline BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw input_error("multiply: inner dimensions disagree");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto row = a.row(r);
    auto dst = out.row(r);
    for (std::size_t w = 0; w < row.size(); ++w) {
      Word x = row[w];
      while (x) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
        const auto src = b.row(c);
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
        x &= x - 1;
      }
    }
  }
  return out;
}

// M * v^T as a column vector of length rows(M).
inline BitVector mul_vec(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw input_error("mul_vec: length mismatch");
  BitVector out(m.rows());
  const auto vw = v.words();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    Word acc = 0;
    for (std::size_t i = 0; i < row.size(); ++i) acc ^= row[i] & vw[i];
    if (std::popcount(acc) & 1u) out.set(r, true);
  }
  return out;
}

inline BitMatrix stack_vertical(const std::vector<BitMatrix>& parts) {
  if (parts.empty()) return {};
  const std::size_t cols = parts[0].cols();
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw input_error("stack_vertical: column counts disagree");
    rows += p.rows();
  }
  BitMatrix out(rows, cols);
  std::size_t at = 0;
  for (const auto& p : parts)
    for (std::size_t r = 0; r < p.rows(); ++r, ++at)
      std::copy(p.row(r).begin(), p.row(r).end(), out.row(at).begin());
  return out;
}

// Column c of the input lands at column perm[c] of the output.
inline BitMatrix apply_column_permutation(const BitMatrix& m,
                                          std::span<const std::uint32_t> perm) {
  if (perm.size() != m.cols()) throw input_error("apply_column_permutation: size mismatch");
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    for (std::size_t w = 0; w < row.size(); ++w) {
      Word x = row[w];
      while (x) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
        out.set(r, perm[c], true);
        x &= x - 1;
      }
    }
  }
  return out;
}

// Kronecker product: output column (i*cols(B) + j) pairs column i of A with
// column j of B; same convention on rows. This matches the (i, j) grid
// indexing of base codes, extended to (i, j, g) with g fastest in the lift.
inline BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      if (!a.get(ra, ca)) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb) {
        const std::size_t r = ra * b.rows() + rb;
        const auto src = b.row(rb);
        for (std::size_t w = 0; w < src.size(); ++w) {
          Word x = src[w];
          while (x) {
            const std::size_t cb = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
            out.set(r, ca * b.cols() + cb, true);
            x &= x - 1;
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

struct RrefResult {
  BitMatrix r;                       // exactly rank rows, zero rows dropped
  std::vector<std::size_t> pivots;   // strictly increasing column indices
};

// Unique reduced row-echelon form of the row space. Pivot selection scans
// columns left to right, taking the topmost available row.
inline RrefResult rref(const BitMatrix& m) {
  BitMatrix w = m;
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < w.cols() && next < w.rows(); ++c) {
    std::size_t p = next;
    while (p < w.rows() && !w.get(p, c)) ++p;
    if (p == w.rows()) continue;
    w.swap_rows(next, p);
    for (std::size_t r = 0; r < w.rows(); ++r)
      if (r != next && w.get(r, c)) w.xor_rows(r, next);
    pivots.push_back(c);
    ++next;
  }
  BitMatrix out(pivots.size(), w.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    std::copy(w.row(r).begin(), w.row(r).end(), out.row(r).begin());
  return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

// Canonical kernel basis from the RREF free columns: one row per free
// column f (ascending), with a 1 at f and the RREF column f above pivots.
inline BitMatrix kernel_basis(const BitMatrix& m) {
  const RrefResult rr = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  BitMatrix out(n - rr.pivots.size(), n);
  std::size_t at = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    out.set(at, f, true);
    for (std::size_t t = 0; t < rr.pivots.size(); ++t)
      if (rr.r.get(t, f)) out.set(at, rr.pivots[t], true);
    ++at;
  }
  return out;
}

// Cached RREF for repeated membership queries against one row space.
// Immutable once built; safe to query concurrently.
class RowSpace {
public:
  RowSpace() = default;
  explicit RowSpace(const BitMatrix& m) : cols_(m.cols()), rr_(rref(m)) {}

  std::size_t dim() const { return rr_.pivots.size(); }
  std::size_t cols() const { return cols_; }
  const BitMatrix& basis() const { return rr_.r; }

  bool contains(const BitVector& v) const {
    if (v.size() != cols_) throw input_error("RowSpace: vector length mismatch");
    BitVector w = v;
    reduce(w);
    return w.is_zero();
  }

  // Reduces v by the pivot rows in place (v mod the row space).
  void reduce(BitVector& v) const {
    for (std::size_t t = 0; t < rr_.pivots.size(); ++t)
      if (v.get(rr_.pivots[t])) {
        auto vw = v.words();
        const auto rw = rr_.r.row(t);
        for (std::size_t i = 0; i < rw.size(); ++i) vw[i] ^= rw[i];
      }
  }

private:
  std::size_t cols_ = 0;
  RrefResult rr_;
};

inline bool row_space_contains(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw input_error("row_space_contains: length mismatch");
  return RowSpace(m).contains(v);
}

// Basis of rowspace(A) ∩ rowspace(B) via the Zassenhaus block trick:
// rref([A|A; B|0]); rows whose left half vanished carry the intersection in
// their right half, already in reduced echelon form.
inline BitMatrix intersect_row_spaces(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw input_error("intersect_row_spaces: column mismatch");
  const std::size_t n = a.cols();
  BitMatrix block(a.rows() + b.rows(), 2 * n);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a.get(r, c)) {
        block.set(r, c, true);
        block.set(r, n + c, true);
      }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (b.get(r, c)) block.set(a.rows() + r, c, true);
  const RrefResult rr = rref(block);
  std::size_t first = 0;
  while (first < rr.pivots.size() && rr.pivots[first] < n) ++first;
  BitMatrix out(rr.pivots.size() - first, n);
  for (std::size_t r = first; r < rr.pivots.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rr.r.get(r, n + c)) out.set(r - first, c, true);
  return out;
}

}  // namespace qtanner
