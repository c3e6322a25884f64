#pragma once

#include "edr/literal.hpp"
#include "edr/ring.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace edr {

/// Dense row-major matrix over a single ring.
class RingMatrix {
 public:
  RingMatrix() = default;

  RingMatrix(RingDescriptor ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, zero(ring_)) {}

  RingMatrix(RingDescriptor ring, std::size_t rows, std::size_t cols,
             std::vector<RingElement> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) fail(ErrorCode::PreconditionFailed, "entry count mismatch");
    for (const auto& e : entries_) {
      if (!(e.ring() == ring_)) fail(ErrorCode::DescriptorMismatch, "matrix entry from another ring");
    }
  }

  static RingMatrix identity(const RingDescriptor& ring, std::size_t n) {
    RingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one(ring);
    return m;
  }

  /// Builds from nested rows of integers mapped into `ring`.
  static RingMatrix from_integers(const RingDescriptor& ring,
                                  const std::vector<std::vector<long>>& rows) {
    RingMatrix m(ring, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = RingElement(ring, rows[i].at(j));
    }
    return m;
  }

  const RingDescriptor& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  RingElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const RingElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<RingElement>& entries() const { return entries_; }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  RingDescriptor ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingElement> entries_;
};

inline RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::PreconditionFailed, "matrix shapes do not chain");
  if (!(a.ring() == b.ring())) fail(ErrorCode::DescriptorMismatch, "matrices over different rings");
  RingMatrix c(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

inline bool is_diagonal(const RingMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !m.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

/// Division-free determinant valid over any commutative ring. Expands row by
/// row over subsets of used columns, so the cost is O(n * 2^n) ring ops.
inline RingElement determinant(const RingMatrix& m) {
  if (!m.square()) fail(ErrorCode::PreconditionFailed, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 16) fail(ErrorCode::ScaleExceeded, "determinant limited to 16x16");
  if (n == 0) return one(m.ring());
  const std::uint32_t full = (1u << n) - 1;
  std::vector<RingElement> partial(std::size_t{1} << n, zero(m.ring()));
  partial[0] = one(m.ring());
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (partial[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcount(mask));
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (1u << col)) continue;
      const auto& entry = m.at(row, col);
      if (entry.is_zero()) continue;
      // earlier rows sitting in later columns are the inversions this adds
      const int inversions = __builtin_popcount(mask >> (col + 1));
      RingElement term = partial[mask] * entry;
      auto& slot = partial[mask | (1u << col)];
      slot = (inversions & 1) ? slot - term : slot + term;
    }
  }
  return partial[full];
}

inline RingMatrix submatrix(const RingMatrix& m, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
  RingMatrix s(m.ring(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(rows[i], cols[j]);
  }
  return s;
}

/// Component i of a matrix over a product ring.
inline RingMatrix project(const RingMatrix& m, std::size_t i) {
  const auto& factor = m.ring().factors().at(i);
  RingMatrix out(factor, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).components()[i];
  }
  return out;
}

/// Inverse of `project`: glues per-factor matrices of equal shape.
inline RingMatrix assemble(const RingDescriptor& ring, const std::vector<RingMatrix>& parts) {
  RingMatrix out(ring, parts.at(0).rows(), parts.at(0).cols());
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      std::vector<RingElement> comps;
      for (const auto& p : parts) comps.push_back(p.at(r, c));
      out.at(r, c) = RingElement::tuple(ring, std::move(comps));
    }
  }
  return out;
}

inline RingElement assemble(const RingDescriptor& ring, std::vector<RingElement> parts) {
  return RingElement::tuple(ring, std::move(parts));
}

/// Matrix text format:
///   ring: <descriptor>
///   shape: <m> <n>
///   m lines of n whitespace-separated element literals
inline RingMatrix parse_matrix_text(std::string_view text) {
  LiteralReader r(text);
  auto skip_blank = [&] {
    while (!r.at_end() && (r.consume(' ') || r.consume('\t') || r.consume('\r'))) {
    }
  };
  auto end_line = [&] {
    skip_blank();
    if (!r.at_end() && !r.consume('\n')) r.error("expected end of line");
  };
  if (!r.consume_word("ring: ")) r.error("expected 'ring: '");
  RingDescriptor ring = r.read_descriptor();
  end_line();
  if (!r.consume_word("shape: ")) r.error("expected 'shape: '");
  std::size_t rows = r.read_size();
  if (!r.consume(' ')) r.error("expected space");
  std::size_t cols = r.read_size();
  if (rows == 0 || cols == 0) r.error("matrix dimensions must be positive");
  end_line();
  RingMatrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      skip_blank();
      m.at(i, j) = r.read_element(ring);
    }
    end_line();
  }
  r.skip_space();
  if (!r.at_end()) r.error("unexpected trailing input");
  return m;
}

inline std::string format_matrix_text(const RingMatrix& m) {
  std::ostringstream out;
  out << "ring: " << m.ring().to_string() << "\n";
  out << "shape: " << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << to_literal(m.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace edr
