#ifndef LPWR_LINALG_HPP
#define LPWR_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpwr {

/// Exact dense linear algebra over any field-like type K providing
/// +, -, *, unary -, inverse(), is_zero() and ==.  Everything here is
/// straightforward Gaussian elimination; the matrices in this library are
/// desk-scale and exactness matters more than speed.
template <class K>
using DenseMatrix = std::vector<std::vector<K>>;

template <class K>
std::size_t row_reduce(DenseMatrix<K>& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    K inv = m[rank][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      K f = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

template <class K>
std::size_t rank(DenseMatrix<K> m) {
  return row_reduce(m);
}

/// Solves A x = b; returns nullopt when the system is inconsistent.  When the
/// solution is not unique an arbitrary solution (free variables = 0) is
/// returned.
template <class K>
std::optional<std::vector<K>> solve(DenseMatrix<K> a, std::vector<K> b,
                                    const K& zero) {
  std::size_t rows = a.size();
  if (rows != b.size()) throw std::invalid_argument("solve: shape mismatch");
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::size_t rank = row_reduce(a);
  // inconsistent iff some reduced row is (0 ... 0 | nonzero)
  for (std::size_t i = rank; i < rows; ++i)
    if (!a[i][cols].is_zero()) return std::nullopt;
  std::vector<K> x(cols, zero);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t lead = 0;
    while (lead < cols && a[i][lead].is_zero()) ++lead;
    if (lead == cols) continue;
    x[lead] = a[i][cols];
    for (std::size_t j = lead + 1; j < cols; ++j)
      if (!a[i][j].is_zero()) x[lead] = x[lead] - a[i][j] * x[j];
  }
  // back-substitution above assumed reduced row echelon form, which
  // row_reduce produces (pivots normalized, eliminated both directions)
  return x;
}

/// Sparse vector keyed by strings; the common coordinate format used when
/// ranking families of algebra elements against a canonical basis.
template <class K>
using CoordVec = std::map<std::string, K>;

template <class K>
std::size_t coord_rank(const std::vector<CoordVec<K>>& vecs, const K& zero) {
  std::map<std::string, std::size_t> keys;
  for (const auto& v : vecs)
    for (const auto& [k, s] : v) keys.emplace(k, 0);
  std::size_t col = 0;
  for (auto& [k, idx] : keys) idx = col++;
  DenseMatrix<K> m(vecs.size(), std::vector<K>(keys.size(), zero));
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (const auto& [k, s] : vecs[i]) m[i][keys[k]] = s;
  return row_reduce(m);
}

/// Incremental exact span: tracks a row-reduced basis of inserted vectors.
template <class K>
class SpanBuilder {
public:
  explicit SpanBuilder(K zero) : zero_(std::move(zero)) {}

  /// Reduces v against the basis; inserts the remainder if nonzero.
  /// Returns true when v enlarged the span.
  bool insert(CoordVec<K> v) {
    reduce(v);
    if (v.empty()) return false;
    // normalize on the leading key
    K inv = v.begin()->second.inverse();
    for (auto& [k, s] : v) s = s * inv;
    basis_.emplace(v.begin()->first, std::move(v));
    return true;
  }

  bool contains(CoordVec<K> v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t dimension() const { return basis_.size(); }

private:
  void reduce(CoordVec<K>& v) const {
    while (!v.empty()) {
      auto it = basis_.find(v.begin()->first);
      if (it == basis_.end()) return;
      K f = v.begin()->second;
      for (const auto& [k, s] : it->second) {
        auto [pos, inserted] = v.emplace(k, zero_);
        pos->second = pos->second - f * s;
        if (pos->second.is_zero()) v.erase(pos);
      }
    }
  }

  K zero_;
  std::map<std::string, CoordVec<K>> basis_; // leading key -> reduced row
};

} // namespace lpwr

#endif
