#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grasscw {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  bool is_zero() const {
    for (auto x : data)
      if (x) return false;
    return true;
  }
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const auto x = a(i, k);
      if (!x) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

namespace detail {

inline bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}
inline bool checked_sub(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return !__builtin_sub_overflow(a, b, &out);
}
inline bool checked_mul(const BigInt& a, const BigInt& b, BigInt& out) {
  out = a * b;
  return true;
}
inline bool checked_sub(const BigInt& a, const BigInt& b, BigInt& out) {
  out = a - b;
  return true;
}

template <class T>
T abs_value(const T& x) {
  return x < 0 ? T(-x) : x;
}

// Returns nullopt on overflow. Diagonalizes with smallest-pivot strategy,
// then fixes divisibility on the diagonal.
template <class T>
std::optional<std::vector<T>> smith_diagonal(std::vector<std::vector<T>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<T> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero pivot in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (pr == rows || abs_value(m[r][c]) < abs_value(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        const T q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) {
          T prod;
          if (!checked_mul(q, m[t][c], prod) || !checked_sub(m[r][c], prod, m[r][c])) return std::nullopt;
        }
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        const T q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) {
          T prod;
          if (!checked_mul(q, m[r][t], prod) || !checked_sub(m[r][c], prod, m[r][c])) return std::nullopt;
        }
        if (m[t][c] != 0) {
          for (auto& row : m) std::swap(row[t], row[c]);
          clean = false;
        }
      }
    }
    diag.push_back(abs_value(m[t][t]));
    ++t;
  }
  // Enforce d1 | d2 | ... via gcd/lcm on pairs.
  for (std::size_t a = 0; a < diag.size(); ++a)
    for (std::size_t b = a + 1; b < diag.size(); ++b) {
      T x = diag[a], y = diag[b];
      T g = x, h = y;
      while (h != 0) {
        T r = g % h;
        g = h;
        h = r;
      }
      if (g == x) continue;
      T l;
      if (!checked_mul(x / g, y, l)) return std::nullopt;
      diag[a] = g;
      diag[b] = l;
    }
  return diag;
}

}  // namespace detail

// Nonzero invariant factors d1 | d2 | ... of an integer matrix.
inline std::vector<BigInt> smith_normal_form(const IntMatrix& a) {
  std::vector<std::vector<std::int64_t>> m(a.rows, std::vector<std::int64_t>(a.cols));
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) m[r][c] = a(r, c);
  if (auto d = detail::smith_diagonal(m)) {
    std::vector<BigInt> out;
    for (auto x : *d) out.emplace_back(x);
    return out;
  }
  std::vector<std::vector<BigInt>> big(a.rows, std::vector<BigInt>(a.cols));
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) big[r][c] = a(r, c);
  return *detail::smith_diagonal(big);
}

// Rank over the field with two elements.
inline int rank_mod2(const IntMatrix& a) {
  const int words = (a.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(a.rows, std::vector<std::uint64_t>(words, 0));
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c)
      if (a(r, c) & 1) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
  int rank = 0;
  for (int c = 0; c < a.cols && rank < a.rows; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    int piv = -1;
    for (int r = rank; r < a.rows; ++r)
      if (rows[r][c / 64] & bit) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int r = 0; r < a.rows; ++r)
      if (r != rank && (rows[r][c / 64] & bit))
        for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
    ++rank;
  }
  return rank;
}

}  // namespace grasscw
