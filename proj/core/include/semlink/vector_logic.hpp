#pragma once

// Vector logic: truth values as orthonormal 2-vectors and n-ary logical
// operators as 2 x 2^n matrices acting on Kronecker products of them.
//
// Conventions used throughout:
//   * true  -> s = [1,0]^T, false -> n = [0,1]^T
//   * an n-tuple (t_1..t_n) is encoded as h(t_1) (x) ... (x) h(t_n); its
//     single nonzero component sits at column index
//         sum_i (1 - t_i) * 2^(n-i)
//     so column 0 is the all-true tuple and enumeration descends
//     lexicographically with 1 before 0.
//   * all entries are exact integers.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semlink/term.hpp"

namespace semlink {

inline constexpr std::size_t kDefaultArityCap = 20;

using Bit = std::uint8_t;

/// One-hot truth vector; only obtainable through embed_truth or a checked
/// conversion, so it always holds s or n.
class TruthVec {
 public:
  /// Throws OffImageError unless (a, b) is (1,0) or (0,1).
  static TruthVec from_components(std::int64_t a, std::int64_t b);

  std::int64_t operator[](std::size_t i) const { return components_[i]; }
  const std::array<std::int64_t, 2>& components() const noexcept { return components_; }

  std::string to_string() const;

  friend bool operator==(const TruthVec&, const TruthVec&) = default;

 private:
  explicit TruthVec(std::array<std::int64_t, 2> c) : components_(c) {}
  friend TruthVec embed_truth(bool);

  std::array<std::int64_t, 2> components_;
};

/// h_t: 1 -> [1,0]^T, 0 -> [0,1]^T.
TruthVec embed_truth(bool t);
/// Left inverse of embed_truth.
bool project_truth(const TruthVec& v);
/// Left inverse on arbitrary real 2-vectors; throws OffImageError unless the
/// input is exactly [1,0] or [0,1].
bool project_truth(std::span<const double> v);

/// Kronecker product of two vectors; dim = dim(u) * dim(v).
template <typename T>
std::vector<T> kron(std::span<const T> u, std::span<const T> v) {
  std::vector<T> out;
  out.reserve(u.size() * v.size());
  for (const T& a : u) {
    for (const T& b : v) out.push_back(a * b);
  }
  return out;
}

template <typename T>
std::vector<T> kron(const std::vector<T>& u, const std::vector<T>& v) {
  return kron<T>(std::span<const T>(u), std::span<const T>(v));
}

/// Left fold of kron over the embedded inputs: h(t_1) (x) ... (x) h(t_n).
std::vector<std::int64_t> kron_fold(std::span<const TruthVec> inputs);

/// Column index of an input tuple in operator-matrix order.
std::size_t column_index(std::span<const Bit> inputs);
/// Inverse of column_index.
std::vector<Bit> column_inputs(std::size_t column, std::size_t arity);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionError for ragged rows.
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  /// u v^T
  static IntMatrix outer(std::span<const std::int64_t> u, std::span<const std::int64_t> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::int64_t> operator*(std::span<const std::int64_t> v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

  /// One row per line, entries separated by single spaces.
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Truth table of an n-ary boolean operator, outputs stored in column order.
class TruthTable {
 public:
  /// Throws DimensionError unless outputs.size() == 2^arity, arity >= 1.
  TruthTable(std::size_t arity, std::vector<Bit> outputs);

  /// Parses a 2^n-character string of '0'/'1' in column order ("1000" is AND).
  /// When `arity` is 0 it is inferred from the length.
  static TruthTable from_bitstring(std::string_view bits, std::size_t arity = 0);

  template <typename F>
  static TruthTable from_function(std::size_t arity, F&& f) {
    std::vector<Bit> out(std::size_t{1} << arity);
    for (std::size_t j = 0; j < out.size(); ++j) {
      std::vector<Bit> in = column_inputs(j, arity);
      out[j] = f(std::span<const Bit>(in)) ? 1 : 0;
    }
    return TruthTable(arity, std::move(out));
  }

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Bit>& outputs() const noexcept { return outputs_; }
  bool operator()(std::span<const Bit> inputs) const;
  std::string to_bitstring() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::size_t arity_;
  std::vector<Bit> outputs_;
};

/// Classical truth table of a named connective.
TruthTable connective_table(Connective op);

/// 2 x 2^n operator matrix whose columns are one-hot.
class OpMatrix {
 public:
  /// Throws DimensionError for a wrong shape, OffImageError for a column
  /// that is not [1,0] or [0,1].
  explicit OpMatrix(IntMatrix m);

  std::size_t arity() const noexcept { return arity_; }
  const IntMatrix& matrix() const noexcept { return m_; }
  std::string to_string() const { return m_.to_string(); }

  friend bool operator==(const OpMatrix&, const OpMatrix&) = default;

 private:
  IntMatrix m_;
  std::size_t arity_;
};

/// Recipe M = sum_j h(m_j) e_j^T. Throws ArityError above `arity_cap`.
OpMatrix synth_operator(const TruthTable& table, std::size_t arity_cap = kDefaultArityCap);

/// M . (h(t_1) (x) ... (x) h(t_n)). Throws ArityError on a length mismatch.
TruthVec apply_operator(const OpMatrix& m, std::span<const TruthVec> inputs);

/// Operators built from the displayed constructions: outer-product sums for
/// NOT, AND, OR, IFF; IMPLIES = D (N (x) I); XOR = N E; COND as tabulated.
OpMatrix named_operator(Connective kind);

/// Strict majority (ties -> 0) over n inputs. Throws ArityError above the cap
/// or for n == 0.
OpMatrix majority_matrix(std::size_t n, std::size_t arity_cap = kDefaultArityCap);

/// Boolean polynomial expansion of strict majority:
///   sum_{k > n/2} sum_{|I| = k} prod_{i in I} t_i prod_{j not in I} (1 - t_j)
/// Throws ArityError when inputs.size() != n.
bool majority_polynomial(std::size_t n, std::span<const Bit> inputs);

}  // namespace semlink
