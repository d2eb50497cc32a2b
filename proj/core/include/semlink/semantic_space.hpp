#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace semlink {

/// Finite-dimensional real vector (64-bit floats).
class DenseVector {
 public:
  DenseVector() = default;
  /// Throws DimensionError for dim == 0.
  explicit DenseVector(std::size_t dim);
  explicit DenseVector(std::vector<double> components);
  DenseVector(std::initializer_list<double> components);

  /// Standard basis vector e_index in R^dim.
  static DenseVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  std::span<const double> components() const noexcept { return c_; }

  DenseVector& operator+=(const DenseVector& other);
  friend DenseVector operator+(DenseVector a, const DenseVector& b) { return a += b; }
  friend DenseVector operator-(const DenseVector& a, const DenseVector& b);
  friend DenseVector operator*(double alpha, const DenseVector& v);

  /// "[1,0,0]"
  std::string to_string() const;

  friend bool operator==(const DenseVector&, const DenseVector&) = default;
  friend auto operator<=>(const DenseVector& a, const DenseVector& b) {
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(),
                                                  b.c_.end(), std::compare_weak_order_fallback);
  }

 private:
  std::vector<double> c_;
};

struct WordVector {
  std::string word;
  DenseVector vector;
};

/// Throws DimensionError on mismatched dimensions.
double inner_product(const DenseVector& u, const DenseVector& v);
double norm(const DenseVector& v);
double distance(const DenseVector& u, const DenseVector& v);
/// <u,v> / (|u| |v|). Throws UndefinedSimilarityError if either is zero.
double cosine_similarity(const DenseVector& u, const DenseVector& v);

/// sum_i alpha_i b_i over the standard basis of R^dim.
/// Throws DimensionError for an index >= dim.
WordVector word_vector(const std::map<std::size_t, double>& coeffs, std::size_t dim,
                       std::string word = {});

/// Parses "1,0.5,-2" (whitespace tolerated). Throws ParseError.
DenseVector parse_vector(const std::string& text);

}  // namespace semlink
