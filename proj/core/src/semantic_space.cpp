#include "semlink/semantic_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <locale>
#include <sstream>

#include "semlink/error.hpp"

namespace semlink {

DenseVector::DenseVector(std::size_t dim) : c_(dim, 0.0) {
  if (dim == 0) throw DimensionError("vector dimension must be positive");
}

DenseVector::DenseVector(std::vector<double> components) : c_(std::move(components)) {
  if (c_.empty()) throw DimensionError("vector dimension must be positive");
}

DenseVector::DenseVector(std::initializer_list<double> components)
    : DenseVector(std::vector<double>(components)) {}

DenseVector DenseVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw DimensionError("basis index " + std::to_string(index) + " out of range for dim " +
                         std::to_string(dim));
  }
  DenseVector v(dim);
  v.c_[index] = 1.0;
  return v;
}

namespace {

void require_same_dim(const DenseVector& u, const DenseVector& v) {
  if (u.dim() != v.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                         std::to_string(v.dim()));
  }
}

}  // namespace

DenseVector& DenseVector::operator+=(const DenseVector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

DenseVector operator-(const DenseVector& a, const DenseVector& b) {
  require_same_dim(a, b);
  DenseVector out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

DenseVector operator*(double alpha, const DenseVector& v) {
  DenseVector out = v;
  for (double& x : out.c_) x *= alpha;
  return out;
}

std::string DenseVector::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", c_[i]);
    out += buf;
  }
  return out + "]";
}

double inner_product(const DenseVector& u, const DenseVector& v) {
  require_same_dim(u, v);
  double acc = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i] * v[i];
  return acc;
}

double norm(const DenseVector& v) { return std::sqrt(inner_product(v, v)); }

double distance(const DenseVector& u, const DenseVector& v) { return norm(u - v); }

double cosine_similarity(const DenseVector& u, const DenseVector& v) {
  require_same_dim(u, v);
  const double nu = norm(u);
  const double nv = norm(v);
  if (nu == 0.0 || nv == 0.0) {
    throw UndefinedSimilarityError("cosine similarity is undefined for a zero vector");
  }
  // Rounding can push |cos| a hair past 1 for parallel vectors.
  return std::clamp(inner_product(u, v) / (nu * nv), -1.0, 1.0);
}

WordVector word_vector(const std::map<std::size_t, double>& coeffs, std::size_t dim,
                       std::string word) {
  DenseVector v(dim);
  for (const auto& [index, alpha] : coeffs) {
    if (index >= dim) {
      throw DimensionError("basis index " + std::to_string(index) + " out of range for dim " +
                           std::to_string(dim));
    }
    v[index] += alpha;
  }
  return WordVector{std::move(word), std::move(v)};
}

DenseVector parse_vector(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string field = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::size_t b = field.find_first_not_of(" \t");
    std::size_t e = field.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError(pos, "empty vector component");
    field = field.substr(b, e - b + 1);
    std::istringstream in(field);
    in.imbue(std::locale::classic());
    double x = 0.0;
    if (!(in >> x) || !in.eof()) throw ParseError(pos + b, "bad number '" + field + "'");
    out.push_back(x);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return DenseVector(std::move(out));
}

}  // namespace semlink
