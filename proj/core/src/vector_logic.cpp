#include "semlink/vector_logic.hpp"

#include <bit>

#include "semlink/error.hpp"

namespace semlink {

// --- Truth vectors ---------------------------------------------------------

TruthVec TruthVec::from_components(std::int64_t a, std::int64_t b) {
  if (!((a == 1 && b == 0) || (a == 0 && b == 1))) {
    throw OffImageError("[" + std::to_string(a) + "," + std::to_string(b) +
                        "] is not a truth vector");
  }
  return TruthVec({a, b});
}

std::string TruthVec::to_string() const {
  return "[" + std::to_string(components_[0]) + "," + std::to_string(components_[1]) + "]";
}

TruthVec embed_truth(bool t) { return t ? TruthVec({1, 0}) : TruthVec({0, 1}); }

bool project_truth(const TruthVec& v) { return v[0] == 1; }

bool project_truth(std::span<const double> v) {
  if (v.size() != 2) throw OffImageError("truth vectors are 2-dimensional");
  if (v[0] == 1.0 && v[1] == 0.0) return true;
  if (v[0] == 0.0 && v[1] == 1.0) return false;
  throw OffImageError("[" + std::to_string(v[0]) + "," + std::to_string(v[1]) +
                      "] is outside the image of h_t");
}

std::vector<std::int64_t> kron_fold(std::span<const TruthVec> inputs) {
  std::vector<std::int64_t> acc{1};
  for (const auto& t : inputs) {
    acc = kron<std::int64_t>(acc, std::span<const std::int64_t>(t.components()));
  }
  return acc;
}

std::size_t column_index(std::span<const Bit> inputs) {
  std::size_t j = 0;
  for (Bit t : inputs) j = (j << 1) | (t ? 0u : 1u);
  return j;
}

std::vector<Bit> column_inputs(std::size_t column, std::size_t arity) {
  std::vector<Bit> out(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    out[i] = ((column >> (arity - 1 - i)) & 1u) ? 0 : 1;
  }
  return out;
}

// --- IntMatrix -------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::outer(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  IntMatrix m(u.size(), v.size());
  for (std::size_t r = 0; r < u.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = u[r] * v[c];
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::operator*(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) {
    throw DimensionError("matrix with " + std::to_string(cols_) +
                         " columns applied to a vector of length " + std::to_string(v.size()));
  }
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t ar = 0; ar < a.rows_; ++ar) {
    for (std::size_t ac = 0; ac < a.cols_; ++ac) {
      const std::int64_t x = a(ar, ac);
      for (std::size_t br = 0; br < b.rows_; ++br) {
        for (std::size_t bc = 0; bc < b.cols_; ++bc) {
          out(ar * b.rows_ + br, ac * b.cols_ + bc) = x * b(br, bc);
        }
      }
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += std::to_string((*this)(r, c));
    }
    out += '\n';
  }
  return out;
}

// --- TruthTable ------------------------------------------------------------

TruthTable::TruthTable(std::size_t arity, std::vector<Bit> outputs)
    : arity_(arity), outputs_(std::move(outputs)) {
  if (arity_ == 0) throw DimensionError("truth table needs arity >= 1");
  if (arity_ >= 8 * sizeof(std::size_t) - 1 || outputs_.size() != (std::size_t{1} << arity_)) {
    throw DimensionError("truth table of arity " + std::to_string(arity_) + " needs 2^" +
                         std::to_string(arity_) + " outputs, got " +
                         std::to_string(outputs_.size()));
  }
  for (Bit b : outputs_) {
    if (b > 1) throw DimensionError("truth table outputs must be 0 or 1");
  }
}

TruthTable TruthTable::from_bitstring(std::string_view bits, std::size_t arity) {
  if (bits.empty()) throw DimensionError("empty truth-table bitstring");
  if (arity == 0) {
    if (!std::has_single_bit(bits.size()) || bits.size() < 2) {
      throw DimensionError("bitstring length " + std::to_string(bits.size()) +
                           " is not a power of two >= 2");
    }
    arity = static_cast<std::size_t>(std::countr_zero(bits.size()));
  }
  std::vector<Bit> out;
  out.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.push_back(1);
    } else if (bits[i] == '0') {
      out.push_back(0);
    } else {
      throw ParseError(i, std::string("expected '0' or '1' in truth table, found '") + bits[i] +
                              "'");
    }
  }
  return TruthTable(arity, std::move(out));
}

bool TruthTable::operator()(std::span<const Bit> inputs) const {
  if (inputs.size() != arity_) {
    throw ArityError("truth table of arity " + std::to_string(arity_) + " given " +
                     std::to_string(inputs.size()) + " inputs");
  }
  return outputs_[column_index(inputs)] != 0;
}

std::string TruthTable::to_bitstring() const {
  std::string out;
  out.reserve(outputs_.size());
  for (Bit b : outputs_) out += b ? '1' : '0';
  return out;
}

TruthTable connective_table(Connective op) {
  return TruthTable::from_function(connective_arity(op), [op](std::span<const Bit> in) {
    bool buf[3] = {};
    for (std::size_t i = 0; i < in.size(); ++i) buf[i] = in[i] != 0;
    switch (op) {
      case Connective::Not:
        return !buf[0];
      case Connective::And:
        return buf[0] && buf[1];
      case Connective::Or:
        return buf[0] || buf[1];
      case Connective::Implies:
        return !buf[0] || buf[1];
      case Connective::Iff:
        return buf[0] == buf[1];
      case Connective::Xor:
        return buf[0] != buf[1];
      case Connective::Cond:
        return buf[0] ? buf[1] : buf[2];
    }
    return false;
  });
}

// --- OpMatrix --------------------------------------------------------------

namespace {

std::size_t arity_of_columns(std::size_t cols) {
  if (cols < 2 || !std::has_single_bit(cols)) {
    throw DimensionError("operator matrix needs 2^n columns, got " + std::to_string(cols));
  }
  return static_cast<std::size_t>(std::countr_zero(cols));
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw ArityError("arity " + std::to_string(n) + " exceeds the configured cap of " +
                     std::to_string(cap));
  }
}

}  // namespace

OpMatrix::OpMatrix(IntMatrix m) : m_(std::move(m)), arity_(0) {
  if (m_.rows() != 2) {
    throw DimensionError("operator matrix needs 2 rows, got " + std::to_string(m_.rows()));
  }
  arity_ = arity_of_columns(m_.cols());
  for (std::size_t c = 0; c < m_.cols(); ++c) {
    const bool top = m_(0, c) == 1 && m_(1, c) == 0;
    const bool bottom = m_(0, c) == 0 && m_(1, c) == 1;
    if (!top && !bottom) {
      throw OffImageError("column " + std::to_string(c) + " of operator matrix is not one-hot");
    }
  }
}

OpMatrix synth_operator(const TruthTable& table, std::size_t arity_cap) {
  check_cap(table.arity(), arity_cap);
  const std::size_t cols = table.outputs().size();
  IntMatrix m(2, cols);
  // M = sum_j h(m_j) e_j^T: column j is h(m_j).
  for (std::size_t j = 0; j < cols; ++j) {
    const TruthVec h = embed_truth(table.outputs()[j] != 0);
    m(0, j) = h[0];
    m(1, j) = h[1];
  }
  return OpMatrix(std::move(m));
}

TruthVec apply_operator(const OpMatrix& m, std::span<const TruthVec> inputs) {
  if (inputs.size() != m.arity()) {
    throw ArityError("operator of arity " + std::to_string(m.arity()) + " applied to " +
                     std::to_string(inputs.size()) + " inputs");
  }
  const std::vector<std::int64_t> v = kron_fold(inputs);
  const std::vector<std::int64_t> out = m.matrix() * std::span<const std::int64_t>(v);
  return TruthVec::from_components(out[0], out[1]);
}

namespace {

std::vector<std::int64_t> vec(const TruthVec& t) { return {t[0], t[1]}; }

// sum over the four dyadic input pairs of h(out) (a (x) b)^T
IntMatrix dyadic_outer_sum(bool ss, bool sn, bool ns, bool nn) {
  const auto s = vec(embed_truth(true));
  const auto n = vec(embed_truth(false));
  auto term = [&](bool out, const std::vector<std::int64_t>& a,
                  const std::vector<std::int64_t>& b) {
    const auto ab = kron(a, b);
    return IntMatrix::outer(out ? s : n, ab);
  };
  return term(ss, s, s) + term(sn, s, n) + term(ns, n, s) + term(nn, n, n);
}

IntMatrix negation() {
  // N = n s^T + s n^T
  const auto s = vec(embed_truth(true));
  const auto n = vec(embed_truth(false));
  return IntMatrix::outer(n, s) + IntMatrix::outer(s, n);
}

}  // namespace

OpMatrix named_operator(Connective kind) {
  switch (kind) {
    case Connective::Not:
      return OpMatrix(negation());
    case Connective::And:
      return OpMatrix(dyadic_outer_sum(true, false, false, false));
    case Connective::Or:
      return OpMatrix(dyadic_outer_sum(true, true, true, false));
    case Connective::Iff:
      return OpMatrix(dyadic_outer_sum(true, false, false, true));
    case Connective::Implies: {
      const IntMatrix d = dyadic_outer_sum(true, true, true, false);
      return OpMatrix(d * kron(negation(), IntMatrix::identity(2)));
    }
    case Connective::Xor: {
      const IntMatrix e = dyadic_outer_sum(true, false, false, true);
      return OpMatrix(negation() * e);
    }
    case Connective::Cond:
      return OpMatrix(IntMatrix{{1, 1, 0, 0, 1, 0, 1, 0}, {0, 0, 1, 1, 0, 1, 0, 1}});
  }
  throw ArityError("unknown connective");
}

OpMatrix majority_matrix(std::size_t n, std::size_t arity_cap) {
  if (n == 0) throw ArityError("majority needs at least one input");
  check_cap(n, arity_cap);
  const std::size_t threshold = n / 2 + 1;
  const std::size_t cols = std::size_t{1} << n;
  IntMatrix m(2, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    // Column j has a 0 in every position where its index bit is set.
    const std::size_t ones = n - static_cast<std::size_t>(std::popcount(j));
    const bool out = ones >= threshold;
    m(0, j) = out ? 1 : 0;
    m(1, j) = out ? 0 : 1;
  }
  return OpMatrix(std::move(m));
}

bool majority_polynomial(std::size_t n, std::span<const Bit> inputs) {
  if (inputs.size() != n) {
    throw ArityError("majority polynomial of degree " + std::to_string(n) + " given " +
                     std::to_string(inputs.size()) + " inputs");
  }
  if (n == 0) throw ArityError("majority needs at least one input");
  if (n >= 8 * sizeof(std::uint64_t)) throw ArityError("majority polynomial arity too large");
  for (Bit t : inputs) {
    if (t > 1) throw DomainError("majority polynomial inputs must be 0 or 1");
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const int lower = static_cast<int>(n / 2 + 1);
  std::int64_t sum = 0;
  for (std::uint64_t subset = 0; subset < subsets; ++subset) {
    if (std::popcount(subset) < lower) continue;
    std::int64_t term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) {
      const std::int64_t t = inputs[i];
      term *= ((subset >> i) & 1u) ? t : (1 - t);
    }
    sum += term;
  }
  return sum != 0;
}

}  // namespace semlink
