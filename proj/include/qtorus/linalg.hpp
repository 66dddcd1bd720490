#ifndef QTORUS_LINALG_HPP
#define QTORUS_LINALG_HPP

#include <vector>

#include <Eigen/Core>

namespace qtorus {

/// Exact Gauss–Jordan over a field scalar (Rational, CycScalar).  Eigen's own
/// decompositions assume floating point, so row reduction is done by hand.
/// Returns the rank; pivot columns are appended to *pivots when non-null.
template <typename Mat>
long long rref_in_place(Mat& m, std::vector<long long>* pivots = nullptr) {
  using Scalar = typename Mat::Scalar;
  const long long rows = m.rows(), cols = m.cols();
  long long r = 0;
  for (long long c = 0; c < cols && r < rows; ++c) {
    long long pivot = -1;
    for (long long i = r; i < rows; ++i)
      if (!(m(i, c) == Scalar(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    Scalar inv = Scalar(1) / m(r, c);
    for (long long j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (long long i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar(0)) continue;
      Scalar factor = m(i, c);
      for (long long j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

template <typename Mat>
long long rank_of(Mat m) {
  return rref_in_place(m);
}

/// Columns form a basis of the right kernel of m.
template <typename Mat>
Mat kernel_basis(Mat m) {
  using Scalar = typename Mat::Scalar;
  const long long cols = m.cols();
  std::vector<long long> pivots;
  long long r = rref_in_place(m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (long long c : pivots) is_pivot[c] = true;
  Mat out(cols, cols - r);
  out.setConstant(Scalar(0));
  long long k = 0;
  for (long long c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    out(c, k) = Scalar(1);
    for (long long i = 0; i < r; ++i) out(pivots[i], k) = -m(i, c);
    ++k;
  }
  return out;
}

/// Incrementally maintained exact column span with membership queries.
template <typename Mat>
class SpanTracker {
 public:
  using Scalar = typename Mat::Scalar;

  explicit SpanTracker(long long ambient_dim) : n_(ambient_dim) {
    rref_.resize(0, n_);
  }

  long long dim() const { return rref_.rows(); }
  long long ambient() const { return n_; }

  /// Reduces v against the current span; returns the residue.
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> reduce(
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v) const {
    for (long long i = 0; i < rref_.rows(); ++i) {
      Scalar c = v[pivots_[i]];
      if (c == Scalar(0)) continue;
      for (long long j = 0; j < n_; ++j) v[j] -= c * rref_(i, j);
    }
    return v;
  }

  bool contains(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v) const {
    auto res = reduce(v);
    for (long long j = 0; j < n_; ++j)
      if (!(res[j] == Scalar(0))) return false;
    return true;
  }

  /// Returns true when v enlarged the span.
  bool add(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v) {
    auto res = reduce(v);
    long long p = -1;
    for (long long j = 0; j < n_; ++j)
      if (!(res[j] == Scalar(0))) {
        p = j;
        break;
      }
    if (p < 0) return false;
    Scalar inv = Scalar(1) / res[p];
    for (long long j = 0; j < n_; ++j) res[j] = res[j] * inv;
    // Clear the new pivot column from existing rows to stay in rref.
    for (long long i = 0; i < rref_.rows(); ++i) {
      Scalar c = rref_(i, p);
      if (c == Scalar(0)) continue;
      for (long long j = 0; j < n_; ++j) rref_(i, j) -= c * res[j];
    }
    rref_.conservativeResize(rref_.rows() + 1, n_);
    rref_.row(rref_.rows() - 1) = res.transpose();
    pivots_.push_back(p);
    return true;
  }

 private:
  long long n_;
  Mat rref_;  // rows are reduced spanning vectors
  std::vector<long long> pivots_;
};

}  // namespace qtorus

#endif  // QTORUS_LINALG_HPP
