#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cstdint>
#include <stdexcept>

#include "sgt/signed_graph.hpp"

namespace sgt {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = SquareMatrix<Int>;

/// Adjacency matrix of a signed graph over any scalar ring.
template <class Scalar = Int>
SquareMatrix<Scalar> adjacencyMatrix(const SignedGraph& g) {
  SquareMatrix<Scalar> m = SquareMatrix<Scalar>::Zero(g.order(), g.order());
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = Scalar(e.sign);
    m(e.v, e.u) = Scalar(e.sign);
  }
  return m;
}

/// Rank by fraction-free (Bareiss) elimination. Exact over any integral
/// domain whose divisions in the Bareiss recurrence are exact — in
/// particular over the integers. Destroys its argument.
///
/// Pivoting is deterministic: at step k, scan columns j >= k in order and
/// within each column rows i >= k in order; the first nonzero entry found
/// becomes the pivot.
template <class Scalar>
int rankFractionFree(SquareMatrix<Scalar>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Scalar prev(1);
  Eigen::Index k = 0;
  for (; k < rows && k < cols; ++k) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index j = k; j < cols && pi < 0; ++j)
      for (Eigen::Index i = k; i < rows; ++i)
        if (m(i, j) != Scalar(0)) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;  // remaining block is zero
    if (pj != k) m.col(pj).swap(m.col(k));
    if (pi != k) m.row(pi).swap(m.row(k));
    for (Eigen::Index i = k + 1; i < rows; ++i) {
      for (Eigen::Index j = k + 1; j < cols; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return static_cast<int>(k);
}

inline int rank(IntMatrix m) { return rankFractionFree(m); }

namespace detail {

/// Machine-word elimination is exact only while intermediates fit in int64.
/// Every intermediate entry is a minor of the input, and the binding value is
/// the product of two minors formed before each exact division. For entries
/// in {-1, 0, 1}, Hadamard's bound caps a k-by-k minor at k^(k/2), so the
/// worst product is (n-1)^(n-1): at n = 16 that is 15^15 < 2^62, while n = 17
/// overflows. Hence the limit of 16.
inline constexpr int kInt64RankLimit = 16;

}  // namespace detail

/// Nullity of the adjacency matrix, exact. Small graphs run on int64;
/// larger ones use arbitrary-precision integers.
inline int nullity(const SignedGraph& g) {
  if (g.order() <= detail::kInt64RankLimit) {
    auto m = adjacencyMatrix<std::int64_t>(g);
    return g.order() - rankFractionFree(m);
  }
  auto m = adjacencyMatrix<Int>(g);
  return g.order() - rankFractionFree(m);
}

/// Multiplicity of a rational number as an adjacency eigenvalue:
/// dim ker(A - lambda I) computed as order - rank(q A - p I) for
/// lambda = p/q in lowest terms.
inline int multiplicity(const SignedGraph& g, const Rational& lambda) {
  const Int num = boost::multiprecision::numerator(lambda);
  const Int den = boost::multiprecision::denominator(lambda);
  const auto n = static_cast<Eigen::Index>(g.order());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    Int w = Int(e.sign) * den;
    m(e.u, e.v) = w;
    m(e.v, e.u) = std::move(w);
  }
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) -= num;
  return g.order() - rankFractionFree(m);
}

}  // namespace sgt
