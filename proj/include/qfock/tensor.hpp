#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "qfock/common.hpp"

namespace qfock {

/// d^n with an overflow guard.
std::size_t pow_dim(int d, int n);

/// Throws SizeLimitError when d^n exceeds cap.
void check_size_cap(int d, int n, std::size_t cap = kDefaultSizeCap);

/// Tuple (t_1,...,t_n) over 0..d-1 to its big-endian index sum_i t_i d^{n-i};
/// t_1 is the most significant digit. The single codec used everywhere.
std::size_t tuple_to_index(std::span<const int> t, int d);
std::vector<int> index_to_tuple(std::size_t index, int n, int d);

/// Degree-n element of the n-fold tensor power of C^d, stored densely in the
/// big-endian basis order above. Degree 0 holds a single scalar.
struct Tensor {
  int degree = 0;
  int dim = 1;
  Eigen::VectorXcd data;

  static Tensor zero(int degree, int dim);
  static Tensor scalar(int dim, cxd value);
  /// e_{t_1} (x) ... (x) e_{t_n}.
  static Tensor basis(int dim, std::span<const int> tuple);
  static Tensor from_vector(int dim, Eigen::VectorXcd v);  // degree 1

  bool shape_matches(const Tensor& other) const {
    return degree == other.degree && dim == other.dim;
  }
  double norm() const { return data.norm(); }
};

Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(cxd c, const Tensor& a);

/// (a (x) b)(s, t) = a(s) b(t); degree adds, big-endian order keeps a first.
Tensor tensor_product(const Tensor& a, const Tensor& b);

/// Dense matrix of a linear operator on the degree-n tensor power.
struct OperatorMatrix {
  int degree = 0;
  int dim = 1;
  Eigen::MatrixXcd data;

  static OperatorMatrix identity(int degree, int dim);
  static OperatorMatrix zero(int degree, int dim);
};

Tensor apply(const OperatorMatrix& m, const Tensor& f);

}  // namespace qfock
