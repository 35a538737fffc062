#include "qfock/tensor.hpp"

#include <string>

namespace qfock {

std::size_t pow_dim(int d, int n) {
  if (d < 1 || n < 0) {
    throw ValidationError("pow_dim: need d >= 1 and n >= 0");
  }
  std::size_t result = 1;
  for (int i = 0; i < n; ++i) {
    if (result > (static_cast<std::size_t>(1) << 50) / static_cast<std::size_t>(d)) {
      throw SizeLimitError("pow_dim: d^n overflows the supported range");
    }
    result *= static_cast<std::size_t>(d);
  }
  return result;
}

void check_size_cap(int d, int n, std::size_t cap) {
  if (pow_dim(d, n) > cap) {
    throw SizeLimitError("space dimension " + std::to_string(d) + "^" +
                         std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

std::size_t tuple_to_index(std::span<const int> t, int d) {
  std::size_t index = 0;
  for (int v : t) {
    if (v < 0 || v >= d) {
      throw ValidationError("tuple entry " + std::to_string(v) +
                            " out of range 0.." + std::to_string(d - 1));
    }
    index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
  }
  return index;
}

std::vector<int> index_to_tuple(std::size_t index, int n, int d) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
  if (index != 0) {
    throw ValidationError("index does not fit a degree-" + std::to_string(n) + " tuple");
  }
  return t;
}

Tensor Tensor::zero(int degree, int dim) {
  Tensor t;
  t.degree = degree;
  t.dim = dim;
  t.data = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(pow_dim(dim, degree)));
  return t;
}

Tensor Tensor::scalar(int dim, cxd value) {
  Tensor t = zero(0, dim);
  t.data(0) = value;
  return t;
}

Tensor Tensor::basis(int dim, std::span<const int> tuple) {
  Tensor t = zero(static_cast<int>(tuple.size()), dim);
  t.data(static_cast<Eigen::Index>(tuple_to_index(tuple, dim))) = 1.0;
  return t;
}

Tensor Tensor::from_vector(int dim, Eigen::VectorXcd v) {
  if (v.size() != dim) {
    throw DimensionError("from_vector: length does not match dim");
  }
  Tensor t;
  t.degree = 1;
  t.dim = dim;
  t.data = std::move(v);
  return t;
}

namespace {
void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (!a.shape_matches(b)) {
    throw DimensionError(std::string(op) + ": tensor shapes differ");
  }
}
}  // namespace

Tensor operator+(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "operator+");
  Tensor out = a;
  out.data += b.data;
  return out;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "operator-");
  Tensor out = a;
  out.data -= b.data;
  return out;
}

Tensor operator*(cxd c, const Tensor& a) {
  Tensor out = a;
  out.data *= c;
  return out;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.dim != b.dim) {
    throw DimensionError("tensor_product: base dimensions differ");
  }
  Tensor out = Tensor::zero(a.degree + b.degree, a.dim);
  const Eigen::Index nb = b.data.size();
  for (Eigen::Index i = 0; i < a.data.size(); ++i) {
    out.data.segment(i * nb, nb) = a.data(i) * b.data;
  }
  return out;
}

OperatorMatrix OperatorMatrix::identity(int degree, int dim) {
  const auto n = static_cast<Eigen::Index>(pow_dim(dim, degree));
  return {degree, dim, Eigen::MatrixXcd::Identity(n, n)};
}

OperatorMatrix OperatorMatrix::zero(int degree, int dim) {
  const auto n = static_cast<Eigen::Index>(pow_dim(dim, degree));
  return {degree, dim, Eigen::MatrixXcd::Zero(n, n)};
}

Tensor apply(const OperatorMatrix& m, const Tensor& f) {
  if (m.degree != f.degree || m.dim != f.dim) {
    throw DimensionError("apply: operator and tensor shapes differ");
  }
  Tensor out = f;
  out.data = m.data * f.data;
  return out;
}

}  // namespace qfock
