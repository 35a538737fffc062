#include "qfock/qsym.hpp"

#include <cmath>
#include <string>

namespace qfock {

namespace {

// Flat table of all degree-n tuples over 0..d-1, row i = index_to_tuple(i).
std::vector<std::vector<int>> tuple_table(int n, int d) {
  const std::size_t dim = pow_dim(d, n);
  std::vector<std::vector<int>> table(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    table[i] = index_to_tuple(i, n, d);
  }
  return table;
}

struct PermEntry {
  Permutation pi;
  std::vector<std::pair<int, int>> inv_inversions;  // inversions of pi^{-1}
};

std::vector<PermEntry> perm_entries(int n) {
  std::vector<PermEntry> out;
  for (auto& pi : all_permutations(n)) {
    PermEntry e{pi, inversions(inverse(pi))};
    out.push_back(std::move(e));
  }
  return out;
}

cxd pair_product(const Eigen::MatrixXcd& w,
                 const std::vector<std::pair<int, int>>& pairs,
                 const std::vector<int>& t) {
  cxd product(1.0, 0.0);
  for (const auto& [i, j] : pairs) {
    product *= w(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(j - 1)]);
    if (product == cxd(0.0, 0.0)) break;
  }
  return product;
}

void check_k_index(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw ValidationError("adjacent index k = " + std::to_string(k) +
                          " out of range 1.." + std::to_string(n - 1));
  }
}

}  // namespace

OperatorMatrix psi_k(const QKernel& kern, int n, int k_index) {
  if (n < 2) throw ValidationError("psi_k needs degree n >= 2");
  check_k_index(n, k_index);
  const int d = kern.dim();
  OperatorMatrix m = OperatorMatrix::zero(n, d);
  const auto tuples = tuple_table(n, d);
  for (std::size_t row = 0; row < tuples.size(); ++row) {
    std::vector<int> swapped = tuples[row];
    std::swap(swapped[static_cast<std::size_t>(k_index - 1)],
              swapped[static_cast<std::size_t>(k_index)]);
    const std::size_t col = tuple_to_index(swapped, d);
    m.data(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
        kern(tuples[row][static_cast<std::size_t>(k_index - 1)],
             tuples[row][static_cast<std::size_t>(k_index)]);
  }
  return m;
}

OperatorMatrix weighted_permutation_operator(const Eigen::MatrixXcd& w,
                                             const Permutation& pi, int n) {
  if (pi.degree() != n) {
    throw DimensionError("weighted_permutation_operator: degree mismatch");
  }
  const int d = static_cast<int>(w.rows());
  OperatorMatrix m = OperatorMatrix::zero(n, d);
  const auto pairs = inversions(inverse(pi));
  const auto tuples = tuple_table(n, d);
  for (std::size_t row = 0; row < tuples.size(); ++row) {
    const std::size_t col = tuple_to_index(permute_tuple(pi, tuples[row]), d);
    m.data(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
        pair_product(w, pairs, tuples[row]);
  }
  return m;
}

OperatorMatrix psi_pi(const QKernel& k, const Permutation& pi, int n) {
  return weighted_permutation_operator(k.matrix(), pi, n);
}

OperatorMatrix p_n(const QKernel& k, int n, std::size_t size_cap) {
  const int d = k.dim();
  if (n <= 1) return OperatorMatrix::identity(n, d);
  check_size_cap(d, n, size_cap);
  OperatorMatrix m = OperatorMatrix::zero(n, d);
  const auto tuples = tuple_table(n, d);
  const auto perms = perm_entries(n);
  const double weight = 1.0 / static_cast<double>(perms.size());
  for (const auto& entry : perms) {
    for (std::size_t row = 0; row < tuples.size(); ++row) {
      const std::size_t col = tuple_to_index(permute_tuple(entry.pi, tuples[row]), d);
      m.data(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
          weight * pair_product(k.matrix(), entry.inv_inversions, tuples[row]);
    }
  }
  return m;
}

std::pair<std::vector<Permutation>, int> s_n_1(const RKernel& r,
                                               std::span<const int> tuple) {
  const int n = static_cast<int>(tuple.size());
  std::vector<int> t(tuple.begin(), tuple.end());
  std::vector<Permutation> members;
  for (const auto& entry : perm_entries(n)) {
    const cxd w = pair_product(r.r, entry.inv_inversions, t);
    if (std::abs(w) > 0.5) members.push_back(entry.pi);
  }
  return {std::move(members), static_cast<int>(members.size())};
}

OperatorMatrix bb_p_n(const QKernel& k, int n, std::size_t size_cap) {
  return bb_p_n(k, derive_r(k), n, size_cap);
}

OperatorMatrix bb_p_n(const QKernel& k, const RKernel& r, int n,
                      std::size_t size_cap) {
  const int d = k.dim();
  if (r.dim() != d) throw DimensionError("bb_p_n: kernel dimensions differ");
  if (n <= 1) return OperatorMatrix::identity(n, d);
  check_size_cap(d, n, size_cap);
  const auto tuples = tuple_table(n, d);
  const auto perms = perm_entries(n);

  // First pass: c_n(t) for every tuple. |R_{pi^{-1}}(t)| is exactly 0 or
  // within rounding of 1, so 0.5 is a safe classifier.
  std::vector<int> orbit_count(tuples.size(), 0);
  for (const auto& entry : perms) {
    for (std::size_t row = 0; row < tuples.size(); ++row) {
      if (std::abs(pair_product(r.r, entry.inv_inversions, tuples[row])) > 0.5) {
        ++orbit_count[row];
      }
    }
  }

  OperatorMatrix m = OperatorMatrix::zero(n, d);
  for (const auto& entry : perms) {
    for (std::size_t row = 0; row < tuples.size(); ++row) {
      const cxd w = pair_product(r.r, entry.inv_inversions, tuples[row]);
      if (std::abs(w) <= 0.5) continue;
      const std::size_t col = tuple_to_index(permute_tuple(entry.pi, tuples[row]), d);
      if (orbit_count[col] != orbit_count[row]) {
        // c_n is constant along S_n^1 orbits; anything else is a logic error.
        throw Error("bb_p_n: c_n not constant along an orbit at row " +
                    std::to_string(row));
      }
      m.data(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
          w / static_cast<double>(orbit_count[row]);
    }
  }
  return m;
}

OperatorMatrix r_n_operator(const QKernel& k, int n, std::size_t size_cap) {
  const int d = k.dim();
  if (n < 1) throw ValidationError("r_n_operator needs n >= 1");
  check_size_cap(d, n, size_cap);
  OperatorMatrix sum = OperatorMatrix::identity(n, d);
  if (n == 1) return sum;
  Eigen::MatrixXcd term = sum.data;
  for (int j = 1; j <= n - 1; ++j) {
    term = term * psi_k(k, n, j).data;
    sum.data += term;
  }
  return sum;
}

OperatorMatrix ker_projection_e_k(const QKernel& kern, int n, int k_index,
                                  double modulus_tol, std::size_t size_cap) {
  if (n < 2) throw ValidationError("ker_projection_e_k needs degree n >= 2");
  check_k_index(n, k_index);
  const int d = kern.dim();
  check_size_cap(d, n, size_cap);
  const RKernel r = derive_r(kern, modulus_tol);
  OperatorMatrix m = OperatorMatrix::zero(n, d);
  const auto tuples = tuple_table(n, d);
  for (std::size_t row = 0; row < tuples.size(); ++row) {
    const int a = tuples[row][static_cast<std::size_t>(k_index - 1)];
    const int b = tuples[row][static_cast<std::size_t>(k_index)];
    if (!r.on_theta(a, b)) continue;
    std::vector<int> swapped = tuples[row];
    std::swap(swapped[static_cast<std::size_t>(k_index - 1)],
              swapped[static_cast<std::size_t>(k_index)]);
    const std::size_t col = tuple_to_index(swapped, d);
    m.data(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(row)) += 0.5;
    m.data(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) -=
        0.5 * kern(a, b);
  }
  return m;
}

QuasisymReport quasisym_check(const QKernel& k, const Tensor& f, double tol,
                              double modulus_tol) {
  QuasisymReport report;
  if (f.degree < 2) return report;
  if (f.dim != k.dim()) throw DimensionError("quasisym_check: dimension mismatch");
  const RKernel r = derive_r(k, modulus_tol);
  const auto tuples = tuple_table(f.degree, f.dim);
  for (int kk = 1; kk <= f.degree - 1; ++kk) {
    for (std::size_t row = 0; row < tuples.size(); ++row) {
      const int a = tuples[row][static_cast<std::size_t>(kk - 1)];
      const int b = tuples[row][static_cast<std::size_t>(kk)];
      if (!r.on_theta(a, b)) continue;
      std::vector<int> swapped = tuples[row];
      std::swap(swapped[static_cast<std::size_t>(kk - 1)],
                swapped[static_cast<std::size_t>(kk)]);
      const std::size_t col = tuple_to_index(swapped, f.dim);
      const double residual =
          std::abs(f.data(static_cast<Eigen::Index>(row)) -
                   k(a, b) * f.data(static_cast<Eigen::Index>(col)));
      if (residual > report.max_residual) {
        report.max_residual = residual;
        report.worst_tuple = tuples[row];
        report.worst_k = kk;
      }
    }
  }
  report.ok = report.max_residual <= tol;
  return report;
}

Tensor quasisym_product(const QKernel& k, const Tensor& f, const Tensor& g,
                        std::size_t size_cap) {
  const Tensor joined = tensor_product(f, g);
  return apply(bb_p_n(k, joined.degree, size_cap), joined);
}

double max_abs(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double operator_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram,
                                                         Eigen::EigenvaluesOnly);
  const double top = solver.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, top));
}

namespace {

Eigen::MatrixXcd eigenspace_projector(const Eigen::MatrixXcd& m, double zero_tol,
                                      bool keep_kernel) {
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const bool in_kernel = std::abs(values(i)) < zero_tol;
    if (in_kernel == keep_kernel) {
      projector += vectors.col(i) * vectors.col(i).adjoint();
    }
  }
  return projector;
}

}  // namespace

Eigen::MatrixXcd hermitian_kernel_projector(const Eigen::MatrixXcd& m, double zero_tol) {
  return eigenspace_projector(m, zero_tol, true);
}

Eigen::MatrixXcd hermitian_range_projector(const Eigen::MatrixXcd& m, double zero_tol) {
  return eigenspace_projector(m, zero_tol, false);
}

Eigen::MatrixXcd span_projector(const std::vector<Eigen::MatrixXcd>& projections,
                                double zero_tol) {
  if (projections.empty()) {
    throw ValidationError("span_projector: need at least one projection");
  }
  Eigen::MatrixXcd sum =
      Eigen::MatrixXcd::Zero(projections.front().rows(), projections.front().cols());
  for (const auto& p : projections) sum += p;
  return hermitian_range_projector(sum, zero_tol);
}

}  // namespace qfock
