#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "qfock/kernel.hpp"
#include "qfock/tensor.hpp"

namespace qfock {

/// Adjacent exchange operator on the degree-n power:
/// (Psi_k f)(t_1,...,t_n) = Q(t_k, t_{k+1}) f(..., t_{k+1}, t_k, ...),
/// for 1 <= k <= n-1. Self-adjoint contraction satisfying the braid relations.
OperatorMatrix psi_k(const QKernel& k, int n, int k_index);

/// Generic weighted place-permutation operator for a Hermitian weight matrix w:
/// (T_pi f)(t) = W_{pi^{-1}}(t) f(t_pi) with W_pi the inversion product of w.
/// Instantiated with Q, R and G this yields Psi_pi, Phi_pi and Gamma_pi.
OperatorMatrix weighted_permutation_operator(const Eigen::MatrixXcd& w,
                                             const Permutation& pi, int n);

/// Psi_pi built from the closed formula (Psi_pi f)(t) = Q_{pi^{-1}}(t) f(t_pi).
/// Agrees with the product of psi_k over any reduced word of pi.
OperatorMatrix psi_pi(const QKernel& k, const Permutation& pi, int n);

/// Symmetrization operator P_n = (1/n!) sum over S_n of Psi_pi.
/// Self-adjoint, positive semidefinite, norm <= 1. P_1 = identity, P_0 = [1].
OperatorMatrix p_n(const QKernel& k, int n, std::size_t size_cap = kDefaultSizeCap);

/// The subset S_n^1(t) = {pi : |R_{pi^{-1}}(t)| = 1} together with its
/// cardinality c_n(t). Contains the identity, so c_n >= 1.
std::pair<std::vector<Permutation>, int> s_n_1(const RKernel& r,
                                               std::span<const int> tuple);

/// Orthogonal projection onto the closure of Ran(P_n), built pointwise:
/// (P f)(t) = (1/c_n(t)) sum_{pi in S_n^1(t)} R_{pi^{-1}}(t) f(t_pi).
/// Identity for n <= 1. Verifies c_n is constant along S_n^1 orbits.
OperatorMatrix bb_p_n(const QKernel& k, int n, std::size_t size_cap = kDefaultSizeCap);
OperatorMatrix bb_p_n(const QKernel& k, const RKernel& r, int n,
                      std::size_t size_cap = kDefaultSizeCap);

/// Staircase sum R_n = 1 + Psi_1 + Psi_1 Psi_2 + ... + Psi_1...Psi_{n-1},
/// the degree-coupling factor in (n+1) P_{n+1} = (1 (x) P_n) R_{n+1}.
OperatorMatrix r_n_operator(const QKernel& k, int n,
                            std::size_t size_cap = kDefaultSizeCap);

/// Orthogonal projection E_k onto Ker(1 + Psi_k):
/// (E_k f)(t) = (1/2) [f(t) - Q(t_k,t_{k+1}) f(..., t_{k+1}, t_k, ...)]
/// on tuples with (t_k, t_{k+1}) in Theta, zero elsewhere.
OperatorMatrix ker_projection_e_k(const QKernel& k, int n, int k_index,
                                  double modulus_tol = 1e-12,
                                  std::size_t size_cap = kDefaultSizeCap);

struct QuasisymReport {
  bool ok = true;
  double max_residual = 0.0;
  std::vector<int> worst_tuple;  // empty when no constraint was active
  int worst_k = 0;
};

/// Checks f(t) = Q(t_k,t_{k+1}) f(swap_k t) over every k and every tuple with
/// (t_k, t_{k+1}) in Theta.
QuasisymReport quasisym_check(const QKernel& k, const Tensor& f, double tol = 1e-10,
                              double modulus_tol = 1e-12);

/// Quasisymmetric tensor product of f and g: the projection of f (x) g onto
/// the quasisymmetric subspace of the combined degree. Associative.
Tensor quasisym_product(const QKernel& k, const Tensor& f, const Tensor& g,
                        std::size_t size_cap = kDefaultSizeCap);

// Spectral helpers for subspace comparisons.

double max_abs(const Eigen::MatrixXcd& m);

/// Largest singular value, via the top eigenvalue of m^* m.
double operator_norm(const Eigen::MatrixXcd& m);

/// Orthogonal projector onto the eigenspaces of a Hermitian matrix with
/// |eigenvalue| < zero_tol (kernel) or >= zero_tol (range).
Eigen::MatrixXcd hermitian_kernel_projector(const Eigen::MatrixXcd& m, double zero_tol);
Eigen::MatrixXcd hermitian_range_projector(const Eigen::MatrixXcd& m, double zero_tol);

/// Projector onto the span of the ranges of the given projections, computed
/// as the range projector of their (positive semidefinite) sum.
Eigen::MatrixXcd span_projector(const std::vector<Eigen::MatrixXcd>& projections,
                                double zero_tol);

}  // namespace qfock
