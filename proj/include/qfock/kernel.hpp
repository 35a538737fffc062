#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>

#include "json.hpp"
#include "qfock/common.hpp"
#include "qfock/permutation.hpp"

namespace qfock {

/// Hermitian exchange kernel Q on a finite site set {0,...,d-1}.
///
/// Invariants, enforced at construction and never repaired silently:
///   Q(s,t) == conj(Q(t,s)) exactly, and |Q(s,t)| <= 1 + 1e-12.
/// The diagonal is consequently real.
class QKernel {
 public:
  int dim() const { return static_cast<int>(q_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return q_; }
  cxd operator()(int s, int t) const { return q_(s, t); }

 private:
  friend QKernel make_kernel(Eigen::MatrixXcd q);
  explicit QKernel(Eigen::MatrixXcd q) : q_(std::move(q)) {}
  Eigen::MatrixXcd q_;
};

/// Validates and wraps a kernel matrix. Violations are rejected, not repaired.
QKernel make_kernel(Eigen::MatrixXcd q);

/// Q(s,t) = q for all s,t; requires real q in [-1,1].
QKernel constant_kernel(double q, int d);

/// Q(s,t) = q for s > t, conj(q) for s < t, -1 on the diagonal; |q| = 1.
/// Interpolates between fermions (q = 1 off-diagonal pattern collapses to
/// the +-1 structure) and genuinely anyonic exchange phases.
QKernel anyon_fermion_kernel(cxd q, int d);

/// Q restricted to its modulus-one set Theta, zero elsewhere.
struct RKernel {
  Eigen::MatrixXcd r;
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> theta;  // |Q| == 1 mask

  int dim() const { return static_cast<int>(r.rows()); }
  bool on_theta(int s, int t) const { return theta(s, t); }
};

/// theta(s,t) = (||Q(s,t)| - 1| <= tol); R = Q on theta, 0 off it.
RKernel derive_r(const QKernel& k, double tol = 1e-12);

/// Unimodular completion of R: G = R on theta, 1 off it. Hermitian, |G| = 1.
struct GKernel {
  Eigen::MatrixXcd g;
  int dim() const { return static_cast<int>(g.rows()); }
};

GKernel derive_g(const RKernel& r);

/// prod over inversions (i,j) of pi of w(t_i, t_j); empty product = 1.
/// Stops early at an exact zero factor.
cxd inversion_product(const Eigen::MatrixXcd& w, const Permutation& pi,
                      std::span<const int> t);

/// Q_pi(t) = prod_{i<j, pi(i)>pi(j)} Q(t_i, t_j).
cxd q_pi_weight(const QKernel& k, const Permutation& pi, std::span<const int> t);

// Kernel classifiers used by the verification suites.

/// True when every entry has |Im Q| <= tol.
bool is_real_valued(const QKernel& k, double tol = 1e-12);

/// True when Q(t,t) = -1 for all t and |Q(s,t)| = 1 everywhere (within tol).
bool is_fermion_type(const QKernel& k, double tol = 1e-12);

/// The single value q when all entries are exactly equal and real.
std::optional<double> constant_parameter(const QKernel& k);

/// The exchange phase q when the kernel matches the anyon-of-fermion-type
/// pattern within tol. For d = 1 the pattern degenerates to Q = [[-1]] and
/// the reported phase is -1.
std::optional<cxd> anyon_parameter(const QKernel& k, double tol = 1e-12);

// JSON interchange. Two accepted forms:
//   {"d": D, "entries": [[[re,im],...],...]}            row-major entries
//   {"kind": "constant"|"anyon_fermion", "q": [re,im], "d": D}
nlohmann::json kernel_to_json(const QKernel& k);
QKernel kernel_from_json(const nlohmann::json& j);

}  // namespace qfock
