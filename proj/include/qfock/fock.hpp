#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "qfock/kernel.hpp"
#include "qfock/qsym.hpp"
#include "qfock/tensor.hpp"

namespace qfock {

/// Truncated element of the deformed Fock space: components of degrees
/// 0..max_degree over a common base dimension. The squared norm is
/// sum_n n! <P_n f^(n), f^(n)>, real and nonnegative up to rounding.
struct FockVector {
  int dim = 1;
  std::vector<Tensor> components;  // index = degree

  static FockVector vacuum(int dim, int max_degree);
  static FockVector zero(int dim, int max_degree);
  /// Single nonzero component at its own degree.
  static FockVector single(const Tensor& component, int max_degree);

  int max_degree() const { return static_cast<int>(components.size()) - 1; }
  const Tensor& component(int degree) const;
  bool degree_is_zero(int degree, double tol = 0.0) const;
  FockVector padded(int max_degree) const;
};

FockVector operator+(const FockVector& a, const FockVector& b);
FockVector operator-(const FockVector& a, const FockVector& b);
FockVector operator*(cxd c, const FockVector& a);

/// What to do with inputs whose components stray from the quasisymmetric
/// subspace: reject (default) or project back with no warning.
enum class RangePolicy { kReject, kProject };

struct FockOptions {
  RangePolicy range = RangePolicy::kReject;
  double range_tol = 1e-8;
  /// Allow a creator to grow the truncation degree by one instead of
  /// raising TruncationError.
  bool auto_extend = false;
};

/// One factor a^+(h) or a^-(h) of a product; h has degree 1.
struct WickLetter {
  bool creator = true;
  Tensor vec;
};

/// Product of letters; the rightmost letter acts first.
using WickWord = std::vector<WickLetter>;

/// Product of field operators B(phi) = a^+(phi) + a^-(phi); rightmost first.
using BWord = std::vector<Tensor>;

/// Per-kernel workspace. Memoizes the degree-n projections, symmetrizers and
/// staircase sums, and realizes the creation/annihilation machinery on top of
/// them. Deterministic; not for concurrent use from several threads (build
/// one per kernel per thread instead).
class FockSpace {
 public:
  explicit FockSpace(QKernel kernel, std::size_t size_cap = kDefaultSizeCap);

  const QKernel& kernel() const { return kernel_; }
  const RKernel& rkernel() const { return rkernel_; }
  int dim() const { return kernel_.dim(); }
  std::size_t size_cap() const { return size_cap_; }

  /// Orthogonal projection onto the quasisymmetric subspace of degree n.
  const Eigen::MatrixXcd& projector(int degree);
  /// Symmetrizer P_n defining the degree-n scalar product.
  const Eigen::MatrixXcd& symmetrizer(int degree);
  /// Staircase sum R_n.
  const Eigen::MatrixXcd& staircase(int degree);

  /// sum_n n! <P_n f^(n), g^(n)>, antilinear in f.
  cxd inner(const FockVector& f, const FockVector& g);
  double norm(const FockVector& f);

  /// a^+(h): degree-n component maps to the projection of h (x) f^(n).
  FockVector create(const Tensor& h, const FockVector& f, const FockOptions& opts = {});

  /// a^-(h) via the staircase route: the degree-n component contributes the
  /// projection of the first-slot contraction of R_n f^(n) against h.
  FockVector annihilate(const Tensor& h, const FockVector& f,
                        const FockOptions& opts = {});

  /// a^-(h) via the direct sum-over-insertion-position formula; independent
  /// realization kept for cross-checking the staircase route.
  FockVector annihilate_direct(const Tensor& h, const FockVector& f,
                               const FockOptions& opts = {});

  FockVector apply(const WickLetter& letter, const FockVector& f,
                   const FockOptions& opts = {});
  FockVector apply(const WickWord& word, const FockVector& f,
                   const FockOptions& opts = {});
  /// B(phi) = a^+(phi) + a^-(phi).
  FockVector apply_field(const Tensor& phi, const FockVector& f,
                         const FockOptions& opts = {});
  FockVector apply(const BWord& word, const FockVector& f,
                   const FockOptions& opts = {});

  /// <(word) vacuum, vacuum>. Words longer than twice the truncation degree
  /// are rejected; a word that cannot unfold within the truncation raises
  /// TruncationError rather than dropping components.
  cxd vacuum_moment(const WickWord& word, int truncation);
  cxd vacuum_moment(const BWord& word, int truncation);

  /// Matrix of f -> projection of h (x) f from degree n to n+1.
  Eigen::MatrixXcd creation_matrix(const Tensor& h, int from_degree);
  /// Matrix of the annihilator from degree n to n-1 (staircase route).
  Eigen::MatrixXcd annihilation_matrix(const Tensor& h, int from_degree);

  /// Max operator-norm residual over degrees 0..max_degree of
  /// a^-(e_s) a^+(e_t) = delta_st + Q(s,t) a^+(e_t) a^-(e_s),
  /// restricted to the quasisymmetric subspace.
  double qcr_residual(int s, int t, int max_degree);

  /// Max residual of the exchange relations for (s,t) in Theta:
  /// a^+(e_s) a^+(e_t) = Q(t,s) a^+(e_t) a^+(e_s) and the annihilator twin.
  /// Raises PreconditionError off Theta, where no such relation holds.
  double exchange_residual(int s, int t, int max_degree);

  /// For a pair with |Q(s,t)| < 1: the smallest residual any unimodular
  /// constant c can achieve in a^+(e_s) a^+(e_t) = c a^+(e_t) a^+(e_s).
  /// Large values certify that no exchange relation exists there.
  double best_unimodular_exchange_residual(int s, int t, int max_degree);

 private:
  void require_in_range(const Tensor& component, const char* who, double tol);
  Tensor prepared_component(const Tensor& component, const FockOptions& opts,
                            const char* who);

  QKernel kernel_;
  RKernel rkernel_;
  std::size_t size_cap_;
  std::vector<std::optional<Eigen::MatrixXcd>> projector_;
  std::vector<std::optional<Eigen::MatrixXcd>> symmetrizer_;
  std::vector<std::optional<Eigen::MatrixXcd>> staircase_;
};

// One-shot wrappers over a transient FockSpace.

cxd fock_inner(const QKernel& k, const FockVector& f, const FockVector& g);
double fock_norm(const QKernel& k, const FockVector& f);
FockVector create(const QKernel& k, const Tensor& h, const FockVector& f,
                  const FockOptions& opts = {});
FockVector annihilate(const QKernel& k, const Tensor& h, const FockVector& f,
                      const FockOptions& opts = {});
FockVector annihilate_direct(const QKernel& k, const Tensor& h, const FockVector& f,
                             const FockOptions& opts = {});
cxd vacuum_moment(const QKernel& k, const WickWord& word, int truncation);
cxd vacuum_moment(const QKernel& k, const BWord& word, int truncation);
double verify_qcr(const QKernel& k, int s, int t, int max_degree);
double verify_creation_exchange(const QKernel& k, int s, int t, int max_degree);

/// First-slot contraction (A^-(h) g)(t_1,...,t_{n-1}) =
/// sum_s conj(h(s)) g(s, t_1, ..., t_{n-1}).
Tensor a_minus_free(const Tensor& h, const Tensor& g);

/// q-integer [m]_q = 1 + q + ... + q^{m-1} and factorial [m]_q! built as the
/// product of those partial sums; [m]_1! = m!.
cxd q_integer(cxd q, int m);
cxd q_factorial(cxd q, int m);

/// sum over S_n of q^{|pi|}, by enumeration. Equals [n]_q!.
cxd mahonian_sum(cxd q, int n);

/// For a constant kernel: (sum over S_n of q^{|pi|}, [n]_q!).
std::pair<cxd, cxd> permanent_sum_identity(const QKernel& k, int n);

/// For the anyon kernel with parameter q, q^m = 1, q != 1: the norm of the
/// projected m-fold power of h together with the norm of a^+(h)^m applied to
/// the vacuum. Both vanish: the exclusion principle.
double exclusion_residual(cxd q, int m, const Tensor& h, int d,
                          std::size_t size_cap = kDefaultSizeCap);

struct TracialityResult {
  double max_residual = 0.0;
  std::ptrdiff_t witness = -1;  // index of the pair attaining the max
};

/// max over pairs of |<p1 p2 vacuum, vacuum> - <p2 p1 vacuum, vacuum>|.
TracialityResult traciality_residual(const QKernel& k,
                                     std::span<const std::pair<BWord, BWord>> pairs,
                                     int truncation);

/// (truncated operator norm of a^+(h) on degrees <= max_degree, l1 norm of h).
/// Requires a fermion-type kernel, for which the norm never exceeds the l1
/// norm of h.
std::pair<double, double> operator_norm_check_fermion_type(const QKernel& k,
                                                           const Tensor& h,
                                                           int max_degree);

}  // namespace qfock
