#include "qfock/kernel.hpp"

#include <cmath>
#include <string>

namespace qfock {

namespace {

constexpr double kModulusSlack = 1e-12;

std::string entry_name(int s, int t) {
  return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

}  // namespace

QKernel make_kernel(Eigen::MatrixXcd q) {
  if (q.rows() != q.cols() || q.rows() < 1) {
    throw ValidationError("kernel matrix must be square and nonempty");
  }
  const int d = static_cast<int>(q.rows());
  for (int s = 0; s < d; ++s) {
    for (int t = s; t < d; ++t) {
      const cxd a = q(s, t);
      const cxd b = q(t, s);
      if (!(a.real() == b.real() && a.imag() == -b.imag())) {
        throw ValidationError("kernel not Hermitian at " + entry_name(s, t));
      }
      if (std::abs(a) > 1.0 + kModulusSlack) {
        throw ValidationError("kernel modulus exceeds 1 at " + entry_name(s, t));
      }
    }
  }
  return QKernel(std::move(q));
}

QKernel constant_kernel(double q, int d) {
  if (!(q >= -1.0 && q <= 1.0)) {
    throw ValidationError("constant kernel requires q in [-1,1]");
  }
  if (d < 1) throw ValidationError("kernel needs d >= 1");
  return make_kernel(Eigen::MatrixXcd::Constant(d, d, cxd(q, 0.0)));
}

QKernel anyon_fermion_kernel(cxd q, int d) {
  if (std::abs(std::abs(q) - 1.0) > kModulusSlack) {
    throw ValidationError("anyon kernel requires |q| = 1");
  }
  if (d < 1) throw ValidationError("kernel needs d >= 1");
  Eigen::MatrixXcd m(d, d);
  for (int s = 0; s < d; ++s) {
    for (int t = 0; t < d; ++t) {
      if (s > t) {
        m(s, t) = q;
      } else if (s < t) {
        m(s, t) = std::conj(q);
      } else {
        m(s, t) = cxd(-1.0, 0.0);
      }
    }
  }
  return make_kernel(std::move(m));
}

RKernel derive_r(const QKernel& k, double tol) {
  const int d = k.dim();
  RKernel out;
  out.r = Eigen::MatrixXcd::Zero(d, d);
  out.theta.resize(d, d);
  for (int s = 0; s < d; ++s) {
    for (int t = 0; t < d; ++t) {
      const bool on = std::abs(std::abs(k(s, t)) - 1.0) <= tol;
      out.theta(s, t) = on;
      if (on) out.r(s, t) = k(s, t);
    }
  }
  return out;
}

GKernel derive_g(const RKernel& r) {
  const int d = r.dim();
  GKernel out;
  out.g = Eigen::MatrixXcd::Constant(d, d, cxd(1.0, 0.0));
  for (int s = 0; s < d; ++s) {
    for (int t = 0; t < d; ++t) {
      if (r.theta(s, t)) out.g(s, t) = r.r(s, t);
    }
  }
  return out;
}

cxd inversion_product(const Eigen::MatrixXcd& w, const Permutation& pi,
                      std::span<const int> t) {
  if (static_cast<int>(t.size()) != pi.degree()) {
    throw DimensionError("inversion_product: tuple length does not match degree");
  }
  const int d = static_cast<int>(w.rows());
  cxd product(1.0, 0.0);
  const int n = pi.degree();
  for (int i = 1; i <= n && product != cxd(0.0, 0.0); ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pi(i) > pi(j)) {
        const int a = t[static_cast<std::size_t>(i - 1)];
        const int b = t[static_cast<std::size_t>(j - 1)];
        if (a < 0 || a >= d || b < 0 || b >= d) {
          throw ValidationError("inversion_product: tuple entry out of range");
        }
        product *= w(a, b);
        if (product == cxd(0.0, 0.0)) break;
      }
    }
  }
  return product;
}

cxd q_pi_weight(const QKernel& k, const Permutation& pi, std::span<const int> t) {
  return inversion_product(k.matrix(), pi, t);
}

bool is_real_valued(const QKernel& k, double tol) {
  return k.matrix().imag().cwiseAbs().maxCoeff() <= tol;
}

bool is_fermion_type(const QKernel& k, double tol) {
  const int d = k.dim();
  for (int s = 0; s < d; ++s) {
    if (std::abs(k(s, s) - cxd(-1.0, 0.0)) > tol) return false;
    for (int t = 0; t < d; ++t) {
      if (std::abs(std::abs(k(s, t)) - 1.0) > tol) return false;
    }
  }
  return true;
}

std::optional<double> constant_parameter(const QKernel& k) {
  const cxd first = k(0, 0);
  if (first.imag() != 0.0) return std::nullopt;
  for (int s = 0; s < k.dim(); ++s) {
    for (int t = 0; t < k.dim(); ++t) {
      if (k(s, t) != first) return std::nullopt;
    }
  }
  return first.real();
}

std::optional<cxd> anyon_parameter(const QKernel& k, double tol) {
  const int d = k.dim();
  for (int s = 0; s < d; ++s) {
    if (std::abs(k(s, s) - cxd(-1.0, 0.0)) > tol) return std::nullopt;
  }
  if (d == 1) return cxd(-1.0, 0.0);
  const cxd q = k(1, 0);
  if (std::abs(std::abs(q) - 1.0) > tol) return std::nullopt;
  for (int s = 0; s < d; ++s) {
    for (int t = 0; t < s; ++t) {
      if (std::abs(k(s, t) - q) > tol) return std::nullopt;
    }
  }
  return q;
}

namespace {

nlohmann::json complex_to_json(cxd z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

cxd complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError("complex value must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json kernel_to_json(const QKernel& k) {
  nlohmann::json rows = nlohmann::json::array();
  for (int s = 0; s < k.dim(); ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 0; t < k.dim(); ++t) {
      row.push_back(complex_to_json(k(s, t)));
    }
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"d", k.dim()}, {"entries", std::move(rows)}};
}

QKernel kernel_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw ValidationError("kernel JSON must be an object");
  }
  if (j.contains("kind")) {
    const std::string kind = j.at("kind").get<std::string>();
    const int d = j.at("d").get<int>();
    const cxd q = complex_from_json(j.at("q"));
    if (kind == "constant") {
      if (q.imag() != 0.0) {
        throw ValidationError("constant kernel requires a real q");
      }
      return constant_kernel(q.real(), d);
    }
    if (kind == "anyon_fermion") {
      return anyon_fermion_kernel(q, d);
    }
    throw ValidationError("unknown kernel kind '" + kind + "'");
  }
  const int d = j.at("d").get<int>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != d) {
    throw ValidationError("kernel entries must be a list of d rows");
  }
  Eigen::MatrixXcd m(d, d);
  for (int s = 0; s < d; ++s) {
    const auto& row = entries[static_cast<std::size_t>(s)];
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      throw ValidationError("kernel row " + std::to_string(s) + " must have d entries");
    }
    for (int t = 0; t < d; ++t) {
      m(s, t) = complex_from_json(row[static_cast<std::size_t>(t)]);
    }
  }
  return make_kernel(std::move(m));
}

}  // namespace qfock
