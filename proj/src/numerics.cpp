#include "mind/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mind {

bool all_finite(const Matrix& m) { return m.allFinite(); }
bool all_finite(const Vector& v) { return v.allFinite(); }

Vector softmax(const Vector& v) {
  if (v.size() == 0) throw std::invalid_argument("softmax: empty input");
  if (!v.allFinite()) throw std::invalid_argument("softmax: non-finite input");
  const double m = v.maxCoeff();
  Vector e = (v.array() - m).exp();
  return e / e.sum();
}

double log_sum_exp(const Vector& v) {
  if (v.size() == 0) throw std::invalid_argument("log_sum_exp: empty input");
  const double m = v.maxCoeff();
  return m + std::log((v.array() - m).exp().sum());
}

Vector log_softmax(const Vector& v) {
  const double lse = log_sum_exp(v);
  return v.array() - lse;
}

double gelu(double x) { return 0.5 * x * (1.0 + std::erf(x / std::numbers::sqrt2)); }

double gelu_grad(double x) {
  const double cdf = 0.5 * (1.0 + std::erf(x / std::numbers::sqrt2));
  const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  return cdf + x * pdf;
}

Vector gelu(const Vector& v) { return v.unaryExpr([](double x) { return gelu(x); }); }
Vector gelu_grad(const Vector& v) { return v.unaryExpr([](double x) { return gelu_grad(x); }); }

int argmax(const Vector& v) {
  if (v.size() == 0) throw std::invalid_argument("argmax: empty input");
  int best = 0;
  for (int i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

AdamState AdamState::like(const std::vector<Matrix>& params) {
  AdamState s;
  s.m.reserve(params.size());
  s.v.reserve(params.size());
  for (const auto& p : params) {
    s.m.push_back(Matrix::Zero(p.rows(), p.cols()));
    s.v.push_back(Matrix::Zero(p.rows(), p.cols()));
  }
  return s;
}

void adam_step(std::vector<Matrix>& params, const std::vector<Matrix>& grads,
               AdamState& state, double lr) {
  if (params.size() != grads.size() || params.size() != state.m.size())
    throw std::invalid_argument("adam_step: parameter/gradient count mismatch");
  if (lr <= 0.0) throw std::invalid_argument("adam_step: lr must be positive");
  for (std::size_t i = 0; i < params.size(); ++i)
    if (params[i].rows() != grads[i].rows() || params[i].cols() != grads[i].cols())
      throw std::invalid_argument("adam_step: gradient shape mismatch");

  state.step += 1;
  const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < params.size(); ++i) {
    state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * grads[i];
    state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * grads[i].cwiseProduct(grads[i]);
    const Matrix m_hat = state.m[i] / bc1;
    const Matrix v_hat = state.v[i] / bc2;
    params[i] -= lr * (m_hat.array() / (v_hat.array().sqrt() + state.eps)).matrix();
  }
}

double grad_check(const LossFn& loss, std::vector<Matrix> point,
                  const std::vector<Matrix>& analytic, double eps) {
  if (eps <= 0.0 || eps > 1e-2) throw std::invalid_argument("grad_check: eps must be in (0, 1e-2]");
  if (point.size() != analytic.size())
    throw std::invalid_argument("grad_check: analytic gradient count mismatch");

  double worst = 0.0;
  for (std::size_t k = 0; k < point.size(); ++k) {
    for (Eigen::Index j = 0; j < point[k].size(); ++j) {
      const double saved = point[k](j);
      point[k](j) = saved + eps;
      const double lp = loss(point);
      point[k](j) = saved - eps;
      const double lm = loss(point);
      point[k](j) = saved;
      if (!std::isfinite(lp) || !std::isfinite(lm))
        throw std::runtime_error("grad_check: non-finite loss at perturbed point");
      const double fd = (lp - lm) / (2.0 * eps);
      const double err = std::abs(analytic[k](j) - fd) / std::max(1.0, std::abs(fd));
      worst = std::max(worst, err);
    }
  }
  return worst;
}

}  // namespace mind
