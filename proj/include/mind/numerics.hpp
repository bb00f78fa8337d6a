#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace mind {

// 64-bit floats everywhere: the models here are tiny and precision beats speed.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

/// Numerically stable softmax (max-subtracted). Invariant under adding a
/// constant to every input; output sums to 1 within 1e-12.
Vector softmax(const Vector& v);

double log_sum_exp(const Vector& v);

/// log(softmax(v)) computed without forming intermediate exponentials.
Vector log_softmax(const Vector& v);

/// Exact GELU: 0.5 x (1 + erf(x / sqrt(2))).
double gelu(double x);
double gelu_grad(double x);
Vector gelu(const Vector& v);
Vector gelu_grad(const Vector& v);

/// Index of the largest entry, ties broken by lowest index.
int argmax(const Vector& v);

struct AdamState {
  std::vector<Matrix> m;  // first moments, one buffer per parameter
  std::vector<Matrix> v;  // second moments
  long step = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  static AdamState like(const std::vector<Matrix>& params);
};

/// Bias-corrected Adam update. Shapes of grads must match params and the
/// state's buffers; the step counter advances by exactly 1.
void adam_step(std::vector<Matrix>& params, const std::vector<Matrix>& grads,
               AdamState& state, double lr);

using LossFn = std::function<double(const std::vector<Matrix>&)>;

/// Central-difference check of an analytic gradient. Returns
/// max over entries of |analytic - fd| / max(1, |fd|).
double grad_check(const LossFn& loss, std::vector<Matrix> point,
                  const std::vector<Matrix>& analytic, double eps);

}  // namespace mind
