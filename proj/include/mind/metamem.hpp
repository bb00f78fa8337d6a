#pragma once

#include "mind/numerics.hpp"

#include <utility>

namespace mind {

/// Activation-remapping matrix for the inner feed-forward layer. Unit i's
/// output is the inner product of column i with the full activation vector,
/// so apply() is the transpose matvec. The declarative part is the diagonal
/// (identity at init: original knowledge retained), the conditional part is
/// the off-diagonal remainder (zero at init: nothing learned yet).
struct MetaMemory {
  Matrix mem;

  static MetaMemory identity(int d);

  int dim() const { return static_cast<int>(mem.rows()); }

  /// q_meta[i] = column_i(mem) . q
  Vector apply(const Vector& q) const;

  /// Per-unit scalar reading (q_meta[i] = mem[i,i] * q[i]); kept behind a
  /// flag for ablation against the full-column mapping.
  Vector apply_scalar(const Vector& q) const;

  /// Exact additive split into (declarative, conditional); the sum
  /// reconstructs mem bitwise.
  std::pair<Matrix, Matrix> decompose() const;
};

}  // namespace mind
