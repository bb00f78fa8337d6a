#include "mind/metamem.hpp"

#include <stdexcept>

namespace mind {

MetaMemory MetaMemory::identity(int d) {
  if (d < 1) throw std::invalid_argument("MetaMemory::identity: dimension must be >= 1");
  return MetaMemory{Matrix::Identity(d, d)};
}

Vector MetaMemory::apply(const Vector& q) const {
  if (q.size() != mem.rows())
    throw std::invalid_argument("MetaMemory::apply: dimension mismatch");
  return mem.transpose() * q;
}

Vector MetaMemory::apply_scalar(const Vector& q) const {
  if (q.size() != mem.rows())
    throw std::invalid_argument("MetaMemory::apply_scalar: dimension mismatch");
  return mem.diagonal().cwiseProduct(q);
}

std::pair<Matrix, Matrix> MetaMemory::decompose() const {
  Matrix decl = Matrix::Zero(mem.rows(), mem.cols());
  decl.diagonal() = mem.diagonal();
  Matrix cond = mem;
  cond.diagonal().setZero();
  return {decl, cond};
}

}  // namespace mind
