#include "cstarineq/hilbert_module.hpp"

#include <string>

#include "cstarineq/errors.hpp"

namespace cstarineq {

ComplexMatrix inner_product(const ModuleElement& x, const ModuleElement& y) {
  if (x.value.rows() != y.value.rows() || x.value.cols() != y.value.cols()) {
    throw DimensionError("inner product of differently shaped module elements");
  }
  return x.value.adjoint() * y.value;
}

ModuleElement op_apply(const ModuleOperator& t, const ModuleElement& x) {
  if (!t.value.is_square() || t.value.cols() != x.value.rows()) {
    throw DimensionError("operator of shape " + std::to_string(t.value.rows()) + "x" +
                         std::to_string(t.value.cols()) + " applied to " +
                         std::to_string(x.value.rows()) + "x" +
                         std::to_string(x.value.cols()) + " element");
  }
  return ModuleElement{t.value * x.value};
}

PsdVerdict positivity_witness(const ModuleOperator& t, const ModuleElement& x) {
  if (!psd_verdict(t.value).is_psd) {
    throw PreconditionError("positivity witness requires a positive operator");
  }
  const ModuleElement tx = op_apply(t, x);
  return psd_verdict(hermitian_part(inner_product(tx, x)));
}

}  // namespace cstarineq
