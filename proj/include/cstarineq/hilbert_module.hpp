#pragma once

#include "cstarineq/linalg.hpp"
#include "cstarineq/matrix.hpp"

namespace cstarineq {

/// An element of the module C^{m x n} of m x n complex matrices over the
/// algebra M_n(C), with inner product <x, y> = x* y valued in M_n(C).
struct ModuleElement {
  ComplexMatrix value;
};

/// An adjointable operator on C^{m x n}: left multiplication by an m x m
/// matrix.
struct ModuleOperator {
  ComplexMatrix value;
};

/// <x, y> = x* y. Both arguments must share the module shape.
ComplexMatrix inner_product(const ModuleElement& x, const ModuleElement& y);

/// t x, the operator applied on the left.
ModuleElement op_apply(const ModuleOperator& t, const ModuleElement& x);

/// PSD verdict of <t x, x> = x* t x. Requires positive t; this is the
/// positivity transfer that makes Cauchy-Schwarz style arguments work.
PsdVerdict positivity_witness(const ModuleOperator& t, const ModuleElement& x);

}  // namespace cstarineq
