#pragma once

#include "lf/multiplicative.hpp"

namespace lf {

// Two independently computed sides of an exact identity.
struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs|
  double scale = 0.0;     // magnitude the residual should be judged against

  double relative() const { return scale > 0.0 ? residual / scale : residual; }
};

// G_k(X) = k int_1^X G_{k-1}(t) dt/t. The left side is summed directly; the
// right side is adaptive Simpson quadrature over the pieces between
// consecutive support points of f, where G_{k-1} is smooth. The absolute
// tolerance `quad_tol` is split across pieces in proportion to their length.
// NumericError if a piece fails to converge.
IdentityCheck check_giter(const MultiplicativeFunction& f, double X, int k, double quad_tol);

// sum_{n <= e^u} g(n) (log n)^k = sum_j C(k,j) u^j (-1)^{k-j} G_{k-j}(e^u).
// scale = max(|lhs|, max_j |C(k,j) u^j G_{k-j}(e^u)|), the size of the
// terms that cancel on the right.
IdentityCheck check_reph(const MultiplicativeFunction& f, double u, int k);

}  // namespace lf
