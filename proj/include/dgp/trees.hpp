#pragma once

#include "dgp/series.hpp"

namespace dgp {

enum class TreeKind { Rooted, Unrooted };  // T(z) = z e^{T(z)},  U = T - T^2/2

// Exact series: [z^n] T = n^{n-1}/n!, U = T - T^2/2.
Series<Rat> tree_series(TreeKind which, int order);

// Point evaluation of T or U on the principal branch. Arguments on the
// branch cut [1/e, +inf) are rejected. Near the branch point the
// Newton-Puiseux expansion in sqrt(2(1-ez)) supplies the seed so the
// evaluation stays stable.
Complex tree_eval(TreeKind which, const Complex& x);
Real tree_eval(TreeKind which, const Real& x);

} // namespace dgp
