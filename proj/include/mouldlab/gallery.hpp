#pragma once

#include <functional>
#include <optional>

#include "mouldlab/operad.hpp"

namespace mouldlab {

// A value for the parameter t, or nullopt to keep t formal.
using TParam = std::optional<Rational>;

// 1/(u1...un)
MouldComponent as_mould(int n);
// u_p/(u1...un u_{1..n}), n = p + q; p >= 1, q >= 0.
MouldComponent pq_sum(int p, int q);
// Sum of psi(T) over the trees of degree p+q whose root sits at gap p.
MouldComponent pq_tree_sum(int p, int q);
// (sum_i t^{i-1} u_i)/(u1...un u_{1..n})
MouldComponent ty_mould(int n, const TParam &t = std::nullopt);
// (sum_i i u_i)/(u1...un u_{1..n})
MouldComponent weighted_mould(int n);
// CM_1 = 1/u1, CM_n = CM_{n-1} <- CM_1.
MouldComponent cm_mould(int n);
// sum_k (-1)^{n+k} c(n,k) u_k/(u1...un u_{1..n}) with c(n,k) = C(n-1,k-1),
// or C(n,k) when `printed_binomial` is set (that variant is wrong for n >= 2).
MouldComponent cm_closed_form(int n, bool printed_binomial = false);
// prod_{i=2..n}(u_{1..i-1} + t u_i) / (u1 prod_{i=2..n} u_i u_{1..i})
MouldComponent po_mould(int n, const TParam &t = std::nullopt);
// PO_1 = 1/u1, PO_{n+1} = t PO_n > 1/u1 + PO_n < 1/u1.
MouldComponent po_recursion(int n, const TParam &t = std::nullopt);

// Components 1..order of a gallery mould.
Mould truncated_mould(int order, const std::function<MouldComponent(int)> &component);

} // namespace mouldlab
