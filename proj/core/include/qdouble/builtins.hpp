#pragma once

#include <string>

#include "qdouble/cochain.hpp"
#include "qdouble/group.hpp"
#include "qdouble/groupoid.hpp"

namespace qdouble::builtins {

/// True when the specifier names a registry group ("cyclic:n",
/// "product:spec1,spec2,...", "symmetric:n", "dihedral:n") rather than a
/// file path.
bool is_group_spec(const std::string& spec);

/// Builds a registry group.  "product:" folds its comma-separated factors
/// left to right; factors are themselves registry specs (without commas).
/// Throws std::invalid_argument on anything unrecognized.
FiniteGroup make_group(const std::string& spec);

/// True when the specifier names a registry cocycle ("cocycle:...").
bool is_cocycle_spec(const std::string& spec);

/// The registry group a named cocycle lives on ("cocycle:z2cubed-omega" ->
/// the order-8 elementary abelian group, "cocycle:klein-thetaV" -> the
/// Klein four-group).
std::string cocycle_group_spec(const std::string& spec);

/// Degree of a registry cocycle (3 for z2cubed-omega, 2 for klein-thetaV).
int cocycle_degree(const std::string& spec);

/// Materializes a registry cocycle on the one-object groupoid of its group
/// (which the caller owns and must have built from cocycle_group_spec).
///
/// "cocycle:z2cubed-omega": on (Z2)^3 with element index 4*u_a + 2*u_b +
/// u_c, the 3-cocycle omega(u, v, w) = (-1)^{u_a v_b w_c}.
/// "cocycle:klein-thetaV": on Z2 x Z2 with element index 2*u_a + u_b, the
/// 2-cocycle theta(u, v) = (-1)^{u_a v_b}.
Cochain make_cocycle(const std::string& spec, const Groupoid& one_object_base);

}  // namespace qdouble::builtins
