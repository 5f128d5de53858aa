#pragma once

#include "embrace/cochain.hpp"

namespace embrace {

// Brace operation on suspended cochains: the sum over all order-preserving
// insertions of y_1..y_k into the slots of x, with Koszul signs from moving
// each inserted cochain past the arguments consumed to its left.  In path
// coordinates y_1 occupies the highest chosen slot and the sign of y_i counts
// the suspended degrees of all result arguments strictly above its block.
// More insertions than slots yields the zero cochain.
Cochain brace(const Cochain& x, const std::vector<Cochain>& ys);
MixedCochain brace(const MixedCochain& x, const std::vector<MixedCochain>& ys);

// <x, y> = x{y} - (-1)^{|x||y|} y{x} on suspended cochains.
Cochain lie_bracket(const Cochain& x, const Cochain& y);
MixedCochain lie_bracket(const MixedCochain& x, const MixedCochain& y);

// Base-level cochains carry the transported brace structure; this helper
// suspends, braces and unsuspends in one step.
MixedCochain base_brace(const MixedCochain& x, const std::vector<MixedCochain>& ys);

// Insertion product at base level, the sum over the n positions at which psi
// can be substituted into one slot of phi:
//   phi . psi = sum_k (-1)^{(deg phi + k + 1)(arity psi + 1)} phi(1...1 psi 1..1)
// with k slots below psi, where the substitution itself follows the Koszul
// rule (psi crosses the arguments above its block at their base degrees).
// Arity-0 phi gives the empty sum.  Equality with the suspended-brace route is
// a separately tested property, not the implementation.
Cochain dot(const Cochain& phi, const Cochain& psi);
MixedCochain dot(const MixedCochain& phi, const MixedCochain& psi);

// Gerstenhaber-type commutator [w, phi] = w.phi - (-1)^{(deg w+1)(deg phi+1)} phi.w
// at base level.
MixedCochain dot_commutator(const MixedCochain& w, const MixedCochain& phi);

}  // namespace embrace
