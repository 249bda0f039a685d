#pragma once

namespace pp3::fault {

/* Fault-injection points for the negative-control tests: each site flips
 * the sign of one term family in the corresponding cross-effect formula.
 * Off by default; production behaviour is untouched unless inject() is
 * called (the verify sweep exposes this through --inject-fault). */
enum class Site { none, nabla, q_k, l_k, mu, psi, psi_bar_1 };

void inject(Site s);
Site active();

/* -1 when s is the active site, +1 otherwise */
int sign(Site s);

}  // namespace pp3::fault
