#pragma once

#include "pp3/ring.hpp"
#include "pp3/zmod.hpp"

#include <optional>

namespace pp3 {

/* The augmentation ideal K of Z[Z/f] is free abelian on
 * k_i = [i bar] - [0 bar], i = 1..f-1.  K-coordinates of x are simply
 * coeffs 1..f-1 once the augmentation vanishes. */
IntVec k_coords(const GroupRingElement& x);
GroupRingElement from_k_coords(int f, const IntVec& v);
/* (f-1) x (f-1) matrix of the action of the generator 1 bar on K */
IntMat k_shift_matrix(int f);

/* Gamma(K) is free abelian on gamma(k_1), ..., gamma(k_{f-1}) followed by
 * the Whitehead brackets [k_i, k_j], 1 <= i < j <= f-1. */
std::size_t gamma_rank(int f);
std::size_t gamma_index(int f, std::size_t i);                 // gamma(k_i), 1-based
std::size_t bracket_index(int f, std::size_t i, std::size_t j);  // [k_i,k_j], i < j

class GammaElement {
public:
    explicit GammaElement(int f);  // zero
    GammaElement(int f, IntVec coords);

    int modulus() const { return f_; }
    const IntVec& coords() const { return c_; }

    GammaElement& operator+=(const GammaElement& o);
    friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
    friend GammaElement operator-(const GammaElement& a);
    friend GammaElement operator*(const Int& c, GammaElement a);
    bool operator==(const GammaElement&) const = default;

private:
    int f_;
    IntVec c_;
};

/* quadratic expansion gamma(sum n_i k_i) =
 * sum n_i^2 gamma(k_i) + sum_{i<j} n_i n_j [k_i, k_j] */
GammaElement gamma_expand(int f, const IntVec& k_coords);

/* bilinear symmetric bracket with [k_i, k_i] = 2 gamma(k_i) */
GammaElement bracket_expand(int f, const IntVec& u, const IntVec& v);

/* gamma(k_i) -> k_i (x) k_i, [k_i,k_j] -> k_i (x) k_j + k_j (x) k_i */
TensorElement tau_embed(const GammaElement& g);

/* inverse of tau_embed on its image; nullopt when t is not in the image */
std::optional<GammaElement> tau_preimage(const TensorElement& t);

/* Generating set of Delta_B = Gamma(B) + [K, B] for B = xR, as a sublattice
 * of Gamma(K): gamma(x [j bar]), [x [i bar], x [j bar]] for i < j, and
 * [k_i, x [j bar]].  Requires x in K. */
std::vector<GammaElement> delta_B_generators(int f, const GroupRingElement& x);

/* Gamma(Z) = Z; Gamma(Z/d) = Z/(d * gcd(d,2)); d = 0 means Z */
FgAbGroup gamma_of_cyclic(const Int& d);

/* Gamma(pi_2 P_{f,x}) = Gamma(K) / Delta_B, with the pi_1-action induced
 * through tau by the diagonal action on R (x) R, plus the map gamma.q from
 * K-coordinates. */
class GammaPi2 {
public:
    GammaPi2(int f, const GroupRingElement& x);

    int f() const { return f_; }
    const GroupRingElement& x() const { return x_; }
    const FgAbGroup& group() const { return quot_.group(); }
    const IntMat& action() const { return action_; }
    const LatticeQuotient& quotient() const { return quot_; }
    const IntMat& gammaK_action() const { return gammaK_action_; }

    IntVec reduce(const GammaElement& g) const;
    GammaElement lift_element(const IntVec& canonical) const;

    /* reduce a tensor that is supposed to lie in Gamma(K) subset R (x) R;
     * failure of the membership is a bug upstream, hence logic_error */
    std::optional<IntVec> try_reduce_tensor(const TensorElement& t) const;
    IntVec reduce_tensor(const TensorElement& t) const;

    /* gamma . q on K-coordinates */
    IntVec gamma_q(const IntVec& k_coords) const;

private:
    int f_;
    GroupRingElement x_;
    LatticeQuotient quot_;
    IntMat gammaK_action_;
    IntMat action_;
};

}  // namespace pp3
