#pragma once

#include "pp3/intmat.hpp"

#include <optional>

namespace pp3 {

/* u * a * v = d, with u, v unimodular and d diagonal satisfying the
 * divisibility chain d_1 | d_2 | ... (nonnegative entries, zeros last).
 * uinv and vinv are maintained alongside so that lattice witnesses
 * (reduction and lifting maps) come for free. */
struct SnfResult {
    IntMat u, uinv, d, v, vinv;
    std::size_t rank = 0;  // number of nonzero diagonal entries
    IntVec diagonal() const;
};

SnfResult smith_normal_form(const IntMat& a);

/* basis of { v : a v = 0 } (saturated: a Z-basis of the kernel lattice) */
std::vector<IntVec> kernel_basis(const IntMat& a);

/* some integer solution of a v = rhs, if one exists */
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& rhs);

/* Unsolvability witness for a system of congruences a v = rhs (mod moduli):
 * an integer row lambda and modulus g with lambda*a = 0 (mod g) entrywise,
 * lambda_i * m_i = 0 (mod g) for every row i, but lambda*rhs != 0 (mod g).
 * g == 0 means exact equality over Z. */
struct UnsolvableCert {
    IntVec lambda;
    Int modulus;
};

struct SolveResult {
    std::optional<IntVec> solution;
    std::optional<UnsolvableCert> certificate;
};

/* Solve a v = rhs where row i is a congruence mod moduli[i]
 * (modulus 0 = exact equation over Z). */
SolveResult solve_with_moduli(const IntMat& a, const IntVec& rhs, const IntVec& moduli);

bool check_certificate(const IntMat& a, const IntVec& rhs, const IntVec& moduli,
                       const UnsolvableCert& cert);

/* Finitely generated abelian group in canonical form: Z^rank + sum Z/d_i
 * with d_1 | d_2 | ... and every d_i >= 2.  Elements are coordinate
 * vectors (torsion coordinates first, each reduced into [0, d_i) --
 * normalize() re-establishes that), so equality of elements is equality
 * of vectors. */
struct FgAbGroup {
    std::vector<Int> torsion;
    std::size_t rank = 0;

    std::size_t dim() const { return torsion.size() + rank; }
    IntVec zero() const { return IntVec(dim()); }
    void normalize(IntVec& coords) const;
    IntVec normalized(IntVec coords) const;
    IntVec add(const IntVec& a, const IntVec& b) const;
    IntVec sub(const IntVec& a, const IntVec& b) const;
    IntVec neg(const IntVec& a) const;
    IntVec scaled(const Int& c, const IntVec& a) const;
    bool is_zero(const IntVec& a) const;
    Int order_of(IntVec a) const;  // 0 = infinite order
    Int order() const;             // group order, 0 = infinite
    bool operator==(const FgAbGroup&) const = default;
    std::string to_string() const;  // e.g. "Z^2 + Z/2 + Z/4"

    /* endomorphism given by a dim x dim matrix on canonical coordinates */
    IntVec apply(const IntMat& endo, const IntVec& a) const;
    IntMat normalized_endo(IntMat endo) const;
    IntMat endo_power(const IntMat& endo, unsigned k) const;
    bool is_identity_endo(const IntMat& endo) const;
};

/* morphism of canonical-form groups; matrix columns must respect torsion */
struct AbMorphism {
    FgAbGroup src, tgt;
    IntMat matrix;
    AbMorphism() = default;
    AbMorphism(FgAbGroup s, FgAbGroup t, IntMat m);
    IntVec apply(const IntVec& a) const;
};

/* The quotient Z^n / <generators>, with the witness maps the rest of the
 * project runs on: reduce (ambient -> canonical coordinates), lift
 * (canonical -> some ambient representative), and membership. */
class LatticeQuotient {
public:
    LatticeQuotient() = default;
    LatticeQuotient(std::size_t ambient_dim, const std::vector<IntVec>& generators);

    std::size_t ambient_dim() const { return n_; }
    const FgAbGroup& group() const { return grp_; }

    IntVec reduce(const IntVec& ambient) const;
    IntVec lift(const IntVec& canonical) const;
    bool contains(const IntVec& ambient) const;  // ambient in the sublattice

    /* Canonical matrix of an ambient-linear map that preserves the
     * sublattice (checked; throws std::logic_error otherwise). */
    IntMat push_endomorphism(const IntMat& t_ambient) const;

private:
    std::size_t n_ = 0;
    FgAbGroup grp_;
    IntMat red_;  // dim x n
    IntMat lif_;  // n x dim
    std::vector<IntVec> gens_;
};

/* cokernel of a as a group with witnesses: Z^rows / column lattice */
LatticeQuotient cokernel(const IntMat& a);

}  // namespace pp3
