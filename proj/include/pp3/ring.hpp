#pragma once

#include "pp3/intmat.hpp"

namespace pp3 {

/* Element of the group ring R = Z[Z/f], stored as the coefficient vector
 * of [0bar], ..., [f-1 bar].  f = 0 (infinite cyclic) is rejected; the
 * computations downstream assume a finite cyclic fundamental group. */
class GroupRingElement {
public:
    explicit GroupRingElement(int f);  // zero element
    GroupRingElement(int f, IntVec coeffs);

    static GroupRingElement basis(int f, long k);  // [k bar]
    static GroupRingElement norm(int f);           // sum of all group elements

    int modulus() const { return f_; }
    const IntVec& coeffs() const { return c_; }
    const Int& coeff(std::size_t k) const { return c_.at(k); }
    bool is_zero() const { return pp3::is_zero(c_); }

    Int augmentation() const;
    /* right pi_1-action x^k = x [k bar]: cyclic shift of indices by k */
    GroupRingElement act(long k) const;

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b)
    {
        return a += b;
    }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b)
    {
        return a -= b;
    }
    friend GroupRingElement operator-(const GroupRingElement& a);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(const Int& c, GroupRingElement a);
    bool operator==(const GroupRingElement&) const = default;

    std::string to_text() const;  // "c0,c1,...,c{f-1}"
    static GroupRingElement from_text(int f, const std::string& text);

private:
    int f_;
    IntVec c_;
};

/* matrix of y |-> x y on the basis [0bar..f-1bar]; column j = coeffs of x*[j bar] */
IntMat mult_operator_matrix(const GroupRingElement& x);

/* f x f permutation matrix of the shift v |-> v^1 on R */
IntMat r_shift_matrix(int f);

/* Element of R (x) R as an f x f integer matrix; entry (a,b) is the
 * coefficient of [a bar] (x) [b bar]. */
class TensorElement {
public:
    explicit TensorElement(int f);  // zero
    TensorElement(int f, IntMat entries);

    static TensorElement basis(int f, std::size_t a, std::size_t b);
    static TensorElement outer(const GroupRingElement& a, const GroupRingElement& b);
    /* sum_n v_n [n bar] (x) [n bar] */
    static TensorElement diag(const GroupRingElement& v);

    int modulus() const { return f_; }
    const IntMat& entries() const { return e_; }
    const Int& entry(std::size_t a, std::size_t b) const { return e_(a, b); }
    bool is_zero() const { return e_.is_zero(); }

    /* diagonal pi_1-action: simultaneous cyclic shift of rows and columns */
    TensorElement act(long k) const;

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator-(const TensorElement& a);
    friend TensorElement operator*(const Int& c, TensorElement a);
    bool operator==(const TensorElement&) const = default;

    IntVec flatten() const;  // row-major, length f^2
    static TensorElement from_flat(int f, const IntVec& v);

private:
    int f_;
    IntMat e_;
};

/* f^2 x f^2 permutation matrix of the diagonal shift on flattened tensors */
IntMat tensor_shift_matrix(int f);

}  // namespace pp3
