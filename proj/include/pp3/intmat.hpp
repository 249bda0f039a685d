#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pp3 {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/* Dense matrix over Z with exact (arbitrary precision) entries.
 * Everything in this project is small (side <= f^2 with f <= ~12),
 * so no attempt is made at sparsity or asymptotic cleverness. */
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n);
    static IntMat from_columns(std::size_t rows, const std::vector<IntVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    void set_col(std::size_t j, const IntVec& v);

    IntMat transposed() const;
    bool is_zero() const;
    bool operator==(const IntMat&) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /* row_i += c * row_j, col_i += c * col_j */
    void add_row(std::size_t i, std::size_t j, const Int& c);
    void add_col(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    IntVec a_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntMat& a, const IntVec& v);
IntMat operator+(const IntMat& a, const IntMat& b);
IntMat operator-(const IntMat& a, const IntMat& b);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(const Int& c, const IntVec& v);
Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);

/* exact determinant (Bareiss fraction-free elimination) */
Int determinant(IntMat m);

/* floored quotient / nonnegative remainder; mod(a, 0) == a */
Int floordiv(const Int& a, const Int& b);
Int mod(const Int& a, const Int& b);

}  // namespace pp3
