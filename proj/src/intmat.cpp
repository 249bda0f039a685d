#include "pp3/intmat.hpp"

#include <sstream>

namespace pp3 {

IntMat IntMat::identity(std::size_t n)
{
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMat IntMat::from_columns(std::size_t rows, const std::vector<IntVec>& cols)
{
    IntMat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMat::row(std::size_t i) const
{
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        v[j] = (*this)(i, j);
    return v;
}

IntVec IntMat::col(std::size_t j) const
{
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

void IntMat::set_col(std::size_t j, const IntVec& v)
{
    if (v.size() != rows_)
        throw std::invalid_argument("set_col: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

IntMat IntMat::transposed() const
{
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool IntMat::is_zero() const
{
    for (const Int& x : a_)
        if (x != 0)
            return false;
    return true;
}

void IntMat::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap((*this)(i, k), (*this)(j, k));
}

void IntMat::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap((*this)(k, i), (*this)(k, j));
}

void IntMat::add_row(std::size_t i, std::size_t j, const Int& c)
{
    for (std::size_t k = 0; k < cols_; ++k)
        (*this)(i, k) += c * (*this)(j, k);
}

void IntMat::add_col(std::size_t i, std::size_t j, const Int& c)
{
    for (std::size_t k = 0; k < rows_; ++k)
        (*this)(k, i) += c * (*this)(k, j);
}

void IntMat::negate_row(std::size_t i)
{
    for (std::size_t k = 0; k < cols_; ++k)
        (*this)(i, k) = -(*this)(i, k);
}

void IntMat::negate_col(std::size_t j)
{
    for (std::size_t k = 0; k < rows_; ++k)
        (*this)(k, j) = -(*this)(k, j);
}

std::string IntMat::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

IntMat operator*(const IntMat& a, const IntMat& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: shape mismatch");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

IntVec operator*(const IntMat& a, const IntVec& v)
{
    if (a.cols() != v.size())
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    IntVec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                r[i] += a(i, j) * v[j];
    return r;
}

IntMat operator+(const IntMat& a, const IntMat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shape mismatch");
    IntMat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntMat operator-(const IntMat& a, const IntMat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: shape mismatch");
    IntMat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) - b(i, j);
    return c;
}

IntVec operator+(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector sum: length mismatch");
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

IntVec operator-(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector difference: length mismatch");
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] - b[i];
    return c;
}

IntVec operator-(const IntVec& a)
{
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = -a[i];
    return c;
}

IntVec operator*(const Int& c, const IntVec& v)
{
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

Int dot(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVec& v)
{
    for (const Int& x : v)
        if (x != 0)
            return false;
    return true;
}

Int determinant(IntMat m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t / prev;  // exact by Bareiss
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Int floordiv(const Int& a, const Int& b)
{
    if (b == 0)
        throw std::invalid_argument("floordiv by zero");
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

Int mod(const Int& a, const Int& b)
{
    if (b == 0)
        return a;
    Int r = a % b;
    if (r < 0)
        r += abs(b);
    return r;
}

}  // namespace pp3
