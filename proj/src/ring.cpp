#include "pp3/ring.hpp"

#include <sstream>

namespace pp3 {

namespace {

void check_modulus(int f)
{
    if (f < 1)
        throw std::invalid_argument("group ring modulus must be >= 1 (f = 0 is not supported)");
}

std::size_t wrap(long k, int f)
{
    long r = k % f;
    if (r < 0)
        r += f;
    return static_cast<std::size_t>(r);
}

}  // namespace

GroupRingElement::GroupRingElement(int f) : f_(f), c_(static_cast<std::size_t>(f))
{
    check_modulus(f);
}

GroupRingElement::GroupRingElement(int f, IntVec coeffs) : f_(f), c_(std::move(coeffs))
{
    check_modulus(f);
    if (c_.size() != static_cast<std::size_t>(f))
        throw std::invalid_argument("GroupRingElement: expected exactly f coefficients");
}

GroupRingElement GroupRingElement::basis(int f, long k)
{
    GroupRingElement e(f);
    e.c_[wrap(k, f)] = 1;
    return e;
}

GroupRingElement GroupRingElement::norm(int f)
{
    GroupRingElement e(f);
    for (Int& x : e.c_)
        x = 1;
    return e;
}

Int GroupRingElement::augmentation() const
{
    Int s = 0;
    for (const Int& x : c_)
        s += x;
    return s;
}

GroupRingElement GroupRingElement::act(long k) const
{
    GroupRingElement r(f_);
    std::size_t s = wrap(k, f_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[(i + s) % c_.size()] = c_[i];
    return r;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o)
{
    if (f_ != o.f_)
        throw std::invalid_argument("group ring modulus mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o)
{
    if (f_ != o.f_)
        throw std::invalid_argument("group ring modulus mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

GroupRingElement operator-(const GroupRingElement& a)
{
    GroupRingElement r(a.f_);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r.c_[i] = -a.c_[i];
    return r;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b)
{
    if (a.f_ != b.f_)
        throw std::invalid_argument("group ring modulus mismatch");
    GroupRingElement r(a.f_);
    const std::size_t f = a.c_.size();
    for (std::size_t i = 0; i < f; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < f; ++j)
            r.c_[(i + j) % f] += a.c_[i] * b.c_[j];
    }
    return r;
}

GroupRingElement operator*(const Int& c, GroupRingElement a)
{
    for (Int& x : a.c_)
        x *= c;
    return a;
}

std::string GroupRingElement::to_text() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i)
        os << (i ? "," : "") << c_[i];
    return os.str();
}

GroupRingElement GroupRingElement::from_text(int f, const std::string& text)
{
    check_modulus(f);
    IntVec coeffs;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty())
            throw std::invalid_argument("empty coefficient in \"" + text + "\"");
        coeffs.emplace_back(tok);
    }
    if (coeffs.size() != static_cast<std::size_t>(f))
        throw std::invalid_argument("expected " + std::to_string(f) + " coefficients");
    return GroupRingElement(f, std::move(coeffs));
}

IntMat mult_operator_matrix(const GroupRingElement& x)
{
    const int f = x.modulus();
    IntMat m(f, f);
    for (int j = 0; j < f; ++j) {
        GroupRingElement col = x * GroupRingElement::basis(f, j);
        for (int i = 0; i < f; ++i)
            m(i, j) = col.coeff(i);
    }
    return m;
}

IntMat r_shift_matrix(int f)
{
    check_modulus(f);
    IntMat m(f, f);
    for (int i = 0; i < f; ++i)
        m((i + 1) % f, i) = 1;
    return m;
}

TensorElement::TensorElement(int f) : f_(f), e_(static_cast<std::size_t>(f), static_cast<std::size_t>(f))
{
    check_modulus(f);
}

TensorElement::TensorElement(int f, IntMat entries) : f_(f), e_(std::move(entries))
{
    check_modulus(f);
    if (e_.rows() != static_cast<std::size_t>(f) || e_.cols() != static_cast<std::size_t>(f))
        throw std::invalid_argument("TensorElement: entries must be f x f");
}

TensorElement TensorElement::basis(int f, std::size_t a, std::size_t b)
{
    if (a >= static_cast<std::size_t>(f) || b >= static_cast<std::size_t>(f))
        throw std::invalid_argument("TensorElement::basis: index out of range");
    TensorElement t(f);
    t.e_(a, b) = 1;
    return t;
}

TensorElement TensorElement::outer(const GroupRingElement& a, const GroupRingElement& b)
{
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("tensor outer product: modulus mismatch");
    TensorElement t(a.modulus());
    const std::size_t f = t.e_.rows();
    for (std::size_t i = 0; i < f; ++i) {
        if (a.coeff(i) == 0)
            continue;
        for (std::size_t j = 0; j < f; ++j)
            t.e_(i, j) = a.coeff(i) * b.coeff(j);
    }
    return t;
}

TensorElement TensorElement::diag(const GroupRingElement& v)
{
    TensorElement t(v.modulus());
    for (std::size_t i = 0; i < t.e_.rows(); ++i)
        t.e_(i, i) = v.coeff(i);
    return t;
}

TensorElement TensorElement::act(long k) const
{
    TensorElement r(f_);
    const std::size_t f = e_.rows();
    const std::size_t s = wrap(k, f_);
    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = 0; j < f; ++j)
            r.e_((i + s) % f, (j + s) % f) = e_(i, j);
    return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    if (f_ != o.f_)
        throw std::invalid_argument("tensor modulus mismatch");
    e_ = e_ + o.e_;
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o)
{
    if (f_ != o.f_)
        throw std::invalid_argument("tensor modulus mismatch");
    e_ = e_ - o.e_;
    return *this;
}

TensorElement operator-(const TensorElement& a)
{
    TensorElement r(a.f_);
    for (std::size_t i = 0; i < a.e_.rows(); ++i)
        for (std::size_t j = 0; j < a.e_.cols(); ++j)
            r.e_(i, j) = -a.e_(i, j);
    return r;
}

TensorElement operator*(const Int& c, TensorElement a)
{
    for (std::size_t i = 0; i < a.e_.rows(); ++i)
        for (std::size_t j = 0; j < a.e_.cols(); ++j)
            a.e_(i, j) *= c;
    return a;
}

IntVec TensorElement::flatten() const
{
    IntVec v;
    v.reserve(e_.rows() * e_.cols());
    for (std::size_t i = 0; i < e_.rows(); ++i)
        for (std::size_t j = 0; j < e_.cols(); ++j)
            v.push_back(e_(i, j));
    return v;
}

TensorElement TensorElement::from_flat(int f, const IntVec& v)
{
    check_modulus(f);
    const std::size_t n = static_cast<std::size_t>(f);
    if (v.size() != n * n)
        throw std::invalid_argument("TensorElement::from_flat: expected f^2 entries");
    IntMat e(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e(i, j) = v[i * n + j];
    return TensorElement(f, std::move(e));
}

IntMat tensor_shift_matrix(int f)
{
    check_modulus(f);
    const std::size_t n = static_cast<std::size_t>(f);
    IntMat m(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(((i + 1) % n) * n + ((j + 1) % n), i * n + j) = 1;
    return m;
}

}  // namespace pp3
