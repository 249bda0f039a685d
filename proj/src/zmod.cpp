#include "pp3/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pp3 {

IntVec SnfResult::diagonal() const
{
    std::size_t n = std::min(d.rows(), d.cols());
    IntVec out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = d(i, i);
    return out;
}

namespace {

/* Elementary operations on the working matrix, mirrored into the
 * transforms and their inverses so that u*a*v = d stays exact. */
struct SnfWork {
    IntMat d, u, uinv, v, vinv;

    explicit SnfWork(const IntMat& a)
        : d(a),
          u(IntMat::identity(a.rows())),
          uinv(IntMat::identity(a.rows())),
          v(IntMat::identity(a.cols())),
          vinv(IntMat::identity(a.cols()))
    {
    }

    void row_add(std::size_t i, std::size_t j, const Int& c)
    {
        d.add_row(i, j, c);
        u.add_row(i, j, c);
        uinv.add_col(j, i, -c);
    }
    void col_add(std::size_t i, std::size_t j, const Int& c)
    {
        d.add_col(i, j, c);
        v.add_col(i, j, c);
        vinv.add_row(j, i, -c);
    }
    void row_swap(std::size_t i, std::size_t j)
    {
        d.swap_rows(i, j);
        u.swap_rows(i, j);
        uinv.swap_cols(i, j);
    }
    void col_swap(std::size_t i, std::size_t j)
    {
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    }
    void row_negate(std::size_t i)
    {
        d.negate_row(i);
        u.negate_row(i);
        uinv.negate_col(i);
    }

    /* minimal |nonzero| entry of the trailing submatrix, first in a
     * row-major scan; deterministic pivoting keeps witnesses reproducible */
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const
    {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < d.rows(); ++i)
            for (std::size_t j = t; j < d.cols(); ++j) {
                const Int& x = d(i, j);
                if (x == 0)
                    continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& a)
{
    SnfWork w(a);
    const std::size_t r = a.rows(), c = a.cols();
    const std::size_t steps = std::min(r, c);

    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi, pj;
        if (!w.find_pivot(t, pi, pj))
            break;
        for (;;) {
            if (!w.find_pivot(t, pi, pj))
                break;  // cannot happen; keeps the loop self-contained
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool remainder = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (w.d(i, t) == 0)
                    continue;
                Int q = w.d(i, t) / w.d(t, t);  // truncated; leaves |rem| < |pivot|
                if (q != 0)
                    w.row_add(i, t, -q);
                if (w.d(i, t) != 0)
                    remainder = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (w.d(t, j) == 0)
                    continue;
                Int q = w.d(t, j) / w.d(t, t);
                if (q != 0)
                    w.col_add(j, t, -q);
                if (w.d(t, j) != 0)
                    remainder = true;
            }
            if (remainder)
                continue;

            /* pivot must divide the rest of the submatrix for the chain */
            bool fixed = true;
            for (std::size_t i = t + 1; i < r && fixed; ++i)
                for (std::size_t j = t + 1; j < c && fixed; ++j)
                    if (w.d(i, j) % w.d(t, t) != 0) {
                        w.row_add(t, i, 1);
                        fixed = false;
                    }
            if (fixed)
                break;
        }
        if (w.d(t, t) < 0)
            w.row_negate(t);
    }

    SnfResult res{std::move(w.u), std::move(w.uinv), std::move(w.d), std::move(w.v),
                  std::move(w.vinv)};
    for (std::size_t i = 0; i < steps; ++i)
        if (res.d(i, i) != 0)
            ++res.rank;
    return res;
}

std::vector<IntVec> kernel_basis(const IntMat& a)
{
    SnfResult s = smith_normal_form(a);
    std::vector<IntVec> basis;
    for (std::size_t j = s.rank; j < a.cols(); ++j)
        basis.push_back(s.v.col(j));
    return basis;
}

SolveResult solve_with_moduli(const IntMat& a, const IntVec& rhs, const IntVec& moduli)
{
    const std::size_t k = a.rows(), n = a.cols();
    if (rhs.size() != k || moduli.size() != k)
        throw std::invalid_argument("solve_with_moduli: dimension mismatch");
    for (const Int& m : moduli)
        if (m < 0)
            throw std::invalid_argument("solve_with_moduli: negative modulus");

    /* append one column m_i * e_i per positive modulus */
    std::vector<IntVec> cols;
    cols.reserve(n + k);
    for (std::size_t j = 0; j < n; ++j)
        cols.push_back(a.col(j));
    for (std::size_t i = 0; i < k; ++i)
        if (moduli[i] > 0) {
            IntVec e(k);
            e[i] = moduli[i];
            cols.push_back(std::move(e));
        }
    IntMat aug = IntMat::from_columns(k, cols);

    SnfResult s = smith_normal_form(aug);
    IntVec y = s.u * rhs;

    const std::size_t diagced = std::min(k, aug.cols());
    IntVec z(aug.cols());
    for (std::size_t i = 0; i < k; ++i) {
        Int di = (i < diagced) ? s.d(i, i) : Int(0);
        if (di != 0) {
            if (y[i] % di != 0)
                return {std::nullopt, UnsolvableCert{s.u.row(i), di}};
            z[i] = y[i] / di;
        } else if (y[i] != 0) {
            return {std::nullopt, UnsolvableCert{s.u.row(i), 0}};
        }
    }
    IntVec full = s.v * z;
    return {IntVec(full.begin(), full.begin() + n), std::nullopt};
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& rhs)
{
    return solve_with_moduli(a, rhs, IntVec(a.rows())).solution;
}

bool check_certificate(const IntMat& a, const IntVec& rhs, const IntVec& moduli,
                       const UnsolvableCert& cert)
{
    if (cert.lambda.size() != a.rows())
        return false;
    const Int& g = cert.modulus;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (mod(dot(cert.lambda, a.col(j)), g) != 0)
            return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (mod(cert.lambda[i] * moduli[i], g) != 0)
            return false;
    return mod(dot(cert.lambda, rhs), g) != 0;
}

void FgAbGroup::normalize(IntVec& coords) const
{
    if (coords.size() != dim())
        throw std::invalid_argument("FgAbGroup: coordinate length mismatch");
    for (std::size_t i = 0; i < torsion.size(); ++i)
        coords[i] = mod(coords[i], torsion[i]);
}

IntVec FgAbGroup::normalized(IntVec coords) const
{
    normalize(coords);
    return coords;
}

IntVec FgAbGroup::add(const IntVec& a, const IntVec& b) const
{
    return normalized(a + b);
}

IntVec FgAbGroup::sub(const IntVec& a, const IntVec& b) const
{
    return normalized(a - b);
}

IntVec FgAbGroup::neg(const IntVec& a) const
{
    return normalized(-a);
}

IntVec FgAbGroup::scaled(const Int& c, const IntVec& a) const
{
    return normalized(c * a);
}

bool FgAbGroup::is_zero(const IntVec& a) const
{
    return pp3::is_zero(normalized(a));
}

Int FgAbGroup::order_of(IntVec a) const
{
    normalize(a);
    for (std::size_t i = torsion.size(); i < dim(); ++i)
        if (a[i] != 0)
            return 0;
    Int ord = 1;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        Int o = torsion[i] / gcd(torsion[i], a[i]);
        ord = lcm(ord, o);
    }
    return ord;
}

Int FgAbGroup::order() const
{
    if (rank > 0)
        return 0;
    Int o = 1;
    for (const Int& d : torsion)
        o *= d;
    return o;
}

std::string FgAbGroup::to_string() const
{
    if (dim() == 0)
        return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const Int& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

IntVec FgAbGroup::apply(const IntMat& endo, const IntVec& a) const
{
    return normalized(endo * a);
}

IntMat FgAbGroup::normalized_endo(IntMat endo) const
{
    if (endo.rows() != dim() || endo.cols() != dim())
        throw std::invalid_argument("FgAbGroup: endomorphism shape mismatch");
    for (std::size_t i = 0; i < torsion.size(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            endo(i, j) = mod(endo(i, j), torsion[i]);
    return endo;
}

IntMat FgAbGroup::endo_power(const IntMat& endo, unsigned k) const
{
    IntMat p = IntMat::identity(dim());
    for (unsigned i = 0; i < k; ++i)
        p = normalized_endo(endo * p);
    return p;
}

bool FgAbGroup::is_identity_endo(const IntMat& endo) const
{
    return normalized_endo(endo) == normalized_endo(IntMat::identity(dim()));
}

AbMorphism::AbMorphism(FgAbGroup s, FgAbGroup t, IntMat m)
    : src(std::move(s)), tgt(std::move(t)), matrix(std::move(m))
{
    if (matrix.rows() != tgt.dim() || matrix.cols() != src.dim())
        throw std::invalid_argument("AbMorphism: shape mismatch");
    for (std::size_t j = 0; j < src.torsion.size(); ++j)
        if (!tgt.is_zero(src.torsion[j] * matrix.col(j)))
            throw std::invalid_argument("AbMorphism: matrix does not respect torsion");
}

IntVec AbMorphism::apply(const IntVec& a) const
{
    if (a.size() != src.dim())
        throw std::invalid_argument("AbMorphism: argument length mismatch");
    return tgt.normalized(matrix * a);
}

LatticeQuotient::LatticeQuotient(std::size_t ambient_dim, const std::vector<IntVec>& generators)
    : n_(ambient_dim), gens_(generators)
{
    IntMat rel = IntMat::from_columns(n_, generators);
    SnfResult s = smith_normal_form(rel);

    std::vector<std::size_t> torsion_rows, free_rows;
    const std::size_t diag = std::min(rel.rows(), rel.cols());
    for (std::size_t i = 0; i < n_; ++i) {
        Int di = (i < diag) ? s.d(i, i) : Int(0);
        if (di == 0)
            free_rows.push_back(i);
        else if (di >= 2) {
            torsion_rows.push_back(i);
            grp_.torsion.push_back(di);
        }
    }
    grp_.rank = free_rows.size();

    std::vector<std::size_t> sel = torsion_rows;
    sel.insert(sel.end(), free_rows.begin(), free_rows.end());

    red_ = IntMat(sel.size(), n_);
    lif_ = IntMat(n_, sel.size());
    for (std::size_t k = 0; k < sel.size(); ++k) {
        for (std::size_t j = 0; j < n_; ++j)
            red_(k, j) = s.u(sel[k], j);
        for (std::size_t i = 0; i < n_; ++i)
            lif_(i, k) = s.uinv(i, sel[k]);
    }
}

IntVec LatticeQuotient::reduce(const IntVec& ambient) const
{
    if (ambient.size() != n_)
        throw std::invalid_argument("LatticeQuotient: ambient length mismatch");
    return grp_.normalized(red_ * ambient);
}

IntVec LatticeQuotient::lift(const IntVec& canonical) const
{
    if (canonical.size() != grp_.dim())
        throw std::invalid_argument("LatticeQuotient: canonical length mismatch");
    return lif_ * canonical;
}

bool LatticeQuotient::contains(const IntVec& ambient) const
{
    return pp3::is_zero(reduce(ambient));
}

IntMat LatticeQuotient::push_endomorphism(const IntMat& t_ambient) const
{
    if (t_ambient.rows() != n_ || t_ambient.cols() != n_)
        throw std::invalid_argument("push_endomorphism: shape mismatch");
    for (const IntVec& g : gens_)
        if (!contains(t_ambient * g))
            throw std::logic_error("push_endomorphism: map does not preserve the sublattice");
    return grp_.normalized_endo(red_ * t_ambient * lif_);
}

LatticeQuotient cokernel(const IntMat& a)
{
    std::vector<IntVec> cols;
    cols.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        cols.push_back(a.col(j));
    return LatticeQuotient(a.rows(), cols);
}

}  // namespace pp3
