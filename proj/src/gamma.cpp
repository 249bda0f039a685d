#include "pp3/gamma.hpp"

namespace pp3 {

IntVec k_coords(const GroupRingElement& x)
{
    if (x.augmentation() != 0)
        throw std::invalid_argument("element is not in the augmentation ideal");
    const IntVec& c = x.coeffs();
    return IntVec(c.begin() + 1, c.end());
}

GroupRingElement from_k_coords(int f, const IntVec& v)
{
    if (v.size() + 1 != static_cast<std::size_t>(f))
        throw std::invalid_argument("K-coordinate vector must have length f-1");
    IntVec c(static_cast<std::size_t>(f));
    for (std::size_t i = 0; i < v.size(); ++i) {
        c[i + 1] = v[i];
        c[0] -= v[i];
    }
    return GroupRingElement(f, std::move(c));
}

IntMat k_shift_matrix(int f)
{
    const std::size_t n = static_cast<std::size_t>(f) - 1;
    IntMat m(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        GroupRingElement ki =
            GroupRingElement::basis(f, static_cast<long>(i)) - GroupRingElement::basis(f, 0);
        IntVec col = k_coords(ki.act(1));
        for (std::size_t r = 0; r < n; ++r)
            m(r, i - 1) = col[r];
    }
    return m;
}

std::size_t gamma_rank(int f)
{
    if (f < 1)
        throw std::invalid_argument("gamma_rank: f must be >= 1");
    const std::size_t n = static_cast<std::size_t>(f) - 1;
    return n + (n >= 2 ? n * (n - 1) / 2 : 0);
}

std::size_t gamma_index(int f, std::size_t i)
{
    if (i < 1 || i > static_cast<std::size_t>(f) - 1)
        throw std::invalid_argument("gamma_index out of range");
    return i - 1;
}

std::size_t bracket_index(int f, std::size_t i, std::size_t j)
{
    const std::size_t n = static_cast<std::size_t>(f) - 1;
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("bracket_index out of range");
    /* brackets ordered (1,2),(1,3),...,(1,n),(2,3),... */
    std::size_t off = n;
    off += (i - 1) * n - (i - 1) * i / 2;
    off += j - i - 1;
    return off;
}

GammaElement::GammaElement(int f) : f_(f), c_(gamma_rank(f)) {}

GammaElement::GammaElement(int f, IntVec coords) : f_(f), c_(std::move(coords))
{
    if (c_.size() != gamma_rank(f))
        throw std::invalid_argument("GammaElement: coordinate length mismatch");
}

GammaElement& GammaElement::operator+=(const GammaElement& o)
{
    if (f_ != o.f_)
        throw std::invalid_argument("GammaElement: modulus mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

GammaElement operator-(const GammaElement& a)
{
    GammaElement r(a.f_);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r.c_[i] = -a.c_[i];
    return r;
}

GammaElement operator*(const Int& c, GammaElement a)
{
    for (Int& x : a.c_)
        x *= c;
    return a;
}

GammaElement gamma_expand(int f, const IntVec& kc)
{
    const std::size_t n = static_cast<std::size_t>(f) - 1;
    if (kc.size() != n)
        throw std::invalid_argument("gamma_expand: K-coordinate length mismatch");
    IntVec c(gamma_rank(f));
    for (std::size_t i = 1; i <= n; ++i)
        c[gamma_index(f, i)] = kc[i - 1] * kc[i - 1];
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            c[bracket_index(f, i, j)] = kc[i - 1] * kc[j - 1];
    return GammaElement(f, std::move(c));
}

GammaElement bracket_expand(int f, const IntVec& u, const IntVec& v)
{
    const std::size_t n = static_cast<std::size_t>(f) - 1;
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("bracket_expand: K-coordinate length mismatch");
    IntVec c(gamma_rank(f));
    for (std::size_t i = 1; i <= n; ++i)
        c[gamma_index(f, i)] = 2 * u[i - 1] * v[i - 1];
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            c[bracket_index(f, i, j)] = u[i - 1] * v[j - 1] + u[j - 1] * v[i - 1];
    return GammaElement(f, std::move(c));
}

namespace {

GroupRingElement k_basis_element(int f, std::size_t i)
{
    return GroupRingElement::basis(f, static_cast<long>(i)) - GroupRingElement::basis(f, 0);
}

}  // namespace

TensorElement tau_embed(const GammaElement& g)
{
    const int f = g.modulus();
    const std::size_t n = static_cast<std::size_t>(f) - 1;
    TensorElement t(f);
    for (std::size_t i = 1; i <= n; ++i) {
        const Int& c = g.coords()[gamma_index(f, i)];
        if (c != 0) {
            GroupRingElement ki = k_basis_element(f, i);
            t += c * TensorElement::outer(ki, ki);
        }
    }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            const Int& c = g.coords()[bracket_index(f, i, j)];
            if (c != 0) {
                GroupRingElement ki = k_basis_element(f, i), kj = k_basis_element(f, j);
                t += c * (TensorElement::outer(ki, kj) + TensorElement::outer(kj, ki));
            }
        }
    return t;
}

std::optional<GammaElement> tau_preimage(const TensorElement& t)
{
    const int f = t.modulus();
    const std::size_t n = static_cast<std::size_t>(f) - 1;
    IntVec c(gamma_rank(f));
    for (std::size_t i = 1; i <= n; ++i)
        c[gamma_index(f, i)] = t.entry(i, i);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            c[bracket_index(f, i, j)] = t.entry(i, j);
    GammaElement g(f, std::move(c));
    if (!(tau_embed(g) == t))
        return std::nullopt;  // not supported on K (x) K, or not symmetric
    return g;
}

std::vector<GammaElement> delta_B_generators(int f, const GroupRingElement& x)
{
    if (x.modulus() != f)
        throw std::invalid_argument("delta_B_generators: modulus mismatch");
    if (x.augmentation() != 0)
        throw std::invalid_argument("delta_B_generators: x is not in the augmentation ideal");

    std::vector<IntVec> xshift;  // K-coordinates of x [j bar]
    for (int j = 0; j < f; ++j)
        xshift.push_back(k_coords(x.act(j)));

    std::vector<GammaElement> gens;
    for (int j = 0; j < f; ++j)
        gens.push_back(gamma_expand(f, xshift[j]));
    for (int i = 0; i < f; ++i)
        for (int j = i + 1; j < f; ++j)
            gens.push_back(bracket_expand(f, xshift[i], xshift[j]));
    for (int i = 1; i < f; ++i) {
        IntVec e(static_cast<std::size_t>(f) - 1);
        e[i - 1] = 1;
        for (int j = 0; j < f; ++j)
            gens.push_back(bracket_expand(f, e, xshift[j]));
    }
    return gens;
}

FgAbGroup gamma_of_cyclic(const Int& d)
{
    if (d < 0)
        throw std::invalid_argument("gamma_of_cyclic: d must be nonnegative");
    if (d == 0)
        return FgAbGroup{{}, 1};
    if (d == 1)
        return FgAbGroup{{}, 0};
    return FgAbGroup{{d * gcd(d, Int(2))}, 0};
}

GammaPi2::GammaPi2(int f, const GroupRingElement& x) : f_(f), x_(x)
{
    if (f < 2)
        throw std::invalid_argument("GammaPi2: f must be >= 2");
    if (x.modulus() != f)
        throw std::invalid_argument("GammaPi2: modulus mismatch");
    if (x.augmentation() != 0)
        throw std::invalid_argument("GammaPi2: x is not in the augmentation ideal");

    const std::size_t g = gamma_rank(f);
    std::vector<IntVec> gens;
    for (const GammaElement& e : delta_B_generators(f, x))
        gens.push_back(e.coords());
    quot_ = LatticeQuotient(g, gens);

    /* action on Gamma(K) through tau and the diagonal shift on R (x) R */
    gammaK_action_ = IntMat(g, g);
    for (std::size_t b = 0; b < g; ++b) {
        IntVec unit(g);
        unit[b] = 1;
        auto im = tau_preimage(tau_embed(GammaElement(f, unit)).act(1));
        if (!im)
            throw std::logic_error("GammaPi2: shift does not preserve Gamma(K)");
        for (std::size_t r = 0; r < g; ++r)
            gammaK_action_(r, b) = im->coords()[r];
    }
    action_ = quot_.push_endomorphism(gammaK_action_);
}

IntVec GammaPi2::reduce(const GammaElement& g) const
{
    if (g.modulus() != f_)
        throw std::invalid_argument("GammaPi2::reduce: modulus mismatch");
    return quot_.reduce(g.coords());
}

GammaElement GammaPi2::lift_element(const IntVec& canonical) const
{
    return GammaElement(f_, quot_.lift(canonical));
}

std::optional<IntVec> GammaPi2::try_reduce_tensor(const TensorElement& t) const
{
    auto g = tau_preimage(t);
    if (!g)
        return std::nullopt;
    return reduce(*g);
}

IntVec GammaPi2::reduce_tensor(const TensorElement& t) const
{
    auto r = try_reduce_tensor(t);
    if (!r)
        throw std::logic_error("reduce_tensor: tensor does not lie in Gamma(K)");
    return *r;
}

IntVec GammaPi2::gamma_q(const IntVec& kc) const
{
    return reduce(gamma_expand(f_, kc));
}

}  // namespace pp3
