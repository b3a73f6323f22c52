#ifndef HOPFG_MODEL_HPP
#define HOPFG_MODEL_HPP

// Concrete models: a finite-dimensional selfdual-ribbon structure given by
// dense structure tensors over an exact ring.  A model assigns the same
// d-dimensional module to every arrow label; only trivial-groupoid terms are
// evaluated against a model, so the tensors carry no label dependence.

#include <vector>

#include "hopfg/ring.hpp"
#include "hopfg/term.hpp"

namespace hopfg {

// Dense tensors in row-major order, input indices before output indices.
//   mul[(x*d+y)*d+z]        coefficient of z in x*y
//   comul[(x*d+y)*d+z]      coefficient of y (x) z in comul(x)  -- i.e. index (x,y,z)
//   braid[((x*d+y)*d+u)*d+v] coefficient of u (x) v in braid(x (x) y)
struct HopfModel {
    int d = 1;
    long long prime = 0;  // 0 = exact rationals, else mod-p

    std::vector<Frac> mul;         // d^3
    std::vector<Frac> comul;       // d^3
    std::vector<Frac> unit;        // d
    std::vector<Frac> counit;      // d
    std::vector<Frac> antipode;    // d^2  [x*d+y] = coeff of y in S(x)
    std::vector<Frac> antipodeinv; // d^2
    std::vector<Frac> ribbon;      // d^2
    std::vector<Frac> ribboninv;   // d^2
    std::vector<Frac> braid;       // d^4
    std::vector<Frac> braidinv;    // d^4
    std::vector<Frac> integral;    // d
    std::vector<Frac> cointegral;  // d
    std::vector<Frac> copair;      // d^2  [x*d+y]

    Frac zero() const { return prime ? Frac::modp(0, prime) : Frac(0); }
    Frac one() const { return prime ? Frac::modp(1, prime) : Frac(1); }

    // Structure constant of a generator box at the given input/output basis
    // multi-indices (sizes must match the box arity).
    Frac coeff(const Gen& g, const std::vector<int>& in,
               const std::vector<int>& out) const {
        const size_t D = static_cast<size_t>(d);
        switch (g.tag) {
            case GenTag::Id:
                return in[0] == out[0] ? one() : zero();
            case GenTag::Braid:
                return braid[((static_cast<size_t>(in[0]) * D + in[1]) * D +
                              out[0]) * D + out[1]];
            case GenTag::BraidInv:
                return braidinv[((static_cast<size_t>(in[0]) * D + in[1]) * D +
                                 out[0]) * D + out[1]];
            case GenTag::Comul:
                return comul[(static_cast<size_t>(in[0]) * D + out[0]) * D +
                             out[1]];
            case GenTag::Counit:
                return counit[static_cast<size_t>(in[0])];
            case GenTag::Mul:
                return mul[(static_cast<size_t>(in[0]) * D + in[1]) * D +
                           out[0]];
            case GenTag::Unit:
                return unit[static_cast<size_t>(out[0])];
            case GenTag::Antipode:
                return antipode[static_cast<size_t>(in[0]) * D + out[0]];
            case GenTag::AntipodeInv:
                return antipodeinv[static_cast<size_t>(in[0]) * D + out[0]];
            case GenTag::Cointegral:
                return cointegral[static_cast<size_t>(in[0])];
            case GenTag::Integral:
                return integral[static_cast<size_t>(out[0])];
            case GenTag::Ribbon:
                return ribbon[static_cast<size_t>(in[0]) * D + out[0]];
            case GenTag::RibbonInv:
                return ribboninv[static_cast<size_t>(in[0]) * D + out[0]];
            case GenTag::Copair:
                return copair[static_cast<size_t>(out[0]) * D + out[1]];
        }
        return zero();
    }
};

// Group algebra of Z/n with flip braiding, identity ribbon element, and the
// trivial copairing eta (x) eta.  Integral = sum over the group, cointegral =
// coefficient of the group identity.
inline HopfModel builtin_group_model(int n, long long prime = 0) {
    if (n < 1) throw std::invalid_argument("group model needs n >= 1");
    HopfModel M;
    M.d = n;
    M.prime = prime;
    const size_t D = static_cast<size_t>(n);
    const Frac z = M.zero(), o = M.one();
    M.mul.assign(D * D * D, z);
    M.comul.assign(D * D * D, z);
    M.unit.assign(D, z);
    M.counit.assign(D, o);
    M.antipode.assign(D * D, z);
    M.antipodeinv.assign(D * D, z);
    M.ribbon.assign(D * D, z);
    M.ribboninv.assign(D * D, z);
    M.braid.assign(D * D * D * D, z);
    M.braidinv.assign(D * D * D * D, z);
    M.integral.assign(D, o);
    M.cointegral.assign(D, z);
    M.copair.assign(D * D, z);

    for (size_t x = 0; x < D; ++x) {
        size_t nx = (D - x) % D;
        M.mul[(x * D + 0) * D + x] = o;  // overwritten by the general loop
        M.comul[(x * D + x) * D + x] = o;
        M.antipode[x * D + nx] = o;
        M.antipodeinv[x * D + nx] = o;
        M.ribbon[x * D + x] = o;
        M.ribboninv[x * D + x] = o;
        for (size_t y = 0; y < D; ++y) {
            M.mul[(x * D + y) * D + (x + y) % D] = o;
            M.braid[((x * D + y) * D + y) * D + x] = o;
            M.braidinv[((x * D + y) * D + y) * D + x] = o;
        }
    }
    M.unit[0] = o;
    M.cointegral[0] = o;
    M.copair[0] = o;  // eta (x) eta
    return M;
}

}  // namespace hopfg

#endif  // HOPFG_MODEL_HPP
