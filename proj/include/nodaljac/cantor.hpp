#ifndef NODALJAC_CANTOR_HPP
#define NODALJAC_CANTOR_HPP

#include "nodaljac/poly.hpp"

namespace nodaljac {

/// A (possibly singular) curve y^2 = g(x) with g monic of odd degree
/// 2*G + 1, where G is the genus bound: reduced divisors have
/// degree(u) <= G. The multiple-root part gcd(g, g') is cached because
/// divisor validation consults it.
class HyperCurve {
public:
    HyperCurve(const PrimeModulus& m, Poly g);

    std::uint64_t p() const noexcept { return mod_.p(); }
    const PrimeModulus& prime() const noexcept { return mod_; }
    const Poly& g() const noexcept { return g_; }
    int genus_bound() const noexcept { return genus_bound_; }
    const Poly& singular_part() const noexcept { return gsing_; }

private:
    PrimeModulus mod_;
    Poly g_;
    Poly gsing_;
    int genus_bound_;
};

/// Divisor class representative [u, v] on y^2 = g(x): u monic,
/// degree(v) < degree(u), u | v^2 - g, and at singular points shared by
/// u and v the quotient (g - v^2)/u stays nonzero.
struct MumfordDivisor {
    Poly u, v;

    friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator!=(const MumfordDivisor& a, const MumfordDivisor& b) {
        return !(a == b);
    }
};

/// The identity class [1, 0].
MumfordDivisor divisor_identity(const PrimeModulus& m);

/// Checks the three representation conditions. The singular-point
/// condition is decided by gcd chains over F_p: with s = gcd(u, v,
/// gcd(g, g')), the divisor fails exactly when gcd(s, (v^2 - g)/u) is
/// non-constant. Returns false (never throws) on malformed input.
bool divisor_validate(const HyperCurve& H, const Poly& u, const Poly& v);
bool divisor_validate(const HyperCurve& H, const MumfordDivisor& D);

/// Composition: three-way gcd of (u1, u2, v1 + v2) with Bezout
/// coefficients, u = u1*u2 / h^2 and v = (h1*u1*v2 + h2*u2*v1 +
/// h3*(v1*v2 + g)) / h reduced mod u. The divisions by h and h^2 are
/// exact for any operands with u | v^2 - g; a nonzero remainder throws
/// std::logic_error.
MumfordDivisor cantor_compose(const HyperCurve& H, const MumfordDivisor& D1,
                              const MumfordDivisor& D2);

/// Degree reduction: repeat u <- (v^2 - g)/u, v <- -(v mod new u) while
/// degree(u) exceeds the genus bound, then scale u monic.
MumfordDivisor cantor_reduce(const HyperCurve& H, Poly u, Poly v);

/// Full addition: compose, then reduce when reduce is set.
MumfordDivisor cantor_add(const HyperCurve& H, const MumfordDivisor& D1,
                          const MumfordDivisor& D2, bool reduce);

} // namespace nodaljac

#endif
