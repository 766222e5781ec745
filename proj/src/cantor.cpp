#include "nodaljac/cantor.hpp"

#include <cassert>

namespace nodaljac {

HyperCurve::HyperCurve(const PrimeModulus& m, Poly g)
    : mod_(m), g_(std::move(g)), gsing_(m.p()), genus_bound_(0) {
    if (g_.modulus() != mod_.p()) throw std::invalid_argument("modulus mismatch");
    if (g_.degree() < 3 || g_.degree() % 2 == 0)
        throw std::invalid_argument("curve polynomial must have odd degree >= 3");
    if (!g_.is_monic())
        throw std::invalid_argument("curve polynomial must be monic");
    genus_bound_ = (g_.degree() - 1) / 2;
    gsing_ = gcd(g_, g_.derivative());
}

MumfordDivisor divisor_identity(const PrimeModulus& m) {
    return {Poly::constant(m.p(), 1), Poly(m.p())};
}

bool divisor_validate(const HyperCurve& H, const Poly& u, const Poly& v) {
    if (u.modulus() != H.p() || v.modulus() != H.p()) return false;
    if (u.is_zero() || !u.is_monic()) return false;
    if (v.degree() >= u.degree()) return false;

    auto [q, r] = (v * v - H.g()).divrem(u);
    if (!r.is_zero()) return false; // u does not divide v^2 - g

    // Shared singular support: roots common to u, v and the multiple
    // roots of g. Sign of q vs (g - v^2)/u is irrelevant to the gcd.
    Poly s = gcd(gcd(u, v), H.singular_part());
    if (s.degree() == 0) return true;
    return gcd(s, q).degree() == 0;
}

bool divisor_validate(const HyperCurve& H, const MumfordDivisor& D) {
    return divisor_validate(H, D.u, D.v);
}

MumfordDivisor cantor_compose(const HyperCurve& H, const MumfordDivisor& D1,
                              const MumfordDivisor& D2) {
    const Poly vs = D1.v + D2.v;
    const Xgcd3Result e = xgcd3(D1.u, D2.u, vs);

    Poly u = (D1.u * D2.u).exact_div(e.g * e.g);
    Poly num = e.s1 * D1.u * D2.v + e.s2 * D2.u * D1.v +
               e.s3 * (D1.v * D2.v + H.g());
    Poly v = num.exact_div(e.g).mod(u);

#ifndef NDEBUG
    assert((v * v - H.g()).mod(u).is_zero());
#endif
    return {std::move(u), std::move(v)};
}

MumfordDivisor cantor_reduce(const HyperCurve& H, Poly u, Poly v) {
    if (u.is_zero()) throw std::invalid_argument("reduce: u must be nonzero");
    if (v.degree() >= u.degree()) v = v.mod(u);
    while (u.degree() > H.genus_bound()) {
        Poly ut = (v * v - H.g()).exact_div(u);
        Poly vt = v.mod(ut);
        u = std::move(ut);
        v = -vt;
    }
    if (!u.is_monic()) u = u.monic();
    return {std::move(u), std::move(v)};
}

MumfordDivisor cantor_add(const HyperCurve& H, const MumfordDivisor& D1,
                          const MumfordDivisor& D2, bool reduce) {
    MumfordDivisor composed = cantor_compose(H, D1, D2);
    if (!reduce) return composed;
    return cantor_reduce(H, std::move(composed.u), std::move(composed.v));
}

} // namespace nodaljac
