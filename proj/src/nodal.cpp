#include "nodaljac/nodal.hpp"

namespace nodaljac {

NodalCurve::NodalCurve(const PrimeModulus& m, Poly f)
    : mod_(m), f_(std::move(f)), f2_(m.p()), d_(0) {
    if (f_.modulus() != mod_.p()) throw std::invalid_argument("modulus mismatch");
    if (f_.degree() < 1) throw std::invalid_argument("f must have degree >= 1");
    if (!f_.is_monic()) throw std::invalid_argument("f must be monic");
    if (f_.constant_term() == 0)
        throw std::invalid_argument("f(0) = 0: y^2 = x^3 at the origin is a cusp, not a node");
    if (!is_irreducible(f_)) throw std::invalid_argument("f must be irreducible");
    d_ = f_.degree();
    f2_ = f_ * f_;
}

HyperCurve hyper_model(const NodalCurve& C) {
    return HyperCurve(C.prime(), Poly::x(C.p()) * C.f_squared());
}

const Poly& JacElement::rep() const {
    if (!rep_) throw std::logic_error("identity element has no representative");
    return *rep_;
}

JacElement JacElement::from_rep(const NodalCurve& C, Poly h) {
    if (!element_validate(C, h))
        throw std::invalid_argument("invalid element: h^2 ≡ x (mod f) or degree too large");
    return JacElement(std::move(h));
}

bool element_validate(const NodalCurve& C, const Poly& h) {
    if (h.modulus() != C.p()) return false;
    if (h.degree() >= C.degree()) return false;
    Poly xmh2 = Poly::x(C.p()) - h * h;
    return gcd(C.f(), xmh2).degree() == 0;
}

JacElement add(const NodalCurve& C, const JacElement& D1, const JacElement& D2) {
    if (D1.is_identity()) return D2;
    if (D2.is_identity()) return D1;

    const Poly& h1 = *D1.rep_;
    const Poly& h2 = *D2.rep_;
    Poly s = h1 + h2;
    if (s.is_zero()) return JacElement::identity();

    // g1*f + g2*s = 1; f irreducible and degree(s) < degree(f) make the
    // gcd constant for valid inputs, so anything else is a loud bug.
    XgcdResult e = xgcd(C.f(), s);
    if (e.g.degree() != 0)
        throw std::logic_error("internal error: gcd(f, h1 + h2) not constant");

    Poly h = (e.t * (h1 * h2 + Poly::x(C.p()))).mod(C.f());
    return JacElement(std::move(h));
}

JacElement neg(const NodalCurve& C, const JacElement& D) {
    (void)C;
    if (D.is_identity()) return D;
    return JacElement(-*D.rep_);
}

JacElement scalar_mul(const NodalCurve& C, const mpz_class& n, const JacElement& D) {
    if (sgn(n) == 0 || D.is_identity()) return JacElement::identity();
    const JacElement base = sgn(n) < 0 ? neg(C, D) : D;
    const mpz_class e = abs(n);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    JacElement acc = base;
    for (std::size_t i = bits - 1; i-- > 0;) {
        acc = add(C, acc, acc);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = add(C, acc, base);
    }
    return acc;
}

JacElement random_element(const NodalCurve& C, std::mt19937_64& rng) {
    const std::uint64_t p = C.p();
    for (;;) {
        std::vector<std::uint64_t> c(C.degree());
        for (auto& v : c) v = uniform_below(rng, p);
        Poly h(p, std::move(c));
        if (element_validate(C, h)) return JacElement(std::move(h));
    }
}

MumfordDivisor to_mumford(const NodalCurve& C, const JacElement& D) {
    if (D.is_identity()) return divisor_identity(C.prime());
    return {C.f_squared(), D.rep() * C.f()};
}

JacElement from_mumford(const NodalCurve& C, const MumfordDivisor& M) {
    if (M.u.modulus() != C.p() || M.v.modulus() != C.p())
        throw std::invalid_argument("modulus mismatch");
    if (M.u.is_one() && M.v.is_zero()) return JacElement::identity();
    if (M.u != C.f_squared())
        throw std::invalid_argument("not an embedded divisor: u != f^2");
    auto [h, r] = M.v.divrem(C.f());
    if (!r.is_zero())
        throw std::invalid_argument("not an embedded divisor: f does not divide v");
    if (!element_validate(C, h))
        throw std::invalid_argument("recovered representative is not a valid element");
    return JacElement(std::move(h));
}

mpz_class group_order(const NodalCurve& C) {
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(C.p()),
                  static_cast<unsigned long>(C.degree()));
    if (detail::x_square_unchecked(C.f())) return pd - 1;
    return pd + 1;
}

std::vector<JacElement> enumerate_elements(const NodalCurve& C) {
    const std::uint64_t p = C.p();
    const int d = C.degree();
    unsigned __int128 count = 1;
    for (int i = 0; i < d; ++i) {
        count *= p;
        if (count > 1000000) throw std::invalid_argument("curve too large to enumerate");
    }

    std::vector<JacElement> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    out.push_back(JacElement::identity());

    // Odometer over (c_0, ..., c_{d-1}) with the last index fastest, so
    // representatives appear in lexicographic coefficient order.
    std::vector<std::uint64_t> c(d, 0);
    for (;;) {
        Poly h(p, c);
        if (element_validate(C, h)) out.push_back(JacElement(std::move(h)));
        int i = d - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    return out;
}

} // namespace nodaljac
