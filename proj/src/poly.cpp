#include "nodaljac/poly.hpp"

#include <algorithm>

namespace nodaljac {

Poly::Poly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    trim();
}

Poly Poly::scaled(std::uint64_t c) const {
    c %= p_;
    if (c == 0 || is_zero()) return Poly(p_);
    Poly r(p_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = mulmod(c_[i], c, p_);
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    return scaled(invmod(c_.back(), p_));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(p_);
    Poly r(p_);
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = mulmod(c_[i], i % p_, p_);
    r.trim();
    return r;
}

std::uint64_t Poly::eval(std::uint64_t x) const {
    x %= p_;
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = addmod(mulmod(acc, x, p_), c_[i], p_);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    detail::require_same_modulus(a.p_, b.p_);
    Poly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = addmod(a.coeff(i), b.coeff(i), a.p_);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    detail::require_same_modulus(a.p_, b.p_);
    Poly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = submod(a.coeff(i), b.coeff(i), a.p_);
    r.trim();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r(a.p_);
    r.c_.resize(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = negmod(a.c_[i], a.p_);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    detail::require_same_modulus(a.p_, b.p_);
    if (a.is_zero() || b.is_zero()) return Poly(a.p_);
    const std::uint64_t p = a.p_;
    const std::size_t n = a.c_.size(), m = b.c_.size();
    Poly r(p);
    r.c_.assign(n + m - 1, 0);
    // Column accumulation defers the reduction to one per output
    // coefficient; safe while terms_per_column * p^2 < 2^128.
    if (p < (std::uint64_t{1} << 55) && std::min(n, m) < (std::size_t{1} << 18)) {
        for (std::size_t k = 0; k < r.c_.size(); ++k) {
            unsigned __int128 acc = 0;
            const std::size_t lo = k >= m ? k - m + 1 : 0;
            const std::size_t hi = std::min(n - 1, k);
            for (std::size_t i = lo; i <= hi; ++i)
                acc += static_cast<unsigned __int128>(a.c_[i]) * b.c_[k - i];
            r.c_[k] = static_cast<std::uint64_t>(acc % p);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                r.c_[i + j] = addmod(r.c_[i + j], mulmod(a.c_[i], b.c_[j], p), p);
        }
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& b) const {
    detail::require_same_modulus(p_, b.p_);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < b.degree()) return {Poly(p_), *this};

    const int degB = b.degree();
    const std::uint64_t invlc = invmod(b.c_.back(), p_);
    const bool monic_b = b.c_.back() == 1;

    std::vector<std::uint64_t> rem = c_;
    Poly q(p_);
    q.c_.assign(c_.size() - degB, 0);

    for (int k = static_cast<int>(q.c_.size()) - 1; k >= 0; --k) {
        const std::uint64_t lead = rem[k + degB];
        if (lead == 0) continue;
        const std::uint64_t factor = monic_b ? lead : mulmod(lead, invlc, p_);
        q.c_[k] = factor;
        for (int i = 0; i < degB; ++i) {
            if (b.c_[i] != 0)
                rem[k + i] = submod(rem[k + i], mulmod(factor, b.c_[i], p_), p_);
        }
        rem[k + degB] = 0;
    }

    q.trim();
    Poly r(p_);
    rem.resize(degB);
    r.c_ = std::move(rem);
    r.trim();
    return {std::move(q), std::move(r)};
}

Poly Poly::mod(const Poly& b) const {
    detail::require_same_modulus(p_, b.p_);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < b.degree()) return *this;
    return divrem(b).second;
}

Poly Poly::exact_div(const Poly& b) const {
    auto [q, r] = divrem(b);
    if (!r.is_zero()) throw std::logic_error("internal error: inexact polynomial division");
    return std::move(q);
}

Poly gcd(const Poly& a, const Poly& b) {
    detail::require_same_modulus(a.modulus(), b.modulus());
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = r0.mod(r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
    detail::require_same_modulus(a.modulus(), b.modulus());
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("xgcd of two zero polynomials");
    const std::uint64_t p = a.modulus();

    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(p, 1), s1(p);
    Poly t0(p), t1 = Poly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const std::uint64_t c = invmod(r0.leading_coeff(), p);
    return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

Xgcd3Result xgcd3(const Poly& a, const Poly& b, const Poly& c) {
    detail::require_same_modulus(a.modulus(), b.modulus());
    detail::require_same_modulus(a.modulus(), c.modulus());
    const std::uint64_t p = a.modulus();
    if (a.is_zero() && b.is_zero()) {
        if (c.is_zero()) throw std::invalid_argument("xgcd3 of three zero polynomials");
        const std::uint64_t k = invmod(c.leading_coeff(), p);
        return {c.scaled(k), Poly(p), Poly(p), Poly::constant(p, k)};
    }
    XgcdResult ab = xgcd(a, b);
    XgcdResult gc = xgcd(ab.g, c);
    return {gc.g, gc.s * ab.s, gc.s * ab.t, gc.t};
}

Poly modpow(const Poly& base, const mpz_class& e, const Poly& m) {
    detail::require_same_modulus(base.modulus(), m.modulus());
    if (m.degree() < 1)
        throw std::domain_error("modpow modulus must have degree >= 1");
    if (sgn(e) < 0) throw std::domain_error("negative exponent");
    const std::uint64_t p = m.modulus();
    Poly result = Poly::constant(p, 1);
    Poly b = base.mod(m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b).mod(m);
        b = (b * b).mod(m);
    }
    return result;
}

Poly modpow(const Poly& base, std::uint64_t e, const Poly& m) {
    return modpow(base, mpz_class(static_cast<unsigned long>(e)), m);
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1)
        throw std::invalid_argument("irreducibility test requires degree >= 1");
    const int d = f.degree();
    if (d == 1) return true;
    const Poly fm = f.monic();
    if (fm.constant_term() == 0) return false; // x divides f
    const std::uint64_t p = f.modulus();
    const Poly xp = Poly::x(p);
    const mpz_class pz(static_cast<unsigned long>(p));
    Poly t = xp;
    for (int k = 1; k <= d / 2; ++k) {
        t = modpow(t, pz, fm); // t = x^(p^k) mod f
        if (gcd(t - xp, fm).degree() != 0) return false;
    }
    return true;
}

Poly random_irreducible(const PrimeModulus& m, int d, std::mt19937_64& rng) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    const std::uint64_t p = m.p();
    for (;;) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1);
        c[0] = 1 + uniform_below(rng, p - 1);
        for (int i = 1; i < d; ++i) c[i] = uniform_below(rng, p);
        c[d] = 1;
        Poly f(p, std::move(c));
        if (is_irreducible(f)) return f;
    }
}

namespace detail {

bool x_square_unchecked(const Poly& f) {
    const std::uint64_t p = f.modulus();
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(f.degree()));
    const mpz_class e = (pd - 1) / 2;
    Poly r = modpow(Poly::x(p), e, f);
    if (r.is_one()) return true;
    if (r == Poly::constant(p, p - 1)) return false;
    throw std::logic_error("internal error: Euler criterion gave a non-unit");
}

} // namespace detail

bool x_is_square_mod(const Poly& f) {
    if (f.degree() < 1 || !f.is_monic())
        throw std::invalid_argument("f must be monic of degree >= 1");
    if (f.constant_term() == 0)
        throw std::invalid_argument("f(0) must be nonzero");
    if (!is_irreducible(f))
        throw std::invalid_argument("f must be irreducible");
    return detail::x_square_unchecked(f);
}

} // namespace nodaljac
