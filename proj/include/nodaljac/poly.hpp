#ifndef NODALJAC_POLY_HPP
#define NODALJAC_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nodaljac/field.hpp"

namespace nodaljac {

/// Dense univariate polynomial over F_p with canonical coefficients in
/// ascending order (coeff(i) multiplies x^i). Always normalized: the
/// highest stored coefficient is nonzero, and the zero polynomial stores
/// nothing. Values are immutable once built.
class Poly {
public:
    /// Zero polynomial over p. p must come from a validated PrimeModulus.
    explicit Poly(std::uint64_t p) : p_(p) {}
    explicit Poly(const PrimeModulus& m) : p_(m.p()) {}

    /// Coefficients are reduced mod p and the result is normalized.
    Poly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    Poly(const PrimeModulus& m, std::vector<std::uint64_t> coeffs)
        : Poly(m.p(), std::move(coeffs)) {}
    Poly(const PrimeModulus& m, std::initializer_list<std::uint64_t> coeffs)
        : Poly(m.p(), std::vector<std::uint64_t>(coeffs)) {}

    static Poly constant(std::uint64_t p, std::uint64_t c) { return Poly(p, {c}); }
    static Poly x(std::uint64_t p) { return Poly(p, {0, 1}); }

    std::uint64_t modulus() const noexcept { return p_; }

    /// Degree of the zero polynomial is -1, below every true degree.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    std::uint64_t coeff(std::size_t i) const noexcept {
        return i < c_.size() ? c_[i] : 0;
    }
    std::uint64_t constant_term() const noexcept { return coeff(0); }
    std::uint64_t leading_coeff() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

    Poly scaled(std::uint64_t c) const;
    Poly monic() const; // zero stays zero
    Poly derivative() const;
    std::uint64_t eval(std::uint64_t x) const;

    /// Euclidean division: *this = q*b + r with degree(r) < degree(b).
    /// Throws std::domain_error on b = 0.
    std::pair<Poly, Poly> divrem(const Poly& b) const;
    Poly mod(const Poly& b) const;

    /// Quotient of an exact division; throws std::logic_error if the
    /// remainder is nonzero (used where divisibility is structural).
    Poly exact_div(const Poly& b) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) noexcept { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct XgcdResult {
    Poly g, s, t; // s*a + t*b = g, g monic
};

/// Extended Euclid with minimal-degree cofactors. Throws
/// std::invalid_argument when both inputs are zero.
XgcdResult xgcd(const Poly& a, const Poly& b);

struct Xgcd3Result {
    Poly g, s1, s2, s3; // s1*a + s2*b + s3*c = g, g monic
};

/// Three-way extended gcd via two chained xgcds. Throws
/// std::invalid_argument when all inputs are zero.
Xgcd3Result xgcd3(const Poly& a, const Poly& b, const Poly& c);

/// base^e mod m with reduction after every step. Requires degree(m) >= 1.
Poly modpow(const Poly& base, const mpz_class& e, const Poly& m);
Poly modpow(const Poly& base, std::uint64_t e, const Poly& m);

/// True iff f is irreducible over F_p. Requires degree(f) >= 1.
/// Decided through the Frobenius chain x^(p^k) mod f: f of degree d >= 2 is
/// reducible exactly when gcd(x^(p^k) - x, f) is non-constant for some
/// k <= d/2, so the scan aborts on the first factor-degree hit.
bool is_irreducible(const Poly& f);

/// Monic irreducible polynomial of degree exactly d with nonzero constant
/// term, by rejection sampling.
Poly random_irreducible(const PrimeModulus& m, int d, std::mt19937_64& rng);

/// True iff x is a quadratic residue in F_p[x]/(f), by the Euler criterion
/// x^((p^d - 1)/2) mod f. Requires f monic irreducible with f(0) != 0.
bool x_is_square_mod(const Poly& f);

namespace detail {
/// Euler-criterion branch without revalidating irreducibility; for callers
/// that hold an already-validated curve polynomial.
bool x_square_unchecked(const Poly& f);
} // namespace detail

} // namespace nodaljac

#endif
