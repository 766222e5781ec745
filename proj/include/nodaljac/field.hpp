#ifndef NODALJAC_FIELD_HPP
#define NODALJAC_FIELD_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include <gmpxx.h>

namespace nodaljac {

/// Strong-pseudoprime test, exact for all 64-bit inputs (fixed witness set).
bool is_probable_prime(std::uint64_t n);

/// A validated odd prime modulus p with 3 <= p < 2^64.
class PrimeModulus {
public:
    /// Throws std::invalid_argument unless p is an odd prime >= 3.
    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }

    friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) noexcept {
        return a.p_ == b.p_;
    }

private:
    std::uint64_t p_;
};

// Raw residue arithmetic on canonical values 0 <= a, b < p. These are the
// kernels under Fp and Poly; they do not validate p.

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
    if (s >= p) s -= p;
    return static_cast<std::uint64_t>(s);
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) + p - b);
}

inline std::uint64_t negmod(std::uint64_t a, std::uint64_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

/// Inverse of a modulo prime p; throws std::domain_error on a = 0.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// a^e mod p by square-and-multiply. 0^0 is defined as 1 (empty product).
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, const mpz_class& e, std::uint64_t p);

/// Uniform draw from {0, ..., n-1} by rejection; n >= 1.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// A canonical residue together with its modulus. Operations between values
/// of different moduli throw std::invalid_argument.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;
};

/// Canonical element of F_p from an arbitrary 64-bit value.
inline Fp fp(const PrimeModulus& m, std::uint64_t v) {
    return Fp{v % m.p(), m.p()};
}

namespace detail {
inline void require_same_modulus(std::uint64_t a, std::uint64_t b) {
    if (a != b) throw std::invalid_argument("modulus mismatch");
}
} // namespace detail

inline Fp operator+(Fp a, Fp b) {
    detail::require_same_modulus(a.p, b.p);
    return Fp{addmod(a.v, b.v, a.p), a.p};
}
inline Fp operator-(Fp a, Fp b) {
    detail::require_same_modulus(a.p, b.p);
    return Fp{submod(a.v, b.v, a.p), a.p};
}
inline Fp operator*(Fp a, Fp b) {
    detail::require_same_modulus(a.p, b.p);
    return Fp{mulmod(a.v, b.v, a.p), a.p};
}
inline Fp operator-(Fp a) { return Fp{negmod(a.v, a.p), a.p}; }

inline Fp inv(Fp a) { return Fp{invmod(a.v, a.p), a.p}; }
inline Fp pow(Fp a, std::uint64_t e) { return Fp{powmod(a.v, e, a.p), a.p}; }
inline Fp pow(Fp a, const mpz_class& e) { return Fp{powmod(a.v, e, a.p), a.p}; }

inline bool operator==(Fp a, Fp b) { return a.p == b.p && a.v == b.v; }
inline bool operator!=(Fp a, Fp b) { return !(a == b); }

} // namespace nodaljac

#endif
