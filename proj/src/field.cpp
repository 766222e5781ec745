#include "nodaljac/field.hpp"

namespace nodaljac {

namespace {

// Miller-Rabin round: returns true if n passes for witness a.
bool mr_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality exactly for n < 3.3 * 10^24,
    // which covers the full 64-bit range.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!mr_round(n, a, d, s)) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p < 3) throw std::invalid_argument("modulus must be at least 3");
    if ((p & 1) == 0) throw std::invalid_argument("modulus must be odd");
    if (!is_probable_prime(p)) throw std::invalid_argument("modulus must be prime");
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    std::uint64_t r0 = p, r1 = a;
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::uint64_t q = r0 / r1;
        std::uint64_t r2 = r0 % r1;
        __int128 t2 = t0 - static_cast<__int128>(q) * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    // r0 = gcd(p, a) = 1 since p is prime and 0 < a < p
    __int128 t = t0 % static_cast<__int128>(p);
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    std::uint64_t base = a % p;
    while (e != 0) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t powmod(std::uint64_t a, const mpz_class& e, std::uint64_t p) {
    if (sgn(e) < 0) throw std::domain_error("negative exponent");
    if (sgn(e) == 0) return 1 % p;
    std::uint64_t r = 1 % p;
    std::uint64_t base = a % p;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
    }
    return r;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: empty range");
    // Discard draws below 2^64 mod n so the residue is uniform.
    std::uint64_t cutoff = (0 - n) % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= cutoff) return r % n;
    }
}

} // namespace nodaljac
