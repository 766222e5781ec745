#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nodaljac/poly.hpp"

#include <random>

using namespace nodaljac;

namespace {

Poly random_poly(std::uint64_t p, int max_deg, std::mt19937_64& rng) {
    int d = static_cast<int>(uniform_below(rng, max_deg + 1));
    std::vector<std::uint64_t> c(d + 1);
    for (auto& v : c) v = uniform_below(rng, p);
    return Poly(p, std::move(c));
}

// Independent irreducibility oracle: trial division by every monic
// polynomial of strictly lower degree.
bool irreducible_by_trial_division(const Poly& f) {
    const std::uint64_t p = f.modulus();
    const int d = f.degree();
    if (d == 1) return true;
    for (int dd = 1; dd < d; ++dd) {
        std::vector<std::uint64_t> c(dd + 1, 0);
        c[dd] = 1;
        for (;;) {
            Poly g(p, c);
            if (f.mod(g).is_zero()) return false;
            int i = 0;
            while (i < dd && c[i] == p - 1) c[i++] = 0;
            if (i == dd) break;
            ++c[i];
        }
    }
    return true;
}

Poly naive_modpow(const Poly& b, int e, const Poly& m) {
    Poly r = Poly::constant(b.modulus(), 1);
    for (int i = 0; i < e; ++i) r = (r * b).mod(m);
    return r;
}

} // namespace

TEST_CASE("construction and normalization") {
    PrimeModulus m7(7);
    Poly z(m7);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coeff(5) == 0);

    Poly a(m7, {8, 14, 0, 0}); // reduces to the constant 1
    CHECK(a.degree() == 0);
    CHECK(a.coeff(0) == 1);

    Poly b(m7, {1, 0, 1});
    CHECK(b.degree() == 2);
    CHECK(b.is_monic());
    CHECK(b.leading_coeff() == 1);
    CHECK(b.constant_term() == 1);
}

TEST_CASE("ring operation examples") {
    PrimeModulus m7(7);
    Poly xp1(m7, {1, 1}), xm1(m7, {6, 1});
    CHECK(xp1 * xm1 == Poly(m7, {6, 0, 1})); // x^2 - 1

    Poly a(m7, {3, 2, 5});
    CHECK(a + Poly(m7) == a);

    CHECK(Poly(m7, {4, 3}) * Poly(m7, {0, 2}) == Poly(m7, {0, 1, 6})); // 6x^2 + x
}

TEST_CASE("divrem examples and errors") {
    PrimeModulus m7(7);
    Poly f(m7, {1, 0, 1});
    auto [q1, r1] = f.divrem(f);
    CHECK(q1 == Poly::constant(7, 1));
    CHECK(r1.is_zero());

    Poly a(m7, {0, 1, 6}); // 6x^2 + x
    auto [q2, r2] = a.divrem(f);
    CHECK(q2 == Poly::constant(7, 6));
    CHECK(r2 == Poly(m7, {1, 1}));

    Poly c(m7, {5, 2});
    auto [q3, r3] = c.divrem(f);
    CHECK(q3.is_zero());
    CHECK(r3 == c);

    CHECK_THROWS_AS(f.divrem(Poly(m7)), std::domain_error);
    PrimeModulus m5(5);
    CHECK_THROWS_AS(f + Poly(m5, {1}), std::invalid_argument);
    CHECK_THROWS_AS(f * Poly(m5, {1}), std::invalid_argument);
}

TEST_CASE("divrem round-trip on random inputs") {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {std::uint64_t{7}, std::uint64_t{4294967311ull},
                            std::uint64_t{18446744073709551557ull}}) {
        for (int i = 0; i < 200; ++i) {
            Poly a = random_poly(p, 12, rng);
            Poly b = random_poly(p, 6, rng);
            if (b.is_zero()) continue;
            auto [q, r] = a.divrem(b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("xgcd examples") {
    PrimeModulus m7(7);
    Poly f(m7, {1, 0, 1}), b(m7, {1, 1});
    XgcdResult e = xgcd(f, b);
    CHECK(e.g == Poly::constant(7, 1));
    CHECK(e.t == Poly(m7, {4, 3}));
    CHECK(e.s * f + e.t * b == e.g);

    Poly g(m7, {2, 0, 4}); // non-monic
    XgcdResult z = xgcd(g, Poly(m7));
    CHECK(z.g == g.monic());
    CHECK(z.s == Poly::constant(7, invmod(4, 7)));
    CHECK(z.t.is_zero());

    CHECK(xgcd(f, Poly::x(7)).g == Poly::constant(7, 1));

    CHECK_THROWS_AS(xgcd(Poly(m7), Poly(m7)), std::invalid_argument);
}

TEST_CASE("xgcd certificate on random inputs") {
    std::mt19937_64 rng(21);
    for (std::uint64_t p : {std::uint64_t{5}, std::uint64_t{4294967311ull}}) {
        for (int i = 0; i < 300; ++i) {
            Poly a = random_poly(p, 8, rng);
            Poly b = random_poly(p, 8, rng);
            if (a.is_zero() && b.is_zero()) continue;
            XgcdResult e = xgcd(a, b);
            CHECK(e.s * a + e.t * b == e.g);
            CHECK(e.g.is_monic());
            if (!a.is_zero()) CHECK(a.mod(e.g).is_zero());
            if (!b.is_zero()) CHECK(b.mod(e.g).is_zero());
            // every common divisor divides g: check against plain gcd
            CHECK(e.g == gcd(a, b));
        }
    }
}

TEST_CASE("xgcd3 examples and certificate") {
    PrimeModulus m7(7);
    Xgcd3Result r = xgcd3(Poly::x(7), Poly::x(7), Poly::constant(7, 2));
    CHECK(r.g == Poly::constant(7, 1));

    Poly a(m7, {3, 1, 2});
    Xgcd3Result r2 = xgcd3(a, a, a);
    CHECK(r2.g == a.monic());
    CHECK(r2.s1 * a + r2.s2 * a + r2.s3 * a == r2.g);

    // gcd structure of the embedded-pair composition inputs
    Poly f(m7, {1, 0, 1});
    Poly h1(m7, {0, 1}), h2(m7, {1, 0});
    Poly f2 = f * f;
    Xgcd3Result r3 = xgcd3(f2, f2, (h1 + h2) * f);
    CHECK(r3.g == f);
    CHECK(r3.s1 * f2 + r3.s2 * f2 + r3.s3 * ((h1 + h2) * f) == f);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        Poly x = random_poly(11, 6, rng);
        Poly y = random_poly(11, 6, rng);
        Poly z = random_poly(11, 6, rng);
        if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
        Xgcd3Result e = xgcd3(x, y, z);
        CHECK(e.s1 * x + e.s2 * y + e.s3 * z == e.g);
        CHECK(e.g == gcd(gcd(x, y), z));
    }

    // a = b = 0 corner
    Xgcd3Result r4 = xgcd3(Poly(m7), Poly(m7), Poly(m7, {0, 3}));
    CHECK(r4.g == Poly::x(7));
    CHECK(r4.s3 == Poly::constant(7, 5));
    CHECK_THROWS_AS(xgcd3(Poly(m7), Poly(m7), Poly(m7)), std::invalid_argument);
}

TEST_CASE("modpow examples") {
    PrimeModulus m3(3), m5(5);
    Poly f3(m3, {1, 0, 1});
    CHECK(modpow(Poly::x(3), std::uint64_t{4}, f3) == Poly::constant(3, 1));

    Poly f5(m5, {2, 0, 1});
    CHECK(modpow(Poly::x(5), std::uint64_t{12}, f5) == Poly::constant(5, 4));

    CHECK(modpow(f5, std::uint64_t{0}, f5) == Poly::constant(5, 1));

    CHECK_THROWS_AS(modpow(f5, std::uint64_t{2}, Poly::constant(5, 1)),
                    std::domain_error);
    CHECK_THROWS_AS(modpow(f5, std::uint64_t{2}, Poly(m5)), std::domain_error);
}

TEST_CASE("modpow agrees with naive repeated multiplication") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        Poly b = random_poly(13, 5, rng);
        Poly m = random_poly(13, 4, rng);
        if (m.degree() < 1) continue;
        int e = static_cast<int>(uniform_below(rng, 65));
        CHECK(modpow(b, static_cast<std::uint64_t>(e), m) == naive_modpow(b, e, m));
    }
}

TEST_CASE("irreducibility examples") {
    PrimeModulus m7(7);
    CHECK(is_irreducible(Poly(m7, {1, 0, 1})));
    CHECK_FALSE(is_irreducible(Poly(m7, {6, 0, 1}))); // (x-1)(x+1)
    CHECK(is_irreducible(Poly(m7, {3, 1})));
    CHECK(is_irreducible(Poly(m7, {0, 1}))); // x itself
    CHECK_FALSE(is_irreducible(Poly(m7, {0, 0, 1})));
    CHECK_THROWS_AS(is_irreducible(Poly::constant(7, 3)), std::invalid_argument);
    CHECK_THROWS_AS(is_irreducible(Poly(m7)), std::invalid_argument);
}

TEST_CASE("irreducibility agrees with trial division exhaustively") {
    for (std::uint64_t p : {std::uint64_t{3}, std::uint64_t{5}, std::uint64_t{7}}) {
        for (int d = 2; d <= 4; ++d) {
            std::vector<std::uint64_t> c(d + 1, 0);
            c[d] = 1;
            for (;;) {
                Poly f(p, c);
                CHECK(is_irreducible(f) == irreducible_by_trial_division(f));
                int i = 0;
                while (i < d && c[i] == p - 1) c[i++] = 0;
                if (i == d) break;
                ++c[i];
            }
        }
    }
}

TEST_CASE("irreducibility also matches the Frobenius fixed-point identity") {
    // An irreducible f of degree d satisfies x^(p^d) = x mod f and has
    // gcd(x^(p^(d/r)) - x, f) = 1 for every prime r dividing d.
    std::mt19937_64 rng(51);
    PrimeModulus m(10007);
    for (int d : {2, 3, 4, 6}) {
        Poly f = random_irreducible(m, d, rng);
        mpz_class pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), 10007, d);
        CHECK(modpow(Poly::x(m.p()), pd, f) == Poly::x(m.p()));
        for (int r : {2, 3}) {
            if (d % r != 0) continue;
            mpz_class pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), 10007, d / r);
            Poly t = modpow(Poly::x(m.p()), pk, f);
            CHECK(gcd(t - Poly::x(m.p()), f).degree() == 0);
        }
    }
}

TEST_CASE("random_irreducible postconditions") {
    std::mt19937_64 rng(61);
    PrimeModulus m7(7);
    for (int i = 0; i < 20; ++i) {
        Poly f = random_irreducible(m7, 1, rng);
        CHECK(f.degree() == 1);
        CHECK(f.is_monic());
        CHECK(f.constant_term() != 0);
    }
    for (int d : {2, 3, 5}) {
        Poly f = random_irreducible(m7, d, rng);
        CHECK(f.degree() == d);
        CHECK(f.is_monic());
        CHECK(f.constant_term() != 0);
        CHECK(is_irreducible(f));
        CHECK(irreducible_by_trial_division(f));
    }
    PrimeModulus mb(4294967311ull);
    Poly f = random_irreducible(mb, 5, rng);
    CHECK(f.degree() == 5);
    CHECK(is_irreducible(f));

    // determinism under a fixed seed
    std::mt19937_64 r1(77), r2(77);
    CHECK(random_irreducible(m7, 4, r1) == random_irreducible(m7, 4, r2));
}

TEST_CASE("x_is_square_mod examples") {
    PrimeModulus m7(7), m5(5);
    CHECK(x_is_square_mod(Poly(m7, {1, 0, 1})));       // (2x+2)^2 = x
    CHECK_FALSE(x_is_square_mod(Poly(m5, {2, 0, 1}))); // x^12 = -1

    // degree-1 case reduces to the Euler criterion for a in F_p
    for (std::uint64_t a = 1; a < 7; ++a) {
        Poly f(m7, {negmod(a, 7), 1}); // x - a
        bool euler = powmod(a, std::uint64_t{3}, std::uint64_t{7}) == 1;
        CHECK(x_is_square_mod(f) == euler);
    }

    CHECK_THROWS_AS(x_is_square_mod(Poly(m7, {6, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(x_is_square_mod(Poly::x(7)), std::invalid_argument);
    CHECK_THROWS_AS(x_is_square_mod(Poly(m7, {1, 0, 2})), std::invalid_argument);
}

TEST_CASE("derivative and eval") {
    PrimeModulus m7(7);
    Poly f(m7, {1, 2, 3}); // 3x^2 + 2x + 1
    CHECK(f.derivative() == Poly(m7, {2, 6}));
    CHECK(f.eval(2) == (3 * 4 + 2 * 2 + 1) % 7);
    CHECK(Poly(m7).derivative().is_zero());
}
