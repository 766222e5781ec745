#ifndef NODALJAC_NODAL_HPP
#define NODALJAC_NODAL_HPP

#include <optional>
#include <vector>

#include "nodaljac/cantor.hpp"
#include "nodaljac/poly.hpp"

namespace nodaljac {

/// The curve N: y^2 = x*f(x)^2 over F_p with f monic irreducible and
/// f(0) != 0 (its singular points are genuine nodes). Immutable once
/// validated; f^2 is cached for the Mumford embedding.
class NodalCurve {
public:
    /// Throws std::invalid_argument when f is not monic, not irreducible,
    /// has degree < 1, or has f(0) = 0 (the cuspidal case y^2 = x^3).
    NodalCurve(const PrimeModulus& m, Poly f);

    std::uint64_t p() const noexcept { return mod_.p(); }
    const PrimeModulus& prime() const noexcept { return mod_; }
    const Poly& f() const noexcept { return f_; }
    const Poly& f_squared() const noexcept { return f2_; }
    int degree() const noexcept { return d_; }

private:
    PrimeModulus mod_;
    Poly f_;
    Poly f2_;
    int d_;
};

/// The curve y^2 = x*f(x)^2 as a general divisor-arithmetic curve, with
/// genus bound equal to degree(f).
HyperCurve hyper_model(const NodalCurve& C);

/// Element of Jac(N): either the identity class or the class encoded by
/// a single polynomial h with degree(h) < degree(f) and
/// gcd(f, x - h^2) = 1. Distinct representative polynomials encode
/// distinct classes, so equality is coefficient-sequence equality.
class JacElement {
public:
    static JacElement identity() { return JacElement{}; }

    /// Validated construction; throws std::invalid_argument on an h that
    /// does not represent a class on C.
    static JacElement from_rep(const NodalCurve& C, Poly h);

    bool is_identity() const noexcept { return !rep_.has_value(); }

    /// The representative polynomial; throws std::logic_error on identity.
    const Poly& rep() const;

    friend bool operator==(const JacElement& a, const JacElement& b) {
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const JacElement& a, const JacElement& b) {
        return !(a == b);
    }

private:
    friend JacElement add(const NodalCurve&, const JacElement&, const JacElement&);
    friend JacElement neg(const NodalCurve&, const JacElement&);
    friend JacElement random_element(const NodalCurve&, std::mt19937_64&);
    friend JacElement from_mumford(const NodalCurve&, const MumfordDivisor&);
    friend std::vector<JacElement> enumerate_elements(const NodalCurve&);

    JacElement() = default;
    explicit JacElement(Poly h) : rep_(std::move(h)) {}

    std::optional<Poly> rep_;
};

/// True iff degree(h) < degree(f) and gcd(f, x - h^2) = 1.
bool element_validate(const NodalCurve& C, const Poly& h);

/// Group law on representatives: with s = h1 + h2 nonzero, find g2 from
/// the Bezout identity g1*f + g2*s = 1 and return g2*(h1*h2 + x) mod f.
/// s = 0 yields the identity, which is also absorbing on either side.
/// Inputs must be valid elements of C; the result always is (closure).
JacElement add(const NodalCurve& C, const JacElement& D1, const JacElement& D2);

/// Inverse: negate the representative coefficientwise.
JacElement neg(const NodalCurve& C, const JacElement& D);

/// n-fold sum by left-to-right double-and-add; n may be any size and
/// sign, with n*D = (-n)*(-D) for n < 0 and 0*D = identity.
JacElement scalar_mul(const NodalCurve& C, const mpz_class& n, const JacElement& D);

/// Uniform over the non-identity classes: sample degree-< d coefficients
/// uniformly and retry while invalid (at most two candidates of p^d fail).
JacElement random_element(const NodalCurve& C, std::mt19937_64& rng);

/// Embedding into Mumford form: identity -> [1, 0], h -> [f^2, h*f].
MumfordDivisor to_mumford(const NodalCurve& C, const JacElement& D);

/// Inverse of the embedding. Throws std::invalid_argument unless the
/// divisor is [1, 0] or [f^2, h*f] with h a valid representative.
JacElement from_mumford(const NodalCurve& C, const MumfordDivisor& M);

/// |Jac(N)| = p^d - 1 when x is a square in F_p[x]/(f), else p^d + 1.
mpz_class group_order(const NodalCurve& C);

/// All elements, identity first, then representatives in lexicographic
/// coefficient order (constant coefficient most significant). Requires
/// p^d <= 10^6; throws std::invalid_argument beyond that.
std::vector<JacElement> enumerate_elements(const NodalCurve& C);

} // namespace nodaljac

#endif
