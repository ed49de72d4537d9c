#ifndef FAITHLAB_POLYNOMIAL_HPP
#define FAITHLAB_POLYNOMIAL_HPP

#include <vector>

#include "faithlab/rational.hpp"

namespace faithlab {

// Univariate polynomial with exact rational coefficients in ascending
// degree order. The zero polynomial has no coefficients; otherwise the
// trailing coefficient is nonzero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rat> ascending_coefficients);

    const std::vector<Rat>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rat operator()(const Rat& x) const;  // Horner evaluation

    RationalPolynomial derivative() const;
    RationalPolynomial operator+(const RationalPolynomial& other) const;
    RationalPolynomial operator-(const RationalPolynomial& other) const;
    RationalPolynomial operator*(const RationalPolynomial& other) const;
    RationalPolynomial scaled(const Rat& factor) const;

    bool operator==(const RationalPolynomial& other) const {
        return coeffs_ == other.coeffs_;
    }

private:
    std::vector<Rat> coeffs_;
};

// Euclidean remainder of num by den (den nonzero).
RationalPolynomial poly_remainder(const RationalPolynomial& num,
                                  const RationalPolynomial& den);

// Exact quotient; throws std::invalid_argument when den does not divide num.
RationalPolynomial poly_exact_divide(const RationalPolynomial& num,
                                     const RationalPolynomial& den);

// p / gcd(p, p'): same roots, all simple.
RationalPolynomial square_free_part(const RationalPolynomial& p);

// Unique polynomial of degree < points.size() through the given
// (x, y) pairs with distinct x. Exact Lagrange interpolation.
RationalPolynomial interpolate_polynomial(const std::vector<std::pair<Rat, Rat>>& points);

// Number of distinct real roots of `square_free` in (lo, hi]; neither
// endpoint may itself be a root.
int sturm_root_count(const RationalPolynomial& square_free, const Rat& lo, const Rat& hi);

// Certified strictly positive lower bound for the smallest root of p in
// (0, 1], capped at 1: p has no roots in (0, bound], so p is nonzero on the
// whole interval. A root exactly at 0 is factored out first. p must not be
// the zero polynomial.
Rat positive_root_floor(const RationalPolynomial& p, int bisection_steps = 48);

}  // namespace faithlab

#endif
