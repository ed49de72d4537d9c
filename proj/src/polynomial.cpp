#include "faithlab/polynomial.hpp"

#include <stdexcept>

namespace faithlab {

namespace {

void trim(std::vector<Rat>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rat> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
    trim(coeffs_);
}

Rat RationalPolynomial::operator()(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * x + coeffs_[k];
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    std::vector<Rat> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out.push_back(Rat(coeffs_[k] * static_cast<long>(k)));
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& other) const {
    std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& other) const {
    std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] -= other.coeffs_[k];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& other) const {
    if (is_zero() || other.is_zero()) return RationalPolynomial();
    std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::scaled(const Rat& factor) const {
    std::vector<Rat> out = coeffs_;
    for (Rat& c : out) c *= factor;
    return RationalPolynomial(std::move(out));
}

RationalPolynomial poly_remainder(const RationalPolynomial& num,
                                  const RationalPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem = num.coefficients();
    const auto& d = den.coefficients();
    while (rem.size() >= d.size()) {
        const Rat factor = Rat(rem.back() / d.back());
        const std::size_t shift = rem.size() - d.size();
        for (std::size_t k = 0; k < d.size(); ++k) {
            rem[shift + k] -= factor * d[k];
        }
        rem.pop_back();
        trim(rem);
        if (rem.empty()) break;
    }
    return RationalPolynomial(std::move(rem));
}

RationalPolynomial poly_exact_divide(const RationalPolynomial& num,
                                     const RationalPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem = num.coefficients();
    const auto& d = den.coefficients();
    std::vector<Rat> quot(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, Rat(0));
    while (rem.size() >= d.size()) {
        const Rat factor = Rat(rem.back() / d.back());
        const std::size_t shift = rem.size() - d.size();
        quot[shift] = factor;
        for (std::size_t k = 0; k < d.size(); ++k) {
            rem[shift + k] -= factor * d[k];
        }
        rem.pop_back();
        trim(rem);
        if (rem.empty()) break;
    }
    if (!rem.empty()) {
        throw std::invalid_argument("polynomial division is not exact");
    }
    return RationalPolynomial(std::move(quot));
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free part of zero polynomial");
    if (p.degree() == 0) return p;
    // gcd(p, p') by the Euclidean remainder chain.
    RationalPolynomial a = p;
    RationalPolynomial b = p.derivative();
    while (!b.is_zero()) {
        RationalPolynomial r = poly_remainder(a, b);
        a = b;
        b = std::move(r);
    }
    if (a.degree() == 0) return p;
    return poly_exact_divide(p, a);
}

RationalPolynomial interpolate_polynomial(
    const std::vector<std::pair<Rat, Rat>>& points) {
    RationalPolynomial acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial basis(std::vector<Rat>{Rat(1)});
        Rat denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RationalPolynomial({Rat(-points[j].first), Rat(1)});
            denom *= points[i].first - points[j].first;
        }
        if (denom == 0) throw std::invalid_argument("repeated interpolation node");
        acc = acc + basis.scaled(Rat(points[i].second / denom));
    }
    return acc;
}

namespace {

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        RationalPolynomial r = poly_remainder(chain[chain.size() - 2], chain.back());
        chain.push_back(r.scaled(Rat(-1)));
    }
    chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<RationalPolynomial>& chain, const Rat& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& q : chain) {
        const Rat value = q(x);
        const int s = value > 0 ? 1 : (value < 0 ? -1 : 0);
        if (s != 0) {
            if (prev != 0 && s != prev) ++variations;
            prev = s;
        }
    }
    return variations;
}

}  // namespace

int sturm_root_count(const RationalPolynomial& square_free, const Rat& lo, const Rat& hi) {
    if (square_free.is_zero()) {
        throw std::invalid_argument("root count of zero polynomial");
    }
    if (square_free(lo) == 0 || square_free(hi) == 0) {
        throw std::invalid_argument("Sturm endpoints must not be roots");
    }
    const auto chain = sturm_chain(square_free);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

Rat positive_root_floor(const RationalPolynomial& p, int bisection_steps) {
    if (p.is_zero()) {
        throw std::invalid_argument("positive_root_floor of zero polynomial");
    }
    // Factor out the root at zero, if any.
    std::vector<Rat> coeffs = p.coefficients();
    std::size_t shift = 0;
    while (shift < coeffs.size() && coeffs[shift] == 0) ++shift;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(shift));
    RationalPolynomial s = square_free_part(RationalPolynomial(std::move(coeffs)));
    if (s.degree() == 0) return Rat(1);

    if (s(Rat(1)) == 0) {
        // Work on a root-free right endpoint; the root at 1 still counts.
        // Divide out (x - 1) factors.
        const RationalPolynomial unit_root({Rat(-1), Rat(1)});
        while (s(Rat(1)) == 0) s = poly_exact_divide(s, unit_root);
        if (s.degree() == 0 || sturm_root_count(s, Rat(0), Rat(1)) == 0) {
            // Smallest positive root is exactly 1.
            return Rat(1);
        }
    } else if (sturm_root_count(s, Rat(0), Rat(1)) == 0) {
        return Rat(1);
    }

    // Invariant: no roots in (0, lo], at least one in (lo, hi].
    Rat lo = 0;
    Rat hi = 1;
    int extra_budget = 256;
    for (int step = 0; step < bisection_steps || lo == 0; ++step) {
        if (step >= bisection_steps && --extra_budget < 0) {
            throw std::runtime_error("root isolation failed to certify a positive bound");
        }
        const Rat mid = Rat((lo + hi) / 2);
        if (s(mid) == 0) {
            hi = mid;
            continue;
        }
        if (sturm_root_count(s, Rat(0), mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return lo;
}

}  // namespace faithlab
