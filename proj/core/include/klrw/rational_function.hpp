#pragma once

#include "klrw/polynomial.hpp"

namespace klrw {

// Quotient of polynomials.  Not kept fully reduced: equality goes through
// cross-multiplication, which never needs a gcd.  Normalization divides both
// parts by the denominator's content, fixes the sign of its leading
// coefficient, and collapses to a polynomial whenever the division happens to
// be exact (that covers every denominator cancellation this library actually
// produces, e.g. symmetrized merge sums).
class RationalFunction {
public:
    explicit RationalFunction(int nvars)
        : num_(Polynomial::zero(nvars)), den_(Polynomial::constant(nvars, 1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    /*implicit*/ RationalFunction(const Polynomial& p)
        : num_(p), den_(Polynomial::constant(p.nvars(), 1)) {}

    static RationalFunction constant(int nvars, const Rational& c) {
        return RationalFunction(Polynomial::constant(nvars, c));
    }

    int nvars() const { return num_.nvars(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    const Polynomial& as_polynomial() const; // requires is_polynomial()

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction permuted(const Permutation& w) const;
    RationalFunction shifted(const std::vector<Rational>& shift) const;
    RationalFunction embedded(int new_nvars, const std::vector<int>& var_map) const;

    // deg num - deg den when both parts are homogeneous.
    std::optional<int> homogeneous_degree() const;

    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;

    void normalize();
};

} // namespace klrw
