#pragma once

#include "klrw/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klrw {

// Exponent vector of a monomial; length always equals the variable count of
// the owning polynomial.
using Exponents = std::vector<int>;

// Graded lexicographic order, highest term first.  Gives every polynomial a
// deterministic term sequence for printing and hashing.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

using Permutation = std::vector<int>; // one-line notation, 0-based images

Permutation identity_permutation(int n);
Permutation transposition(int n, int k); // swaps k and k+1 (0-based k)
Permutation compose(const Permutation& w, const Permutation& v); // w after v
Permutation inverse(const Permutation& w);

// Multivariate polynomial over Q in variables Y1..Yn (internally 0-indexed).
// Invariants: no zero coefficients are stored, every exponent vector has
// length nvars().
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, const Rational& c);

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c) { return {nvars, c}; }
    static Polynomial variable(int nvars, int index, int power = 1);
    static Polynomial monomial(int nvars, Exponents e, const Rational& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const; // arbitrary total order for map keys

    // Variable relabeling Y_i -> Y_{w(i)}.
    Polynomial permuted(const Permutation& w) const;

    // (f^{(k,k+1)} - f) / (Y_{k+1} - Y_k); the quotient is always exact.
    Polynomial divided_difference(int k) const;

    bool is_symmetric(const std::vector<int>& block) const;

    // Substitutes Y_i -> Y_i + shift[i].
    Polynomial shifted(const std::vector<Rational>& shift) const;

    // Substitutes each variable by the given polynomial (all in the same
    // target ring).
    Polynomial substituted(const std::vector<Polynomial>& images) const;

    // Reinterprets the polynomial in a ring with more variables, variable i
    // becoming variable var_map[i].
    Polynomial embedded(int new_nvars, const std::vector<int>& var_map) const;

    int total_degree() const;                    // -1 for the zero polynomial
    std::optional<int> homogeneous_degree() const; // nullopt if inhomogeneous
    Rational content() const; // positive gcd of coefficients; 0 for zero poly
    Rational leading_coefficient() const;

    std::optional<Polynomial> divided_exactly_by(const Polynomial& g) const;

    // Canonical text form, e.g. "2/3*Y1^2*Y2 - Y3 + 1".
    std::string str() const;
    static Polynomial parse(int nvars, const std::string& text);

    void add_term(const Exponents& e, const Rational& c);

private:
    int nvars_;
    TermMap terms_;

    void check_same_ring(const Polynomial& o) const;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

} // namespace klrw
