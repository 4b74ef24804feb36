#pragma once

#include "klrw/rational_function.hpp"

#include <map>

namespace klrw {

// Finite sum  sum_w c_w(Y) . w  acting on polynomials by
// f |-> sum_w c_w * f^w, coefficients stored to the left of the permutation.
// This normal form is unique, so equality of operators is decidable term by
// term.
class PermOperator {
public:
    using TermMap = std::map<Permutation, RationalFunction>;

    explicit PermOperator(int nvars) : nvars_(nvars) {}

    static PermOperator zero(int nvars) { return PermOperator(nvars); }
    static PermOperator identity(int nvars);
    // c . id  (multiplication operator)
    static PermOperator multiplication(RationalFunction c);
    static PermOperator permutation_op(int nvars, const Permutation& w);
    static PermOperator term(const RationalFunction& c, const Permutation& w);
    // Divided difference at k: (1/(Y_{k+1}-Y_k)) . s_k - (1/(Y_{k+1}-Y_k)) . id
    static PermOperator divided_difference_op(int nvars, int k);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PermOperator operator+(const PermOperator& o) const;
    PermOperator operator-(const PermOperator& o) const;
    PermOperator operator-() const;
    PermOperator operator*(const Rational& c) const;
    PermOperator scaled(const RationalFunction& c) const; // left-multiply coefficient

    // Operator composition: (c.w) o (d.v) = (c * d^w) . (w o v).
    PermOperator compose(const PermOperator& o) const;

    RationalFunction apply(const Polynomial& f) const;
    RationalFunction apply(const RationalFunction& f) const;

    bool operator==(const PermOperator& o) const;
    bool operator!=(const PermOperator& o) const { return !(*this == o); }

    // All term coefficients homogeneous of one common degree, if any.
    std::optional<int> homogeneous_coefficient_degree() const;

    RationalFunction coefficient(const Permutation& w) const;

    void add_term(const Permutation& w, const RationalFunction& c);

    // Canonical text: one line per term, permutations in one-line notation,
    // sorted; coefficients in canonical polynomial text form.
    std::string str() const;

private:
    int nvars_;
    TermMap terms_;
};

} // namespace klrw
