#pragma once

#include "klrw/perm_operator.hpp"
#include "klrw/word.hpp"

#include <optional>

namespace klrw {

// Algebra element realized inside the faithful polynomial representation:
// source and target words plus a permutation-twisted operator on V variables
// (one per strand).  The zero element carries no words and multiplies to zero
// with everything.
class AlgebraElement {
public:
    static AlgebraElement zero_element(int nvars);
    AlgebraElement(Word source, Word target, PermOperator op);

    bool is_zero() const { return zero_; }
    const Word& source() const;
    const Word& target() const;
    const PermOperator& op() const;
    int nvars() const { return nvars_; }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const Rational& c) const;

    bool equals(const AlgebraElement& o) const;

private:
    AlgebraElement() = default;

    bool zero_ = false;
    int nvars_ = 0;
    Word source_, target_;
    PermOperator op_{0};
};

// a stacked on top of b; the bottom factor acts first in the polynomial
// representation.  Mismatched words give the zero element.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// e(w) for total words, e'(w) with the nilHecke primitive idempotent on each
// grouped run otherwise.
AlgebraElement idempotent(const Problem& p, const Word& w);

// Dot on strand k (0-based), degree 2.
AlgebraElement dot(const Problem& p, const Word& w, int k);

// Crossing of strands k, k+1 (0-based).  Rejects red-red crossings.  The
// operator is keyed on the source word (i, j) = (w_k, w_{k+1}):
//   i == j      divided difference,
//   i == j + 1  multiplication by (Y_{k+1} - Y_k) after the swap,
//   otherwise   the plain swap.
AlgebraElement crossing(const Problem& p, const Word& w, int k);

// Crossing degree of labels (a, b) with red = label m:
// -<alpha_a, alpha_b> for blacks (-2 equal, +1 adjacent, 0 distant), and
// delta_{a,m-1} when one strand is red.
int crossing_degree(const Problem& p, int a, int b);

// Degree of a homogeneous element; nullopt for inhomogeneous or zero input.
// Computed intrinsically from the coefficient degrees plus the word shift
// statistic, so degree(ab) = degree(a) + degree(b) holds by construction.
std::optional<int> degree(const AlgebraElement& a);

// nilHecke primitive idempotent on a block of size a at variable positions
// pos..pos+a-1: (Y_pos^{a-1} Y_{pos+1}^{a-2} ... Y_{pos+a-2}) d_{w_0}.
PermOperator nilhecke_idempotent(int nvars, int pos, int a);

// Composite divided difference along a reduced word of the longest element
// of the symmetric group on positions pos..pos+a-1.
PermOperator longest_divided_difference(int nvars, int pos, int a);

// S_chi acts by permuting the red strands (equivalently their dot variables)
// within each block of equal chi entries.  Source and target must be
// chi-parabolic.
AlgebraElement symmetrize_red_blocks(const Problem& p, const AlgebraElement& a);
bool is_S_chi_invariant(const Problem& p, const AlgebraElement& a);

// Reduced diagram (sequence of crossings) realizing the position bijection
// matching: source position s goes to target position matching[s].  The word
// at the top must come out as target.
AlgebraElement matching_diagram(const Problem& p, const Word& source,
                                const std::vector<int>& matching);

// Letter-preserving bijections source -> target positions with the red
// strands matched in order.
std::vector<std::vector<int>> letter_matchings(const Problem& p, const Word& source,
                                               const Word& target);

int matching_crossing_degree(const Problem& p, const Word& source,
                             const std::vector<int>& matching);

} // namespace klrw
