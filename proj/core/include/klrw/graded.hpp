#pragma once

#include "klrw/algebra.hpp"

namespace klrw {

// Spanning set of the degree-d piece of e(w1) T e(w2): dot monomials on top
// of one reduced diagram per letter-preserving matching.
std::vector<AlgebraElement> graded_spanning_set(const Problem& p, const Word& w1,
                                                const Word& w2, int d);

// Minimal crossing degree over all matchings w2 -> w1; nullopt when no
// matching exists.
std::optional<int> minimal_crossing_degree(const Problem& p, const Word& w1, const Word& w2);

// Q-dimension of the span of the given elements inside the operator normal
// form.  All elements must share source and target words.
int span_dimension(const std::vector<AlgebraElement>& elements);

// dim of the degree-d piece of e(w1) T e(w2), through the faithful
// representation.
int graded_piece_dimension(const Problem& p, const Word& w1, const Word& w2, int d);

// dim of the degree-d piece of e(w1) I e(w2) where I is the two-sided ideal
// generated by the violating idempotents (first letter != m).
int violating_ideal_dimension(const Problem& p, const Word& w1, const Word& w2, int d);

} // namespace klrw
