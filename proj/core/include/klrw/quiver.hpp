#pragma once

#include "klrw/matrix.hpp"
#include "klrw/multisegment.hpp"

#include <random>

namespace klrw {

// Type-A quiver representation C^{v_1} -> C^{v_2} -> ... -> C^{v_{m-1}} -> C^n
// over exact rationals; maps[i] has shape v_{i+2} x v_{i+1} (v_m = n).
struct QuiverRep {
    Problem problem;
    std::vector<Matrix> maps; // size m-1

    QuiverRep(Problem p, std::vector<Matrix> maps_);
};

// Change of basis (g_1, ..., g_m), g_m constrained to the parabolic P_chi
// (block upper-triangular for the blocks of equal chi entries).
struct GroupElement {
    std::vector<Matrix> g; // size m, g[i] of size v_{i+1} (g[m-1] of size n)
};

struct RankInvariants {
    // ranks[k-1] = rank of f_{k;1} restricted to ker f_{k+1;1}, k = 1..m-1
    std::vector<int> segment_ranks;
    // preimage_dims[t] = dim f_{m;1}^{-1}(F_{p_t}) for the flag steps
    std::vector<int> preimage_dims;
};

QuiverRep canonical_rep(const Segmentation& s);

QuiverRep act(const GroupElement& g, const QuiverRep& r);

// The unique chi-flavored multisegment of the orbit, via exact rank
// invariants and recursion on the quotient by the subrepresentation
// generated by C^{v_1}.
FlavoredMultisegment classify(const QuiverRep& r);

RankInvariants rank_invariants(const QuiverRep& r);

int stabilizer_dimension(const QuiverRep& r);
int orbit_dimension(const QuiverRep& r);
int group_dimension(const Problem& p); // dim G_chi
int rep_space_dimension(const Problem& p);

// Random element of G_chi with small integer entries; g_m sampled block
// upper-triangular.  Deterministic for a given engine state.
GroupElement random_group_element(const Problem& p, std::mt19937& rng);

} // namespace klrw
