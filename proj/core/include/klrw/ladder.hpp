#pragma once

#include "klrw/gt.hpp"
#include "klrw/perm_operator.hpp"

namespace klrw {

// Red-dot variable bookkeeping for one ladder E_i^(a): n red slots carrying
// the entries of chi, with `rung` the a slots raised from i to i+1 and
// `target` the slots already at i+1.  The ambient polynomial ring may be
// larger than the red slots; red_vars maps slot -> variable index.
class LadderContext {
public:
    // Sorted-chi context: the rung is the last a slots of the i-block.
    LadderContext(const CentralCharacter& chi, int i, int a);
    // Explicit slot values (one per red strand, not necessarily sorted) with
    // a chosen rung.
    LadderContext(std::vector<int> values, int i, std::vector<int> rung_slots, int nvars,
                  std::vector<int> red_vars);

    int n() const { return static_cast<int>(values_.size()); }
    int nvars() const { return nvars_; }
    int raised_letter() const { return i_; }
    int rung_size() const { return static_cast<int>(rung_.size()); }
    const std::vector<int>& values() const { return values_; }
    const std::vector<int>& rung() const { return rung_; }
    const std::vector<int>& target() const { return target_; }
    const std::vector<int>& red_vars() const { return red_vars_; }
    CentralCharacter chi() const;
    CentralCharacter chi_prime() const;

    // Variable-index blocks of equal values (S_chi), and the refinement that
    // additionally separates the rung (S_{chi,chi'}).
    std::vector<std::vector<int>> chi_blocks() const;
    std::vector<std::vector<int>> chi_prime_blocks() const;
    std::vector<std::vector<int>> common_blocks() const;

    // Delta = prod_{l in rung, k in target} (Y_l - Y_k).
    Polynomial delta() const;

    // Minimal-length representatives of S_{chi'}/S_{chi,chi'}: shuffles of
    // the merged block, as variable permutations of the ambient ring.  The
    // representative sending the rung slots to `destination` (a sorted
    // rung_size-subset of the merged block) is deterministic.
    std::vector<Permutation> coset_representatives() const;
    Permutation coset_to(const std::vector<int>& destination_slots) const;

private:
    std::vector<int> values_;
    int i_;
    std::vector<int> rung_;
    std::vector<int> target_;
    int nvars_;
    std::vector<int> red_vars_;

    void init_target();
};

bool is_block_symmetric(const Polynomial& f, const std::vector<std::vector<int>>& blocks);

// Inclusion of S_chi invariants into S_{chi,chi'} invariants; rejects
// non-invariant input.
Polynomial split(const LadderContext& ctx, const Polynomial& f);

// f |-> sum over coset representatives of f^sigma / Delta^sigma.  Defined on
// S_{chi,chi'} invariants; the symmetrized sum always clears the
// denominators, and failure to do so aborts.
Polynomial merge(const LadderContext& ctx, const Polynomial& f);

// The same map as an operator on the ambient ring.
PermOperator merge_operator(const LadderContext& ctx);

// above o merge o below, the operator of a one-rung ladder diagram with KLRW
// parts below and above the rung.
PermOperator ladder_action(const LadderContext& ctx, const PermOperator& below,
                           const PermOperator& above);

// Operator of the diagram with polynomial p placed on the red dots at the
// bottom and s dots sandwiched on the rung (single-rung contexts only):
// merge o (Y_rung^s * p).
PermOperator xps_ladder_operator(const LadderContext& ctx, const Polynomial& p_bottom, int s);

} // namespace klrw
