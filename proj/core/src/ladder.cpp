#include "klrw/ladder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace klrw {

LadderContext::LadderContext(const CentralCharacter& chi, int i, int a) : values_(chi), i_(i) {
    if (!std::is_sorted(chi.begin(), chi.end()))
        throw std::invalid_argument("chi must be weakly increasing");
    if (!chi_plus_power(chi, i, a))
        throw std::invalid_argument("chi^{+i^a} does not exist");
    // rung: the last a slots holding value i
    for (int j = n() - 1; j >= 0 && static_cast<int>(rung_.size()) < a; --j)
        if (values_[j] == i) rung_.push_back(j);
    std::sort(rung_.begin(), rung_.end());
    nvars_ = n();
    red_vars_.resize(n());
    for (int j = 0; j < n(); ++j) red_vars_[j] = j;
    init_target();
}

LadderContext::LadderContext(std::vector<int> values, int i, std::vector<int> rung_slots,
                             int nvars, std::vector<int> red_vars)
    : values_(std::move(values)),
      i_(i),
      rung_(std::move(rung_slots)),
      nvars_(nvars),
      red_vars_(std::move(red_vars)) {
    std::sort(rung_.begin(), rung_.end());
    for (int r : rung_) {
        if (r < 0 || r >= n() || values_[r] != i)
            throw std::invalid_argument("rung slot does not hold value i");
    }
    if (static_cast<int>(red_vars_.size()) != n())
        throw std::invalid_argument("red variable map size");
    init_target();
}

void LadderContext::init_target() {
    for (int j = 0; j < n(); ++j)
        if (values_[j] == i_ + 1) target_.push_back(j);
}

CentralCharacter LadderContext::chi() const {
    CentralCharacter c = values_;
    std::sort(c.begin(), c.end());
    return c;
}

CentralCharacter LadderContext::chi_prime() const {
    CentralCharacter c = values_;
    for (int r : rung_) c[r] = i_ + 1;
    std::sort(c.begin(), c.end());
    return c;
}

namespace {

std::vector<std::vector<int>> value_blocks(const std::vector<int>& values,
                                           const std::vector<int>& red_vars,
                                           const std::vector<int>* rung) {
    std::map<std::pair<int, bool>, std::vector<int>> by_value;
    for (int j = 0; j < static_cast<int>(values.size()); ++j) {
        bool in_rung = rung && std::find(rung->begin(), rung->end(), j) != rung->end();
        by_value[{values[j], in_rung}].push_back(red_vars[j]);
    }
    std::vector<std::vector<int>> blocks;
    for (auto& [k, vars] : by_value) blocks.push_back(std::move(vars));
    return blocks;
}

} // namespace

std::vector<std::vector<int>> LadderContext::chi_blocks() const {
    return value_blocks(values_, red_vars_, nullptr);
}

std::vector<std::vector<int>> LadderContext::chi_prime_blocks() const {
    std::vector<int> raised = values_;
    for (int r : rung_) raised[r] = i_ + 1;
    return value_blocks(raised, red_vars_, nullptr);
}

std::vector<std::vector<int>> LadderContext::common_blocks() const {
    return value_blocks(values_, red_vars_, &rung_);
}

Polynomial LadderContext::delta() const {
    Polynomial d = Polynomial::constant(nvars_, 1);
    for (int l : rung_) {
        for (int k : target_) {
            d = d * (Polynomial::variable(nvars_, red_vars_[l]) -
                     Polynomial::variable(nvars_, red_vars_[k]));
        }
    }
    return d;
}

Permutation LadderContext::coset_to(const std::vector<int>& destination_slots) const {
    // merged block, sorted by slot
    std::vector<int> merged = rung_;
    merged.insert(merged.end(), target_.begin(), target_.end());
    std::sort(merged.begin(), merged.end());
    std::vector<int> dest = destination_slots;
    std::sort(dest.begin(), dest.end());
    std::vector<int> rest;
    for (int s : merged)
        if (std::find(dest.begin(), dest.end(), s) == dest.end()) rest.push_back(s);

    Permutation w = identity_permutation(nvars_);
    for (size_t k = 0; k < rung_.size(); ++k) w[red_vars_[rung_[k]]] = red_vars_[dest[k]];
    for (size_t k = 0; k < target_.size(); ++k) w[red_vars_[target_[k]]] = red_vars_[rest[k]];
    return w;
}

std::vector<Permutation> LadderContext::coset_representatives() const {
    std::vector<int> merged = rung_;
    merged.insert(merged.end(), target_.begin(), target_.end());
    std::sort(merged.begin(), merged.end());
    const int a = rung_size();
    const int total = static_cast<int>(merged.size());

    std::vector<Permutation> reps;
    std::vector<int> pick(a);
    auto rec = [&](auto&& self, int from, int k) -> void {
        if (k == a) {
            std::vector<int> dest;
            for (int idx : pick) dest.push_back(merged[idx]);
            reps.push_back(coset_to(dest));
            return;
        }
        for (int idx = from; idx <= total - (a - k); ++idx) {
            pick[k] = idx;
            self(self, idx + 1, k + 1);
        }
    };
    if (a == 0) reps.push_back(identity_permutation(nvars_));
    else rec(rec, 0, 0);
    return reps;
}

bool is_block_symmetric(const Polynomial& f, const std::vector<std::vector<int>>& blocks) {
    for (const auto& b : blocks)
        if (!f.is_symmetric(b)) return false;
    return true;
}

Polynomial split(const LadderContext& ctx, const Polynomial& f) {
    if (f.nvars() != ctx.nvars()) throw std::invalid_argument("variable-count mismatch");
    if (!is_block_symmetric(f, ctx.chi_blocks()))
        throw std::invalid_argument("split input is not S_chi invariant");
    return f;
}

PermOperator merge_operator(const LadderContext& ctx) {
    RationalFunction inv_delta(Polynomial::constant(ctx.nvars(), 1), ctx.delta());
    PermOperator op(ctx.nvars());
    for (const auto& sigma : ctx.coset_representatives()) {
        op.add_term(sigma, inv_delta.permuted(sigma));
    }
    return op;
}

Polynomial merge(const LadderContext& ctx, const Polynomial& f) {
    if (!is_block_symmetric(f, ctx.common_blocks()))
        throw std::invalid_argument("merge input is not S_{chi,chi'} invariant");
    RationalFunction result = merge_operator(ctx).apply(f);
    if (!result.is_polynomial())
        throw std::logic_error("merge denominators failed to cancel: " + result.str());
    return result.as_polynomial();
}

PermOperator ladder_action(const LadderContext& ctx, const PermOperator& below,
                           const PermOperator& above) {
    if (below.nvars() != ctx.nvars() || above.nvars() != ctx.nvars())
        throw std::invalid_argument("malformed rung: operator ring mismatch");
    return above.compose(merge_operator(ctx)).compose(below);
}

PermOperator xps_ladder_operator(const LadderContext& ctx, const Polynomial& p_bottom, int s) {
    if (ctx.rung_size() != 1) throw std::invalid_argument("xps ladder needs a single rung");
    Polynomial rung_power =
        Polynomial::variable(ctx.nvars(), ctx.red_vars()[ctx.rung()[0]], s);
    if (s == 0) rung_power = Polynomial::constant(ctx.nvars(), 1);
    Polynomial below = rung_power * p_bottom;
    return merge_operator(ctx).compose(PermOperator::multiplication(RationalFunction(below)));
}

} // namespace klrw
