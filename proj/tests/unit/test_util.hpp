#pragma once

#include "klrw/polynomial.hpp"
#include "klrw/rational_function.hpp"

#include <algorithm>
#include <random>

namespace klrw::testing {

// Random polynomial with small integer coefficients, at most `terms` terms of
// degree <= max_deg.
inline Polynomial random_polynomial(std::mt19937& rng, int nvars, int max_deg, int terms) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        int d = deg(rng);
        for (int i = 0; i < d; ++i) e[var(rng)] += 1;
        p.add_term(e, coeff(rng));
    }
    return p;
}

// Full symmetrization over each block: sum of p^sigma over the product of the
// block symmetric groups.
inline Polynomial block_symmetrized(const Polynomial& p,
                                    const std::vector<std::vector<int>>& blocks) {
    Polynomial sum = p;
    for (const auto& block : blocks) {
        std::vector<int> idx(block.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        Polynomial acc(p.nvars());
        std::sort(idx.begin(), idx.end());
        do {
            Permutation w = identity_permutation(p.nvars());
            for (size_t i = 0; i < block.size(); ++i) w[block[i]] = block[idx[i]];
            acc = acc + sum.permuted(w);
        } while (std::next_permutation(idx.begin(), idx.end()));
        sum = acc;
    }
    return sum;
}

inline Polynomial random_block_symmetric(std::mt19937& rng, int nvars, int max_deg, int terms,
                                         const std::vector<std::vector<int>>& blocks) {
    return block_symmetrized(random_polynomial(rng, nvars, max_deg, terms), blocks);
}

} // namespace klrw::testing
