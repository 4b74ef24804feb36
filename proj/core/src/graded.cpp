#include "klrw/graded.hpp"

#include "klrw/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace klrw {

namespace {

// All exponent vectors of total degree d in nvars variables.
void enumerate_exponents(int nvars, int d, int from, Exponents& cur,
                         std::vector<Exponents>& out) {
    if (from == nvars - 1) {
        cur[from] = d;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[from] = e;
        enumerate_exponents(nvars, d - e, from + 1, cur, out);
    }
}

std::vector<Exponents> exponents_of_degree(int nvars, int d) {
    std::vector<Exponents> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    Exponents cur(nvars, 0);
    enumerate_exponents(nvars, d, 0, cur, out);
    return out;
}

} // namespace

std::optional<int> minimal_crossing_degree(const Problem& p, const Word& w1, const Word& w2) {
    auto matchings = letter_matchings(p, w2, w1);
    if (matchings.empty()) return std::nullopt;
    std::optional<int> best;
    for (const auto& m : matchings) {
        int d = matching_crossing_degree(p, w2, m);
        if (!best || d < *best) best = d;
    }
    return best;
}

std::vector<AlgebraElement> graded_spanning_set(const Problem& p, const Word& w1,
                                                const Word& w2, int d) {
    std::vector<AlgebraElement> out;
    const int nvars = w2.length();
    for (const auto& m : letter_matchings(p, w2, w1)) {
        int cd = matching_crossing_degree(p, w2, m);
        int dotdeg = d - cd;
        if (dotdeg < 0 || dotdeg % 2 != 0) continue;
        AlgebraElement diagram = matching_diagram(p, w2, m);
        for (const auto& e : exponents_of_degree(nvars, dotdeg / 2)) {
            PermOperator mono = PermOperator::multiplication(
                RationalFunction(Polynomial::monomial(nvars, e, 1)));
            AlgebraElement dotted(diagram.source(), diagram.target(),
                                  mono.compose(diagram.op()));
            out.push_back(std::move(dotted));
        }
    }
    return out;
}

int span_dimension(const std::vector<AlgebraElement>& elements) {
    std::vector<const AlgebraElement*> nonzero;
    for (const auto& e : elements)
        if (!e.is_zero()) nonzero.push_back(&e);
    if (nonzero.empty()) return 0;
    const int nvars = nonzero.front()->nvars();

    // Common denominator per permutation slot.  Denominators of normal forms
    // are products of the linear forms (Y_q - Y_p); track the maximal power
    // of each factor seen across the collection.
    std::vector<Polynomial> linear_forms;
    for (int a = 0; a < nvars; ++a)
        for (int b = a + 1; b < nvars; ++b)
            linear_forms.push_back(Polynomial::variable(nvars, b) -
                                   Polynomial::variable(nvars, a));

    auto factor_exponents = [&](const Polynomial& den) {
        std::vector<int> exps(linear_forms.size(), 0);
        Polynomial rest = den;
        for (size_t i = 0; i < linear_forms.size(); ++i) {
            while (true) {
                auto q = rest.divided_exactly_by(linear_forms[i]);
                if (!q) break;
                rest = *q;
                ++exps[i];
            }
        }
        if (!rest.is_constant())
            throw std::logic_error("unexpected denominator factor: " + den.str());
        return std::pair(exps, rest.constant_value());
    };

    std::map<Permutation, std::vector<int>> max_exps;
    for (const auto* e : nonzero) {
        for (const auto& [w, c] : e->op().terms()) {
            auto [exps, unit] = factor_exponents(c.den());
            auto it = max_exps.find(w);
            if (it == max_exps.end()) {
                max_exps.emplace(w, exps);
            } else {
                for (size_t i = 0; i < exps.size(); ++i)
                    it->second[i] = std::max(it->second[i], exps[i]);
            }
        }
    }

    std::map<Permutation, Polynomial> common_den;
    for (const auto& [w, exps] : max_exps) {
        Polynomial den = Polynomial::constant(nvars, 1);
        for (size_t i = 0; i < exps.size(); ++i)
            for (int k = 0; k < exps[i]; ++k) den = den * linear_forms[i];
        common_den.emplace(w, std::move(den));
    }

    // Coordinates: (permutation, monomial) -> rational.
    std::map<std::pair<Permutation, Exponents>, int> coord_index;
    std::vector<std::vector<std::pair<int, Rational>>> rows;
    for (const auto* e : nonzero) {
        std::vector<std::pair<int, Rational>> row;
        for (const auto& [w, c] : e->op().terms()) {
            auto q = common_den.at(w).divided_exactly_by(c.den());
            if (!q) throw std::logic_error("common denominator failure");
            Polynomial coords = c.num() * *q;
            for (const auto& [mono, coeff] : coords.terms()) {
                auto key = std::pair(w, mono);
                auto [it, inserted] =
                    coord_index.emplace(key, static_cast<int>(coord_index.size()));
                row.emplace_back(it->second, coeff);
            }
        }
        rows.push_back(std::move(row));
    }

    Matrix mat(static_cast<int>(rows.size()), static_cast<int>(coord_index.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) mat.at(static_cast<int>(r), c) = v;
    return mat.rank();
}

int graded_piece_dimension(const Problem& p, const Word& w1, const Word& w2, int d) {
    return span_dimension(graded_spanning_set(p, w1, w2, d));
}

int violating_ideal_dimension(const Problem& p, const Word& w1, const Word& w2, int d) {
    std::vector<AlgebraElement> products;
    for (const auto& u : enumerate_total_words(p)) {
        if (!is_violating(u, p.m)) continue;
        auto min_left = minimal_crossing_degree(p, w1, u);
        auto min_right = minimal_crossing_degree(p, u, w2);
        if (!min_left || !min_right) continue;
        for (int d1 = *min_left; d1 <= d - *min_right; ++d1) {
            int d2 = d - d1;
            auto left = graded_spanning_set(p, w1, u, d1);
            if (left.empty()) continue;
            auto right = graded_spanning_set(p, u, w2, d2);
            for (const auto& x : left)
                for (const auto& y : right) products.push_back(multiply(x, y));
        }
    }
    return span_dimension(products);
}

} // namespace klrw
