#include "klrw/ogz.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klrw {

ShiftAlphabet ogz_alphabet(int n) { return ShiftAlphabet::triangular(n + 1); }

namespace {

Polynomial xvar(const ShiftAlphabet& a, int k, int l) {
    return Polynomial::variable(a.nvars(), a.index(k, l));
}

ShiftOperator ogz_ladder_term_sum(int n, int i, int direction) {
    ShiftAlphabet a = ogz_alphabet(n);
    if (i < 1 || i > n) throw std::out_of_range("operator row index");
    ShiftOperator op(a);
    int other = i + direction;
    for (int j = 1; j <= i; ++j) {
        Polynomial num = Polynomial::constant(a.nvars(), 1);
        if (other >= 1) {
            for (int k = 1; k <= other; ++k) num = num * (xvar(a, i, j) - xvar(a, other, k));
        }
        Polynomial den = Polynomial::constant(a.nvars(), 1);
        for (int k = 1; k <= i; ++k) {
            if (k == j) continue;
            den = den * (xvar(a, i, j) - xvar(a, i, k));
        }
        RationalFunction coeff(num, den);
        if (direction > 0) coeff = -coeff;
        ShiftOperator term =
            ShiftOperator::multiplication(a, coeff).compose(ShiftOperator::shift(a, i, j, direction));
        op = op + term;
    }
    return op;
}

} // namespace

ShiftOperator ogz_raising(int n, int i) { return ogz_ladder_term_sum(n, i, +1); }
ShiftOperator ogz_lowering(int n, int i) { return ogz_ladder_term_sum(n, i, -1); }

namespace {

std::vector<int> value_slots(const std::vector<int>& row_values, int value) {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(row_values.size()); ++j)
        if (row_values[j] == value) out.push_back(j);
    return out;
}

void validate_symmetric(const Polynomial& p) {
    std::vector<int> all(p.nvars());
    for (int t = 0; t < p.nvars(); ++t) all[t] = t;
    if (!p.is_symmetric(all))
        throw std::invalid_argument("p must be symmetric in its alphabet");
}

} // namespace

ShiftOperator x_ips(int n, int i, const Polynomial& p, int s,
                    const std::vector<int>& row_values) {
    if (static_cast<int>(row_values.size()) != n)
        throw std::invalid_argument("row_values must have n entries");
    ShiftAlphabet a = ogz_alphabet(n);
    auto Ii = value_slots(row_values, i);
    auto Ii1 = value_slots(row_values, i + 1);
    if (p.nvars() != static_cast<int>(Ii.size()))
        throw std::invalid_argument("p must live on the I_i alphabet");
    validate_symmetric(p);

    // p applied to the shifted alphabet {x_{n,j} - i : j in I_i}
    std::vector<Polynomial> images;
    for (int slot : Ii)
        images.push_back(xvar(a, n, slot + 1) - Polynomial::constant(a.nvars(), i));
    Polynomial p_x = p.substituted(images.empty() ? std::vector<Polynomial>{} : images);
    if (p.nvars() == 0) p_x = Polynomial::constant(a.nvars(), p.constant_value());

    ShiftOperator op(a);
    for (int j : Ii1) {
        Polynomial num = Polynomial::constant(a.nvars(), 1);
        for (int k = 1; k <= n + 1; ++k) num = num * (xvar(a, n, j + 1) - xvar(a, n + 1, k));
        Polynomial extra = Polynomial::constant(a.nvars(), 1);
        for (int t = 0; t < s; ++t)
            extra = extra * (xvar(a, n, j + 1) - Polynomial::constant(a.nvars(), i + 1));
        Polynomial den = Polynomial::constant(a.nvars(), 1);
        for (int pj : Ii1) {
            if (pj == j) continue;
            den = den * (xvar(a, n, j + 1) - xvar(a, n, pj + 1));
        }
        RationalFunction coeff(num * extra * p_x, den);
        op = op + ShiftOperator::multiplication(a, -coeff).compose(
                      ShiftOperator::shift(a, n, j + 1, +1));
    }
    return op;
}

IntertwinerReport check_intertwiner(int n, int i, const Polynomial& p, int s,
                                    const std::vector<int>& row_n,
                                    const IntertwinerOptions& opts) {
    if (static_cast<int>(row_n.size()) != n)
        throw std::invalid_argument("row mismatch: bottom row must have n entries");
    std::vector<int> nu = row_n;
    std::sort(nu.begin(), nu.end());

    int j0 = -1;
    for (int j = n - 1; j >= 0; --j) {
        if (nu[j] == i) {
            j0 = j;
            break;
        }
    }
    if (j0 < 0) throw std::invalid_argument("row mismatch: no entry equal to i to raise");
    std::vector<int> nu_prime = nu;
    nu_prime[j0] = i + 1;

    ShiftAlphabet a = ogz_alphabet(n);
    const int N = a.nvars();
    auto Ii1 = value_slots(nu_prime, i + 1);

    // x_ips on the raised row data, then translate x_{n,l} -> Y_l + nu'_l
    ShiftOperator x_op = x_ips(n, i, p, s, nu_prime);
    std::vector<Rational> translation(N, Rational(0));
    for (int l = 0; l < n; ++l) translation[a.index(n, l + 1)] = nu_prime[l];

    // ladder side on the red ring
    LadderContext ctx(nu, i, {j0}, n, [&] {
        std::vector<int> idx(n);
        for (int t = 0; t < n; ++t) idx[t] = t;
        return idx;
    }());
    auto Ii_remaining = value_slots(nu_prime, i);
    if (p.nvars() != static_cast<int>(Ii_remaining.size()))
        throw std::invalid_argument("p must live on the I_i alphabet");
    std::vector<Polynomial> red_images;
    for (int slot : Ii_remaining) red_images.push_back(Polynomial::variable(n, slot));
    Polynomial p_red = p.nvars() == 0 ? Polynomial::constant(n, p.constant_value())
                                      : p.substituted(red_images);
    PermOperator ladder = xps_ladder_operator(ctx, p_red, s);

    std::vector<int> red_to_tri(n);
    for (int l = 0; l < n; ++l) red_to_tri[l] = a.index(n, l + 1);

    IntertwinerReport report;
    for (int j : Ii1) {
        ShiftOperator::ShiftVector sv(N, 0);
        sv[a.index(n, j + 1)] = 1;
        RationalFunction lhs = x_op.coefficient(sv).shifted(translation);

        Permutation sigma = ctx.coset_to({j});
        RationalFunction lad_coef = ladder.coefficient(sigma).embedded(N, red_to_tri);

        Polynomial c_factor = Polynomial::constant(N, 1);
        for (int k = opts.drop_c_factor ? 2 : 1; k <= n + 1; ++k) {
            c_factor = c_factor * (xvar(a, n, j + 1) +
                                   Polynomial::constant(N, nu_prime[j]) - xvar(a, n + 1, k));
        }
        RationalFunction rhs = RationalFunction(c_factor) * (-lad_coef);

        if (lhs != rhs) {
            report.pass = false;
            std::ostringstream msg;
            msg << "phi(n," << (j + 1) << "): translated operator coefficient\n  " << lhs.str()
                << "\ndiffers from C * ladder coefficient\n  " << rhs.str();
            report.mismatches.push_back(msg.str());
        }
    }
    return report;
}

} // namespace klrw
