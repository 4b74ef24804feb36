#include "doctest.h"
#include "test_util.hpp"

#include "klrw/perm_operator.hpp"
#include "klrw/shift_operator.hpp"

#include <random>

using namespace klrw;

namespace {

PermOperator random_perm_operator(std::mt19937& rng, int nvars, int terms) {
    PermOperator op(nvars);
    for (int t = 0; t < terms; ++t) {
        Permutation w = identity_permutation(nvars);
        std::shuffle(w.begin(), w.end(), rng);
        Polynomial num = testing::random_polynomial(rng, nvars, 2, 2);
        if (num.is_zero()) num = Polynomial::constant(nvars, 1);
        op.add_term(w, RationalFunction(num));
    }
    return op;
}

} // namespace

TEST_CASE("compose_perm basics") {
    PermOperator id = PermOperator::identity(2);
    PermOperator s1 = PermOperator::permutation_op(2, transposition(2, 0));
    PermOperator a = random_perm_operator(*new std::mt19937(3), 2, 2);
    CHECK(id.compose(a) == a);
    CHECK(s1.compose(s1) == id);

    // (Y1 . id) o (1 . s1) = (1 . s1) o (Y2 . id)
    PermOperator y1 = PermOperator::multiplication(
        RationalFunction(Polynomial::variable(2, 0)));
    PermOperator y2 = PermOperator::multiplication(
        RationalFunction(Polynomial::variable(2, 1)));
    CHECK(y1.compose(s1) == s1.compose(y2));
}

TEST_CASE("compose_perm associativity and module property") {
    std::mt19937 rng(5);
    for (int t = 0; t < 15; ++t) {
        PermOperator a = random_perm_operator(rng, 4, 3);
        PermOperator b = random_perm_operator(rng, 4, 3);
        PermOperator c = random_perm_operator(rng, 4, 3);
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
        Polynomial f = testing::random_polynomial(rng, 4, 3, 4);
        CHECK(a.compose(b).apply(f) == a.apply(b.apply(f)));
    }
}

TEST_CASE("apply_perm") {
    PermOperator id = PermOperator::identity(2);
    Polynomial f = Polynomial::variable(2, 0) * Polynomial::variable(2, 0);
    CHECK(id.apply(f) == RationalFunction(f));
    PermOperator s1 = PermOperator::permutation_op(2, transposition(2, 0));
    CHECK(s1.apply(Polynomial::variable(2, 0)) ==
          RationalFunction(Polynomial::variable(2, 1)));
    // the divided-difference operator applied to Y1^2 gives Y1 + Y2
    PermOperator dd = PermOperator::divided_difference_op(2, 0);
    CHECK(dd.apply(f) ==
          RationalFunction(Polynomial::variable(2, 0) + Polynomial::variable(2, 1)));
}

TEST_CASE("operators_equal") {
    PermOperator z(3);
    CHECK(z == PermOperator::zero(3));
    std::mt19937 rng(9);
    PermOperator a = random_perm_operator(rng, 3, 3);
    CHECK(a == a);
    CHECK(a != a.compose(a) + a);
}

TEST_CASE("canonical operator text") {
    PermOperator dd = PermOperator::divided_difference_op(2, 0);
    CHECK(dd.str() == "[1 2] (1)/(Y1 - Y2)\n[2 1] (-1)/(Y1 - Y2)");
}

TEST_CASE("shift operator commutation rule") {
    ShiftAlphabet a = ShiftAlphabet::triangular(2);
    ShiftOperator phi11 = ShiftOperator::shift(a, 1, 1);
    ShiftOperator x11 = ShiftOperator::multiplication(
        a, RationalFunction(Polynomial::variable(a.nvars(), a.index(1, 1))));
    ShiftOperator x21 = ShiftOperator::multiplication(
        a, RationalFunction(Polynomial::variable(a.nvars(), a.index(2, 1))));

    // phi_{1,1} x_{1,1} = (x_{1,1}+1) phi_{1,1}
    ShiftOperator lhs = phi11.compose(x11);
    ShiftOperator xp1 = ShiftOperator::multiplication(
        a, RationalFunction(Polynomial::variable(a.nvars(), a.index(1, 1)) +
                            Polynomial::constant(a.nvars(), 1)));
    CHECK(lhs == xp1.compose(phi11));

    // disjoint index commutes
    CHECK(phi11.compose(x21) == x21.compose(phi11));

    // phi o phi^{-1} = identity
    ShiftOperator phi_inv = ShiftOperator::shift(a, 1, 1, -1);
    CHECK(phi11.compose(phi_inv) == ShiftOperator::identity(a));
}

TEST_CASE("shift operator normal ordering is confluent") {
    std::mt19937 rng(21);
    ShiftAlphabet alph = ShiftAlphabet::triangular(2);
    auto random_shift_op = [&](int terms) {
        ShiftOperator op(alph);
        std::uniform_int_distribution<int> sh(-2, 2);
        for (int t = 0; t < terms; ++t) {
            ShiftOperator::ShiftVector v(alph.nvars());
            for (auto& e : v) e = sh(rng);
            Polynomial num = testing::random_polynomial(rng, alph.nvars(), 2, 2);
            if (num.is_zero()) num = Polynomial::constant(alph.nvars(), 1);
            op.add_term(v, RationalFunction(num));
        }
        return op;
    };
    for (int t = 0; t < 10; ++t) {
        ShiftOperator a = random_shift_op(2);
        ShiftOperator b = random_shift_op(2);
        ShiftOperator c = random_shift_op(2);
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    }
}
