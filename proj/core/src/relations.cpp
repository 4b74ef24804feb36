#include "klrw/relations.hpp"

#include <functional>
#include <sstream>

namespace klrw {

namespace {

Problem problem_of_word(int m, const std::vector<int>& letters) {
    std::vector<int> v(m - 1, 0);
    int n = 0;
    for (int l : letters) {
        if (l == m) ++n;
        else ++v[l - 1];
    }
    std::vector<int> chi(n, 0); // chi plays no role in the local relations
    return Problem(m, n, std::move(v), std::move(chi));
}

void enumerate_words(int m, int len, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& f) {
    if (static_cast<int>(cur.size()) == len) {
        f(cur);
        return;
    }
    for (int l = 1; l <= m; ++l) {
        cur.push_back(l);
        enumerate_words(m, len, cur, f);
        cur.pop_back();
    }
}

struct Checker {
    const RelationSuiteOptions& opts;
    RelationSuiteReport& report;

    AlgebraElement make_crossing(const Problem& p, const Word& w, int k) const {
        AlgebraElement c = crossing(p, w, k);
        auto ls = w.letters();
        if (opts.flip_adjacent_sign && ls[k] == ls[k + 1] + 1) return c * Rational(-1);
        return c;
    }

    void expect(bool ok, const Problem& p, const Word& w, int k, const std::string& what) {
        ++report.checks;
        if (!ok) {
            std::ostringstream msg;
            msg << what << " fails at m=" << p.m << " word=" << w.str() << " k=" << (k + 1);
            report.failures.push_back(msg.str());
        }
    }

    void check_pair(const Problem& p, const Word& w, int k) {
        auto ls = w.letters();
        int i = ls[k], j = ls[k + 1];
        if (i == p.m && j == p.m) return;

        AlgebraElement e = idempotent(p, w);
        AlgebraElement psi = make_crossing(p, w, k);
        const Word& wt = psi.target();

        if (i == j) {
            // dot-crossing commutators equal the idempotent, both placements
            AlgebraElement lhs1 = multiply(dot(p, w, k), psi) - multiply(psi, dot(p, w, k + 1));
            expect(lhs1.equals(e), p, w, k, "nilHecke commutator (first form)");
            AlgebraElement lhs2 = multiply(psi, dot(p, w, k)) - multiply(dot(p, w, k + 1), psi);
            expect(lhs2.equals(e), p, w, k, "nilHecke commutator (second form)");
        } else {
            // dots slide through crossings of distinct labels
            expect(multiply(dot(p, wt, k), psi).equals(multiply(psi, dot(p, w, k + 1))), p, w, k,
                   "dot slide (strand k+1 -> k)");
            expect(multiply(dot(p, wt, k + 1), psi).equals(multiply(psi, dot(p, w, k))), p, w, k,
                   "dot slide (strand k -> k+1)");
        }

        // bigon
        AlgebraElement psi_back = make_crossing(p, wt, k);
        AlgebraElement bigon = multiply(psi_back, psi);
        if (i == j) {
            expect(bigon.is_zero(), p, w, k, "bigon (equal labels)");
        } else if (degree_adjacent(p, i, j)) {
            AlgebraElement expected = (i + 1 == j)
                                          ? dot(p, w, k + 1) - dot(p, w, k)
                                          : dot(p, w, k) - dot(p, w, k + 1);
            expect(bigon.equals(expected), p, w, k, "bigon (adjacent labels)");
        } else {
            expect(bigon.equals(e), p, w, k, "bigon (distant labels)");
        }
    }

    static bool degree_adjacent(const Problem& p, int i, int j) {
        (void)p;
        return i + 1 == j || j + 1 == i;
    }

    void check_triple(const Problem& p, const Word& w, int k) {
        auto ls = w.letters();
        int i = ls[k], j = ls[k + 1], kk = ls[k + 2];
        int reds = (i == p.m) + (j == p.m) + (kk == p.m);
        if (reds >= 2) return; // would need a red-red crossing

        AlgebraElement a1 = make_crossing(p, w, k);
        AlgebraElement a2 = make_crossing(p, a1.target(), k + 1);
        AlgebraElement a3 = make_crossing(p, a2.target(), k);
        AlgebraElement lhs_a = multiply(a3, multiply(a2, a1));

        AlgebraElement b1 = make_crossing(p, w, k + 1);
        AlgebraElement b2 = make_crossing(p, b1.target(), k);
        AlgebraElement b3 = make_crossing(p, b2.target(), k + 1);
        AlgebraElement lhs_b = multiply(b3, multiply(b2, b1));

        AlgebraElement diff = lhs_a - lhs_b;
        if (i == kk && i == j + 1) {
            expect(diff.equals(idempotent(p, w)), p, w, k, "triple crossing (i=k=j+1)");
        } else if (i == kk && i == j - 1) {
            expect(diff.equals(idempotent(p, w) * Rational(-1)), p, w, k,
                   "triple crossing (i=k=j-1)");
        } else {
            expect(diff.is_zero(), p, w, k, "triple crossing (generic)");
        }
    }
};

} // namespace

RelationSuiteReport run_relation_suite(const RelationSuiteOptions& opts) {
    RelationSuiteReport report;
    Checker checker{opts, report};
    for (int m = 1; m <= opts.max_m; ++m) {
        for (int len = 2; len <= opts.max_strands; ++len) {
            std::vector<int> cur;
            enumerate_words(m, len, cur, [&](const std::vector<int>& letters) {
                Problem p = problem_of_word(m, letters);
                Word w = Word::total(letters);
                for (int k = 0; k + 1 < len; ++k) checker.check_pair(p, w, k);
                for (int k = 0; k + 2 < len; ++k) checker.check_triple(p, w, k);
            });
        }
    }
    return report;
}

} // namespace klrw
