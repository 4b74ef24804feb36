#include "klrw/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace klrw {

AlgebraElement AlgebraElement::zero_element(int nvars) {
    AlgebraElement a;
    a.zero_ = true;
    a.nvars_ = nvars;
    a.op_ = PermOperator::zero(nvars);
    return a;
}

AlgebraElement::AlgebraElement(Word source, Word target, PermOperator op)
    : zero_(false),
      nvars_(op.nvars()),
      source_(std::move(source)),
      target_(std::move(target)),
      op_(std::move(op)) {
    if (source_.length() != nvars_ || target_.length() != nvars_)
        throw std::invalid_argument("word length does not match variable count");
    if (op_.is_zero()) zero_ = true;
}

const Word& AlgebraElement::source() const {
    if (zero_) throw std::logic_error("zero element has no source word");
    return source_;
}

const Word& AlgebraElement::target() const {
    if (zero_) throw std::logic_error("zero element has no target word");
    return target_;
}

const PermOperator& AlgebraElement::op() const { return op_; }

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (zero_) return o;
    if (o.zero_) return *this;
    if (source_ != o.source_ || target_ != o.target_)
        throw std::invalid_argument("cannot add elements with different words");
    PermOperator sum = op_ + o.op_;
    if (sum.is_zero()) return zero_element(nvars_);
    return AlgebraElement(source_, target_, std::move(sum));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    if (o.zero_) return *this;
    return *this + AlgebraElement(o.source_, o.target_, -o.op_);
}

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
    if (zero_ || c == 0) return zero_element(nvars_);
    return AlgebraElement(source_, target_, op_ * c);
}

bool AlgebraElement::equals(const AlgebraElement& o) const {
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return source_ == o.source_ && target_ == o.target_ && op_ == o.op_;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.source() != b.target()) return AlgebraElement::zero_element(a.nvars());
    PermOperator composed = a.op().compose(b.op());
    if (composed.is_zero()) return AlgebraElement::zero_element(a.nvars());
    return AlgebraElement(b.source(), a.target(), std::move(composed));
}

PermOperator longest_divided_difference(int nvars, int pos, int a) {
    // w_0 = (s_pos)(s_{pos+1} s_pos)...: any reduced word works since the
    // divided differences satisfy the braid relations.
    PermOperator op = PermOperator::identity(nvars);
    for (int len = 1; len < a; ++len) {
        for (int k = pos + len - 1; k >= pos; --k) {
            op = PermOperator::divided_difference_op(nvars, k).compose(op);
        }
    }
    return op;
}

PermOperator nilhecke_idempotent(int nvars, int pos, int a) {
    PermOperator op = longest_divided_difference(nvars, pos, a);
    Polynomial staircase = Polynomial::constant(nvars, 1);
    for (int i = 0; i < a - 1; ++i) {
        staircase = staircase * Polynomial::variable(nvars, pos + i, a - 1 - i);
    }
    return PermOperator::multiplication(RationalFunction(staircase)).compose(op);
}

AlgebraElement idempotent(const Problem& p, const Word& w) {
    auto counts = w.letter_counts(p.m);
    for (int i = 1; i < p.m; ++i)
        if (counts[i] != p.v[i - 1]) throw std::invalid_argument("word does not fit problem");
    if (counts[p.m] != p.n) throw std::invalid_argument("word does not fit problem");
    int nvars = w.length();
    PermOperator op = PermOperator::identity(nvars);
    int pos = 0;
    for (const auto& e : w.entries()) {
        if (e.multiplicity > 1) op = nilhecke_idempotent(nvars, pos, e.multiplicity).compose(op);
        pos += e.multiplicity;
    }
    return AlgebraElement(w, w, std::move(op));
}

AlgebraElement dot(const Problem& p, const Word& w, int k) {
    (void)p;
    if (!w.is_total()) throw std::invalid_argument("dot requires a total word");
    if (k < 0 || k >= w.length()) throw std::out_of_range("strand position");
    int nvars = w.length();
    PermOperator op =
        PermOperator::multiplication(RationalFunction(Polynomial::variable(nvars, k)));
    return AlgebraElement(w, w, std::move(op));
}

AlgebraElement crossing(const Problem& p, const Word& w, int k) {
    if (!w.is_total()) throw std::invalid_argument("crossing requires a total word");
    if (k < 0 || k + 1 >= w.length()) throw std::out_of_range("strand position");
    auto letters = w.letters();
    int i = letters[k], j = letters[k + 1];
    if (i == p.m && j == p.m) throw std::invalid_argument("red strands cannot cross");
    int nvars = w.length();
    std::swap(letters[k], letters[k + 1]);
    Word target = Word::total(letters);
    PermOperator op(nvars);
    if (i == j) {
        op = PermOperator::divided_difference_op(nvars, k);
    } else if (i == j + 1) {
        Polynomial factor =
            Polynomial::variable(nvars, k + 1) - Polynomial::variable(nvars, k);
        op = PermOperator::multiplication(RationalFunction(factor))
                 .compose(PermOperator::permutation_op(nvars, transposition(nvars, k)));
    } else {
        op = PermOperator::permutation_op(nvars, transposition(nvars, k));
    }
    return AlgebraElement(w, target, std::move(op));
}

int crossing_degree(const Problem& p, int a, int b) {
    bool a_red = (a == p.m), b_red = (b == p.m);
    if (a_red && b_red) throw std::invalid_argument("red strands cannot cross");
    if (a_red || b_red) {
        int black = a_red ? b : a;
        return black == p.m - 1 ? 1 : 0;
    }
    if (a == b) return -2;
    if (std::abs(a - b) == 1) return 1;
    return 0;
}

namespace {

// Word statistic fixing the grading shift of the summand K[Y]e(i): the count
// of ascending-adjacent pairs, reds counted with label m.
int ascent_pair_count(const Word& w) {
    auto ls = w.letters();
    int count = 0;
    for (size_t a = 0; a < ls.size(); ++a)
        for (size_t b = a + 1; b < ls.size(); ++b)
            if (ls[a] + 1 == ls[b]) ++count;
    return count;
}

} // namespace

std::optional<int> degree(const AlgebraElement& a) {
    if (a.is_zero()) return std::nullopt;
    auto cdeg = a.op().homogeneous_coefficient_degree();
    if (!cdeg) return std::nullopt;
    int shift = ascent_pair_count(a.source()) - ascent_pair_count(a.target());
    return 2 * *cdeg + shift;
}

namespace {

// chi-block permutations realized on the red variable slots of a word.
std::vector<Permutation> chi_group_on_word(const Problem& p, const Word& w) {
    auto reds = red_positions(w, p.m);
    std::vector<std::vector<int>> blocks;
    for (int k = 0; k < p.n; ++k) {
        if (k > 0 && p.chi[k] == p.chi[k - 1]) blocks.back().push_back(reds[k]);
        else blocks.push_back({reds[k]});
    }
    int nvars = w.length();
    std::vector<Permutation> group = {identity_permutation(nvars)};
    for (const auto& block : blocks) {
        std::vector<int> idx(block.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::vector<Permutation> extended;
        std::sort(idx.begin(), idx.end());
        do {
            for (const auto& g : group) {
                Permutation w2 = g;
                for (size_t i = 0; i < block.size(); ++i) w2[block[i]] = g[block[idx[i]]];
                extended.push_back(w2);
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
        group = std::move(extended);
    }
    return group;
}

} // namespace

AlgebraElement symmetrize_red_blocks(const Problem& p, const AlgebraElement& a) {
    if (a.is_zero()) return a;
    if (!is_chi_parabolic(a.source(), p) || !is_chi_parabolic(a.target(), p))
        throw std::invalid_argument("symmetrize requires chi-parabolic words");
    auto src_group = chi_group_on_word(p, a.source());
    auto tgt_group = chi_group_on_word(p, a.target());
    if (src_group.size() != tgt_group.size())
        throw std::logic_error("mismatched S_chi realizations");
    PermOperator sum(a.nvars());
    for (size_t g = 0; g < src_group.size(); ++g) {
        PermOperator conj = PermOperator::permutation_op(a.nvars(), tgt_group[g])
                                .compose(a.op())
                                .compose(PermOperator::permutation_op(
                                    a.nvars(), inverse(src_group[g])));
        sum = sum + conj;
    }
    Rational scale = Rational(1, static_cast<long>(src_group.size()));
    PermOperator avg = sum * scale;
    if (avg.is_zero()) return AlgebraElement::zero_element(a.nvars());
    return AlgebraElement(a.source(), a.target(), std::move(avg));
}

bool is_S_chi_invariant(const Problem& p, const AlgebraElement& a) {
    if (a.is_zero()) return true;
    return symmetrize_red_blocks(p, a).equals(a);
}

std::vector<std::vector<int>> letter_matchings(const Problem& p, const Word& source,
                                               const Word& target) {
    auto src = source.letters();
    auto tgt = target.letters();
    if (src.size() != tgt.size()) return {};
    std::map<int, std::vector<int>> src_pos, tgt_pos;
    for (size_t i = 0; i < src.size(); ++i) src_pos[src[i]].push_back(static_cast<int>(i));
    for (size_t i = 0; i < tgt.size(); ++i) tgt_pos[tgt[i]].push_back(static_cast<int>(i));
    for (const auto& [letter, pos] : src_pos) {
        if (tgt_pos[letter].size() != pos.size()) return {};
    }

    std::vector<std::vector<int>> matchings = {std::vector<int>(src.size(), -1)};
    for (const auto& [letter, spos] : src_pos) {
        const auto& tpos = tgt_pos[letter];
        std::vector<std::vector<int>> next;
        if (letter == p.m) {
            // reds never cross: the order-preserving bijection only
            for (auto m : matchings) {
                for (size_t i = 0; i < spos.size(); ++i) m[spos[i]] = tpos[i];
                next.push_back(std::move(m));
            }
        } else {
            std::vector<int> idx(spos.size());
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
            std::sort(idx.begin(), idx.end());
            do {
                for (auto m : matchings) {
                    for (size_t i = 0; i < spos.size(); ++i) m[spos[i]] = tpos[idx[i]];
                    next.push_back(std::move(m));
                }
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
        matchings = std::move(next);
    }
    return matchings;
}

int matching_crossing_degree(const Problem& p, const Word& source,
                             const std::vector<int>& matching) {
    auto ls = source.letters();
    int deg = 0;
    for (size_t a = 0; a < ls.size(); ++a) {
        for (size_t b = a + 1; b < ls.size(); ++b) {
            if (matching[a] > matching[b]) deg += crossing_degree(p, ls[a], ls[b]);
        }
    }
    return deg;
}

AlgebraElement matching_diagram(const Problem& p, const Word& source,
                                const std::vector<int>& matching) {
    if (!source.is_total()) throw std::invalid_argument("matching diagram needs a total word");
    AlgebraElement elt = idempotent(p, source);
    std::vector<int> dest = matching; // dest[pos] = target position of strand at pos
    Word cur = source;
    // bubble sort by target position; each swap is one crossing
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k + 1 < static_cast<int>(dest.size()); ++k) {
            if (dest[k] > dest[k + 1]) {
                elt = multiply(crossing(p, cur, k), elt);
                cur = elt.target();
                std::swap(dest[k], dest[k + 1]);
                changed = true;
            }
        }
    }
    return elt;
}

} // namespace klrw
