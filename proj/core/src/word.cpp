#include "klrw/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klrw {

Problem::Problem(int m_, int n_, std::vector<int> v_, std::vector<int> chi_)
    : m(m_), n(n_), v(std::move(v_)), chi(std::move(chi_)) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (static_cast<int>(v.size()) != m - 1) throw std::invalid_argument("v must have m-1 entries");
    for (int vi : v)
        if (vi < 0) throw std::invalid_argument("v entries must be nonnegative");
    if (static_cast<int>(chi.size()) != n) throw std::invalid_argument("chi must have n entries");
    if (!std::is_sorted(chi.begin(), chi.end()))
        throw std::invalid_argument("chi must be weakly increasing");
}

int Problem::total_strands() const {
    return std::accumulate(v.begin(), v.end(), 0) + n;
}

std::vector<int> Problem::chi_block_sizes() const {
    std::vector<int> sizes;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && chi[i] == chi[i - 1]) ++sizes.back();
        else sizes.push_back(1);
    }
    return sizes;
}

Word::Word(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.letter < 1 || e.multiplicity < 1) throw std::invalid_argument("bad word entry");
    }
}

Word Word::total(const std::vector<int>& letters) {
    std::vector<Entry> es;
    es.reserve(letters.size());
    for (int l : letters) es.push_back({l, 1});
    return Word(std::move(es));
}

bool Word::is_total() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.multiplicity == 1; });
}

int Word::length() const {
    int n = 0;
    for (const auto& e : entries_) n += e.multiplicity;
    return n;
}

Word Word::totalization() const { return Word::total(letters()); }

std::vector<int> Word::letters() const {
    std::vector<int> ls;
    ls.reserve(length());
    for (const auto& e : entries_)
        for (int i = 0; i < e.multiplicity; ++i) ls.push_back(e.letter);
    return ls;
}

std::vector<int> Word::letter_counts(int m) const {
    std::vector<int> counts(m + 1, 0);
    for (const auto& e : entries_) {
        if (e.letter > m) throw std::invalid_argument("letter exceeds m");
        counts[e.letter] += e.multiplicity;
    }
    return counts;
}

std::string Word::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& e : entries_) {
        if (!first) out << ",";
        first = false;
        out << e.letter;
        if (e.multiplicity > 1) out << "^" << e.multiplicity;
    }
    return out.str();
}

Word Word::parse(const std::string& text) {
    std::vector<Entry> es;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        if (piece.empty()) throw std::invalid_argument("empty word entry");
        auto caret = piece.find('^');
        int letter, mult = 1;
        try {
            if (caret == std::string::npos) {
                letter = std::stoi(piece);
            } else {
                letter = std::stoi(piece.substr(0, caret));
                mult = std::stoi(piece.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed word entry: '" + piece + "'");
        }
        es.push_back({letter, mult});
    }
    return Word(std::move(es));
}

bool is_violating(const Word& w, int m) {
    const auto& es = w.entries();
    if (es.empty()) return false;
    return es.front().letter != m;
}

std::vector<int> red_positions(const Word& w, int m) {
    std::vector<int> pos;
    auto ls = w.letters();
    for (size_t i = 0; i < ls.size(); ++i)
        if (ls[i] == m) pos.push_back(static_cast<int>(i));
    return pos;
}

bool is_chi_parabolic(const Word& w, const Problem& p) {
    auto reds = red_positions(w, p.m);
    if (static_cast<int>(reds.size()) != p.n) return false;
    // red k and red k+1 must be adjacent whenever chi_k = chi_{k+1}
    for (int k = 0; k + 1 < p.n; ++k) {
        if (p.chi[k] == p.chi[k + 1] && reds[k + 1] != reds[k] + 1) return false;
    }
    return true;
}

std::vector<Word> enumerate_total_words(const Problem& p) {
    std::vector<int> letters;
    for (int i = 1; i < p.m; ++i)
        for (int c = 0; c < p.v[i - 1]; ++c) letters.push_back(i);
    for (int c = 0; c < p.n; ++c) letters.push_back(p.m);
    std::sort(letters.begin(), letters.end());
    std::vector<Word> words;
    if (letters.empty()) return words;
    do {
        words.push_back(Word::total(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
    return words;
}

std::vector<Word> enumerate_chi_parabolic_words(const Problem& p) {
    std::vector<Word> out;
    for (const auto& w : enumerate_total_words(p))
        if (is_chi_parabolic(w, p)) out.push_back(w);
    return out;
}

} // namespace klrw
