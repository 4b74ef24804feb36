#pragma once

#include <string>
#include <vector>

namespace klrw {

// Strand-count data for one block of the algebra: m labels (label m is red),
// n red strands, v[i-1] black strands of label i for i in [1, m-1], and the
// central character chi (weakly increasing, one entry per red strand).
struct Problem {
    int m = 1;
    int n = 0;
    std::vector<int> v;   // size m-1
    std::vector<int> chi; // size n, weakly increasing

    Problem() = default;
    Problem(int m_, int n_, std::vector<int> v_, std::vector<int> chi_);

    int total_strands() const; // sum v + n
    // Sizes of the blocks of equal chi entries, in order.
    std::vector<int> chi_block_sizes() const;
};

// Word in the letters [1, m] with divided-power grouping: a run (i, ..., i)
// of length a may be stored grouped as i^(a).  (3,2,2,3,1,3) and
// (3,2^(2),3,1,3) are different words.
class Word {
public:
    struct Entry {
        int letter;
        int multiplicity;
        bool operator==(const Entry& o) const = default;
        auto operator<=>(const Entry& o) const = default;
    };

    Word() = default;
    explicit Word(std::vector<Entry> entries);
    static Word total(const std::vector<int>& letters);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_total() const; // every multiplicity is 1
    int length() const;    // total number of strands
    Word totalization() const;
    std::vector<int> letters() const; // totalized letter sequence

    // Count of each letter; index 0 unused, result[i] = multiplicity of i.
    std::vector<int> letter_counts(int m) const;

    bool operator==(const Word& o) const { return entries_ == o.entries_; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const { return entries_ < o.entries_; }

    // "3,2^2,3,1,3"
    std::string str() const;
    static Word parse(const std::string& text);

private:
    std::vector<Entry> entries_;
};

// True when the first letter of the totalization differs from m.
bool is_violating(const Word& w, int m);

// True when for every block of equal chi entries the corresponding red
// strands sit in consecutive positions of the totalization.
bool is_chi_parabolic(const Word& w, const Problem& p);

// All total words of the problem whose red strands satisfy the chi-grouping
// condition, in lexicographic order on letter sequences.
std::vector<Word> enumerate_chi_parabolic_words(const Problem& p);

// All total words with the problem's letter multiset, lexicographic.
std::vector<Word> enumerate_total_words(const Problem& p);

// Positions (0-based) of the red strands in the totalization.
std::vector<int> red_positions(const Word& w, int m);

} // namespace klrw
