#pragma once

#include "klrw/word.hpp"

#include <string>
#include <vector>

namespace klrw {

// Interval [start, end] inside [1, m], printed in reversed order "(end,...,start)".
struct Segment {
    int start;
    int end;

    Segment(int s, int e);
    int length() const { return end - start + 1; }
    bool operator==(const Segment& o) const = default;
    auto operator<=>(const Segment& o) const = default;
    std::string str() const;
};

struct FlavoredSegment {
    Segment segment;
    int flavor;
    bool operator==(const FlavoredSegment& o) const = default;
    std::string str() const;
};

// Multiset of segments; the ones reaching m carry an integer flavor whose
// multiset agrees with chi.  Canonical form: unflavored sorted by
// (start, end), flavored sorted by (flavor, start).
class FlavoredMultisegment {
public:
    FlavoredMultisegment() = default;
    FlavoredMultisegment(std::vector<Segment> unflavored, std::vector<FlavoredSegment> flavored);

    const std::vector<Segment>& unflavored() const { return unflavored_; }
    const std::vector<FlavoredSegment>& flavored() const { return flavored_; }

    std::vector<int> dimension_vector(int m) const;

    bool operator==(const FlavoredMultisegment& o) const = default;
    bool operator<(const FlavoredMultisegment& o) const;

    // "{(1),(2,1),(3,2)@5}"
    std::string str() const;
    static FlavoredMultisegment parse(const std::string& text);

private:
    std::vector<Segment> unflavored_;
    std::vector<FlavoredSegment> flavored_;
};

// Partition of Omega = {(i,j) : i in [1,m], j in [1, v_i]} (v_m = n) into
// subsegments {(k,j_k),...,(l,j_l)}.  Stored as, per row i, the partial
// matching down[i][j] = index in row i+1 continuing the block, or -1.
class Segmentation {
public:
    Segmentation(const Problem& p, std::vector<std::vector<int>> down);

    const std::vector<std::vector<int>>& down() const { return down_; }
    const Problem& problem() const { return problem_; }

    // Blocks as (start row, list of j-indices per row).
    std::vector<std::pair<int, std::vector<int>>> blocks() const;

    bool operator==(const Segmentation& o) const { return down_ == o.down_; }

private:
    Problem problem_;
    std::vector<std::vector<int>> down_;
};

std::vector<FlavoredMultisegment> enumerate_flavored(const Problem& p);

// Good word: unflavored segments as reversed words in increasing
// lexicographic order (longer word first when one extends the other), then
// flavored segments by increasing flavor, the letters within an equal-flavor
// group merged, sorted decreasingly, equal letters grouped as divided powers.
Word good_word(const FlavoredMultisegment& ms, int m);

FlavoredMultisegment multisegment_of_segmentation(const Segmentation& s);

// All segmentations; guarded against blowup.
std::vector<Segmentation> enumerate_segmentations(const Problem& p,
                                                  std::size_t limit = 2000000);

} // namespace klrw
