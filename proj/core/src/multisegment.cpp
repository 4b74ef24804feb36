#include "klrw/multisegment.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klrw {

Segment::Segment(int s, int e) : start(s), end(e) {
    if (s < 1 || e < s) throw std::invalid_argument("bad segment");
}

std::string Segment::str() const {
    std::ostringstream out;
    out << "(";
    for (int k = end; k >= start; --k) {
        if (k != end) out << ",";
        out << k;
    }
    out << ")";
    return out.str();
}

std::string FlavoredSegment::str() const {
    return segment.str() + "@" + std::to_string(flavor);
}

FlavoredMultisegment::FlavoredMultisegment(std::vector<Segment> unflavored,
                                           std::vector<FlavoredSegment> flavored)
    : unflavored_(std::move(unflavored)), flavored_(std::move(flavored)) {
    std::sort(unflavored_.begin(), unflavored_.end());
    std::sort(flavored_.begin(), flavored_.end(), [](const auto& a, const auto& b) {
        return std::tie(a.flavor, a.segment) < std::tie(b.flavor, b.segment);
    });
}

std::vector<int> FlavoredMultisegment::dimension_vector(int m) const {
    std::vector<int> dim(m, 0);
    auto add = [&](const Segment& s) {
        if (s.end > m) throw std::invalid_argument("segment exceeds m");
        for (int k = s.start; k <= s.end; ++k) dim[k - 1] += 1;
    };
    for (const auto& s : unflavored_) add(s);
    for (const auto& f : flavored_) add(f.segment);
    return dim;
}

bool FlavoredMultisegment::operator<(const FlavoredMultisegment& o) const {
    auto key = [](const FlavoredMultisegment& ms) {
        std::vector<std::tuple<int, int, int>> k;
        for (const auto& s : ms.unflavored_) k.emplace_back(0, s.start, s.end);
        for (const auto& f : ms.flavored_) k.emplace_back(1, f.flavor, f.segment.start);
        return k;
    };
    return key(*this) < key(o);
}

std::string FlavoredMultisegment::str() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& s : unflavored_) {
        if (!first) out << ",";
        first = false;
        out << s.str();
    }
    for (const auto& f : flavored_) {
        if (!first) out << ",";
        first = false;
        out << f.str();
    }
    out << "}";
    return out.str();
}

FlavoredMultisegment FlavoredMultisegment::parse(const std::string& text) {
    std::string s = text;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("multisegment parse error: " + what);
    };
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= s.size() || s[pos] != '{') fail("expected '{'");
    ++pos;
    std::vector<Segment> unflavored;
    std::vector<FlavoredSegment> flavored;
    skip_ws();
    while (pos < s.size() && s[pos] != '}') {
        skip_ws();
        if (s[pos] != '(') fail("expected '('");
        size_t close = s.find(')', pos);
        if (close == std::string::npos) fail("unterminated segment");
        std::string inside = s.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        std::vector<int> letters;
        std::istringstream in(inside);
        std::string piece;
        while (std::getline(in, piece, ',')) {
            try {
                letters.push_back(std::stoi(piece));
            } catch (const std::exception&) {
                fail("bad segment entry '" + piece + "'");
            }
        }
        if (letters.empty()) fail("empty segment");
        for (size_t i = 0; i + 1 < letters.size(); ++i)
            if (letters[i] != letters[i + 1] + 1) fail("segment not consecutive decreasing");
        Segment seg(letters.back(), letters.front());
        skip_ws();
        if (pos < s.size() && s[pos] == '@') {
            ++pos;
            size_t start = pos;
            if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("missing flavor");
            flavored.push_back({seg, std::stoi(s.substr(start, pos - start))});
        } else {
            unflavored.push_back(seg);
        }
        skip_ws();
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            skip_ws();
        }
    }
    if (pos >= s.size()) fail("expected '}'");
    return FlavoredMultisegment(std::move(unflavored), std::move(flavored));
}

namespace {

// Multisets of segments inside [1, m] with the given dimension vector.
// dim is 1-indexed by letter.
void enumerate_segment_multisets(int m, std::vector<int>& dim, Segment min_seg,
                                 std::vector<Segment>& cur,
                                 std::vector<std::vector<Segment>>& out) {
    int first = 0;
    for (int i = 1; i <= m; ++i) {
        if (dim[i] > 0) {
            first = i;
            break;
        }
    }
    if (first == 0) {
        out.push_back(cur);
        return;
    }
    // the earliest occupied letter must start some segment
    for (int end = first; end <= m && dim[end] > 0; ++end) {
        Segment seg(first, end);
        if (seg < min_seg) continue; // keep multiset enumeration canonical
        for (int k = first; k <= end; ++k) --dim[k];
        cur.push_back(seg);
        enumerate_segment_multisets(m, dim, seg, cur, out);
        cur.pop_back();
        for (int k = first; k <= end; ++k) ++dim[k];
    }
}

} // namespace

std::vector<FlavoredMultisegment> enumerate_flavored(const Problem& p) {
    std::vector<int> dim(p.m + 1, 0);
    for (int i = 1; i < p.m; ++i) dim[i] = p.v[i - 1];
    dim[p.m] = p.n;

    std::vector<std::vector<Segment>> multisets;
    std::vector<Segment> cur;
    enumerate_segment_multisets(p.m, dim, Segment(1, 1), cur, multisets);

    std::set<FlavoredMultisegment> result;
    for (const auto& ms : multisets) {
        std::vector<Segment> unflavored;
        std::vector<Segment> reaching;
        for (const auto& s : ms) {
            if (s.end == p.m) reaching.push_back(s);
            else unflavored.push_back(s);
        }
        if (static_cast<int>(reaching.size()) != p.n)
            throw std::logic_error("flavored segment count mismatch");
        std::vector<int> flavors = p.chi;
        std::sort(flavors.begin(), flavors.end());
        do {
            std::vector<FlavoredSegment> flavored;
            for (size_t i = 0; i < reaching.size(); ++i)
                flavored.push_back({reaching[i], flavors[i]});
            result.insert(FlavoredMultisegment(unflavored, std::move(flavored)));
        } while (std::next_permutation(flavors.begin(), flavors.end()));
    }
    return {result.begin(), result.end()};
}

namespace {

std::vector<int> segment_word(const Segment& s) {
    std::vector<int> w;
    for (int k = s.end; k >= s.start; --k) w.push_back(k);
    return w;
}

// Increasing lexicographic with the suffix convention: when one word is a
// proper prefix of the other, the longer sorts first.
bool suffix_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() > b.size();
}

} // namespace

Word good_word(const FlavoredMultisegment& ms, int m) {
    std::vector<std::vector<int>> unflavored_words;
    for (const auto& s : ms.unflavored()) {
        if (s.end >= m) throw std::invalid_argument("unflavored segment reaches m");
        unflavored_words.push_back(segment_word(s));
    }
    std::sort(unflavored_words.begin(), unflavored_words.end(), suffix_lex_less);

    std::vector<Word::Entry> entries;
    for (const auto& w : unflavored_words)
        for (int l : w) entries.push_back({l, 1});

    // group flavored segments by flavor, increasing
    std::map<int, std::vector<int>> by_flavor;
    for (const auto& f : ms.flavored()) {
        if (f.segment.end != m) throw std::invalid_argument("flavored segment must reach m");
        for (int k = f.segment.start; k <= f.segment.end; ++k) by_flavor[f.flavor].push_back(k);
    }
    for (auto& [flavor, letters] : by_flavor) {
        std::sort(letters.begin(), letters.end(), std::greater<int>());
        size_t i = 0;
        while (i < letters.size()) {
            size_t j = i;
            while (j < letters.size() && letters[j] == letters[i]) ++j;
            entries.push_back({letters[i], static_cast<int>(j - i)});
            i = j;
        }
    }
    return Word(std::move(entries));
}

Segmentation::Segmentation(const Problem& p, std::vector<std::vector<int>> down)
    : problem_(p), down_(std::move(down)) {
    if (static_cast<int>(down_.size()) != p.m) throw std::invalid_argument("row count");
    auto row_size = [&](int i) { return i == p.m ? p.n : p.v[i - 1]; };
    for (int i = 1; i <= p.m; ++i) {
        if (static_cast<int>(down_[i - 1].size()) != row_size(i))
            throw std::invalid_argument("row size mismatch");
        std::set<int> used;
        for (int j : down_[i - 1]) {
            if (j == -1) continue;
            if (i == p.m) throw std::invalid_argument("last row cannot continue");
            if (j < 0 || j >= row_size(i + 1)) throw std::invalid_argument("bad continuation");
            if (!used.insert(j).second) throw std::invalid_argument("continuation not injective");
        }
    }
}

std::vector<std::pair<int, std::vector<int>>> Segmentation::blocks() const {
    const Problem& p = problem_;
    auto row_size = [&](int i) { return i == p.m ? p.n : p.v[i - 1]; };
    std::vector<std::vector<bool>> started(p.m);
    for (int i = 1; i <= p.m; ++i) started[i - 1].assign(row_size(i), false);
    for (int i = 1; i < p.m; ++i)
        for (int j : down_[i - 1])
            if (j != -1) started[i][j] = true;

    std::vector<std::pair<int, std::vector<int>>> out;
    for (int i = 1; i <= p.m; ++i) {
        for (int j = 0; j < row_size(i); ++j) {
            if (started[i - 1][j]) continue;
            std::vector<int> chain = {j};
            int row = i, col = j;
            while (row < p.m && down_[row - 1][col] != -1) {
                col = down_[row - 1][col];
                chain.push_back(col);
                ++row;
            }
            out.emplace_back(i, std::move(chain));
        }
    }
    return out;
}

FlavoredMultisegment multisegment_of_segmentation(const Segmentation& s) {
    const Problem& p = s.problem();
    std::vector<Segment> unflavored;
    std::vector<FlavoredSegment> flavored;
    for (const auto& [start, chain] : s.blocks()) {
        int end = start + static_cast<int>(chain.size()) - 1;
        if (end == p.m) {
            int j_m = chain.back(); // 0-based index in the red row
            flavored.push_back({Segment(start, end), p.chi[j_m]});
        } else {
            unflavored.push_back(Segment(start, end));
        }
    }
    return FlavoredMultisegment(std::move(unflavored), std::move(flavored));
}

namespace {

// All partial injections [a] -> [b] as vectors down[j] in {-1} U [0, b).
void enumerate_partial_injections(int a, int b, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(a, -1);
    std::vector<bool> used(b, false);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == a) {
            out.push_back(cur);
            return;
        }
        cur[j] = -1;
        self(self, j + 1);
        for (int t = 0; t < b; ++t) {
            if (used[t]) continue;
            used[t] = true;
            cur[j] = t;
            self(self, j + 1);
            cur[j] = -1;
            used[t] = false;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
}

} // namespace

std::vector<Segmentation> enumerate_segmentations(const Problem& p, std::size_t limit) {
    auto row_size = [&](int i) { return i == p.m ? p.n : p.v[i - 1]; };
    std::vector<std::vector<std::vector<int>>> choices(p.m);
    std::size_t total = 1;
    for (int i = 1; i < p.m; ++i) {
        enumerate_partial_injections(row_size(i), row_size(i + 1), choices[i - 1]);
        total *= choices[i - 1].size();
        if (total > limit) throw std::runtime_error("segmentation enumeration limit exceeded");
    }
    choices[p.m - 1] = {std::vector<int>(row_size(p.m), -1)};

    std::vector<Segmentation> out;
    std::vector<std::vector<int>> down(p.m);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == p.m) {
            down[p.m - 1] = choices[p.m - 1][0];
            out.emplace_back(p, down);
            return;
        }
        for (const auto& c : choices[i - 1]) {
            down[i - 1] = c;
            self(self, i + 1);
        }
    };
    if (p.m >= 1) rec(rec, 1);
    return out;
}

} // namespace klrw
