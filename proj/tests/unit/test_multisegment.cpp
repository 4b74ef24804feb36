#include "doctest.h"

#include "klrw/multisegment.hpp"

#include <set>

using namespace klrw;

TEST_CASE("dimension vector") {
    FlavoredMultisegment ms({Segment(1, 1)}, {{Segment(2, 2), 0}, {Segment(2, 2), 1}});
    CHECK(ms.dimension_vector(2) == std::vector<int>{1, 2});
    CHECK(FlavoredMultisegment().dimension_vector(3) == std::vector<int>{0, 0, 0});
    FlavoredMultisegment ms2({}, {{Segment(1, 2), 0}, {Segment(2, 2), 1}});
    CHECK(ms2.dimension_vector(2) == std::vector<int>{1, 2});
}

TEST_CASE("enumerate_flavored reproduces the two-red example") {
    Problem distinct(2, 2, {1}, {0, 1});
    auto ms = enumerate_flavored(distinct);
    CHECK(ms.size() == 3);

    Problem equal(2, 2, {1}, {0, 0});
    CHECK(enumerate_flavored(equal).size() == 2);

    Problem trivial(2, 2, {0}, {0, 1});
    auto t = enumerate_flavored(trivial);
    REQUIRE(t.size() == 1);
    CHECK(t[0].flavored().size() == 2);
}

TEST_CASE("good words of the three-row example") {
    // {(1),(2),(2,1),(3,2,1)@f1,(3,2)@f2}
    auto make = [](int f321, int f32) {
        return FlavoredMultisegment(
            {Segment(1, 1), Segment(2, 2), Segment(1, 2)},
            {{Segment(1, 3), f321}, {Segment(2, 3), f32}});
    };
    // flavors with chi_1 > chi_2, order-preserving: (3,2,1) gets the smaller
    CHECK(good_word(make(0, 1), 3).str() == "1,2,1,2,3,2,1,3,2");
    CHECK(good_word(make(1, 0), 3).str() == "1,2,1,2,3,2,3,2,1");
    CHECK(good_word(make(0, 0), 3).str() == "1,2,1,2,3^2,2^2,1");
}

TEST_CASE("good words are chi-parabolic and injective on small problems") {
    for (const Problem& p : {Problem(2, 2, {1}, {0, 1}), Problem(2, 2, {1}, {0, 0}),
                             Problem(3, 2, {1, 2}, {0, 0}), Problem(3, 1, {2, 2}, {4})}) {
        auto all = enumerate_flavored(p);
        std::set<std::string> words;
        for (const auto& ms : all) {
            Word w = good_word(ms, p.m);
            CHECK(is_chi_parabolic(w, p));
            auto counts = w.letter_counts(p.m);
            for (int i = 1; i < p.m; ++i) CHECK(counts[i] == p.v[i - 1]);
            CHECK(counts[p.m] == p.n);
            words.insert(w.str());
        }
        CHECK(words.size() == all.size()); // injective
    }
}

TEST_CASE("multisegment text round-trips") {
    FlavoredMultisegment ms({Segment(1, 1), Segment(1, 2)}, {{Segment(2, 3), 5}});
    CHECK(ms.str() == "{(1),(2,1),(3,2)@5}");
    CHECK(FlavoredMultisegment::parse(ms.str()) == ms);
    CHECK_THROWS(FlavoredMultisegment::parse("{(1,3)}")); // not consecutive
    CHECK_THROWS(FlavoredMultisegment::parse("(1)"));
}

TEST_CASE("segmentations of small problems") {
    Problem p1(1, 2, {}, {0, 0});
    CHECK(enumerate_segmentations(p1).size() == 1);

    Problem p2(2, 1, {1}, {0});
    auto segs = enumerate_segmentations(p2);
    CHECK(segs.size() == 2);

    Problem p3(2, 2, {1}, {0, 1});
    CHECK(enumerate_segmentations(p3).size() == 3);
}

TEST_CASE("multisegment_of_segmentation") {
    Problem p(2, 1, {1}, {7});
    // block {(1,1),(2,1)}
    Segmentation joined(p, {{0}, {-1}});
    FlavoredMultisegment ms = multisegment_of_segmentation(joined);
    CHECK(ms.str() == "{(2,1)@7}");

    Segmentation separate(p, {{-1}, {-1}});
    CHECK(multisegment_of_segmentation(separate).str() == "{(1),(2)@7}");

    // two blocks {(1,1),(2,2)}, {(2,1)} with chi = (0,1)
    Problem q(2, 2, {1}, {0, 1});
    Segmentation s(q, {{1}, {-1, -1}});
    CHECK(multisegment_of_segmentation(s).str() == "{(2)@0,(2,1)@1}");
}

TEST_CASE("segmentation multisegments exhaust enumerate_flavored") {
    for (const Problem& p : {Problem(2, 2, {1}, {0, 1}), Problem(2, 2, {2}, {0, 0}),
                             Problem(3, 2, {1, 1}, {0, 3}), Problem(3, 1, {1, 2}, {2})}) {
        std::set<FlavoredMultisegment> from_segs;
        for (const auto& s : enumerate_segmentations(p))
            from_segs.insert(multisegment_of_segmentation(s));
        auto direct = enumerate_flavored(p);
        CHECK(from_segs.size() == direct.size());
        for (const auto& ms : direct) {
            CHECK(from_segs.count(ms) == 1);
            CHECK(ms.dimension_vector(p.m) == [&] {
                std::vector<int> d = p.v;
                d.push_back(p.n);
                return d;
            }());
        }
    }
}
