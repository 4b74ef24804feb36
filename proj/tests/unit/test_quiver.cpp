#include "doctest.h"

#include "klrw/quiver.hpp"

#include <map>
#include <random>

using namespace klrw;

TEST_CASE("canonical representatives") {
    Problem p(2, 1, {1}, {0});
    Segmentation separate(p, {{-1}, {-1}});
    QuiverRep zero = canonical_rep(separate);
    CHECK(zero.maps[0] == Matrix::zero(1, 1));

    Segmentation joined(p, {{0}, {-1}});
    QuiverRep one = canonical_rep(joined);
    CHECK(one.maps[0].at(0, 0) == 1);

    Problem q(3, 1, {1, 1}, {0});
    Segmentation full(q, {{0}, {0}, {-1}});
    QuiverRep r = canonical_rep(full);
    CHECK(r.maps[0].at(0, 0) == 1);
    CHECK(r.maps[1].at(0, 0) == 1);
}

TEST_CASE("group action") {
    Problem p(2, 1, {1}, {0});
    Segmentation joined(p, {{0}, {-1}});
    QuiverRep r = canonical_rep(joined);

    GroupElement id{{Matrix::identity(1), Matrix::identity(1)}};
    CHECK(act(id, r).maps[0] == r.maps[0]);

    GroupElement g{{Matrix::identity(1), Matrix::identity(1)}};
    g.g[0].at(0, 0) = 2;
    CHECK(act(g, r).maps[0].at(0, 0) == Rational(1, 2));

    std::mt19937 rng(5);
    Problem q(3, 2, {1, 2}, {0, 1});
    auto segs = enumerate_segmentations(q);
    QuiverRep rep = canonical_rep(segs[3]);
    GroupElement a = random_group_element(q, rng);
    GroupElement b = random_group_element(q, rng);
    GroupElement ab;
    for (int i = 0; i < q.m; ++i) ab.g.push_back(a.g[i] * b.g[i]);
    QuiverRep lhs = act(a, act(b, rep));
    QuiverRep rhs = act(ab, rep);
    for (int i = 0; i < q.m - 1; ++i) CHECK(lhs.maps[i] == rhs.maps[i]);
}

TEST_CASE("classify the zero representation") {
    Problem p(2, 2, {1}, {0, 1});
    QuiverRep zero(p, {Matrix::zero(2, 1)});
    CHECK(classify(zero).str() == "{(1),(2)@0,(2)@1}");
}

TEST_CASE("classify an injective map by its flag position") {
    Problem p(2, 2, {1}, {0, 1});
    // image = F_{chi_1} line: flavor chi_1
    Matrix low(2, 1);
    low.at(0, 0) = 1;
    CHECK(classify(QuiverRep(p, {low})).str() == "{(2,1)@0,(2)@1}");
    // image transverse to F_{chi_1}: flavor chi_2
    Matrix high(2, 1);
    high.at(1, 0) = 1;
    CHECK(classify(QuiverRep(p, {high})).str() == "{(2)@0,(2,1)@1}");
}

TEST_CASE("classify round-trips canonical representatives on small problems") {
    for (const Problem& p :
         {Problem(2, 2, {1}, {0, 1}), Problem(2, 2, {2}, {0, 0}), Problem(3, 2, {1, 1}, {0, 0}),
          Problem(3, 1, {1, 2}, {2}), Problem(3, 2, {2, 2}, {1, 1})}) {
        for (const auto& s : enumerate_segmentations(p)) {
            CHECK(classify(canonical_rep(s)) == multisegment_of_segmentation(s));
        }
    }
}

TEST_CASE("classification is orbit invariant") {
    std::mt19937 rng(11);
    Problem p(3, 2, {1, 2}, {0, 0});
    for (const auto& s : enumerate_segmentations(p)) {
        QuiverRep r = canonical_rep(s);
        FlavoredMultisegment expected = classify(r);
        for (int t = 0; t < 5; ++t) {
            GroupElement g = random_group_element(p, rng);
            CHECK(classify(act(g, r)) == expected);
        }
    }
}

TEST_CASE("rank invariants of canonical representatives distinguish orbits") {
    Problem p(3, 2, {1, 1}, {0, 1});
    std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& s : enumerate_segmentations(p)) {
        auto ms = multisegment_of_segmentation(s).str();
        auto inv = rank_invariants(canonical_rep(s));
        auto key = std::pair(inv.segment_ranks, inv.preimage_dims);
        auto it = seen.find(ms);
        if (it == seen.end()) seen.emplace(ms, key);
        else CHECK(it->second == key);
    }
}

TEST_CASE("stabilizer and orbit dimensions") {
    Problem p(2, 1, {1}, {0});
    QuiverRep zero(p, {Matrix::zero(1, 1)});
    CHECK(stabilizer_dimension(zero) == group_dimension(p));
    CHECK(orbit_dimension(zero) == 0);

    Matrix one(1, 1);
    one.at(0, 0) = 1;
    QuiverRep r(p, {one});
    CHECK(stabilizer_dimension(r) == 1);
    CHECK(orbit_dimension(r) == 1);

    // orbit dimensions bounded by dim V; orbit + stabilizer = dim G exactly
    for (const Problem& q : {Problem(2, 2, {1}, {0, 1}), Problem(3, 2, {1, 1}, {0, 0})}) {
        for (const auto& s : enumerate_segmentations(q)) {
            QuiverRep rep = canonical_rep(s);
            CHECK(orbit_dimension(rep) + stabilizer_dimension(rep) == group_dimension(q));
            CHECK(orbit_dimension(rep) <= rep_space_dimension(q));
        }
    }
}
