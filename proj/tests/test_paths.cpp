#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "kdyck/enumerate.hpp"
#include "kdyck/path.hpp"

using namespace kdyck;

namespace {

// Height-tracking oracle: recompute the rank sequences straight from the
// word text, independently of DyckPath's representation.
RankSequences rank_oracle(const std::string& word) {
    RankSequences ranks;
    std::istringstream in(word);
    std::string token;
    int height = 0;
    while (in >> token) {
        ranks.start.push_back(height);
        height += token == "W" ? -1 : std::stoi(token.substr(1));
        ranks.end.push_back(height);
    }
    return ranks;
}

}  // namespace

TEST_CASE("k vector parsing and serialization") {
    KVector kvec = KVector::parse("4,2,3,1");
    CHECK(kvec.parts() == std::vector<int>{4, 2, 3, 1});
    CHECK(kvec.length() == 4);
    CHECK(kvec.size() == 10);
    CHECK(kvec.letters() == 14);
    CHECK(kvec.to_string() == "4,2,3,1");
    CHECK(kvec.sorted_decreasing() == std::vector<int>{4, 3, 2, 1});

    CHECK_THROWS_AS(KVector::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(KVector::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(KVector::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(KVector::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(KVector::parse("2,-1"), std::invalid_argument);
    CHECK_THROWS_AS(KVector(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("word parsing") {
    DyckPath golden = DyckPath::parse("S4 W S2 W W W W S3 W W S1 W W W");
    CHECK(golden.kvec().parts() == std::vector<int>{4, 2, 3, 1});
    CHECK(golden.south_positions() == std::vector<int>{1, 3, 8, 11});

    DyckPath single = DyckPath::parse("S3 W W W");
    CHECK(single.kvec().parts() == std::vector<int>{3});

    CHECK_THROWS_WITH_AS(DyckPath::parse("S1 W W"),
                         "path goes below the axis after letter 3", std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::parse("S0 W"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::parse("S-2 W"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::parse("Sx W"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::parse("north east"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::parse("S2 W"), std::invalid_argument);  // ends above the axis
    CHECK_THROWS_AS(DyckPath::parse("W S1 W"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath::parse(""), std::invalid_argument);
}

TEST_CASE("word formatting") {
    CHECK(DyckPath::parse("S4 W S2 W W W W S3 W W S1 W W W").to_string() ==
          "S4 W S2 W W W W S3 W W S1 W W W");
    CHECK(DyckPath(KVector({5}), {1}).to_string() == "S5 W W W W W");

    // parse . format is the identity on everything we can enumerate.
    for (const KVector& shape : {KVector({1, 1, 1}), KVector({2, 3}), KVector({3, 1, 2})})
        for (const auto& [rearranged, paths] : enumerate_class(shape))
            for (const DyckPath& path : paths)
                CHECK(DyckPath::parse(path.to_string()) == path);
}

TEST_CASE("rank sequences") {
    RankSequences golden = rank_sequences(DyckPath::parse("S4 W S2 W W W W S3 W W S1 W W W"));
    CHECK(golden.start == std::vector<int>{0, 4, 3, 5, 4, 3, 2, 1, 4, 3, 2, 3, 2, 1});
    CHECK(golden.end == std::vector<int>{4, 3, 5, 4, 3, 2, 1, 4, 3, 2, 3, 2, 1, 0});

    RankSequences single = rank_sequences(DyckPath::parse("S3 W W W"));
    CHECK(single.start == std::vector<int>{0, 3, 2, 1});
    CHECK(single.end == std::vector<int>{3, 2, 1, 0});

    RankSequences staircase = rank_sequences(DyckPath::parse("S1 W S1 W"));
    CHECK(staircase.start == std::vector<int>{0, 1, 0, 1});
    CHECK(staircase.end == std::vector<int>{1, 0, 1, 0});

    for (const KVector& shape : {KVector({2, 1, 3}), KVector({1, 1, 1, 1})}) {
        for (const DyckPath& path : enumerate_paths(shape)) {
            RankSequences ranks = rank_sequences(path);
            RankSequences oracle = rank_oracle(path.to_string());
            CHECK(ranks.start == oracle.start);
            CHECK(ranks.end == oracle.end);
            for (size_t i = 0; i + 1 < ranks.start.size(); ++i)
                CHECK(ranks.end[i] == ranks.start[i + 1]);
            CHECK(ranks.end.back() == 0);
            CHECK(*std::min_element(ranks.start.begin(), ranks.start.end()) == 0);
        }
    }
}

TEST_CASE("path enumeration") {
    std::vector<DyckPath> two_ones = enumerate_paths(KVector({1, 1}));
    REQUIRE(two_ones.size() == 2);
    CHECK(two_ones[0].to_string() == "S1 S1 W W");
    CHECK(two_ones[1].to_string() == "S1 W S1 W");

    CHECK(enumerate_paths(KVector({1, 1, 1, 1})).size() == 14);
    CHECK(enumerate_paths(KVector({2, 2})).size() == 3);
    CHECK(count_paths(KVector({2, 2}), false) == 3);

    std::vector<DyckPath> sample = enumerate_paths(KVector({2, 1, 3}));
    CHECK(std::is_sorted(sample.begin(), sample.end(), [](const DyckPath& a, const DyckPath& b) {
        return a.south_positions() < b.south_positions();
    }));
    CHECK(std::adjacent_find(sample.begin(), sample.end()) == sample.end());
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_paths(KVector(std::vector<int>(21, 1))), std::invalid_argument);
    CHECK_NOTHROW(enumerate_paths(KVector({1, 1}), EnumerationOptions{4}));
    CHECK_THROWS_AS(enumerate_paths(KVector({1, 1}), EnumerationOptions{3}),
                    std::invalid_argument);
}

TEST_CASE("class enumeration") {
    auto blocks = enumerate_class(KVector({1, 3, 2}));
    REQUIRE(blocks.size() == 6);
    CHECK(blocks[0].first.parts() == std::vector<int>{1, 2, 3});
    CHECK(blocks[5].first.parts() == std::vector<int>{3, 2, 1});
    size_t total = 0;
    for (auto& [rearranged, paths] : blocks) total += paths.size();
    CHECK(total == 72);
    CHECK(count_paths(KVector({1, 3, 2}), true) == 72);

    CHECK(enumerate_class(KVector({2, 2})).size() == 1);
    CHECK(rearrangements(KVector({2, 1, 2})).size() == 3);
}

TEST_CASE("closed-form counts") {
    CHECK(count_paths(KVector({1, 1, 1, 1}), false) == 14);
    CHECK(count_paths(KVector({5}), true) == 1);
    CHECK_THROWS_AS(count_paths(KVector({2, 3}), false), std::invalid_argument);

    // Catalan specialization up to n = 6, against enumeration.
    for (int n = 1; n <= 6; ++n) {
        KVector ones(std::vector<int>(static_cast<size_t>(n), 1));
        CHECK(count_paths(ones, false) == static_cast<long>(enumerate_paths(ones).size()));
    }

    // Class formula against full enumeration for every class whose paths
    // have at most 16 letters.
    for (int m = 1; m <= 15; ++m) {
        for (const KVector& shape : partitions_of(m)) {
            if (shape.letters() > 16) continue;
            size_t total = 0;
            for (auto& [rearranged, paths] : enumerate_class(shape)) total += paths.size();
            CHECK(count_paths(shape, true) == static_cast<long>(total));
        }
    }
}

TEST_CASE("partitions helper") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(8).size() == 22);
}
