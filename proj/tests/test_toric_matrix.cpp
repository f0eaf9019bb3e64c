#include <algorithm>
#include <random>
#include <set>

#include <doctest.h>

#include "superperm/pathfinder.hpp"
#include "superperm/toric_matrix.hpp"
#include "superperm/transition_graph.hpp"

using namespace spm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

ToricBinaryMatrix M(std::vector<std::string> rows) {
    return ToricBinaryMatrix::from_rows(rows);
}

ToricBinaryMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    ToricBinaryMatrix t(rows, cols);
    std::bernoulli_distribution bit(0.4);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (bit(rng)) t.set(i, j, true);
    return t;
}

}  // namespace

TEST_CASE("toric indexing wraps both ways") {
    const auto t = M({"10", "01"});
    CHECK(t(0, 0) == 1);
    CHECK(t(2, 2) == 1);
    CHECK(t(-1, -1) == 1);
    CHECK(t(0, 1) == 0);
    CHECK(t(5, 3) == 1);
    CHECK(t(5, 2) == 0);
}

TEST_CASE("contains_block") {
    const auto id2 = M({"10", "01"});
    CHECK(contains_block(id2, perm_matrix(P("12"))));
    CHECK(contains_block(id2, perm_matrix(P("21"))));  // wrap-around anchor
    CHECK_FALSE(contains_block(M({"000", "000", "000"}), perm_matrix(P("123"))));
    CHECK_THROWS(contains_block(id2, perm_matrix(P("123"))));
}

TEST_CASE("superpermutation matrix checks") {
    CHECK(is_superpermutation_matrix(M({"1000", "0101", "0010"}), 3).ok);
    CHECK(is_superpermutation_matrix(M({"100", "010", "001", "010"}), 3).ok);
    CHECK(is_superpermutation_matrix(
              M({"10001", "01010", "00100", "10001", "01010"}), 3).ok);
    CHECK(is_superpermutation_matrix(
              M({"100001000100", "010010001000", "001000100001", "000100010010"}), 4).ok);

    SUBCASE("missing report lists the absent class members") {
        const auto report = is_superpermutation_matrix(M({"100", "010", "001"}), 3);
        CHECK_FALSE(report.ok);
        REQUIRE(report.missing.size() == 3);
        CHECK(report.missing[0] == P("132"));
        CHECK(report.missing[1] == P("213"));
        CHECK(report.missing[2] == P("321"));
    }

    SUBCASE("dimension guard") {
        CHECK_THROWS(is_superpermutation_matrix(M({"10", "01"}), 3));
    }

    SUBCASE("general anchor scan agrees with the class shortcut") {
        // Same torus verified through the n-row fast path and, transposed,
        // through the n-column fast path; a doubled version exercises the
        // full scan.
        const auto t = M({"1000", "0101", "0010"});
        const auto tt = t.transposed();
        ToricBinaryMatrix doubled(6, 4);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 4; ++j)
                if (t(i % 3, j)) doubled.set(i, j, true);
        CHECK(is_superpermutation_matrix(t, 3).ok);
        CHECK(is_superpermutation_matrix(tt, 3).ok);
        CHECK(is_superpermutation_matrix(doubled, 3).ok);
    }
}

TEST_CASE("transpose") {
    const auto one = M({"1"});
    CHECK(one.transposed() == one);
    const auto t = M({"1000", "0101", "0010"});
    CHECK(t.transposed() == M({"100", "010", "001", "010"}).transposed().transposed());
    CHECK(is_superpermutation_matrix(t.transposed(), 3).ok);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto r = random_matrix(3 + trial % 4, 2 + trial % 5, rng);
        CHECK(r.transposed().transposed() == r);
    }
}

TEST_CASE("word/matrix conversions") {
    const UniversalWord w123({1, 2, 3}, 3);
    ToricBinaryMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.set(i, i, true);
    CHECK(word_to_matrix(w123) == id3);
    CHECK(matrix_to_word(id3) == w123);

    const UniversalWord fig = UniversalWord::parse("123421342143", 4);
    CHECK(word_to_matrix(fig) ==
          M({"100001000100", "010010001000", "001000100001", "000100010010"}));
    CHECK(matrix_to_word(word_to_matrix(fig)) == fig);

    const UniversalWord w1231 = UniversalWord::parse("1231", 3);
    const auto m1231 = word_to_matrix(w1231);
    CHECK(m1231.cols() == 4);
    CHECK(m1231 == M({"1001", "0100", "0010"}));

    CHECK_THROWS(matrix_to_word(M({"10", "10"})));
    CHECK_THROWS(word_to_matrix(UniversalWord({}, 3)));

    SUBCASE("round trip on random words") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 7);
            const int len = 1 + static_cast<int>(rng() % 40);
            std::vector<Letter> letters(static_cast<std::size_t>(len));
            for (auto& v : letters) v = static_cast<Letter>(1 + rng() % n);
            const UniversalWord w(letters, n);
            CHECK(matrix_to_word(word_to_matrix(w)) == w);
        }
    }
}

TEST_CASE("square_pad") {
    // Padding the 3x5 matrix of the word 12321 reproduces the 5x5 example.
    const auto from_word = word_to_matrix(UniversalWord::parse("12321", 3));
    const auto padded = square_pad(from_word, 3);
    CHECK(padded == M({"10001", "01010", "00100", "10001", "01010"}));
    CHECK(is_superpermutation_matrix(padded, 3).ok);

    CHECK_THROWS(square_pad(M({"1000", "0101", "0010"}), 3));  // 4 < 2*3-1
    CHECK_THROWS(square_pad(M({"10", "01"}), 3));

    SUBCASE("n = 5 witness stays a superpermutation matrix") {
        const SearchResult g5 = greedy_cycle_path(5);
        const auto m5 = word_to_matrix(g5.word);
        REQUIRE(is_superpermutation_matrix(m5, 5).ok);
        const auto sq = square_pad(m5, 5);
        CHECK(sq.rows() == g5.length);
        CHECK(sq.cols() == g5.length);
        CHECK(is_superpermutation_matrix(sq, 5).ok);
    }
}

TEST_CASE("brute_min_columns") {
    CHECK(brute_min_columns(1, 3).cols == 1);
    CHECK(brute_min_columns(2, 4).cols == 2);
    const auto r3 = brute_min_columns(3, 8);
    REQUIRE(r3.found);
    CHECK(r3.cols == 4);
    REQUIRE(r3.witness.has_value());
    CHECK(is_superpermutation_matrix(*r3.witness, 3).ok);
    CHECK(r3.note.find("basis-vector") != std::string::npos);

    // trivial lower bound: at least (n-1)! columns
    CHECK(static_cast<std::uint64_t>(r3.cols) >= canonical_class_count(3));

    const auto not_found = brute_min_columns(3, 3);
    CHECK_FALSE(not_found.found);
    CHECK(not_found.note.find("no witness") != std::string::npos);

    CHECK_THROWS(brute_min_columns(4, 10));
}

TEST_CASE("class closure of toric containment") {
    // n-row torus: containment of one member forces the whole value-shift
    // class. Transposed, the rotation class.
    const auto t = word_to_matrix(UniversalWord::parse("123421342143", 4));
    std::vector<Letter> w = Permutation::identity(4).word();
    do {
        const Permutation p{w};
        if (contains_block(t, perm_matrix(p))) {
            for (const auto& m : inc_class(p).members())
                CHECK(contains_block(t, perm_matrix(m)));
        }
        const auto tt = t.transposed();
        if (contains_block(tt, perm_matrix(p))) {
            for (const auto& m : rot_class(p).members())
                CHECK(contains_block(tt, perm_matrix(m)));
        }
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("verified universal words give superpermutation matrices") {
    for (int n = 1; n <= 5; ++n) {
        const SearchResult g = greedy_cycle_path(n);
        REQUIRE(verify_universal_word(g.word).ok);
        CHECK(is_superpermutation_matrix(word_to_matrix(g.word), n).ok);
    }
}

TEST_CASE("text format") {
    const auto t = M({"1000", "0101", "0010"});
    const std::string text = t.to_text(3);
    CHECK(text == "3 4 3\n1000\n0101\n0010\n");
    int n = 0;
    const auto parsed = ToricBinaryMatrix::from_text(text, n);
    CHECK(parsed == t);
    CHECK(n == 3);
    CHECK_THROWS(ToricBinaryMatrix::from_text("junk", n));
    CHECK_THROWS(ToricBinaryMatrix::from_text("2 2 2\n10\n1", n));
}
