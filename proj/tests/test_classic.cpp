#include <array>

#include <doctest.h>

#include "superperm/classic.hpp"

using namespace spm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<Letter> W(const char* s) {
    std::vector<Letter> out;
    for (const char* c = s; *c; ++c) out.push_back(static_cast<Letter>(*c - '0'));
    return out;
}

}  // namespace

TEST_CASE("superpermutation check") {
    CHECK(is_superpermutation(W("121"), 2).ok);
    CHECK(is_superpermutation(W("123121321"), 3).ok);
    CHECK(is_superpermutation(W("1"), 1).ok);

    // windows of 1232 are 123 and 232, so only one permutation is present
    const auto bad = is_superpermutation(W("1232"), 3);
    CHECK_FALSE(bad.ok);
    CHECK(bad.missing.size() == 5);
    bool has213 = false;
    for (const auto& m : bad.missing) has213 = has213 || m == P("213");
    CHECK(has213);

    CHECK_THROWS(is_superpermutation(W("124"), 3));
}

TEST_CASE("recursive construction") {
    static constexpr std::array<long long, 6> lengths = {1, 3, 9, 33, 153, 873};
    CHECK(ashlock_tillotson(1) == W("1"));
    CHECK(ashlock_tillotson(2) == W("121"));
    CHECK(ashlock_tillotson(3) == W("123121321"));
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const auto word = ashlock_tillotson(n);
        CHECK(static_cast<long long>(word.size()) == lengths[static_cast<std::size_t>(n - 1)]);
        CHECK(is_superpermutation(word, n).ok);
    }
    SUBCASE("length recurrence: previous length plus n!") {
        BigInt expect = 1;
        for (int n = 2; n <= 6; ++n) {
            expect += factorial_big(static_cast<unsigned>(n));
            CHECK(BigInt(static_cast<long long>(ashlock_tillotson(n).size())) == expect);
        }
    }
}

TEST_CASE("transition weights between permutations") {
    CHECK(g_weight(P("123"), P("231")) == 1);
    CHECK(g_weight(P("123"), P("321")) == 2);  // 123 + "21" ends in 321
    CHECK(g_weight(P("123"), P("123")) == 0);
    CHECK(g_weight(P("123"), P("213")) == 3);  // no overlap: rewrite everything
    CHECK_THROWS(g_weight(P("12"), P("123")));

    SUBCASE("range and identity, exhaustive for n = 4") {
        std::vector<Letter> a = Permutation::identity(4).word();
        do {
            std::vector<Letter> b = Permutation::identity(4).word();
            do {
                const int w = g_weight(Permutation(a), Permutation(b));
                if (a == b) {
                    CHECK(w == 0);
                } else {
                    CHECK(w >= 1);
                    CHECK(w <= 4);
                }
            } while (std::next_permutation(b.begin(), b.end()));
        } while (std::next_permutation(a.begin(), a.end()));
    }
}

TEST_CASE("path and word conversions") {
    PermPath p;
    p.vertices = {P("123"), P("231"), P("312")};
    p.step_weights = {1, 1};
    const auto word = perm_path_to_word(p);
    CHECK(word == W("12312"));
    CHECK(word.size() == static_cast<std::size_t>(p.total_weight() + 3));
    // that short word holds only half of the permutations
    CHECK_FALSE(is_superpermutation(word, 3).ok);
    CHECK(is_superpermutation(word, 3).missing.size() == 3);

    const PermPath back = word_to_perm_path(W("123121321"), 3);
    CHECK(back.total_weight() == 6);
    CHECK(back.vertices.front() == P("123"));
    CHECK(back.vertices.back() == P("321"));

    const auto at4 = ashlock_tillotson(4);
    const PermPath at_path = word_to_perm_path(at4, 4);
    CHECK(at_path.total_weight() == 33 - 4);
    CHECK(perm_path_to_word(at_path).size() <= at4.size());

    CHECK_THROWS(word_to_perm_path(W("11"), 2));
    CHECK_THROWS(perm_path_to_word(PermPath{}));
}

TEST_CASE("published length bounds") {
    CHECK(classic_lower_bound(4) == 33);
    CHECK(classic_upper_bound(5) == 154);
    const auto [lo6, hi6] = classic_bounds(6);
    CHECK(lo6 == 867);
    CHECK(hi6 == 873);
    // the known 872-letter word sits strictly inside
    CHECK(lo6 < 872);
    CHECK(hi6 > 872);
    CHECK(classic_lower_bound(3) == 6 + 2 + 1 + 0);
    CHECK_THROWS(classic_lower_bound(2));
    CHECK_THROWS(classic_upper_bound(3));

    SUBCASE("constructed words respect the lower bound") {
        for (int n = 3; n <= 6; ++n)
            CHECK(BigInt(static_cast<long long>(ashlock_tillotson(n).size())) >=
                  classic_lower_bound(n));
    }
}
