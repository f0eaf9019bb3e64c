#ifndef SUPERPERM_CLASSIC_HPP
#define SUPERPERM_CLASSIC_HPP

#include <utility>
#include <vector>

#include "superperm/cycle_census.hpp"
#include "superperm/permutation.hpp"

// Classical superpermutations: words over 1..n containing every permutation
// of S_n as a contiguous factor. Pairwise transition weights are queried
// directly; the n!-vertex graph is never materialized.

namespace spm {

struct SupermCheckReport {
    bool ok = false;
    std::vector<Permutation> missing;
};

SupermCheckReport is_superpermutation(const std::vector<Letter>& word, int n);

// Recursive construction: list the (n-1)-permutations of the previous output
// in order of first appearance, replace each pi by pi·n·pi, and concatenate
// with maximal suffix/prefix overlap. Length is 1! + 2! + ... + n!.
std::vector<Letter> ashlock_tillotson(int n);

// Least |u| with b a suffix of a·u, i.e. the least k with the length-(n-k)
// suffix of a equal to the prefix of b; ranges over 0..n.
int g_weight(const Permutation& a, const Permutation& b);

struct PermPath {
    std::vector<Permutation> vertices;
    std::vector<int> step_weights;
    int total_weight() const;
};

// Word of length total weight + n realizing the path.
std::vector<Letter> perm_path_to_word(const PermPath& p);
// Permutation windows of the word in order; total step weight |w| - n.
PermPath word_to_perm_path(const std::vector<Letter>& word, int n);

// (lower, upper) published length bounds:
//   lower (n >= 3): n! + (n-1)! + (n-2)! + n - 3
//   upper (n >= 4): n! + (n-1)! + (n-2)! + (n-3)! + n - 3
// Throws below the formula domain.
std::pair<BigInt, BigInt> classic_bounds(int n);
BigInt classic_lower_bound(int n);  // n >= 3
BigInt classic_upper_bound(int n);  // n >= 4

}  // namespace spm

#endif
