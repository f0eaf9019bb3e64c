#ifndef SUPERPERM_CYCLE_CENSUS_HPP
#define SUPERPERM_CYCLE_CENSUS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "superperm/permutation.hpp"

// 1-cycles are the orbits of the weight-1 successor map on the (n-1)!
// value-shift classes; every orbit length divides n. Counting them has a
// closed form through E(d,n), the set of classes with a period-d shift
// relation pi(i+d) = pi(i) + k:
//
//   |E(d,n)|        = phi(n/d) * (n/d)^(d-1) * (d-1)!
//   |cycles(d)|     = (|E(d,n)| - sum_{k|d, k<d} k*|cycles(k)|) / d
//
// All counts are exact big integers; the division above never truncates.

namespace spm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

std::uint64_t euler_phi(std::uint64_t k);

BigInt factorial_big(unsigned k);
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

// Orbits of the weight-1 successor, each a list of vertex indices in the
// canonical order, grouped deterministically by smallest member.
std::vector<std::vector<std::uint64_t>> enumerate_one_cycles(int n, int budget_max_n = 9);

struct CycleCensus {
    int n = 0;
    std::map<std::uint64_t, BigInt> counts;  // divisor d -> number of d-cycles

    BigInt total_cycles() const;          // L(n)
    BigInt weighted_total() const;        // sum d * counts[d] = (n-1)!
    friend bool operator==(const CycleCensus&, const CycleCensus&) = default;
};

// Tally of enumerate_one_cycles (n within the vertex budget).
CycleCensus census_enumerated(int n, int budget_max_n = 9);

// phi(n/d) * (n/d)^(d-1) * (d-1)!; throws unless d | n.
BigInt e_count(std::uint64_t d, std::uint64_t n);

// Recursive count over divisors in increasing order; any non-exact division
// is an internal error and throws std::logic_error.
CycleCensus census_formula(int n);

// Direct enumeration of E(d,n) by predicate scan over canonical
// representatives. Verification oracle for the closed form; sizes explode
// past small n, keep to n <= 6 or so.
std::vector<IncClass> shift_periodic_classes(int d, int n);

}  // namespace spm

#endif
