#ifndef SUPERPERM_BOUNDS_HPP
#define SUPERPERM_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superperm/cycle_census.hpp"

// Closed-form bounds on m(n), the minimal length of a universal word for the
// value-shift classes, with L(n) the total number of 1-cycles:
//
//   I(n)  = (n-1)! + n - 1                                 trivial lower
//   S(n)  = (n-1)(n-1)! + 1                                trivial upper
//   B(n)  = 1 + sum_d |cycles(d)| (d+n-2)
//         = 1 + (n-1)! + L(n)(n-2)                         1-cycle upper
//   C(n)  = (n-1)! + n - 2 + L(n)                          1-cycle lower
//   B'(n) = 1 + (n-1)! + (sum_d phi(n/d) n^(d-1)(d-1)!/d^d)(n-2)
//
// B' is rational in general; everything is kept exact. B(n)/(n-1)! and
// B'(n)/(n-1)! both tend to 2, and L(n)/(n-2)! tends to 1.

namespace spm {

BigInt bound_I(int n);
BigInt bound_S(int n);
BigInt bound_B(int n);
BigInt bound_C(int n);
BigInt bound_L(int n);  // L(n) = total number of 1-cycles
BigRational bound_Bprime(int n);

// For prime p, B(p) = 1 + (p-1)^2 (2((p-2)! - 1)/p + 1). Throws when p is
// not prime.
BigInt prime_B_closed_form(int p);

bool is_prime(int n);

struct BoundsRow {
    int n = 0;
    BigInt I, C, B, S;
    BigRational Bprime;
    std::optional<BigInt> best_found;
};

// Rows for 1..n_max; best_found filled from the supplied map when present.
std::vector<BoundsRow> bounds_table(int n_max,
                                    const std::map<int, BigInt>* best_found = nullptr);

struct RatioRow {
    int n = 0;
    BigRational B_ratio;       // B(n)/(n-1)!
    BigRational Bprime_ratio;  // B'(n)/(n-1)!
    BigRational L_ratio;       // L(n)/(n-2)!
};

// Exact ratios for 3 <= n <= n_max.
std::vector<RatioRow> ratio_report(int n_max);

// A previously published tabulation of the bounds for n <= 8 disagrees with
// the defining formulas in three cells; table output annotates them instead
// of silently matching either side.
struct TableDeviation {
    int n = 0;
    char column = '?';
    BigInt computed;
    BigInt published;
};
std::vector<TableDeviation> published_table_deviations(int n_max);

std::string format_rational(const BigRational& r);  // "p/q", or "p" when integral

}  // namespace spm

#endif
