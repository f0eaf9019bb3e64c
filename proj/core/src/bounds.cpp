#include "superperm/bounds.hpp"

#include <array>
#include <stdexcept>

namespace spm {

namespace {

void require_positive(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
}

}  // namespace

BigInt bound_I(int n) {
    require_positive(n);
    return factorial_big(static_cast<unsigned>(n - 1)) + n - 1;
}

BigInt bound_S(int n) {
    require_positive(n);
    return BigInt(n - 1) * factorial_big(static_cast<unsigned>(n - 1)) + 1;
}

BigInt bound_L(int n) {
    require_positive(n);
    return census_formula(n).total_cycles();
}

BigInt bound_B(int n) {
    require_positive(n);
    const CycleCensus census = census_formula(n);
    BigInt b = 1;
    for (const auto& [d, c] : census.counts) b += c * (BigInt(d) + n - 2);
    return b;
}

BigInt bound_C(int n) {
    require_positive(n);
    return factorial_big(static_cast<unsigned>(n - 1)) + n - 2 + bound_L(n);
}

BigRational bound_Bprime(int n) {
    require_positive(n);
    BigRational sum = 0;
    for (std::uint64_t d : divisors_of(static_cast<std::uint64_t>(n))) {
        BigInt num = euler_phi(static_cast<std::uint64_t>(n) / d);
        for (std::uint64_t i = 1; i < d; ++i) num *= n;
        num *= factorial_big(static_cast<unsigned>(d - 1));
        BigInt den = 1;
        for (std::uint64_t i = 0; i < d; ++i) den *= d;
        sum += BigRational(num, den);
    }
    return BigRational(1) + BigRational(factorial_big(static_cast<unsigned>(n - 1))) +
           sum * (n - 2);
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

BigInt prime_B_closed_form(int p) {
    if (!is_prime(p)) throw std::invalid_argument("prime_B_closed_form needs a prime");
    // (p-2)! == 1 (mod p) by Wilson, so the division is exact.
    BigInt twice = 2 * (factorial_big(static_cast<unsigned>(p - 2)) - 1);
    if (twice % p != 0) throw std::logic_error("Wilson division not exact");
    return 1 + BigInt(p - 1) * (p - 1) * (twice / p + 1);
}

std::vector<BoundsRow> bounds_table(int n_max, const std::map<int, BigInt>* best_found) {
    require_positive(n_max);
    std::vector<BoundsRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        BoundsRow row;
        row.n = n;
        row.I = bound_I(n);
        row.C = bound_C(n);
        row.B = bound_B(n);
        row.S = bound_S(n);
        row.Bprime = bound_Bprime(n);
        if (best_found) {
            auto it = best_found->find(n);
            if (it != best_found->end()) row.best_found = it->second;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<RatioRow> ratio_report(int n_max) {
    if (n_max < 3) throw std::invalid_argument("ratio_report needs n_max >= 3");
    std::vector<RatioRow> rows;
    for (int n = 3; n <= n_max; ++n) {
        RatioRow row;
        row.n = n;
        const BigInt fact1 = factorial_big(static_cast<unsigned>(n - 1));
        const BigInt fact2 = factorial_big(static_cast<unsigned>(n - 2));
        row.B_ratio = BigRational(bound_B(n), fact1);
        row.Bprime_ratio = bound_Bprime(n) / BigRational(fact1);
        row.L_ratio = BigRational(bound_L(n), fact2);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableDeviation> published_table_deviations(int n_max) {
    // I, C, B, S for n = 1..8 as previously tabulated.
    static constexpr std::array<std::array<long long, 4>, 8> published = {{
        {1, 1, 1, 1},
        {2, 2, 3, 2},
        {4, 5, 5, 5},
        {9, 11, 13, 19},
        {28, 35, 49, 97},
        {125, 148, 217, 601},
        {726, 823, 1261, 4321},
        {5047, 5686, 8881, 35280},
    }};
    std::vector<TableDeviation> out;
    for (int n = 1; n <= n_max && n <= 8; ++n) {
        const auto& row = published[static_cast<std::size_t>(n - 1)];
        const std::array<std::pair<char, BigInt>, 4> computed = {{
            {'I', bound_I(n)}, {'C', bound_C(n)}, {'B', bound_B(n)}, {'S', bound_S(n)}}};
        for (std::size_t col = 0; col < 4; ++col) {
            if (computed[col].second != row[col])
                out.push_back({n, computed[col].first, computed[col].second, BigInt(row[col])});
        }
    }
    return out;
}

std::string format_rational(const BigRational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace spm
