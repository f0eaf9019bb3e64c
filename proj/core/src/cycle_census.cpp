#include "superperm/cycle_census.hpp"

#include <algorithm>
#include <stdexcept>

namespace spm {

std::uint64_t euler_phi(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("euler_phi(0)");
    std::uint64_t result = k;
    std::uint64_t m = k;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

BigInt factorial_big(unsigned k) {
    BigInt f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

std::uint64_t successor_rank(const Permutation& rep) {
    return canonical_rep_rank(IncClass(rotate_word(rep, 1)).rep());
}

}  // namespace

std::vector<std::vector<std::uint64_t>> enumerate_one_cycles(int n, int budget_max_n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > budget_max_n)
        throw std::invalid_argument("enumeration budget exceeded: n > " +
                                    std::to_string(budget_max_n));
    const std::uint64_t V = canonical_class_count(n);
    std::vector<bool> visited(V, false);
    std::vector<std::vector<std::uint64_t>> cycles;
    for (std::uint64_t r = 0; r < V; ++r) {
        if (visited[r]) continue;
        std::vector<std::uint64_t> orbit{r};
        visited[r] = true;
        std::uint64_t cur = successor_rank(canonical_rep_unrank(n, r));
        while (cur != r) {
            orbit.push_back(cur);
            visited[cur] = true;
            cur = successor_rank(canonical_rep_unrank(n, cur));
        }
        cycles.push_back(std::move(orbit));
    }
    return cycles;
}

BigInt CycleCensus::total_cycles() const {
    BigInt s = 0;
    for (const auto& [d, c] : counts) s += c;
    return s;
}

BigInt CycleCensus::weighted_total() const {
    BigInt s = 0;
    for (const auto& [d, c] : counts) s += BigInt(d) * c;
    return s;
}

CycleCensus census_enumerated(int n, int budget_max_n) {
    CycleCensus census;
    census.n = n;
    for (std::uint64_t d : divisors_of(static_cast<std::uint64_t>(n))) census.counts[d] = 0;
    for (const auto& orbit : enumerate_one_cycles(n, budget_max_n)) {
        const auto len = static_cast<std::uint64_t>(orbit.size());
        auto it = census.counts.find(len);
        if (it == census.counts.end())
            throw std::logic_error("orbit length does not divide n");
        ++it->second;
    }
    return census;
}

BigInt e_count(std::uint64_t d, std::uint64_t n) {
    if (d == 0 || n == 0 || n % d != 0)
        throw std::invalid_argument("e_count requires d | n");
    const std::uint64_t p = n / d;
    BigInt value = euler_phi(p);
    for (std::uint64_t i = 1; i < d; ++i) value *= p;
    value *= factorial_big(static_cast<unsigned>(d - 1));
    return value;
}

CycleCensus census_formula(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    CycleCensus census;
    census.n = n;
    for (std::uint64_t d : divisors_of(static_cast<std::uint64_t>(n))) {
        BigInt acc = e_count(d, static_cast<std::uint64_t>(n));
        for (std::uint64_t k : divisors_of(d)) {
            if (k == d) continue;
            acc -= BigInt(k) * census.counts.at(k);
        }
        if (acc % d != 0)
            throw std::logic_error("census recursion produced a non-integer count");
        census.counts[d] = acc / d;
    }
    return census;
}

std::vector<IncClass> shift_periodic_classes(int d, int n) {
    if (n < 1 || d < 1 || n % d != 0)
        throw std::invalid_argument("shift_periodic_classes requires d | n");
    std::vector<IncClass> out;
    const std::uint64_t V = canonical_class_count(n);
    for (std::uint64_t r = 0; r < V; ++r) {
        const Permutation rep = canonical_rep_unrank(n, r);
        // pi(i+d) = pi(i) + k forces k from i = 0.
        const int k = ((rep(d % n + 1) - rep(1)) % n + n) % n;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            const int want = (rep(i + 1) - 1 + k) % n + 1;
            ok = rep((i + d) % n + 1) == want;
        }
        if (ok) out.push_back(IncClass(rep));
    }
    return out;
}

}  // namespace spm
