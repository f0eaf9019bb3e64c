#include "superperm/classic.hpp"

#include <algorithm>
#include <stdexcept>

namespace spm {

namespace {

void check_letters(const std::vector<Letter>& word, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    for (Letter v : word)
        if (v < 1 || v > n) throw std::invalid_argument("word letter outside 1..n");
}

// Lex rank of a full permutation word (Lehmer code).
std::uint64_t perm_rank(const Letter* w, int n) {
    std::uint64_t rank = 0;
    std::uint64_t f = 1;
    for (int k = 2; k < n; ++k) f *= static_cast<std::uint64_t>(k);  // (n-1)!
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (w[j] < w[i]) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * f;
        if (n - 1 - i > 0) f /= static_cast<std::uint64_t>(n - 1 - i);
    }
    return rank;
}

bool window_is_perm(const Letter* w, int n) {
    unsigned seen = 0;
    for (int i = 0; i < n; ++i) {
        if (w[i] > n) return false;
        const unsigned bit = 1u << w[i];
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

}  // namespace

SupermCheckReport is_superpermutation(const std::vector<Letter>& word, int n) {
    check_letters(word, n);
    if (n > 12) throw std::invalid_argument("verification budget: n! factors, n <= 12");
    std::uint64_t total = 1;
    for (int k = 2; k <= n; ++k) total *= static_cast<std::uint64_t>(k);
    std::vector<bool> found(total, false);
    if (static_cast<int>(word.size()) >= n) {
        for (std::size_t at = 0; at + static_cast<std::size_t>(n) <= word.size(); ++at)
            if (window_is_perm(word.data() + at, n))
                found[perm_rank(word.data() + at, n)] = true;
    }
    SupermCheckReport report;
    std::vector<Letter> w = Permutation::identity(n).word();
    std::uint64_t rank = 0;
    do {
        if (!found[rank]) report.missing.push_back(Permutation(w));
        ++rank;
    } while (std::next_permutation(w.begin(), w.end()));
    report.ok = report.missing.empty();
    return report;
}

std::vector<Letter> ashlock_tillotson(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n == 1) return {1};
    const std::vector<Letter> prev = ashlock_tillotson(n - 1);

    // (n-1)-permutations in order of first appearance as factors.
    std::vector<std::vector<Letter>> order;
    std::vector<bool> seen(1, false);
    {
        std::uint64_t total = 1;
        for (int k = 2; k <= n - 1; ++k) total *= static_cast<std::uint64_t>(k);
        seen.assign(total, false);
    }
    for (std::size_t at = 0; at + static_cast<std::size_t>(n - 1) <= prev.size(); ++at) {
        if (!window_is_perm(prev.data() + at, n - 1)) continue;
        const std::uint64_t r = perm_rank(prev.data() + at, n - 1);
        if (seen[r]) continue;
        seen[r] = true;
        order.emplace_back(prev.begin() + static_cast<std::ptrdiff_t>(at),
                           prev.begin() + static_cast<std::ptrdiff_t>(at) + (n - 1));
    }

    // pi -> pi n pi, concatenated with maximal suffix/prefix overlap.
    std::vector<Letter> out;
    bool first = true;
    for (const auto& p : order) {
        std::vector<Letter> seg = p;
        seg.push_back(static_cast<Letter>(n));
        seg.insert(seg.end(), p.begin(), p.end());
        if (first) {
            out = std::move(seg);
            first = false;
            continue;
        }
        std::size_t k = std::min(out.size(), seg.size());
        for (; k > 0; --k) {
            if (std::equal(out.end() - static_cast<std::ptrdiff_t>(k), out.end(), seg.begin()))
                break;
        }
        out.insert(out.end(), seg.begin() + static_cast<std::ptrdiff_t>(k), seg.end());
    }
    return out;
}

int g_weight(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch in g_weight");
    if (a == b) return 0;
    const int n = a.size();
    for (int k = 1; k < n; ++k) {
        bool match = true;
        for (int i = 0; i < n - k; ++i) {
            if (a(k + i + 1) != b(i + 1)) {
                match = false;
                break;
            }
        }
        if (match) return k;
    }
    return n;
}

int PermPath::total_weight() const {
    int s = 0;
    for (int w : step_weights) s += w;
    return s;
}

std::vector<Letter> perm_path_to_word(const PermPath& p) {
    if (p.vertices.empty()) throw std::invalid_argument("malformed path: empty");
    const int n = p.vertices.front().size();
    std::vector<Letter> word = p.vertices.front().word();
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        if (p.vertices[i].size() != n) throw std::invalid_argument("mixed sizes in path");
        const int k = g_weight(p.vertices[i - 1], p.vertices[i]);
        const auto& w = p.vertices[i].word();
        word.insert(word.end(), w.end() - k, w.end());
    }
    return word;
}

PermPath word_to_perm_path(const std::vector<Letter>& word, int n) {
    check_letters(word, n);
    PermPath path;
    int last_pos = -1;
    for (std::size_t at = 0; at + static_cast<std::size_t>(n) <= word.size(); ++at) {
        if (!window_is_perm(word.data() + at, n)) continue;
        path.vertices.emplace_back(
            std::vector<Letter>(word.begin() + static_cast<std::ptrdiff_t>(at),
                                word.begin() + static_cast<std::ptrdiff_t>(at) + n));
        if (last_pos >= 0) path.step_weights.push_back(static_cast<int>(at) - last_pos);
        last_pos = static_cast<int>(at);
    }
    if (path.vertices.empty())
        throw std::invalid_argument("word contains no permutation factor");
    return path;
}

BigInt classic_lower_bound(int n) {
    if (n < 3) throw std::invalid_argument("lower bound formula needs n >= 3");
    return factorial_big(static_cast<unsigned>(n)) + factorial_big(static_cast<unsigned>(n - 1)) +
           factorial_big(static_cast<unsigned>(n - 2)) + n - 3;
}

BigInt classic_upper_bound(int n) {
    if (n < 4) throw std::invalid_argument("upper bound formula needs n >= 4");
    return classic_lower_bound(n) + factorial_big(static_cast<unsigned>(n - 3));
}

std::pair<BigInt, BigInt> classic_bounds(int n) {
    return {classic_lower_bound(n), classic_upper_bound(n)};
}

}  // namespace spm
