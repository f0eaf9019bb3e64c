#include "superperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace spm {

namespace {

int positive_mod(long long v, int m) {
    long long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

Permutation::Permutation(std::vector<Letter> word) : word_(std::move(word)) {
    const auto n = word_.size();
    if (n == 0) throw std::invalid_argument("permutation word is empty");
    if (n > 255) throw std::invalid_argument("permutation too large");
    std::vector<bool> seen(n + 1, false);
    for (Letter v : word_) {
        if (v < 1 || v > n) throw std::invalid_argument("letter out of range 1..n");
        if (seen[v]) throw std::invalid_argument("repeated letter in permutation word");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<Letter> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = static_cast<Letter>(i + 1);
    return Permutation(std::move(w));
}

Permutation Permutation::sigma(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<Letter> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] = static_cast<Letter>(i + 1 == n ? 1 : i + 2);
    return Permutation(std::move(w));
}

std::string Permutation::str() const {
    std::string out;
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (n >= 10 && i > 0) out.push_back(',');
        out += std::to_string(static_cast<int>(word_[static_cast<std::size_t>(i)]));
    }
    return out;
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<Letter> w;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            int v = 0;
            auto [p, ec] = std::from_chars(text.data() + pos, text.data() + next, v);
            if (ec != std::errc() || p != text.data() + next)
                throw std::invalid_argument("bad permutation literal");
            if (v < 1 || v > 255) throw std::invalid_argument("letter out of range");
            w.push_back(static_cast<Letter>(v));
            if (next == text.size()) break;
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation literal");
            w.push_back(static_cast<Letter>(c - '0'));
        }
    }
    return Permutation(std::move(w));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch in compose");
    const int n = a.size();
    std::vector<Letter> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Permutation(std::move(w));
}

Permutation inverse(const Permutation& a) {
    const int n = a.size();
    std::vector<Letter> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(a(i) - 1)] = static_cast<Letter>(i);
    return Permutation(std::move(w));
}

Permutation shift_values(const Permutation& a, int k) {
    const int n = a.size();
    const int s = positive_mod(k, n);
    std::vector<Letter> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int v = a(i + 1) - 1 + s;
        w[static_cast<std::size_t>(i)] = static_cast<Letter>(v % n + 1);
    }
    return Permutation(std::move(w));
}

Permutation rotate_word(const Permutation& a, int k) {
    const int n = a.size();
    const int s = positive_mod(k, n);
    std::vector<Letter> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] = a((i + s) % n + 1);
    return Permutation(std::move(w));
}

IncClass::IncClass(const Permutation& any_member)
    : rep_(shift_values(any_member, 1 - any_member(1))) {}

std::vector<Permutation> IncClass::members() const {
    std::vector<Permutation> out;
    const int n = rep_.size();
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) out.push_back(shift_values(rep_, k));
    return out;
}

RotClass::RotClass(const Permutation& any_member) : rep_(any_member) {
    const int n = any_member.size();
    for (int i = 1; i <= n; ++i) {
        if (any_member(i) == 1) {
            rep_ = rotate_word(any_member, i - 1);
            return;
        }
    }
}

std::vector<Permutation> RotClass::members() const {
    std::vector<Permutation> out;
    const int n = rep_.size();
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) out.push_back(rotate_word(rep_, k));
    return out;
}

PermMatrix::PermMatrix(const Permutation& p) : col_value_(p.word()) {}

PermMatrix PermMatrix::from_entries(const std::vector<std::vector<int>>& entries) {
    const auto n = entries.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    std::vector<Letter> col(n, 0);
    std::vector<int> row_sum(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (entries[i].size() != n) throw std::invalid_argument("matrix not square");
        for (std::size_t j = 0; j < n; ++j) {
            const int v = entries[i][j];
            if (v != 0 && v != 1) throw std::invalid_argument("entry not 0/1");
            if (v == 1) {
                if (col[j] != 0)
                    throw std::invalid_argument("not a permutation matrix: column sum != 1");
                col[j] = static_cast<Letter>(i + 1);
                ++row_sum[i];
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (col[j] == 0)
            throw std::invalid_argument("not a permutation matrix: column sum != 1");
    for (std::size_t i = 0; i < n; ++i)
        if (row_sum[i] != 1)
            throw std::invalid_argument("not a permutation matrix: row sum != 1");
    return PermMatrix(std::move(col));
}

Permutation PermMatrix::to_permutation() const { return Permutation(col_value_); }

PermMatrix PermMatrix::transposed() const {
    return PermMatrix(inverse(to_permutation()));
}

std::uint64_t canonical_class_count(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k < n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

// Lehmer rank of the tail word over the alphabet {2..n}.
std::uint64_t canonical_rep_rank(const Permutation& rep) {
    const int n = rep.size();
    if (rep(1) != 1) throw std::invalid_argument("not a canonical representative");
    std::uint64_t rank = 0;
    std::uint64_t f = 1;
    for (int k = 1; k <= n - 2; ++k) f *= static_cast<std::uint64_t>(k);  // (n-2)!
    for (int i = 2; i <= n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j <= n; ++j)
            if (rep(j) < rep(i)) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * f;
        if (n - i > 0) f /= static_cast<std::uint64_t>(n - i);
    }
    return rank;
}

Permutation canonical_rep_unrank(int n, std::uint64_t rank) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (rank >= canonical_class_count(n)) throw std::invalid_argument("rank out of range");
    std::vector<Letter> avail;
    for (int v = 2; v <= n; ++v) avail.push_back(static_cast<Letter>(v));
    std::vector<Letter> w;
    w.reserve(static_cast<std::size_t>(n));
    w.push_back(1);
    std::uint64_t f = 1;
    for (int k = 1; k <= n - 2; ++k) f *= static_cast<std::uint64_t>(k);
    for (int i = 0; i < n - 1; ++i) {
        const auto pick = static_cast<std::size_t>(rank / f);
        if (pick >= avail.size()) throw std::invalid_argument("rank out of range");
        rank %= f;
        w.push_back(avail[pick]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pick));
        if (n - 2 - i > 0) f /= static_cast<std::uint64_t>(n - 2 - i);
    }
    return Permutation(std::move(w));
}

}  // namespace spm
