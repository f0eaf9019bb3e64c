#include "superperm/toric_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spm {

ToricBinaryMatrix::ToricBinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      words_per_row_(static_cast<std::size_t>((cols + 63) / 64)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    bits_.assign(static_cast<std::size_t>(rows) * words_per_row_, 0);
}

ToricBinaryMatrix ToricBinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("no rows");
    ToricBinaryMatrix t(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < t.rows_; ++i) {
        const std::string& r = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(r.size()) != t.cols_)
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < t.cols_; ++j) {
            if (r[static_cast<std::size_t>(j)] == '1') t.set(i, j, true);
            else if (r[static_cast<std::size_t>(j)] != '0')
                throw std::invalid_argument("entries must be '0' or '1'");
        }
    }
    return t;
}

void ToricBinaryMatrix::set(int i, int j, bool v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("set() index outside matrix");
    auto& w = bits_[static_cast<std::size_t>(i) * words_per_row_ +
                    static_cast<std::size_t>(j >> 6)];
    const std::uint64_t bit = 1ull << (j & 63);
    if (v) w |= bit; else w &= ~bit;
}

ToricBinaryMatrix ToricBinaryMatrix::transposed() const {
    ToricBinaryMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

std::optional<Letter> ToricBinaryMatrix::column_basis_value(int j) const {
    j = mod(j, cols_);
    int row = -1;
    for (int i = 0; i < rows_; ++i) {
        if (get(i, j)) {
            if (row >= 0) return std::nullopt;
            row = i;
        }
    }
    if (row < 0) return std::nullopt;
    return static_cast<Letter>(row + 1);
}

std::string ToricBinaryMatrix::to_text(int n) const {
    std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + " " +
                      std::to_string(n) + "\n";
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.push_back(get(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

ToricBinaryMatrix ToricBinaryMatrix::from_text(std::string_view text, int& n_out) {
    std::istringstream in{std::string(text)};
    int m = 0, p = 0, n = 0;
    if (!(in >> m >> p >> n)) throw std::invalid_argument("bad matrix header, want: m p n");
    std::vector<std::string> rows;
    std::string line;
    while (static_cast<int>(rows.size()) < m && in >> line) rows.push_back(line);
    if (static_cast<int>(rows.size()) != m) throw std::invalid_argument("missing matrix rows");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != p) throw std::invalid_argument("row width != p");
    n_out = n;
    return from_rows(rows);
}

bool contains_block(const ToricBinaryMatrix& t, const PermMatrix& m) {
    const int n = m.size();
    if (n > t.rows() || n > t.cols())
        throw std::invalid_argument("block larger than torus in some dimension");
    for (int r0 = 0; r0 < t.rows(); ++r0) {
        for (int c0 = 0; c0 < t.cols(); ++c0) {
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                const int one_row = m.column_value(j + 1) - 1;
                for (int i = 0; i < n; ++i) {
                    if (t(r0 + i, c0 + j) != (i == one_row ? 1 : 0)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

namespace {

// Row i read as a basis row vector: 1-based column of its single 1.
std::optional<Letter> row_basis_value(const ToricBinaryMatrix& t, int i) {
    int col = -1;
    for (int j = 0; j < t.cols(); ++j) {
        if (t(i, j)) {
            if (col >= 0) return std::nullopt;
            col = j;
        }
    }
    if (col < 0) return std::nullopt;
    return static_cast<Letter>(col + 1);
}

std::optional<Permutation> window_word(const std::vector<std::optional<Letter>>& vals,
                                       int start, int n) {
    std::vector<Letter> w(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    const int len = static_cast<int>(vals.size());
    for (int j = 0; j < n; ++j) {
        const auto v = vals[static_cast<std::size_t>((start + j) % len)];
        if (!v || *v > n || seen[*v]) return std::nullopt;
        seen[*v] = true;
        w[static_cast<std::size_t>(j)] = *v;
    }
    return Permutation(std::move(w));
}

}  // namespace

MatrixCheckReport is_superpermutation_matrix(const ToricBinaryMatrix& t, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > t.rows() || n > t.cols())
        throw std::invalid_argument("matrix dimensions too small for order n");

    MatrixCheckReport report;
    const std::uint64_t num_classes = canonical_class_count(n);

    if (t.rows() == n) {
        // Column scan; row offsets of a block supply the whole value-shift
        // class of each permutation window.
        std::vector<std::optional<Letter>> cols(static_cast<std::size_t>(t.cols()));
        for (int j = 0; j < t.cols(); ++j)
            cols[static_cast<std::size_t>(j)] = t.column_basis_value(j);
        std::vector<bool> covered(num_classes, false);
        for (int c0 = 0; c0 < t.cols(); ++c0)
            if (auto w = window_word(cols, c0, n))
                covered[canonical_rep_rank(IncClass(*w).rep())] = true;
        for (std::uint64_t r = 0; r < num_classes; ++r) {
            if (covered[r]) continue;
            for (auto& m : IncClass(canonical_rep_unrank(n, r)).members())
                report.missing.push_back(std::move(m));
        }
    } else if (t.cols() == n) {
        // Row scan; column offsets supply the rotation class.
        std::vector<std::optional<Letter>> rows(static_cast<std::size_t>(t.rows()));
        for (int i = 0; i < t.rows(); ++i)
            rows[static_cast<std::size_t>(i)] = row_basis_value(t, i);
        std::vector<bool> covered(num_classes, false);
        for (int r0 = 0; r0 < t.rows(); ++r0)
            if (auto w = window_word(rows, r0, n))
                covered[canonical_rep_rank(RotClass(inverse(*w)).rep())] = true;
        for (std::uint64_t r = 0; r < num_classes; ++r) {
            if (covered[r]) continue;
            for (auto& m : RotClass(canonical_rep_unrank(n, r)).members())
                report.missing.push_back(std::move(m));
        }
    } else {
        Permutation p = Permutation::identity(n);
        std::vector<Letter> w = p.word();
        do {
            Permutation candidate{w};
            if (!contains_block(t, PermMatrix(candidate)))
                report.missing.push_back(std::move(candidate));
        } while (std::next_permutation(w.begin(), w.end()));
    }

    std::sort(report.missing.begin(), report.missing.end());
    report.ok = report.missing.empty();
    return report;
}

UniversalWord::UniversalWord(std::vector<Letter> letters, int n) : letters_(std::move(letters)), n_(n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    for (Letter v : letters_)
        if (v < 1 || v > n) throw std::invalid_argument("word letter outside 1..n");
}

std::string UniversalWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (n_ >= 10 && i > 0) out.push_back(',');
        out += std::to_string(static_cast<int>(letters_[i]));
    }
    return out;
}

UniversalWord UniversalWord::parse(std::string_view text, int n) {
    std::vector<Letter> w;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            int v = 0;
            auto [p, ec] = std::from_chars(text.data() + pos, text.data() + next, v);
            if (ec != std::errc() || p != text.data() + next)
                throw std::invalid_argument("bad word literal");
            w.push_back(static_cast<Letter>(v));
            if (next == text.size()) break;
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad word literal");
            w.push_back(static_cast<Letter>(c - '0'));
        }
    }
    return UniversalWord(std::move(w), n);
}

ToricBinaryMatrix word_to_matrix(const UniversalWord& w) {
    if (w.length() == 0) throw std::invalid_argument("empty word");
    ToricBinaryMatrix t(w.n(), w.length());
    for (int j = 0; j < w.length(); ++j)
        t.set(w.letters()[static_cast<std::size_t>(j)] - 1, j, true);
    return t;
}

UniversalWord matrix_to_word(const ToricBinaryMatrix& t) {
    std::vector<Letter> letters(static_cast<std::size_t>(t.cols()));
    for (int j = 0; j < t.cols(); ++j) {
        const auto v = t.column_basis_value(j);
        if (!v) throw std::invalid_argument("column " + std::to_string(j) +
                                            " is not a basis vector");
        letters[static_cast<std::size_t>(j)] = *v;
    }
    return UniversalWord(std::move(letters), t.rows());
}

ToricBinaryMatrix square_pad(const ToricBinaryMatrix& t, int n) {
    if (t.rows() != n) throw std::invalid_argument("square_pad needs an n-row matrix");
    if (t.cols() < 2 * n - 1)
        throw std::invalid_argument("square_pad needs at least 2n-1 columns");
    ToricBinaryMatrix out(t.cols(), t.cols());
    for (int i = 0; i < 2 * n - 1; ++i) {
        const int src = i < n ? i : i - n;
        for (int j = 0; j < t.cols(); ++j)
            if (t(src, j)) out.set(i, j, true);
    }
    return out;
}

BruteMinColumnsResult brute_min_columns(int n, int max_cols) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 3)
        throw std::invalid_argument(
            "brute_min_columns is an exhaustive oracle, guarded to n <= 3");
    if (max_cols < 1) throw std::invalid_argument("max_cols must be positive");

    BruteMinColumnsResult result;
    result.note =
        "search space: n-row matrices with basis-vector columns only "
        "(no other column can lie inside a permutation block), "
        "enumerated as cyclic words up to rotation";

    for (int p = n; p <= max_cols; ++p) {
        std::vector<Letter> word(static_cast<std::size_t>(p), 1);
        while (true) {
            // Skip words that are not the least rotation of their orbit.
            bool least = true;
            for (int r = 1; r < p && least; ++r) {
                for (int i = 0; i < p; ++i) {
                    const Letter a = word[static_cast<std::size_t>(i)];
                    const Letter b = word[static_cast<std::size_t>((i + r) % p)];
                    if (a != b) {
                        least = a < b;
                        break;
                    }
                }
            }
            if (least) {
                ToricBinaryMatrix t(n, p);
                for (int j = 0; j < p; ++j)
                    t.set(word[static_cast<std::size_t>(j)] - 1, j, true);
                if (is_superpermutation_matrix(t, n).ok) {
                    result.found = true;
                    result.cols = p;
                    result.witness = std::move(t);
                    return result;
                }
            }
            int i = p - 1;
            while (i >= 0 && word[static_cast<std::size_t>(i)] == n) {
                word[static_cast<std::size_t>(i)] = 1;
                --i;
            }
            if (i < 0) break;
            ++word[static_cast<std::size_t>(i)];
        }
    }
    result.note += "; no witness within max_cols=" + std::to_string(max_cols);
    return result;
}

}  // namespace spm
