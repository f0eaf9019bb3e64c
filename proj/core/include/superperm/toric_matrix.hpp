#ifndef SUPERPERM_TORIC_MATRIX_HPP
#define SUPERPERM_TORIC_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superperm/permutation.hpp"

// Toric 0/1 matrices: indexing wraps both vertically and horizontally, so a
// block may straddle any edge. A superpermutation matrix for order n is a
// toric matrix containing every n x n permutation matrix as a block.

namespace spm {

class ToricBinaryMatrix {
public:
    ToricBinaryMatrix(int rows, int cols);  // all zeros
    static ToricBinaryMatrix from_rows(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // Toric accessors: any integer index is reduced mod the dimension.
    int operator()(long long i, long long j) const {
        return get(mod(i, rows_), mod(j, cols_));
    }
    void set(int i, int j, bool v);

    ToricBinaryMatrix transposed() const;

    // If column j holds exactly one 1, its row (1-based); nullopt otherwise.
    std::optional<Letter> column_basis_value(int j) const;

    // Text format: header "m p n", then m lines of p characters '0'/'1'.
    std::string to_text(int n) const;
    static ToricBinaryMatrix from_text(std::string_view text, int& n_out);

    friend bool operator==(const ToricBinaryMatrix&, const ToricBinaryMatrix&) = default;

private:
    static int mod(long long v, int m) {
        long long r = v % m;
        return static_cast<int>(r < 0 ? r + m : r);
    }
    int get(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_per_row_ +
                      static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;  // packed row-major, 64 columns per word
};

inline ToricBinaryMatrix transpose(const ToricBinaryMatrix& t) { return t.transposed(); }

// True iff m appears as an n x n block of t at some (toric) anchor. Throws
// std::invalid_argument when the block exceeds either dimension of t.
bool contains_block(const ToricBinaryMatrix& t, const PermMatrix& m);

struct MatrixCheckReport {
    bool ok = false;
    std::vector<Permutation> missing;  // sorted, empty iff ok
};

// Checks S_n ⊂ t. When t has exactly n rows, only one representative per
// value-shift class needs locating (row offsets supply the rest of the
// class); with exactly n columns the same holds for rotation classes with a
// row scan. Otherwise all n! blocks are searched directly.
MatrixCheckReport is_superpermutation_matrix(const ToricBinaryMatrix& t, int n);

// Universal-word candidate: letters over 1..n, any length.
class UniversalWord {
public:
    UniversalWord(std::vector<Letter> letters, int n);
    int n() const { return n_; }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<Letter>& letters() const { return letters_; }
    std::string str() const;  // digits for n <= 9, comma-separated above
    static UniversalWord parse(std::string_view text, int n);
    friend bool operator==(const UniversalWord&, const UniversalWord&) = default;

private:
    std::vector<Letter> letters_;
    int n_;
};

// The n x |w| matrix whose column i is e_{w(i)}.
ToricBinaryMatrix word_to_matrix(const UniversalWord& w);
// Inverse of word_to_matrix; every column must be a basis vector.
UniversalWord matrix_to_word(const ToricBinaryMatrix& t);

// From an n-row matrix with c >= 2n-1 columns, builds the c x c matrix whose
// rows are L1..Ln, L1..L(n-1), then zero rows; a superpermutation matrix
// stays one under this padding.
ToricBinaryMatrix square_pad(const ToricBinaryMatrix& t, int n);

struct BruteMinColumnsResult {
    bool found = false;
    int cols = 0;
    std::optional<ToricBinaryMatrix> witness;
    std::string note;  // records the basis-column search-space reduction
};

// Exhaustive oracle for the smallest p admitting an n x p superpermutation
// matrix. Guarded to n <= 3; the search space is matrices whose columns are
// all basis vectors (with exactly n rows, no other column can sit inside a
// permutation block).
BruteMinColumnsResult brute_min_columns(int n, int max_cols);

}  // namespace spm

#endif
