#ifndef SUPERPERM_PERMUTATION_HPP
#define SUPERPERM_PERMUTATION_HPP

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

// Permutations in one-line word form. A permutation pi of {1..n} is the word
// pi(1)...pi(n) with 1-based values; all public interfaces speak 1-based even
// where internals index from 0. Two equivalence relations matter downstream:
// value shift (adding a constant mod n to every letter) and word rotation.
// The canonical representative of both kinds of class is the unique member
// whose first letter is 1.

namespace spm {

using Letter = std::uint8_t;

class Permutation {
public:
    // word[i] = pi(i+1); throws std::invalid_argument unless it is a
    // bijection of {1..n}.
    explicit Permutation(std::vector<Letter> word);

    static Permutation identity(int n);
    // The n-cycle i -> i+1 (mod n), one-line word 2 3 ... n 1.
    static Permutation sigma(int n);

    int size() const { return static_cast<int>(word_.size()); }
    // pi(i) with 1 <= i <= n.
    Letter operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<Letter>& word() const { return word_; }

    // Digit string for n <= 9 ("1243"), comma-separated for n >= 10.
    std::string str() const;
    static Permutation parse(std::string_view text);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.word_ <=> b.word_;
    }

private:
    std::vector<Letter> word_;
};

// result(i) = a(b(i)); sizes must match.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

// result(i) = a(i) + k reduced into 1..n; equals sigma^k ∘ a.
Permutation shift_values(const Permutation& a, int k);
// Left rotation of the word by k; equals a ∘ sigma^k.
Permutation rotate_word(const Permutation& a, int k);

// Equivalence class of a under value shift; rep is the member starting with 1.
class IncClass {
public:
    explicit IncClass(const Permutation& any_member);
    const Permutation& rep() const { return rep_; }
    int size() const { return rep_.size(); }
    // All n members, starting from rep.
    std::vector<Permutation> members() const;
    friend bool operator==(const IncClass&, const IncClass&) = default;
    friend std::strong_ordering operator<=>(const IncClass& a, const IncClass& b) {
        return a.rep_ <=> b.rep_;
    }

private:
    Permutation rep_;
};

// Equivalence class of a under word rotation; rep starts with 1.
class RotClass {
public:
    explicit RotClass(const Permutation& any_member);
    const Permutation& rep() const { return rep_; }
    int size() const { return rep_.size(); }
    std::vector<Permutation> members() const;
    friend bool operator==(const RotClass&, const RotClass&) = default;
    friend std::strong_ordering operator<=>(const RotClass& a, const RotClass& b) {
        return a.rep_ <=> b.rep_;
    }

private:
    Permutation rep_;
};

inline IncClass inc_class(const Permutation& a) { return IncClass(a); }
inline RotClass rot_class(const Permutation& a) { return RotClass(a); }

// The n x n 0/1 matrix whose column j is the basis vector e_{pi(j)}:
// entry(i,j) = 1 iff i = pi(j).
class PermMatrix {
public:
    explicit PermMatrix(const Permutation& p);
    // Validates one 1 per row and per column; throws std::invalid_argument
    // with a row/column diagnostic otherwise.
    static PermMatrix from_entries(const std::vector<std::vector<int>>& entries);

    int size() const { return static_cast<int>(col_value_.size()); }
    int operator()(int i, int j) const {  // 1-based
        return col_value_[static_cast<std::size_t>(j - 1)] == i ? 1 : 0;
    }
    // Value pi(j) of the source permutation (the row of column j's 1).
    Letter column_value(int j) const { return col_value_[static_cast<std::size_t>(j - 1)]; }
    Permutation to_permutation() const;
    PermMatrix transposed() const;
    friend bool operator==(const PermMatrix&, const PermMatrix&) = default;

private:
    explicit PermMatrix(std::vector<Letter> col_value) : col_value_(std::move(col_value)) {}
    std::vector<Letter> col_value_;
};

inline PermMatrix perm_matrix(const Permutation& a) { return PermMatrix(a); }
inline Permutation matrix_to_perm(const PermMatrix& m) { return m.to_permutation(); }

// Canonical class representatives (words starting with 1) in lexicographic
// order index the vertices of the transition graphs. There are (n-1)! of
// them; rank/unrank go through the Lehmer code of the tail.
std::uint64_t canonical_class_count(int n);  // (n-1)!
std::uint64_t canonical_rep_rank(const Permutation& rep);
Permutation canonical_rep_unrank(int n, std::uint64_t rank);

}  // namespace spm

#endif
