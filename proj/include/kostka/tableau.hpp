#pragma once

#include <optional>
#include <utility>

#include "kostka/core.hpp"

namespace kostka {

using Word = std::vector<int>;

// Column-strict tableau: rows weakly increase left to right, columns strictly
// increase top to bottom.  Letters are 1-based.
struct Tableau {
  std::vector<std::vector<int>> rows;

  bool empty() const { return rows.empty(); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int cells() const;
  Parts shape() const;
  bool is_rectangular() const;
  Rect rect() const;  // throws NonRectangular
  std::vector<int> content(int n) const;
  bool is_column_strict() const;
  Tableau transposed() const;

  bool operator==(const Tableau& o) const { return rows == o.rows; }
  bool operator!=(const Tableau& o) const { return rows != o.rows; }
  bool operator<(const Tableau& o) const { return rows < o.rows; }
};

// Skew subtableau: per-row left offset plus entries.
struct SkewTableau {
  std::vector<int> offsets;
  std::vector<std::vector<int>> rows;
  bool is_column_strict() const;
  int cells() const;
};

// Row-reading word: rows read left to right, bottom row first.
Word reading_word(const Tableau& t);
Word reading_word(const SkewTableau& t);

// Cells of t with entries in [lo, hi], as a skew tableau.
SkewTableau restrict_to_alphabet(const Tableau& t, int lo, int hi);

// Rebuild a skew tableau of the given shape profile from its reading word.
SkewTableau skew_from_word(const std::vector<int>& offsets,
                           const std::vector<int>& lengths, const Word& w);

// ---------------------------------------------------------------------------
// Crystal operators via the unmatched-parenthesis rule
// ---------------------------------------------------------------------------

// (phi_i, eps_i) of a word: counts of unmatched letters i and i+1.
std::pair<int, int> string_stats(const Word& w, int i);

// Position changed by e_i (leftmost unmatched i+1) or f_i (rightmost
// unmatched i); nullopt when the operator is undefined.
std::optional<size_t> raise_position(const Word& w, int i);
std::optional<size_t> lower_position(const Word& w, int i);

std::optional<Word> raise_word(const Word& w, int i);
std::optional<Word> lower_word(const Word& w, int i);

// Classical operators on tableaux (i in 1..n-1).
std::optional<Tableau> raise_tableau(const Tableau& t, int i);
std::optional<Tableau> lower_tableau(const Tableau& t, int i);

int eps_word(const Word& w, int i);
int phi_word(const Word& w, int i);

// ---------------------------------------------------------------------------
// Column insertion (Schensted)
// ---------------------------------------------------------------------------

// Insert x into P by column bumping; returns the new cell (row, col), 0-based.
std::pair<int, int> column_insert(Tableau& P, int x);

// Remove the corner cell (row, col) and reverse the bumping path;
// returns the letter that was originally inserted.
int column_uninsert(Tableau& P, int row, int col);

// P-tableau of a word under column insertion, processed from the right end.
Tableau schensted_p(const Word& w);

bool is_yamanouchi(const Tableau& t);

// ---------------------------------------------------------------------------
// Content rotation on rectangular tableaux
// ---------------------------------------------------------------------------

// promote = psi^{-1}: content (c_1,...,c_n) -> (c_2,...,c_n,c_1).
// Removes the 1s, takes the P-tableau of the rest, decrements, and refills
// the last row with the letter n.
Tableau promote(const Tableau& b, int n);

// psi = inverse of promote; psi has order n on rectangular tableaux.
Tableau psi(const Tableau& b, int n);

// psi^k for any integer k (negative allowed).
Tableau psi_power(const Tableau& b, int n, int k);

enum class RotateDir { Forward, Inverse };

// Forward = psi, Inverse = psi^{-1}.
Tableau psi_rotate(const Tableau& b, int n, RotateDir dir);

// Affine operators on rectangular tableaux: e_i/f_i for i in 0..n-1,
// with e_0 = psi^{-1} . e_1 . psi.
std::optional<Tableau> raise_affine(const Tableau& t, int n, int i);
std::optional<Tableau> lower_affine(const Tableau& t, int n, int i);

int eps_tableau(const Tableau& t, int n, int i);  // i in 0..n-1
int phi_tableau(const Tableau& t, int n, int i);

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

// All column-strict tableaux of the given shape over {1..n}; if content is
// nonempty, restrict to that exact content.
std::vector<Tableau> enumerate_cst(const Parts& shape, int n,
                                   const std::vector<int>& content = {});

// Crystal B^{rows,cols} over {1..n}, cached.
const std::vector<Tableau>& rect_crystal(const Rect& r, int n);

}  // namespace kostka
