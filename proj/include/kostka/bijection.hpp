#pragma once

#include "kostka/lr.hpp"
#include "kostka/rigged.hpp"

namespace kostka {

// Singular-string selections of one box-removal step.
struct BijectionTrace {
  int row = 0;                 // row index r of the removed/added box
  std::vector<int> selected;   // s^(k) resp. l^(k) per block, weakly increasing
};

// Box-addition step on rigged configurations for single-row R: the target
// context has one more box in row r and content ending with width mu_last.
RiggedConfig delta_inv(const RiggedConfig& rc, int r, int mu_last,
                       BijectionTrace* trace = nullptr);

// Box-removal step; returns the row index the removed box came from.
std::pair<RiggedConfig, int> delta(const RiggedConfig& rc,
                                   BijectionTrace* trace = nullptr);

// Quantum-number bijection for single-row R, from a column-strict tableau
// with content mu (letters 1..L, letter j appearing mu_j times).
RiggedConfig tableau_to_rc_rows(const LRTableau& T, int n);
LRTableau rc_to_tableau_rows(const RiggedConfig& rc);

enum class PadDir { Add, Remove };

// String padding between RC(lambda; R) and RC(lambda; r(R)): per rectangle
// with k rows and m columns, block j gains (loses) k-j strings (m, 0).
RiggedConfig pad_strings(const RiggedConfig& rc, const RectSeq& R, PadDir dir);

// Full bijection for arbitrary rectangle sequences.
RiggedConfig tableau_to_rc(const LRTableau& T, int n);
LRTableau rc_to_tableau(const RiggedConfig& rc);

}  // namespace kostka
