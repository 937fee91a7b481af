#pragma once

#include "kostka/path.hpp"

namespace kostka {

enum class Family { LR, CLR, RLR };

// Littlewood-Richardson tableau: a tableau over the union alphabet of the
// family's intervals whose alphabet restrictions insert to the family's key
// tableaux.
struct LRTableau {
  Tableau tab;
  RectSeq R;
  Family fam = Family::LR;

  bool operator==(const LRTableau& o) const {
    return tab == o.tab && R == o.R && fam == o.fam;
  }
  bool operator<(const LRTableau& o) const;
};

// Interval alphabets: for LR the j-th interval has size eta_j, for CLR/RLR
// size eta_j * mu_j.  Returned as (lo, hi) pairs, 1-based.
std::vector<std::pair<int, int>> family_alphabets(const RectSeq& R, Family fam);

// Key tableaux Y_j / ZC_j / ZR_j.
std::vector<Tableau> family_keys(const RectSeq& R, Family fam);

bool is_lr_member(const Tableau& t, const RectSeq& R, Family fam);

std::vector<LRTableau> enumerate_lr(const Partition& lambda, const RectSeq& R,
                                    Family fam);

// Relabeling bijections.
LRTableau relabel_std(const LRTableau& q);        // LR  -> RLR
LRTableau relabel_std_inv(const LRTableau& q);    // RLR -> LR
LRTableau relabel_gamma(const LRTableau& q);      // CLR -> RLR
LRTableau relabel_gamma_inv(const LRTableau& q);  // RLR -> CLR
LRTableau relabel_beta(const LRTableau& q);       // LR  -> CLR
LRTableau relabel_tr(const LRTableau& q);         // RLR -> CLR(lambda^t; R^t)
LRTableau relabel_tr_lr(const LRTableau& q);      // CLR -> CLR(lambda^t; R^t)

// Column-insertion RSK on paths: P records letters, Q records by the key
// tableau letters; Q is an LR tableau for R.
std::pair<Tableau, LRTableau> rsk(const Path& p);
Path rsk_inverse(const Tableau& P, const LRTableau& Q, int n);

// Number of cells strictly to the right of the max(mu_1, mu_2)-th column.
int d_statistic(const Tableau& t, const Rect& r1, const Rect& r2);

// The generalized automorphism of conjugation s_p on LR tableaux.
LRTableau automorphism_sp(const LRTableau& q, int pos);

enum class ChargeMethod { ViaBijection, ViaAverage };

// Generalized charge of an LR-family tableau.
int charge(const LRTableau& q, ChargeMethod method);

// Embedding into the single-row sequence r(R): the result is an LR tableau
// over r(R), i.e. a column-strict tableau with content the row widths.
LRTableau embed_to_rows(const LRTableau& q);
Path embed_to_rows(const Path& p);

// Step sequence realizing the embedding: pos >= 1 means s_pos, 0 means
// split the first rectangle's top row off.
std::vector<int> embed_steps(const RectSeq& R);

// Inverse of embed_to_rows: rows_q must be an LR tableau over split_rows(R).
LRTableau unembed_from_rows(const LRTableau& rows_q, const RectSeq& R);

// Splitting of R into its constituent rows.
RectSeq split_rows(const RectSeq& R);

// Level restriction via the embedded column-strict chain condition;
// n is the rank of the ambient shape (trailing zero parts included).
bool is_level_restricted_lr(const LRTableau& q, int ell, int n);

// Shape chain test for a column-strict tableau with letters 1..L:
// lambda^{(j)}_1 - lambda^{(j-1)}_n <= ell for all j.
bool cst_level_restricted(const Tableau& t, int n, int ell);

}  // namespace kostka
