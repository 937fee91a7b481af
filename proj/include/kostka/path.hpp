#pragma once

#include <functional>
#include <optional>

#include "kostka/tableau.hpp"

namespace kostka {

// Tensor product of rectangular tableaux b_L (x) ... (x) b_1.
// factors[0] = b_1 is the rightmost tensor factor; shapes[j] = shape of
// factors[j].  word(path) = word(b_L) ... word(b_1).
struct Path {
  int n = 0;
  RectSeq shapes;               // R_1, ..., R_L
  std::vector<Tableau> factors; // factors[j-1] has shape R_j

  int length() const { return static_cast<int>(factors.size()); }
  void validate() const;
  std::vector<int> content() const;

  bool operator==(const Path& o) const {
    return n == o.n && shapes == o.shapes && factors == o.factors;
  }
  bool operator<(const Path& o) const;
};

Word path_word(const Path& p);

// e_i / f_i on paths for i in 0..n-1 (i = 0 via factorwise psi conjugation).
std::optional<Path> raise_path(const Path& p, int i);
std::optional<Path> lower_path(const Path& p, int i);

int eps_path(const Path& p, int i);
int phi_path(const Path& p, int i);
int eps0_path(const Path& p);

// The unique affine crystal isomorphism exchanging tensor factors at
// positions pos and pos+1 (1-based from the right).
Path local_iso(const Path& p, int pos);

// Local energy of a two-factor product left (x) right, normalized so the
// value at a pair of highest weight vectors is the cell overlap of the
// two rectangles.
int local_energy(const Tableau& left, const Tableau& right, int n);

// Total energy: pairwise local energies transported through local
// isomorphisms; uses the weighted single sum when all rectangles agree.
int energy(const Path& p);

// Every final subword has weakly decreasing letter counts.
bool is_reverse_lattice_word(const Word& w, int n);

bool is_classically_restricted(const Path& p);
bool is_level_restricted(const Path& p, int ell);

// Iterate all paths in P_R over {1..n} whose content is bounded by the
// given cap (exact match enforced by the caller); visitor returns nothing.
void for_each_path(int n, const RectSeq& R, const std::vector<int>& content_cap,
                   const std::function<void(const Path&)>& visit);

// Generating function sum of q^{E(b)} over classically restricted
// (resp. level-restricted) paths of weight lambda.
QPoly kostka_via_paths(const Partition& lambda, const RectSeq& R,
                       std::optional<int> ell = std::nullopt, int threads = 1);

// Serial reference implementation kept for testing the OpenMP kernel.
QPoly kostka_via_paths_ref(const Partition& lambda, const RectSeq& R,
                           std::optional<int> ell = std::nullopt);

// Energy generating functions of all of P_R bucketed by exact content.
std::map<std::vector<int>, QPoly> path_energy_by_content(int n, const RectSeq& R,
                                                         int threads = 1);

}  // namespace kostka
