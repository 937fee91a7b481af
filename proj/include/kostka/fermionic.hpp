#pragma once

#include "kostka/rigged.hpp"

namespace kostka {

// Vector indexed by (i, a) with i = 1..ell-1, a = 1..n-1, flattened as
// (i-1)*(n-1) + (a-1); entries exact rationals where needed.
struct MNSystem {
  int ell = 0;
  int n = 0;

  int dim() const { return (ell - 1) * (n - 1); }
  int idx(int i, int a) const { return (i - 1) * (n - 1) + (a - 1); }

  // Number of rectangles of shape (i^a) for i = 1..ell, a = 1..n.
  std::vector<std::vector<int>> L;

  static MNSystem build(const Partition& lambda, const RectSeq& R, int ell);
};

// Witness correction f_i^(a)(t) = P_i^(a)(nu, t) - P_i^(a)(nu) (nu-free).
std::vector<int> witness_correction(const Partition& lambda, int ell,
                                    const Tableau& t);

// Minimum of the corrections over a nonempty subset of witnesses.
std::vector<int> subset_correction(const Partition& lambda, int ell,
                                   const std::vector<Tableau>& witnesses,
                                   unsigned mask);

// u(S): second difference of f(S) with the boundary f_ell^(a) = -(lambda_a -
// lambda_{a+1}); both the direct form and the Cartan-matrix form are exposed
// so tests can compare them.
std::vector<int> u_vector_direct(const Partition& lambda, int ell,
                                 const std::vector<int>& f);
std::vector<int> u_vector_cartan(const Partition& lambda, int ell,
                                 const std::vector<int>& f);

// Exact inverse Cartan entry of type A_{size}: min(i,j) - i*j/(size+1).
Rat cartan_inverse_entry(int size, int i, int j);

// Constant charge offset g(R, lambda) of the (m,n)-system charge formula.
Rat g_offset(const Partition& lambda, const RectSeq& R, int ell);

// Unrestricted fermionic (quasi-particle) form.
QPoly fermionic_kostka(const Partition& lambda, const RectSeq& R);

// Level-restricted inclusion-exclusion fermionic form.
QPoly fermionic_level_kostka(const Partition& lambda, const RectSeq& R, int ell);

// (m,n)-system reformulation; prune_negative_nl drops lattice points whose
// derived multiplicity of length-ell parts would be negative.
QPoly kostka_level_mn(const Partition& lambda, const RectSeq& R, int ell,
                      bool prune_negative_nl = true);

// Weyl-alternating (bosonic) form.
QPoly kostka_level_weyl(const Partition& lambda, const RectSeq& R, int ell,
                        int threads = 1);

// Precondition helper: lambda and all rectangles restricted of level ell.
void require_level_restricted_data(const Partition& lambda, const RectSeq& R,
                                   int ell);

}  // namespace kostka
