#pragma once

#include "kostka/fermionic.hpp"
#include "kostka/path.hpp"

namespace kostka {

// Dominant classical-affine weight sum z_0 L_0 + ... + z_{n-1} L_{n-1}.
struct ClWeight {
  std::vector<int> z;

  int n() const { return static_cast<int>(z.size()); }
  int level() const { return std::accumulate(z.begin(), z.end(), 0); }
  int pairing(int i) const { return z[static_cast<size_t>(((i % n()) + n()) % n())]; }
  bool operator==(const ClWeight& o) const { return z == o.z; }
};

// eps(b) and phi(b) as weights (coefficients of Lambda_0..Lambda_{n-1}).
ClWeight eps_weight(const Tableau& b, int n);
ClWeight phi_weight(const Tableau& b, int n);

enum class MinSide { Phi, Eps };

// The unique element b of B^{k,ell} with phi(b) = Lam (resp. eps(b) = Lam);
// verified a posteriori against the direct weight computation.
Tableau min_element(const ClWeight& Lam, int k, int ell, MinSide side);

// sigma = psi^{-k} on B^{k,ell}; satisfies phi(sigma(b)) = eps(b).
Tableau sigma_map(const Tableau& b, int n);

// First N steps of the ground state path for (Lam, B^{k,ell}); the j-th step
// (1-based, leftmost first) is sigma^{j-1}(b(Lam)).  Stored path factors are
// rightmost-first as usual.
Path ground_state_path(const ClWeight& Lam, int k, int N);

// Local isomorphism instance check: sigma(x (x) b) == psi^k(b) (x) y for
// x, y the eps-minimal elements of B^{k,ell} for Lam, LamPrime.
bool check_theorem_iso(const ClWeight& Lam, const ClWeight& LamPrime, int k,
                       int ell, const Tableau& b);

// Closed-form normalized ground energy E(y' (x) p').
long long ground_energy_closed(long long energy_yprime, long long cells_yprime,
                               int k, int M, int n, int ellprime);

// Direct evaluation of E(y' (x) p') with p' the first n*M ground-state steps
// of the level-ellprime vacuum for B^{k,ellprime}.
long long ground_energy_direct(const Path& yprime, int k, int M, int ellprime);

struct BranchingOptions {
  int perfect_rows = 1;  // k of the perfect crystal B^{k,ell'}
  int m_cap = 4;         // largest M tried for the Kostka limit
  int threads = 1;
};

// Diagnostics shared by the two branching pipelines.
struct BranchingDiagnostics {
  bool selection_rule_ok = true;  // |lambda| = rs (mod n) solvable
  int stabilized_at = 0;          // M at which the limit stabilized
  std::vector<int> lambda_choice; // partition used by the fermionic form
};

// Branching function as the normalized limit of level-restricted Kostka
// polynomials (Eq. of the truncated M-approximants).
QSeries branching_series(const ClWeight& Lam, int r, int s, int ellprime,
                         int elldoubleprime, long long truncation_degree,
                         const BranchingOptions& opt = {},
                         BranchingDiagnostics* diag = nullptr);

// Branching function from the fermionic lattice sum.
QSeries branching_fermionic(const ClWeight& Lam, int r, int s, int ellprime,
                            long long truncation_degree,
                            BranchingDiagnostics* diag = nullptr);

// Finite N approximation of the branching series directly from restricted
// tensor powers of B^{k,ell'} (test oracle for the limit formula).
QPoly branch_limit_approximant(const ClWeight& Lam, const ClWeight& LamPrime,
                               const ClWeight& LamDoublePrime, int k, int N);

}  // namespace kostka
