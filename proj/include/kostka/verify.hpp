#pragma once

#include <string>

#include "kostka/bijection.hpp"
#include "kostka/branching.hpp"

namespace kostka {

struct CheckReport {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    checks++;
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
  void merge(const CheckReport& o) {
    ok = ok && o.ok;
    checks += o.checks;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

// Bijectivity, charge preservation and (optionally) level-restriction
// preservation of the quantum-number bijection on one (lambda; R) instance.
CheckReport verify_bijection_instance(const Partition& lambda, const RectSeq& R,
                                      std::optional<int> ell = std::nullopt);

// All level-restricted rigged configurations with imposed minima for a
// fixed subshape rho (the experimental skew variant).
std::vector<RiggedConfig> enumerate_rc_skew(const Partition& lambda,
                                            const Partition& rho,
                                            const RectSeq& R, int ell);

// Tableaux in RLR^ell(lambda, rho; R): frozen subtableau of shape rho.
std::vector<LRTableau> enumerate_rlr_skew(const Partition& lambda,
                                          const Partition& rho,
                                          const RectSeq& R, int ell);

// Experimental conjecture scan; failures are reported, never fatal.
CheckReport conjecture_skew_scan(int n, int max_size, int ell_max,
                                 int max_rect_side = 2);

// Rectangle-sequence menu (multisets over {1x1,1x2,2x1,2x2}) of a given
// total size.
std::vector<RectSeq> rect_menu(int total, int max_side = 2);

// All partitions of the given size with at most n parts, rank n.
std::vector<Partition> partitions_of_rank(int size, int n);

}  // namespace kostka
