#pragma once

#include <optional>

#include "kostka/tableau.hpp"

namespace kostka {

// (lambda; R)-configuration: partitions nu^(1), ..., nu^(n-1) with the size
// constraints |nu^(k)| = sum_{j>k} lambda_j - sum_a mu_a max(eta_a - k, 0).
struct Configuration {
  Partition lambda;
  RectSeq R;
  std::vector<Parts> nus;  // nus[k-1] = nu^(k), k = 1..n-1

  int rank() const { return lambda.rank(); }
  const Parts& nu(int k) const;  // k = 1..n-1; empty outside the range
  bool operator==(const Configuration& o) const {
    return lambda == o.lambda && R == o.R && nus == o.nus;
  }
  bool operator<(const Configuration& o) const;
};

// Widths of the rectangles in R of height k, as a partition.
Parts xi_partition(const RectSeq& R, int k);

// Vacancy number P_i^(k).
int vacancy(const Configuration& nu, int k, int i);

bool sizes_admissible(const Partition& lambda, const RectSeq& R);
int required_size(const Partition& lambda, const RectSeq& R, int k);
bool is_admissible(const Configuration& nu);

// All admissible configurations, optionally with nu^(k)_1 <= ell.
std::vector<Configuration> enumerate_configs(const Partition& lambda,
                                             const RectSeq& R,
                                             std::optional<int> level_cap = std::nullopt);

struct ChargeData {
  int cc = 0;     // cocharge of the configuration
  int c = 0;      // charge = ||R|| - cc - |P|
  int normR = 0;  // ||R||
  int absP = 0;   // |P|
};

ChargeData charges(const Configuration& nu);

// Rigged configuration: labels for the parts of each nu^(k), canonically
// sorted (parts weakly decreasing; labels descending within equal lengths).
struct RiggedConfig {
  Configuration config;
  std::vector<std::vector<std::pair<int, int>>> strings;  // (length, label)

  void canonicalize();
  void validate() const;  // 0 <= label <= vacancy for every string
  int label_sum() const;
  // Largest label among strings of length i in block k; 0 if none.
  int max_label(int k, int i) const;
  bool operator==(const RiggedConfig& o) const {
    return config == o.config && strings == o.strings;
  }
  bool operator<(const RiggedConfig& o) const;
};

std::vector<RiggedConfig> enumerate_riggings(const Configuration& nu);

// Complement every label: (i, x) -> (i, P_i^(k) - x).
RiggedConfig theta(const RiggedConfig& rc);

// Modified vacancy number P_i^(k)(nu, t) for a witness tableau t over
// CST(lambda'), where lambda' = (lambda_1-lambda_n, ..., lambda_{n-1}-lambda_n)^t.
int modified_vacancy(const Configuration& nu, const Tableau& t, int k, int i, int ell);

// Shape lambda' and its witness set CST(lambda') over {1..lambda_1-lambda_n}.
Parts level_witness_shape(const Partition& lambda);
std::vector<Tableau> level_witness_set(const Partition& lambda);

// Level restriction for rigged configurations; copies a witness when found.
bool is_level_restricted_rc(const RiggedConfig& rc, int ell,
                            Tableau* witness_out = nullptr,
                            const std::vector<Tableau>* witnesses = nullptr);

// Imposed minima M_i^(k)(t) for the skew experimental checker.
int minima_table(const Tableau& t, const Partition& rho, int k, int i);

QPoly kostka_via_rc(const Partition& lambda, const RectSeq& R,
                    std::optional<int> ell = std::nullopt, int threads = 1);
QPoly kostka_via_rc_ref(const Partition& lambda, const RectSeq& R,
                        std::optional<int> ell = std::nullopt);

}  // namespace kostka
