#include "kostka/rigged.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kostka {

const Parts& Configuration::nu(int k) const {
  static const Parts empty;
  if (k < 1 || k > static_cast<int>(nus.size())) return empty;
  return nus[static_cast<size_t>(k - 1)];
}

bool Configuration::operator<(const Configuration& o) const {
  if (!(lambda == o.lambda)) return lambda < o.lambda;
  if (R != o.R) return R < o.R;
  return nus < o.nus;
}

Parts xi_partition(const RectSeq& R, int k) {
  Parts xi;
  for (const Rect& r : R)
    if (r.rows == k) xi.push_back(r.cols);
  std::sort(xi.rbegin(), xi.rend());
  return xi;
}

int vacancy(const Configuration& nu, int k, int i) {
  if (i == 0) return 0;
  return column_counts(nu.nu(k - 1), i) - 2 * column_counts(nu.nu(k), i) +
         column_counts(nu.nu(k + 1), i) + column_counts(xi_partition(nu.R, k), i);
}

int required_size(const Partition& lambda, const RectSeq& R, int k) {
  int s = 0;
  for (int j = k + 1; j <= lambda.rank(); ++j) s += lambda[j - 1];
  for (const Rect& r : R) s -= r.cols * std::max(r.rows - k, 0);
  return s;
}

bool sizes_admissible(const Partition& lambda, const RectSeq& R) {
  if (lambda.size() != total_cells(R)) return false;
  for (int k = 1; k < lambda.rank(); ++k)
    if (required_size(lambda, R, k) < 0) return false;
  return true;
}

bool is_admissible(const Configuration& nu) {
  for (int k = 1; k < nu.rank(); ++k) {
    const Parts& p = nu.nu(k);
    int maxi = p.empty() ? 0 : p[0];
    for (int i = 1; i <= maxi; ++i)
      if (vacancy(nu, k, i) < 0) return false;
  }
  return true;
}

static std::vector<Parts> partitions_of(int total, int max_part) {
  std::vector<Parts> out;
  if (total == 0) {
    out.push_back({});
    return out;
  }
  if (max_part <= 0) return out;
  Parts cur;
  std::function<void(int, int)> rec = [&](int rem, int hi) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int v = std::min(rem, hi); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  rec(total, max_part);
  return out;
}

std::vector<Configuration> enumerate_configs(const Partition& lambda,
                                             const RectSeq& R,
                                             std::optional<int> level_cap) {
  if (lambda.size() != total_cells(R))
    throw SizeMismatch("enumerate_configs: |lambda| != |R|");
  int n = lambda.rank();
  std::vector<Configuration> out;
  std::vector<std::vector<Parts>> choices;
  for (int k = 1; k < n; ++k) {
    int sz = required_size(lambda, R, k);
    if (sz < 0) return out;
    int cap = level_cap ? *level_cap : sz;
    choices.push_back(partitions_of(sz, cap == 0 && sz == 0 ? 1 : cap));
    if (choices.back().empty() && sz > 0) return out;
  }
  Configuration cur;
  cur.lambda = lambda;
  cur.R = R;
  cur.nus.resize(static_cast<size_t>(n - 1));
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if (is_admissible(cur)) out.push_back(cur);
      return;
    }
    for (const Parts& p : choices[static_cast<size_t>(k - 1)]) {
      cur.nus[static_cast<size_t>(k - 1)] = p;
      rec(k + 1);
    }
  };
  if (n >= 1) rec(1);
  return out;
}

ChargeData charges(const Configuration& nu) {
  ChargeData out;
  out.normR = rect_pair_overlap(nu.R);
  int n = nu.rank();
  for (int k = 1; k < n; ++k) {
    const Parts& p = nu.nu(k);
    const Parts& pnext = nu.nu(k + 1);
    int maxi = p.empty() ? 0 : p[0];
    for (int i = 1; i <= maxi; ++i) {
      int a = 0, anext = 0;
      for (int part : p) a += (part >= i);
      for (int part : pnext) anext += (part >= i);
      out.cc += a * (a - anext);
    }
    for (int i = 1; i <= maxi; ++i) {
      int m = part_multiplicity(p, i);
      if (m > 0) out.absP += m * vacancy(nu, k, i);
    }
  }
  out.c = out.normR - out.cc - out.absP;
  return out;
}

void RiggedConfig::canonicalize() {
  for (auto& block : strings)
    std::sort(block.begin(), block.end(), [](auto& a, auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second > b.second;
    });
}

void RiggedConfig::validate() const {
  if (strings.size() != config.nus.size())
    throw Error("RiggedConfig: block count mismatch");
  for (int k = 1; k <= static_cast<int>(strings.size()); ++k) {
    Parts lens;
    for (auto& [len, label] : strings[static_cast<size_t>(k - 1)]) {
      lens.push_back(len);
      if (label < 0 || label > vacancy(config, k, len))
        throw Error("RiggedConfig: label out of range");
    }
    Parts want = config.nu(k);
    std::sort(lens.rbegin(), lens.rend());
    if (lens != want) throw Error("RiggedConfig: string lengths != nu");
  }
}

int RiggedConfig::label_sum() const {
  int s = 0;
  for (auto& block : strings)
    for (auto& [len, label] : block) s += label;
  return s;
}

int RiggedConfig::max_label(int k, int i) const {
  int best = 0;
  if (k < 1 || k > static_cast<int>(strings.size())) return 0;
  for (auto& [len, label] : strings[static_cast<size_t>(k - 1)])
    if (len == i) best = std::max(best, label);
  return best;
}

bool RiggedConfig::operator<(const RiggedConfig& o) const {
  if (!(config == o.config)) return config < o.config;
  return strings < o.strings;
}

std::vector<RiggedConfig> enumerate_riggings(const Configuration& nu) {
  int n = nu.rank();
  // distinct (k, i) groups with multiplicities and vacancy bounds
  struct Group {
    int k, i, mult, bound;
  };
  std::vector<Group> groups;
  for (int k = 1; k < n; ++k) {
    const Parts& p = nu.nu(k);
    int maxi = p.empty() ? 0 : p[0];
    for (int i = 1; i <= maxi; ++i) {
      int m = part_multiplicity(p, i);
      if (m > 0) groups.push_back({k, i, m, vacancy(nu, k, i)});
    }
  }
  std::vector<std::vector<Parts>> group_choices;
  for (auto& g : groups) {
    if (g.bound < 0) return {};
    group_choices.push_back(partitions_in_box(g.mult, g.bound));
  }
  std::vector<RiggedConfig> out;
  RiggedConfig cur;
  cur.config = nu;
  cur.strings.resize(static_cast<size_t>(std::max(n - 1, 0)));
  std::function<void(size_t)> rec = [&](size_t gi) {
    if (gi == groups.size()) {
      RiggedConfig rc = cur;
      rc.canonicalize();
      out.push_back(std::move(rc));
      return;
    }
    const Group& g = groups[gi];
    for (const Parts& labels : group_choices[gi]) {
      auto& block = cur.strings[static_cast<size_t>(g.k - 1)];
      size_t before = block.size();
      for (int m = 0; m < g.mult; ++m) {
        int lab = m < static_cast<int>(labels.size()) ? labels[static_cast<size_t>(m)] : 0;
        block.emplace_back(g.i, lab);
      }
      rec(gi + 1);
      block.resize(before);
    }
  };
  rec(0);
  return out;
}

RiggedConfig theta(const RiggedConfig& rc) {
  RiggedConfig out = rc;
  for (int k = 1; k <= static_cast<int>(out.strings.size()); ++k)
    for (auto& [len, label] : out.strings[static_cast<size_t>(k - 1)])
      label = vacancy(rc.config, k, len) - label;
  out.canonicalize();
  return out;
}

Parts level_witness_shape(const Partition& lambda) {
  int n = lambda.rank();
  Parts diffs;
  for (int i = 1; i < n; ++i) diffs.push_back(lambda[i - 1] - lambda[n - 1]);
  while (!diffs.empty() && diffs.back() == 0) diffs.pop_back();
  return transpose(diffs);
}

std::vector<Tableau> level_witness_set(const Partition& lambda) {
  int n = lambda.rank();
  int alphabet = lambda[0] - lambda[n - 1];
  return enumerate_cst(level_witness_shape(lambda), alphabet);
}

int modified_vacancy(const Configuration& nu, const Tableau& t, int k, int i,
                     int ell) {
  const Partition& lambda = nu.lambda;
  int n = lambda.rank();
  int ltilde = ell - (lambda[0] - lambda[n - 1]);
  if (ltilde < 0) throw LevelTooSmall("modified_vacancy: ell < lambda_1 - lambda_n");
  Parts shape = level_witness_shape(lambda);
  if (t.shape() != shape || !t.is_column_strict())
    throw BadWitness("modified_vacancy: witness has wrong shape");
  for (auto& row : t.rows)
    for (int x : row)
      if (x < 1 || x > lambda[0] - lambda[n - 1])
        throw BadWitness("modified_vacancy: witness letter out of range");
  int p = vacancy(nu, k, i);
  // t_{j,k}: entry in row j, column k of t; column k of t has length
  // lambda_k - lambda_n.
  auto col_entry = [&](int j, int col) {
    return t.rows[static_cast<size_t>(j - 1)][static_cast<size_t>(col - 1)];
  };
  if (k <= n - 1)
    for (int j = 1; j <= lambda[k - 1] - lambda[n - 1]; ++j)
      p -= (i >= ltilde + col_entry(j, k)) ? 1 : 0;
  if (k + 1 <= n - 1)
    for (int j = 1; j <= lambda[k] - lambda[n - 1]; ++j)
      p += (i >= ltilde + col_entry(j, k + 1)) ? 1 : 0;
  else if (k + 1 == n) {
    // lambda_{k+1} - lambda_n = 0: empty sum
  }
  return p;
}

bool is_level_restricted_rc(const RiggedConfig& rc, int ell,
                            Tableau* witness_out,
                            const std::vector<Tableau>* witnesses) {
  const Configuration& nu = rc.config;
  const Partition& lambda = nu.lambda;
  int n = lambda.rank();
  if (lambda[0] - lambda[n - 1] > ell) return false;  // LevelTooSmall case
  for (int k = 1; k < n; ++k) {
    const Parts& p = nu.nu(k);
    if (!p.empty() && p[0] > ell) return false;
  }
  std::vector<Tableau> local;
  if (!witnesses) {
    local = level_witness_set(lambda);
    witnesses = &local;
  }
  for (const Tableau& t : *witnesses) {
    bool ok = true;
    for (int k = 1; k < n && ok; ++k)
      for (int i = 1; i <= ell && ok; ++i) {
        int bound = modified_vacancy(nu, t, k, i, ell);
        if (bound < 0 || rc.max_label(k, i) > bound) ok = false;
      }
    if (ok) {
      if (witness_out) *witness_out = t;
      return true;
    }
  }
  return false;
}

int minima_table(const Tableau& t, const Partition& rho, int k, int i) {
  int n = rho.rank();
  Parts diffs;
  for (int a = 1; a < n; ++a) diffs.push_back(rho[a - 1] - rho[n - 1]);
  while (!diffs.empty() && diffs.back() == 0) diffs.pop_back();
  Parts shape = transpose(diffs);
  if (t.shape() != shape) throw BadWitness("minima_table: witness shape mismatch");
  int width = rho[0] - rho[n - 1];
  auto col_entry = [&](int j, int col) {
    return t.rows[static_cast<size_t>(j - 1)][static_cast<size_t>(col - 1)];
  };
  int m = 0;
  if (k <= n - 1)
    for (int j = 1; j <= rho[k - 1] - rho[n - 1]; ++j)
      m += (i <= width - col_entry(j, k)) ? 1 : 0;
  if (k + 1 <= n - 1)
    for (int j = 1; j <= rho[k] - rho[n - 1]; ++j)
      m -= (i <= width - col_entry(j, k + 1)) ? 1 : 0;
  return m;
}

QPoly kostka_via_rc_ref(const Partition& lambda, const RectSeq& R,
                        std::optional<int> ell) {
  if (lambda.size() != total_cells(R))
    throw SizeMismatch("kostka_via_rc: |lambda| != |R|");
  QPoly out;
  std::vector<Tableau> witnesses;
  if (ell) witnesses = level_witness_set(lambda);
  for (const Configuration& nu : enumerate_configs(lambda, R, ell)) {
    ChargeData cd = charges(nu);
    for (const RiggedConfig& rc : enumerate_riggings(nu)) {
      if (ell && !is_level_restricted_rc(rc, *ell, nullptr, &witnesses)) continue;
      out.add_term(cd.c + rc.label_sum(), 1);
    }
  }
  return out;
}

QPoly kostka_via_rc(const Partition& lambda, const RectSeq& R,
                    std::optional<int> ell, int threads) {
  if (threads <= 1) return kostka_via_rc_ref(lambda, R, ell);
  if (lambda.size() != total_cells(R))
    throw SizeMismatch("kostka_via_rc: |lambda| != |R|");
  std::vector<Configuration> configs = enumerate_configs(lambda, R, ell);
  std::vector<Tableau> witnesses;
  if (ell) witnesses = level_witness_set(lambda);
  QPoly out;
#ifdef _OPENMP
  int m = static_cast<int>(configs.size());
#pragma omp parallel num_threads(threads)
  {
    QPoly local;
#pragma omp for schedule(dynamic)
    for (int idx = 0; idx < m; ++idx) {
      const Configuration& nu = configs[static_cast<size_t>(idx)];
      ChargeData cd = charges(nu);
      for (const RiggedConfig& rc : enumerate_riggings(nu)) {
        if (ell && !is_level_restricted_rc(rc, *ell, nullptr, &witnesses)) continue;
        local.add_term(cd.c + rc.label_sum(), 1);
      }
    }
#pragma omp critical
    out += local;
  }
  return out;
#else
  return kostka_via_rc_ref(lambda, R, ell);
#endif
}

}  // namespace kostka
