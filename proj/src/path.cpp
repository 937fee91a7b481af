#include "kostka/path.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kostka/lr.hpp"

namespace kostka {

void Path::validate() const {
  if (shapes.size() != factors.size()) throw Error("Path: shape/factor mismatch");
  for (size_t j = 0; j < factors.size(); ++j) {
    Rect r = factors[j].rect();
    if (!(r == shapes[j])) throw Error("Path: factor shape mismatch");
    if (!factors[j].is_column_strict()) throw Error("Path: factor not column-strict");
  }
}

std::vector<int> Path::content() const {
  std::vector<int> c(static_cast<size_t>(n), 0);
  for (auto& f : factors)
    for (auto& row : f.rows)
      for (int x : row) c[static_cast<size_t>(x - 1)]++;
  return c;
}

bool Path::operator<(const Path& o) const {
  if (n != o.n) return n < o.n;
  if (shapes != o.shapes) return shapes < o.shapes;
  return factors < o.factors;
}

Word path_word(const Path& p) {
  Word w;
  for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it) {
    Word fw = reading_word(*it);
    w.insert(w.end(), fw.begin(), fw.end());
  }
  return w;
}

// word position -> (factor index, row, col)
struct PathCell {
  int factor, row, col;
};

static std::vector<PathCell> path_word_cells(const Path& p) {
  std::vector<PathCell> cells;
  for (int j = p.length() - 1; j >= 0; --j) {
    const Tableau& f = p.factors[static_cast<size_t>(j)];
    for (int r = f.num_rows() - 1; r >= 0; --r)
      for (size_t c = 0; c < f.rows[static_cast<size_t>(r)].size(); ++c)
        cells.push_back({j, r, static_cast<int>(c)});
  }
  return cells;
}

static std::optional<Path> apply_path_op(const Path& p, int i, bool raise) {
  Word w = path_word(p);
  auto pos = raise ? raise_position(w, i) : lower_position(w, i);
  if (!pos) return std::nullopt;
  Path out = p;
  PathCell cell = path_word_cells(p)[*pos];
  out.factors[static_cast<size_t>(cell.factor)]
      .rows[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.col)] =
      raise ? i : i + 1;
  if (!out.factors[static_cast<size_t>(cell.factor)].is_column_strict())
    throw InternalInconsistency("path crystal operator broke a factor");
  return out;
}

static Path psi_path(const Path& p, int k) {
  Path out = p;
  for (auto& f : out.factors) f = psi_power(f, p.n, k);
  return out;
}

std::optional<Path> raise_path(const Path& p, int i) {
  if (i == 0) {
    auto r = apply_path_op(psi_path(p, 1), 1, true);
    if (!r) return std::nullopt;
    return psi_path(*r, -1);
  }
  return apply_path_op(p, i, true);
}

std::optional<Path> lower_path(const Path& p, int i) {
  if (i == 0) {
    auto r = apply_path_op(psi_path(p, 1), 1, false);
    if (!r) return std::nullopt;
    return psi_path(*r, -1);
  }
  return apply_path_op(p, i, false);
}

int eps_path(const Path& p, int i) {
  if (i == 0) return eps0_path(p);
  return eps_word(path_word(p), i);
}

int phi_path(const Path& p, int i) {
  if (i == 0) return phi_word(path_word(psi_path(p, 1)), 1);
  return phi_word(path_word(p), i);
}

int eps0_path(const Path& p) { return eps_word(path_word(psi_path(p, 1)), 1); }

Path local_iso(const Path& p, int pos) {
  if (pos < 1 || pos >= p.length()) throw Error("local_iso: position out of range");
  size_t ir = static_cast<size_t>(pos - 1);  // right factor (position pos)
  size_t il = static_cast<size_t>(pos);      // left factor  (position pos+1)
  if (p.shapes[ir] == p.shapes[il]) return p;

  Path pair;
  pair.n = p.n;
  pair.shapes = {p.shapes[ir], p.shapes[il]};
  pair.factors = {p.factors[ir], p.factors[il]};
  auto [P, Q] = rsk(pair);

  RectSeq swapped = {p.shapes[il], p.shapes[ir]};
  Partition rho(P.shape(), std::max(p.n, P.num_rows()));
  std::vector<LRTableau> cand = enumerate_lr(rho, swapped, Family::LR);
  if (cand.size() != 1)
    throw InternalInconsistency("local_iso: swapped LR set is not a singleton");
  Path img = rsk_inverse(P, cand[0], p.n);

  Path out = p;
  out.shapes[ir] = swapped[0];
  out.shapes[il] = swapped[1];
  out.factors[ir] = img.factors[0];
  out.factors[il] = img.factors[1];
  return out;
}

int local_energy(const Tableau& left, const Tableau& right, int n) {
  Path pair;
  pair.n = n;
  pair.shapes = {right.rect(), left.rect()};
  pair.factors = {right, left};
  auto [P, Q] = rsk(pair);
  return d_statistic(Q.tab, pair.shapes[0], pair.shapes[1]);
}

int energy(const Path& p) {
  int L = p.length();
  if (L <= 1) return 0;
  bool homogeneous = true;
  for (int j = 1; j < L; ++j)
    if (!(p.shapes[static_cast<size_t>(j)] == p.shapes[0])) homogeneous = false;
  int total = 0;
  if (homogeneous) {
    for (int i = 1; i <= L - 1; ++i)
      total += (L - i) * local_energy(p.factors[static_cast<size_t>(i)],
                                      p.factors[static_cast<size_t>(i - 1)], p.n);
    return total;
  }
  for (int j = 2; j <= L; ++j) {
    Path s = p;  // s holds sigma_{i+1} ... sigma_{j-1}(p) as i decreases
    for (int i = j - 1; i >= 1; --i) {
      if (i < j - 1) s = local_iso(s, i + 1);
      total += local_energy(s.factors[static_cast<size_t>(i)],
                            s.factors[static_cast<size_t>(i - 1)], p.n);
    }
  }
  return total;
}

bool is_reverse_lattice_word(const Word& w, int n) {
  std::vector<int> count(static_cast<size_t>(n), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    count[static_cast<size_t>(*it - 1)]++;
    if (*it > 1 && count[static_cast<size_t>(*it - 1)] > count[static_cast<size_t>(*it - 2)])
      return false;
  }
  return true;
}

bool is_classically_restricted(const Path& p) {
  int n = p.n;
  // eps route: one forward pass maintaining the open-bracket count of every
  // classical index (letter x opens index x-1 and closes index x).
  thread_local std::vector<int> opens, count;
  opens.assign(static_cast<size_t>(n), 0);
  bool by_eps = true;
  for (int j = p.length() - 1; j >= 0; --j) {
    const Tableau& f = p.factors[static_cast<size_t>(j)];
    for (int r = f.num_rows() - 1; r >= 0; --r)
      for (int x : f.rows[static_cast<size_t>(r)]) {
        if (x >= 2) opens[static_cast<size_t>(x - 2)]++;
        if (x <= n - 1 && opens[static_cast<size_t>(x - 1)] > 0)
          opens[static_cast<size_t>(x - 1)]--;
      }
  }
  for (int i = 1; i < n; ++i)
    if (opens[static_cast<size_t>(i - 1)] != 0) by_eps = false;
  // lattice route: every final subword has weakly decreasing letter counts.
  count.assign(static_cast<size_t>(n), 0);
  bool by_lattice = true;
  for (size_t j = 0; j < p.factors.size() && by_lattice; ++j) {
    const Tableau& f = p.factors[j];
    for (int r = 0; r < f.num_rows() && by_lattice; ++r) {
      const auto& row = f.rows[static_cast<size_t>(r)];
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        count[static_cast<size_t>(*it - 1)]++;
        if (*it > 1 &&
            count[static_cast<size_t>(*it - 1)] > count[static_cast<size_t>(*it - 2)]) {
          by_lattice = false;
          break;
        }
      }
    }
  }
  if (by_eps && !by_lattice)
    throw InternalInconsistency("classical restriction criteria disagree");
  if (!by_eps && by_lattice)
    throw InternalInconsistency("classical restriction criteria disagree");
  return by_eps;
}

bool is_level_restricted(const Path& p, int ell) {
  return is_classically_restricted(p) && eps0_path(p) <= ell;
}

struct FactorSet {
  const std::vector<Tableau>* tabs = nullptr;
  std::vector<std::vector<int>> contents;  // cached per tableau
};

using CrystalSets = std::vector<FactorSet>;

static CrystalSets crystal_sets(int n, const RectSeq& R) {
  CrystalSets sets;
  for (const Rect& r : R) {
    FactorSet fs;
    fs.tabs = &rect_crystal(r, n);
    for (const Tableau& t : *fs.tabs) fs.contents.push_back(t.content(n));
    sets.push_back(std::move(fs));
  }
  return sets;
}

static void product_rec(int n, const CrystalSets& sets,
                        const std::vector<int>& cap, Path& cur,
                        std::vector<int>& have, int j,
                        const std::function<void(const Path&)>& visit) {
  if (j < 0) {
    visit(cur);
    return;
  }
  const FactorSet& fs = sets[static_cast<size_t>(j)];
  for (size_t idx = 0; idx < fs.tabs->size(); ++idx) {
    const std::vector<int>& c = fs.contents[idx];
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      have[static_cast<size_t>(a)] += c[static_cast<size_t>(a)];
      if (!cap.empty() && have[static_cast<size_t>(a)] > cap[static_cast<size_t>(a)])
        ok = false;
    }
    if (ok) {
      cur.factors[static_cast<size_t>(j)] = (*fs.tabs)[idx];
      product_rec(n, sets, cap, cur, have, j - 1, visit);
    }
    for (int a = 0; a < n; ++a) have[static_cast<size_t>(a)] -= c[static_cast<size_t>(a)];
  }
}

void for_each_path(int n, const RectSeq& R, const std::vector<int>& content_cap,
                   const std::function<void(const Path&)>& visit) {
  Path cur;
  cur.n = n;
  cur.shapes = R;
  cur.factors.resize(R.size());
  std::vector<int> have(static_cast<size_t>(n), 0);
  CrystalSets sets = crystal_sets(n, R);
  product_rec(n, sets, content_cap, cur, have, static_cast<int>(R.size()) - 1,
              visit);
}

// Tasks for the parallel kernels: assignments of the outermost one or two
// factors, so the dynamic schedule has enough pieces to balance.
struct OuterTask {
  size_t a = 0, b = 0;
};

static std::vector<OuterTask> outer_tasks(const CrystalSets& sets) {
  std::vector<OuterTask> tasks;
  size_t L = sets.size();
  if (L == 0) return tasks;
  size_t na = sets[L - 1].tabs->size();
  if (L == 1) {
    for (size_t a = 0; a < na; ++a) tasks.push_back({a, 0});
  } else {
    size_t nb = sets[L - 2].tabs->size();
    for (size_t a = 0; a < na; ++a)
      for (size_t b = 0; b < nb; ++b) tasks.push_back({a, b});
  }
  return tasks;
}

// Runs the product enumeration for one outer task; returns false if the
// content cap already fails on the fixed factors.
static void run_outer_task(int n, const CrystalSets& sets,
                           const std::vector<int>& cap, const RectSeq& R,
                           const OuterTask& task,
                           const std::function<void(const Path&)>& visit) {
  size_t L = sets.size();
  Path cur;
  cur.n = n;
  cur.shapes = R;
  cur.factors.resize(L);
  std::vector<int> have(static_cast<size_t>(n), 0);
  auto add = [&](const Tableau& t) {
    std::vector<int> c = t.content(n);
    for (int a = 0; a < n; ++a) have[static_cast<size_t>(a)] += c[static_cast<size_t>(a)];
  };
  cur.factors[L - 1] = (*sets[L - 1].tabs)[task.a];
  add(cur.factors[L - 1]);
  int next = static_cast<int>(L) - 2;
  if (L >= 2) {
    cur.factors[L - 2] = (*sets[L - 2].tabs)[task.b];
    add(cur.factors[L - 2]);
    next = static_cast<int>(L) - 3;
  }
  if (!cap.empty())
    for (int a = 0; a < n; ++a)
      if (have[static_cast<size_t>(a)] > cap[static_cast<size_t>(a)]) return;
  product_rec(n, sets, cap, cur, have, next, visit);
}

QPoly kostka_via_paths_ref(const Partition& lambda, const RectSeq& R,
                           std::optional<int> ell) {
  if (lambda.size() != total_cells(R))
    throw SizeMismatch("kostka_via_paths: |lambda| != |R|");
  int n = lambda.rank();
  QPoly out;
  // the running cap bounds the content componentwise and the totals agree,
  // so every visited full path has content exactly lambda
  for_each_path(n, R, lambda.parts, [&](const Path& p) {
    if (!is_classically_restricted(p)) return;
    if (ell && eps0_path(p) > *ell) return;
    out.add_term(energy(p), 1);
  });
  return out;
}

QPoly kostka_via_paths(const Partition& lambda, const RectSeq& R,
                       std::optional<int> ell, int threads) {
  if (lambda.size() != total_cells(R))
    throw SizeMismatch("kostka_via_paths: |lambda| != |R|");
  if (threads <= 1 || R.empty()) return kostka_via_paths_ref(lambda, R, ell);
  int n = lambda.rank();
  CrystalSets sets = crystal_sets(n, R);
  std::vector<OuterTask> tasks = outer_tasks(sets);
  int m = static_cast<int>(tasks.size());
  QPoly out;
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
  {
    QPoly local;
#pragma omp for schedule(dynamic)
    for (int idx = 0; idx < m; ++idx)
      run_outer_task(n, sets, lambda.parts, R, tasks[static_cast<size_t>(idx)],
                     [&](const Path& p) {
                       if (!is_classically_restricted(p)) return;
                       if (ell && eps0_path(p) > *ell) return;
                       local.add_term(energy(p), 1);
                     });
#pragma omp critical
    out += local;
  }
  return out;
#else
  (void)m;
  return kostka_via_paths_ref(lambda, R, ell);
#endif
}

std::map<std::vector<int>, QPoly> path_energy_by_content(int n, const RectSeq& R,
                                                         int threads) {
  std::map<std::vector<int>, QPoly> out;
  if (threads <= 1 || R.empty()) {
    for_each_path(n, R, {}, [&](const Path& p) { out[p.content()].add_term(energy(p), 1); });
    return out;
  }
#ifdef _OPENMP
  CrystalSets sets = crystal_sets(n, R);
  std::vector<OuterTask> tasks = outer_tasks(sets);
  int m = static_cast<int>(tasks.size());
#pragma omp parallel num_threads(threads)
  {
    std::map<std::vector<int>, QPoly> local;
#pragma omp for schedule(dynamic)
    for (int idx = 0; idx < m; ++idx)
      run_outer_task(n, sets, {}, R, tasks[static_cast<size_t>(idx)],
                     [&](const Path& p) { local[p.content()].add_term(energy(p), 1); });
#pragma omp critical
    for (auto& [c, poly] : local) out[c] += poly;
  }
  return out;
#else
  for_each_path(n, R, {}, [&](const Path& p) { out[p.content()].add_term(energy(p), 1); });
  return out;
#endif
}

}  // namespace kostka
