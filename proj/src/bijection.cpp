#include "kostka/bijection.hpp"

#include <algorithm>
#include <map>

namespace kostka {

static bool all_single_rows(const RectSeq& R) {
  for (const Rect& r : R)
    if (r.rows != 1) return false;
  return true;
}

static std::vector<int> content_of(const RectSeq& R) {
  std::vector<int> mu;
  for (const Rect& r : R) mu.push_back(r.cols);
  return mu;
}

static const int kInf = 1 << 28;

RiggedConfig delta_inv(const RiggedConfig& rc, int r, int mu_last,
                       BijectionTrace* trace) {
  const Configuration& old = rc.config;
  if (!all_single_rows(old.R)) throw DomainMismatch("delta_inv: R must be single rows");
  int n = old.rank();
  if (r < 1 || r > n) throw Error("delta_inv: row out of range");
  if (mu_last < 1) throw Error("delta_inv: bad width");

  // Select strings for k = r-1 down to 1.
  std::vector<int> sel(static_cast<size_t>(n + 1), kInf);  // sel[k] = s^(k)
  for (int k = r - 1; k >= 1; --k) {
    int best = 0;  // the empty string is always available and singular
    for (auto& [len, label] : rc.strings[static_cast<size_t>(k - 1)])
      if (len <= sel[static_cast<size_t>(k + 1)] && label == vacancy(old, k, len))
        best = std::max(best, len);
    sel[static_cast<size_t>(k)] = best;
  }
  if (r >= 2 && mu_last - 1 > sel[1])
    throw InternalInconsistency("delta_inv: s^(0) <= s^(1) violated");
  if (trace) {
    trace->row = r;
    trace->selected.assign(sel.begin() + 1, sel.begin() + r);
  }

  // Target context.
  std::vector<int> parts = old.lambda.parts;
  parts[static_cast<size_t>(r - 1)] += 1;
  RectSeq Rnew = old.R;
  if (mu_last == 1)
    Rnew.push_back(Rect{1, 1});
  else {
    if (Rnew.empty() || Rnew.back().cols != mu_last - 1)
      throw Error("delta_inv: context width mismatch");
    Rnew.back().cols = mu_last;
  }
  RiggedConfig out;
  out.config.lambda = Partition(parts, n);
  out.config.R = Rnew;
  out.config.nus.resize(static_cast<size_t>(n - 1));
  out.strings.resize(static_cast<size_t>(n - 1));

  // Lengthen the selected strings; keep all other labels.
  std::vector<std::vector<std::pair<int, int>>> work = rc.strings;
  std::vector<int> lengthened(static_cast<size_t>(n), -1);
  for (int k = 1; k <= r - 1; ++k) {
    int s = sel[static_cast<size_t>(k)];
    auto& block = work[static_cast<size_t>(k - 1)];
    if (s > 0) {
      auto it = std::find_if(block.begin(), block.end(), [&](auto& str) {
        return str.first == s && str.second == vacancy(old, k, s);
      });
      if (it == block.end())
        throw InternalInconsistency("delta_inv: selected string vanished");
      block.erase(it);
    }
    block.emplace_back(s + 1, -1);  // label set after the new nus are known
    lengthened[static_cast<size_t>(k)] = s + 1;
  }
  for (int k = 1; k < n; ++k) {
    Parts lens;
    for (auto& [len, label] : work[static_cast<size_t>(k - 1)]) lens.push_back(len);
    std::sort(lens.rbegin(), lens.rend());
    out.config.nus[static_cast<size_t>(k - 1)] = lens;
  }
  for (int k = 1; k < n; ++k) {
    out.strings[static_cast<size_t>(k - 1)] = work[static_cast<size_t>(k - 1)];
    for (auto& [len, label] : out.strings[static_cast<size_t>(k - 1)])
      if (label == -1) label = vacancy(out.config, k, len);
  }
  out.canonicalize();
  out.validate();
  return out;
}

std::pair<RiggedConfig, int> delta(const RiggedConfig& rc, BijectionTrace* trace) {
  const Configuration& old = rc.config;
  if (!all_single_rows(old.R)) throw DomainMismatch("delta: R must be single rows");
  if (old.R.empty()) throw Error("delta: empty context");
  int n = old.rank();
  int mu_last = old.R.back().cols;

  std::vector<int> sel(static_cast<size_t>(n + 1), kInf);
  int prev = mu_last;  // l^(0)
  int r = n;
  for (int k = 1; k <= n - 1; ++k) {
    int best = kInf;
    for (auto& [len, label] : rc.strings[static_cast<size_t>(k - 1)])
      if (len >= prev && label == vacancy(old, k, len)) best = std::min(best, len);
    if (best == kInf) {
      r = k;
      break;
    }
    sel[static_cast<size_t>(k)] = best;
    prev = best;
  }
  if (trace) {
    trace->row = r;
    trace->selected.assign(sel.begin() + 1, sel.begin() + r);
  }

  std::vector<int> parts = old.lambda.parts;
  if (parts[static_cast<size_t>(r - 1)] <= (r < n ? parts[static_cast<size_t>(r)] : 0))
    throw InternalInconsistency("delta: removal does not leave a partition");
  parts[static_cast<size_t>(r - 1)] -= 1;
  RectSeq Rnew = old.R;
  Rnew.back().cols -= 1;
  if (Rnew.back().cols == 0) Rnew.pop_back();

  RiggedConfig out;
  out.config.lambda = Partition(parts, n);
  out.config.R = Rnew;
  out.config.nus.resize(static_cast<size_t>(n - 1));
  out.strings.resize(static_cast<size_t>(n - 1));

  std::vector<std::vector<std::pair<int, int>>> work = rc.strings;
  for (int k = 1; k <= r - 1; ++k) {
    int s = sel[static_cast<size_t>(k)];
    auto& block = work[static_cast<size_t>(k - 1)];
    auto it = std::find_if(block.begin(), block.end(), [&](auto& str) {
      return str.first == s && str.second == vacancy(old, k, s);
    });
    if (it == block.end())
      throw InternalInconsistency("delta: selected string vanished");
    if (s == 1)
      block.erase(it);
    else {
      it->first = s - 1;
      it->second = -1;
    }
  }
  for (int k = 1; k < n; ++k) {
    Parts lens;
    for (auto& [len, label] : work[static_cast<size_t>(k - 1)]) lens.push_back(len);
    std::sort(lens.rbegin(), lens.rend());
    out.config.nus[static_cast<size_t>(k - 1)] = lens;
  }
  for (int k = 1; k < n; ++k) {
    out.strings[static_cast<size_t>(k - 1)] = work[static_cast<size_t>(k - 1)];
    for (auto& [len, label] : out.strings[static_cast<size_t>(k - 1)])
      if (label == -1) label = vacancy(out.config, k, len);
  }
  out.canonicalize();
  out.validate();
  return {out, r};
}

RiggedConfig tableau_to_rc_rows(const LRTableau& T, int n) {
  if (!all_single_rows(T.R))
    throw DomainMismatch("tableau_to_rc_rows: R must be single rows");
  if (T.fam != Family::LR) throw DomainMismatch("tableau_to_rc_rows: LR family expected");
  if (T.tab.num_rows() > n) throw Error("tableau_to_rc_rows: shape exceeds rank");

  // Strip boxes: rightmost occurrence of the largest letter first.
  Tableau t = T.tab;
  std::vector<int> mu = content_of(T.R);
  struct Removal {
    int row;      // 1-based
    int mu_last;  // multiplicity of the letter including this box
  };
  std::vector<Removal> removals;
  while (t.cells() > 0) {
    int v = static_cast<int>(mu.size());
    while (v >= 1 && mu[static_cast<size_t>(v - 1)] == 0) v--;
    int bestr = -1, bestc = -1;
    for (int r = 0; r < t.num_rows(); ++r)
      for (size_t c = 0; c < t.rows[static_cast<size_t>(r)].size(); ++c)
        if (t.rows[static_cast<size_t>(r)][c] == v &&
            static_cast<int>(c) > bestc) {
          bestc = static_cast<int>(c);
          bestr = r;
        }
    if (bestr < 0) throw InternalInconsistency("tableau_to_rc_rows: letter missing");
    removals.push_back({bestr + 1, mu[static_cast<size_t>(v - 1)]});
    auto& row = t.rows[static_cast<size_t>(bestr)];
    if (bestc != static_cast<int>(row.size()) - 1)
      throw InternalInconsistency("tableau_to_rc_rows: box is not a corner");
    row.pop_back();
    if (row.empty()) t.rows.pop_back();
    mu[static_cast<size_t>(v - 1)] -= 1;
  }

  RiggedConfig rc;
  rc.config.lambda = Partition(std::vector<int>(), n);
  rc.config.nus.resize(static_cast<size_t>(n - 1));
  rc.strings.resize(static_cast<size_t>(n - 1));
  for (auto it = removals.rbegin(); it != removals.rend(); ++it)
    rc = delta_inv(rc, it->row, it->mu_last);
  return rc;
}

LRTableau rc_to_tableau_rows(const RiggedConfig& rc0) {
  RiggedConfig rc = rc0;
  std::vector<std::pair<int, int>> boxes;  // (letter, row)
  while (!rc.config.R.empty()) {
    int letter = static_cast<int>(rc.config.R.size());
    auto [next, r] = delta(rc);
    boxes.emplace_back(letter, r);
    rc = next;
  }
  Tableau t;
  for (auto it = boxes.rbegin(); it != boxes.rend(); ++it) {
    int row = it->second - 1;
    while (t.num_rows() <= row) t.rows.emplace_back();
    t.rows[static_cast<size_t>(row)].push_back(it->first);
  }
  if (!t.is_column_strict())
    throw InternalInconsistency("rc_to_tableau_rows: result not column-strict");
  LRTableau out{t, rc0.config.R, Family::LR};
  if (!is_lr_member(out.tab, out.R, Family::LR))
    throw InternalInconsistency("rc_to_tableau_rows: not an LR tableau");
  return out;
}

RiggedConfig pad_strings(const RiggedConfig& rc, const RectSeq& R, PadDir dir) {
  RiggedConfig out = rc;
  if (dir == PadDir::Add) {
    if (rc.config.R != R) throw DomainMismatch("pad_strings: context mismatch");
    out.config.R = split_rows(R);
    for (const Rect& rect : R)
      for (int j = 1; j <= rect.rows - 1; ++j)
        for (int copy = 0; copy < rect.rows - j; ++copy)
          out.strings[static_cast<size_t>(j - 1)].emplace_back(rect.cols, 0);
  } else {
    if (rc.config.R != split_rows(R))
      throw DomainMismatch("pad_strings: context is not r(R)");
    out.config.R = R;
    for (const Rect& rect : R)
      for (int j = 1; j <= rect.rows - 1; ++j)
        for (int copy = 0; copy < rect.rows - j; ++copy) {
          auto& block = out.strings[static_cast<size_t>(j - 1)];
          auto it = std::find_if(block.begin(), block.end(), [&](auto& s) {
            return s.first == rect.cols && s.second == 0;
          });
          if (it == block.end())
            throw MissingPadString("pad_strings: expected (m, 0) string absent");
          block.erase(it);
        }
  }
  for (size_t k = 0; k < out.strings.size(); ++k) {
    Parts lens;
    for (auto& [len, label] : out.strings[k]) lens.push_back(len);
    std::sort(lens.rbegin(), lens.rend());
    out.config.nus[k] = lens;
  }
  out.canonicalize();
  out.validate();
  return out;
}

RiggedConfig tableau_to_rc(const LRTableau& T, int n) {
  LRTableau q = T.fam == Family::LR ? T : relabel_std_inv(T);
  LRTableau rows = embed_to_rows(q);
  RiggedConfig rc = tableau_to_rc_rows(rows, n);
  return pad_strings(rc, q.R, PadDir::Remove);
}

LRTableau rc_to_tableau(const RiggedConfig& rc) {
  RiggedConfig rows_rc = pad_strings(rc, rc.config.R, PadDir::Add);
  LRTableau rows = rc_to_tableau_rows(rows_rc);
  return unembed_from_rows(rows, rc.config.R);
}

// ---------------------------------------------------------------------------
// Generalized charge
// ---------------------------------------------------------------------------

static long long factorial(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

static int d_sum(const LRTableau& q) {
  auto alph = family_alphabets(q.R, Family::LR);
  int L = static_cast<int>(q.R.size());
  int total = 0;
  for (int i = 1; i <= L - 1; ++i) {
    SkewTableau s = restrict_to_alphabet(q.tab, alph[static_cast<size_t>(i - 1)].first,
                                         alph[static_cast<size_t>(i)].second);
    Tableau P = schensted_p(reading_word(s));
    total += (L - i) * d_statistic(P, q.R[static_cast<size_t>(i - 1)],
                                   q.R[static_cast<size_t>(i)]);
  }
  return total;
}

static int charge_via_average(const LRTableau& q0) {
  LRTableau base = q0.fam == Family::LR ? q0 : relabel_std_inv(q0);
  int L = static_cast<int>(base.R.size());
  if (L > 6) throw TooLarge("charge: via_average limited to at most 6 rectangles");
  // BFS over S_L, one automorphism per edge.
  std::map<std::vector<int>, LRTableau> seen;
  std::vector<int> id(static_cast<size_t>(L));
  for (int i = 0; i < L; ++i) id[static_cast<size_t>(i)] = i;
  seen.emplace(id, base);
  std::vector<std::vector<int>> queue = {id};
  long long total = d_sum(base);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> w = queue[qi];
    LRTableau cur = seen.at(w);
    for (int p = 1; p <= L - 1; ++p) {
      std::vector<int> w2 = w;
      std::swap(w2[static_cast<size_t>(p - 1)], w2[static_cast<size_t>(p)]);
      if (seen.count(w2)) continue;
      LRTableau next = automorphism_sp(cur, p);
      total += d_sum(next);
      seen.emplace(w2, std::move(next));
      queue.push_back(std::move(w2));
    }
  }
  long long fact = factorial(L);
  if (static_cast<long long>(seen.size()) != fact)
    throw InternalInconsistency("charge: incomplete symmetric group orbit");
  if (total % fact != 0)
    throw InternalInconsistency("charge: average is not an integer");
  return static_cast<int>(total / fact);
}

int charge(const LRTableau& q, ChargeMethod method) {
  if (method == ChargeMethod::ViaAverage) return charge_via_average(q);
  int n = std::max(q.tab.num_rows(), 1);
  RiggedConfig rc = tableau_to_rc(q, n);
  return charges(rc.config).c + rc.label_sum();
}

}  // namespace kostka
