#include "kostka/lr.hpp"

#include <algorithm>
#include <map>

namespace kostka {

bool LRTableau::operator<(const LRTableau& o) const {
  if (fam != o.fam) return fam < o.fam;
  if (R != o.R) return R < o.R;
  return tab < o.tab;
}

std::vector<std::pair<int, int>> family_alphabets(const RectSeq& R, Family fam) {
  std::vector<std::pair<int, int>> out;
  int lo = 1;
  for (const Rect& r : R) {
    int size = (fam == Family::LR) ? r.rows : r.cells();
    out.emplace_back(lo, lo + size - 1);
    lo += size;
  }
  return out;
}

std::vector<Tableau> family_keys(const RectSeq& R, Family fam) {
  std::vector<Tableau> keys;
  auto alph = family_alphabets(R, fam);
  for (size_t j = 0; j < R.size(); ++j) {
    const Rect& rc = R[j];
    Tableau z;
    z.rows.assign(static_cast<size_t>(rc.rows),
                  std::vector<int>(static_cast<size_t>(rc.cols), 0));
    int base = alph[j].first - 1;
    for (int r = 1; r <= rc.rows; ++r)
      for (int c = 1; c <= rc.cols; ++c) {
        int v = 0;
        switch (fam) {
          case Family::LR:
            v = base + r;
            break;
          case Family::CLR:
            v = base + (c - 1) * rc.rows + r;
            break;
          case Family::RLR:
            v = base + (r - 1) * rc.cols + c;
            break;
        }
        z.rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = v;
      }
    keys.push_back(std::move(z));
  }
  return keys;
}

bool is_lr_member(const Tableau& t, const RectSeq& R, Family fam) {
  if (!t.is_column_strict()) return false;
  auto alph = family_alphabets(R, fam);
  auto keys = family_keys(R, fam);
  for (size_t j = 0; j < R.size(); ++j) {
    SkewTableau s = restrict_to_alphabet(t, alph[j].first, alph[j].second);
    if (schensted_p(reading_word(s)) != keys[j]) return false;
  }
  return true;
}

static std::vector<int> family_content(const RectSeq& R, Family fam) {
  auto alph = family_alphabets(R, fam);
  int total = alph.empty() ? 0 : alph.back().second;
  std::vector<int> content(static_cast<size_t>(total), 1);
  if (fam == Family::LR) {
    for (size_t j = 0; j < R.size(); ++j)
      for (int v = alph[j].first; v <= alph[j].second; ++v)
        content[static_cast<size_t>(v - 1)] = R[j].cols;
  }
  return content;
}

std::vector<LRTableau> enumerate_lr(const Partition& lambda, const RectSeq& R,
                                    Family fam) {
  if (lambda.size() != total_cells(R))
    throw SizeMismatch("enumerate_lr: |lambda| != |R|");
  std::vector<int> content = family_content(R, fam);
  int nletters = static_cast<int>(content.size());
  std::vector<LRTableau> out;
  for (Tableau& t : enumerate_cst(lambda.trimmed(), nletters, content))
    if (is_lr_member(t, R, fam)) out.push_back(LRTableau{std::move(t), R, fam});
  return out;
}

// Horizontal-strip cells of letter v, sorted by column.
static std::vector<std::pair<int, int>> letter_cells(const Tableau& t, int v) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < t.num_rows(); ++r)
    for (size_t c = 0; c < t.rows[static_cast<size_t>(r)].size(); ++c)
      if (t.rows[static_cast<size_t>(r)][c] == v)
        cells.emplace_back(r, static_cast<int>(c));
  std::sort(cells.begin(), cells.end(),
            [](auto& a, auto& b) { return a.second < b.second; });
  return cells;
}

LRTableau relabel_std(const LRTableau& q) {
  if (q.fam != Family::LR) throw DomainMismatch("std expects an LR tableau");
  auto alphLR = family_alphabets(q.R, Family::LR);
  auto keysRLR = family_keys(q.R, Family::RLR);
  Tableau out = q.tab;
  for (size_t j = 0; j < q.R.size(); ++j) {
    for (int r = 1; r <= q.R[j].rows; ++r) {
      int v = alphLR[j].first - 1 + r;
      auto cells = letter_cells(q.tab, v);
      const auto& zr_row = keysRLR[j].rows[static_cast<size_t>(r - 1)];
      if (cells.size() != zr_row.size())
        throw InternalInconsistency("std: letter multiplicity mismatch");
      for (size_t idx = 0; idx < cells.size(); ++idx)
        out.rows[static_cast<size_t>(cells[idx].first)]
            [static_cast<size_t>(cells[idx].second)] = zr_row[idx];
    }
  }
  return LRTableau{out, q.R, Family::RLR};
}

LRTableau relabel_std_inv(const LRTableau& q) {
  if (q.fam != Family::RLR) throw DomainMismatch("std_inv expects an RLR tableau");
  auto alphLR = family_alphabets(q.R, Family::LR);
  auto alphRLR = family_alphabets(q.R, Family::RLR);
  Tableau out = q.tab;
  for (auto& row : out.rows)
    for (int& x : row) {
      int j = -1;
      for (size_t a = 0; a < alphRLR.size(); ++a)
        if (x >= alphRLR[a].first && x <= alphRLR[a].second) j = static_cast<int>(a);
      if (j < 0) throw DomainMismatch("std_inv: letter outside alphabets");
      int offset = x - alphRLR[static_cast<size_t>(j)].first;  // 0-based in ZR_j
      int r = offset / q.R[static_cast<size_t>(j)].cols;
      x = alphLR[static_cast<size_t>(j)].first + r;
    }
  return LRTableau{out, q.R, Family::LR};
}

static LRTableau relabel_positional(const LRTableau& q, Family from, Family to) {
  if (q.fam != from) throw DomainMismatch("relabel: wrong source family");
  auto keys_from = family_keys(q.R, from);
  auto keys_to = family_keys(q.R, to);
  std::map<int, int> subst;
  for (size_t j = 0; j < q.R.size(); ++j)
    for (int r = 0; r < q.R[j].rows; ++r)
      for (int c = 0; c < q.R[j].cols; ++c)
        subst[keys_from[j].rows[static_cast<size_t>(r)][static_cast<size_t>(c)]] =
            keys_to[j].rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  Tableau out = q.tab;
  for (auto& row : out.rows)
    for (int& x : row) x = subst.at(x);
  return LRTableau{out, q.R, to};
}

LRTableau relabel_gamma(const LRTableau& q) {
  return relabel_positional(q, Family::CLR, Family::RLR);
}

LRTableau relabel_gamma_inv(const LRTableau& q) {
  return relabel_positional(q, Family::RLR, Family::CLR);
}

LRTableau relabel_beta(const LRTableau& q) {
  return relabel_gamma_inv(relabel_std(q));
}

LRTableau relabel_tr(const LRTableau& q) {
  if (q.fam != Family::RLR) throw DomainMismatch("tr expects an RLR tableau");
  RectSeq Rt;
  for (const Rect& r : q.R) Rt.push_back(Rect{r.cols, r.rows});
  return LRTableau{q.tab.transposed(), Rt, Family::CLR};
}

LRTableau relabel_tr_lr(const LRTableau& q) {
  if (q.fam != Family::CLR) throw DomainMismatch("tr_lr expects a CLR tableau");
  return relabel_tr(relabel_gamma(q));
}

std::pair<Tableau, LRTableau> rsk(const Path& p) {
  auto alph = family_alphabets(p.shapes, Family::LR);
  Tableau P, Q;
  for (int j = 0; j < p.length(); ++j) {
    const Tableau& f = p.factors[static_cast<size_t>(j)];
    int base = alph[static_cast<size_t>(j)].first - 1;
    for (int r = 0; r < f.num_rows(); ++r) {
      const auto& row = f.rows[static_cast<size_t>(r)];
      for (int c = static_cast<int>(row.size()) - 1; c >= 0; --c) {
        auto cell = column_insert(P, row[static_cast<size_t>(c)]);
        if (cell.first == Q.num_rows()) Q.rows.emplace_back();
        auto& qrow = Q.rows[static_cast<size_t>(cell.first)];
        if (static_cast<int>(qrow.size()) != cell.second)
          throw InternalInconsistency("rsk: recording cell out of order");
        qrow.push_back(base + r + 1);
      }
    }
  }
  return {P, LRTableau{Q, p.shapes, Family::LR}};
}

Path rsk_inverse(const Tableau& P, const LRTableau& Q, int n) {
  if (Q.fam != Family::LR) throw DomainMismatch("rsk_inverse expects LR recording");
  auto alph = family_alphabets(Q.R, Family::LR);
  Tableau Pw = P,
          Qw = Q.tab;
  Path out;
  out.n = n;
  out.shapes = Q.R;
  out.factors.resize(Q.R.size());
  for (int j = static_cast<int>(Q.R.size()) - 1; j >= 0; --j) {
    const Rect& rc = Q.R[static_cast<size_t>(j)];
    Tableau f;
    f.rows.assign(static_cast<size_t>(rc.rows), {});
    int base = alph[static_cast<size_t>(j)].first - 1;
    for (int r = rc.rows - 1; r >= 0; --r) {
      auto cells = letter_cells(Qw, base + r + 1);
      if (static_cast<int>(cells.size()) != rc.cols)
        throw DomainMismatch("rsk_inverse: bad recording tableau");
      for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
        int letter = column_uninsert(Pw, it->first, it->second);
        auto& qrow = Qw.rows[static_cast<size_t>(it->first)];
        qrow.pop_back();
        if (qrow.empty()) Qw.rows.pop_back();
        f.rows[static_cast<size_t>(r)].push_back(letter);
      }
    }
    if (!f.is_column_strict())
      throw InternalInconsistency("rsk_inverse: factor not column-strict");
    out.factors[static_cast<size_t>(j)] = std::move(f);
  }
  if (!Pw.empty()) throw InternalInconsistency("rsk_inverse: leftover cells");
  return out;
}

int d_statistic(const Tableau& t, const Rect& r1, const Rect& r2) {
  int cut = std::max(r1.cols, r2.cols);
  int d = 0;
  for (auto& row : t.rows) d += std::max(0, static_cast<int>(row.size()) - cut);
  return d;
}

// Per-row (offset, length) profile of the alphabet restriction, over all rows.
struct RestrictionProfile {
  std::vector<int> offsets, lengths;
};

static RestrictionProfile restriction_profile(const Tableau& t, int lo, int hi) {
  RestrictionProfile pr;
  for (auto& row : t.rows) {
    int off = 0, len = 0;
    for (int x : row) {
      if (x < lo) off++;
      else if (x <= hi) len++;
    }
    pr.offsets.push_back(off);
    pr.lengths.push_back(len);
  }
  return pr;
}

LRTableau automorphism_sp(const LRTableau& q, int pos) {
  if (q.fam != Family::LR) throw DomainMismatch("s_p expects an LR tableau");
  if (pos < 1 || pos >= static_cast<int>(q.R.size()))
    throw Error("s_p: position out of range");
  size_t a = static_cast<size_t>(pos - 1), b = static_cast<size_t>(pos);
  RectSeq Rs = q.R;
  std::swap(Rs[a], Rs[b]);
  if (q.R[a] == q.R[b]) return LRTableau{q.tab, Rs, Family::LR};

  auto alph = family_alphabets(q.R, Family::LR);
  int lo = alph[a].first, hi = alph[b].second;
  RestrictionProfile pr = restriction_profile(q.tab, lo, hi);
  SkewTableau U = restrict_to_alphabet(q.tab, lo, hi);
  Word w = reading_word(U);

  // Column-insert w, tracking the standard recording order.
  Tableau Pp;
  std::vector<std::pair<int, int>> order;  // k-th inserted cell
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    order.push_back(column_insert(Pp, *it));

  // Unique element of the two-rectangle LR set with swapped rectangles,
  // over the same letters.
  RectSeq pairR = {q.R[b], q.R[a]};
  Partition rho(Pp.shape(), std::max<int>(Pp.num_rows(),
                                          static_cast<int>(Pp.shape().size())));
  std::vector<LRTableau> cand = enumerate_lr(rho, pairR, Family::LR);
  if (cand.size() != 1)
    throw InternalInconsistency("s_p: swapped LR set is not a singleton");
  Tableau Ps = cand[0].tab;
  for (auto& row : Ps.rows)
    for (int& x : row) x += lo - 1;

  // Pull back through the recorded insertion order.
  Word wp;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    wp.push_back(column_uninsert(Ps, it->first, it->second));

  // Rebuild the skew piece and splice it in.
  std::vector<int> offs, lens;
  size_t firstrow = 0;
  while (firstrow < pr.lengths.size() && pr.lengths[firstrow] == 0) firstrow++;
  size_t lastrow = pr.lengths.size();
  while (lastrow > firstrow && pr.lengths[lastrow - 1] == 0) lastrow--;
  for (size_t r = firstrow; r < lastrow; ++r) {
    offs.push_back(pr.offsets[r]);
    lens.push_back(pr.lengths[r]);
  }
  SkewTableau V = skew_from_word(offs, lens, wp);
  if (!V.is_column_strict())
    throw InternalInconsistency("s_p: replacement skew piece is invalid");
  Tableau out = q.tab;
  for (size_t r = firstrow; r < lastrow; ++r) {
    const auto& vrow = V.rows[r - firstrow];
    for (size_t c = 0; c < vrow.size(); ++c)
      out.rows[r][static_cast<size_t>(pr.offsets[r]) + c] = vrow[c];
  }
  LRTableau res{out, Rs, Family::LR};
  if (!is_lr_member(res.tab, res.R, Family::LR))
    throw InternalInconsistency("s_p: result is not an LR tableau");
  return res;
}

RectSeq split_rows(const RectSeq& R) {
  RectSeq out;
  for (const Rect& r : R)
    for (int i = 0; i < r.rows; ++i) out.push_back(Rect{1, r.cols});
  return out;
}

// Split the first rectangle's top row off; on LR tableaux this is the
// inclusion map (only the rectangle bookkeeping changes).
static RectSeq split_first(const RectSeq& R) {
  RectSeq out;
  out.push_back(Rect{1, R[0].cols});
  if (R[0].rows > 1) out.push_back(Rect{R[0].rows - 1, R[0].cols});
  out.insert(out.end(), R.begin() + 1, R.end());
  return out;
}

std::vector<int> embed_steps(const RectSeq& R0) {
  std::vector<int> steps;
  RectSeq R = R0;
  for (;;) {
    int j = -1;
    for (size_t a = 0; a < R.size(); ++a)
      if (R[a].rows > 1) {
        j = static_cast<int>(a);
        break;
      }
    if (j < 0) break;
    while (j > 0) {
      steps.push_back(j);
      std::swap(R[static_cast<size_t>(j - 1)], R[static_cast<size_t>(j)]);
      j--;
    }
    steps.push_back(0);
    R = split_first(R);
  }
  // Sort the single rows into the order of split_rows(R0) by adjacent swaps.
  RectSeq target = split_rows(R0);
  for (size_t t = 0; t < target.size(); ++t) {
    if (R[t] == target[t]) continue;
    size_t src = t + 1;
    while (src < R.size() && !(R[src] == target[t])) src++;
    if (src == R.size())
      throw InternalInconsistency("embed_steps: cannot reorder rows");
    for (size_t a = src; a > t; --a) {
      steps.push_back(static_cast<int>(a));
      std::swap(R[a - 1], R[a]);
    }
  }
  if (R != target) throw InternalInconsistency("embed_steps: wrong endpoint");
  return steps;
}

LRTableau embed_to_rows(const LRTableau& q0) {
  LRTableau q = q0.fam == Family::LR ? q0 : relabel_std_inv(q0);
  for (int step : embed_steps(q0.R)) {
    if (step == 0)
      q = LRTableau{q.tab, split_first(q.R), Family::LR};
    else
      q = automorphism_sp(q, step);
  }
  return q;
}

LRTableau unembed_from_rows(const LRTableau& rows_q, const RectSeq& R) {
  if (rows_q.R != split_rows(R))
    throw DomainMismatch("unembed_from_rows: input is not over r(R)");
  LRTableau q = rows_q;
  std::vector<int> steps = embed_steps(R);
  // Replay the R-evolution to know each step's pre-state.
  std::vector<RectSeq> states;
  RectSeq cur = R;
  for (int step : steps) {
    states.push_back(cur);
    if (step == 0)
      cur = split_first(cur);
    else
      std::swap(cur[static_cast<size_t>(step - 1)], cur[static_cast<size_t>(step)]);
  }
  for (size_t s = steps.size(); s-- > 0;) {
    if (steps[s] == 0)
      q = LRTableau{q.tab, states[s], Family::LR};  // merge = inclusion inverse
    else
      q = automorphism_sp(q, steps[s]);
  }
  if (q.R != R) throw InternalInconsistency("unembed_from_rows: wrong endpoint");
  return q;
}

Path embed_to_rows(const Path& p0) {
  Path p = p0;
  for (;;) {
    int j = -1;
    for (size_t a = 0; a < p.shapes.size(); ++a)
      if (p.shapes[a].rows > 1) {
        j = static_cast<int>(a);
        break;
      }
    if (j < 0) break;
    while (j > 0) {
      p = local_iso(p, j);
      j--;
    }
    // word-preserving split of the rightmost factor's top row
    const Tableau& f = p.factors[0];
    Tableau top, rest;
    top.rows.push_back(f.rows[0]);
    rest.rows.assign(f.rows.begin() + 1, f.rows.end());
    RectSeq ns = split_first(p.shapes);
    std::vector<Tableau> nf;
    nf.push_back(top);
    if (!rest.rows.empty()) nf.push_back(rest);
    nf.insert(nf.end(), p.factors.begin() + 1, p.factors.end());
    p.shapes = ns;
    p.factors = nf;
  }
  RectSeq target = split_rows(p0.shapes);
  for (size_t t = 0; t < target.size(); ++t) {
    if (p.shapes[t] == target[t]) continue;
    size_t src = t + 1;
    while (src < p.shapes.size() && !(p.shapes[src] == target[t])) src++;
    if (src == p.shapes.size())
      throw InternalInconsistency("embed_to_rows: cannot reorder rows");
    for (size_t a = src; a > t; --a) p = local_iso(p, static_cast<int>(a));
  }
  return p;
}

bool cst_level_restricted(const Tableau& t, int n, int ell) {
  if (t.num_rows() > n) throw Error("cst_level_restricted: shape exceeds rank");
  int maxletter = 0;
  for (auto& row : t.rows)
    for (int x : row) maxletter = std::max(maxletter, x);
  std::vector<int> prev(static_cast<size_t>(n), 0), cur(static_cast<size_t>(n), 0);
  for (int j = 1; j <= maxletter; ++j) {
    cur = prev;
    for (int r = 0; r < t.num_rows(); ++r)
      for (int x : t.rows[static_cast<size_t>(r)])
        if (x == j) cur[static_cast<size_t>(r)]++;
    if (cur[0] - prev[static_cast<size_t>(n - 1)] > ell) return false;
    prev = cur;
  }
  return true;
}

bool is_level_restricted_lr(const LRTableau& q, int ell, int n) {
  bool has_full_height = false;
  for (const Rect& r : q.R) has_full_height |= (r.rows == n);
  if (!has_full_height) {
    LRTableau rows = embed_to_rows(q);
    return cst_level_restricted(rows.tab, n, ell);
  }
  // Height-n factors are transparent for the affine operators but the
  // row-splitting chain criterion does not see that; fall back to the
  // defining property via the unique classically restricted preimage.
  LRTableau lrq = q.fam == Family::LR ? q : relabel_std_inv(q);
  Tableau yam;
  Parts shape = lrq.tab.shape();
  for (size_t r = 0; r < shape.size(); ++r)
    yam.rows.emplace_back(static_cast<size_t>(shape[r]), static_cast<int>(r) + 1);
  Path p = rsk_inverse(yam, lrq, n);
  return is_level_restricted(p, ell);
}

}  // namespace kostka
