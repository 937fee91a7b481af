#include "kostka/tableau.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace kostka {

int Tableau::cells() const {
  int s = 0;
  for (auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

Parts Tableau::shape() const {
  Parts s;
  for (auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

bool Tableau::is_rectangular() const {
  for (auto& r : rows)
    if (r.size() != rows[0].size()) return false;
  return true;
}

Rect Tableau::rect() const {
  if (!is_rectangular()) throw NonRectangular("tableau is not rectangular");
  return Rect{num_rows(), empty() ? 0 : static_cast<int>(rows[0].size())};
}

std::vector<int> Tableau::content(int n) const {
  std::vector<int> c(static_cast<size_t>(n), 0);
  for (auto& r : rows)
    for (int x : r) {
      if (x < 1 || x > n) throw Error("tableau letter out of range");
      c[static_cast<size_t>(x - 1)]++;
    }
  return c;
}

bool Tableau::is_column_strict() const {
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
      if (r > 0) {
        if (rows[r - 1].size() < rows[r].size()) return false;  // not a shape
        if (rows[r][c] <= rows[r - 1][c]) return false;
      }
    }
  }
  return true;
}

Tableau Tableau::transposed() const {
  Tableau t;
  if (rows.empty()) return t;
  size_t w = rows[0].size();
  t.rows.resize(w);
  for (size_t c = 0; c < w; ++c)
    for (size_t r = 0; r < rows.size(); ++r)
      if (rows[r].size() > c) t.rows[c].push_back(rows[r][c]);
  return t;
}

bool SkewTableau::is_column_strict() const {
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
      if (r > 0) {
        int col = offsets[r] + static_cast<int>(c);
        int above = col - offsets[r - 1];
        if (above >= 0 && above < static_cast<int>(rows[r - 1].size()) &&
            rows[r][c] <= rows[r - 1][static_cast<size_t>(above)])
          return false;
      }
    }
  }
  return true;
}

int SkewTableau::cells() const {
  int s = 0;
  for (auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

Word reading_word(const Tableau& t) {
  Word w;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

Word reading_word(const SkewTableau& t) {
  Word w;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

SkewTableau restrict_to_alphabet(const Tableau& t, int lo, int hi) {
  SkewTableau s;
  for (auto& row : t.rows) {
    int off = 0;
    std::vector<int> keep;
    for (int x : row) {
      if (x < lo)
        off++;
      else if (x <= hi)
        keep.push_back(x);
    }
    if (!keep.empty() || !s.rows.empty()) {
      // keep interior empty rows only if an entry appears below them later;
      // trim at the end instead.
    }
    s.offsets.push_back(off);
    s.rows.push_back(std::move(keep));
  }
  while (!s.rows.empty() && s.rows.back().empty()) {
    s.rows.pop_back();
    s.offsets.pop_back();
  }
  size_t lead = 0;
  while (lead < s.rows.size() && s.rows[lead].empty()) lead++;
  s.rows.erase(s.rows.begin(), s.rows.begin() + static_cast<long>(lead));
  s.offsets.erase(s.offsets.begin(), s.offsets.begin() + static_cast<long>(lead));
  return s;
}

SkewTableau skew_from_word(const std::vector<int>& offsets,
                           const std::vector<int>& lengths, const Word& w) {
  SkewTableau s;
  s.offsets = offsets;
  s.rows.resize(lengths.size());
  size_t pos = 0;
  for (size_t r = lengths.size(); r-- > 0;) {
    s.rows[r].assign(w.begin() + static_cast<long>(pos),
                     w.begin() + static_cast<long>(pos) + lengths[r]);
    pos += static_cast<size_t>(lengths[r]);
  }
  if (pos != w.size()) throw Error("skew_from_word: length mismatch");
  return s;
}

// Bracket pass: letter i closes, letter i+1 opens.  Matched pair = an opening
// followed by a closing with everything between already matched.
struct BracketScan {
  std::vector<size_t> unmatched_close;  // letters equal to i
  std::vector<size_t> unmatched_open;   // letters equal to i+1
};

static BracketScan bracket_scan(const Word& w, int i) {
  BracketScan b;
  for (size_t p = 0; p < w.size(); ++p) {
    if (w[p] == i + 1) {
      b.unmatched_open.push_back(p);
    } else if (w[p] == i) {
      if (!b.unmatched_open.empty())
        b.unmatched_open.pop_back();
      else
        b.unmatched_close.push_back(p);
    }
  }
  return b;
}

std::pair<int, int> string_stats(const Word& w, int i) {
  BracketScan b = bracket_scan(w, i);
  return {static_cast<int>(b.unmatched_close.size()),
          static_cast<int>(b.unmatched_open.size())};
}

std::optional<size_t> raise_position(const Word& w, int i) {
  BracketScan b = bracket_scan(w, i);
  if (b.unmatched_open.empty()) return std::nullopt;
  return b.unmatched_open.front();
}

std::optional<size_t> lower_position(const Word& w, int i) {
  BracketScan b = bracket_scan(w, i);
  if (b.unmatched_close.empty()) return std::nullopt;
  return b.unmatched_close.back();
}

std::optional<Word> raise_word(const Word& w, int i) {
  auto p = raise_position(w, i);
  if (!p) return std::nullopt;
  Word out = w;
  out[*p] = i;
  return out;
}

std::optional<Word> lower_word(const Word& w, int i) {
  auto p = lower_position(w, i);
  if (!p) return std::nullopt;
  Word out = w;
  out[*p] = i + 1;
  return out;
}

int eps_word(const Word& w, int i) { return string_stats(w, i).second; }
int phi_word(const Word& w, int i) { return string_stats(w, i).first; }

// Map word positions (reading order) back to tableau cells.
static std::vector<std::pair<int, int>> word_cells(const Tableau& t) {
  std::vector<std::pair<int, int>> cells;
  for (int r = t.num_rows() - 1; r >= 0; --r)
    for (size_t c = 0; c < t.rows[static_cast<size_t>(r)].size(); ++c)
      cells.emplace_back(r, static_cast<int>(c));
  return cells;
}

static std::optional<Tableau> apply_word_op(const Tableau& t, int i, bool raise) {
  Word w = reading_word(t);
  auto pos = raise ? raise_position(w, i) : lower_position(w, i);
  if (!pos) return std::nullopt;
  Tableau out = t;
  auto cell = word_cells(t)[*pos];
  out.rows[static_cast<size_t>(cell.first)][static_cast<size_t>(cell.second)] =
      raise ? i : i + 1;
  if (!out.is_column_strict())
    throw InternalInconsistency("crystal operator broke column-strictness");
  return out;
}

std::optional<Tableau> raise_tableau(const Tableau& t, int i) {
  return apply_word_op(t, i, true);
}

std::optional<Tableau> lower_tableau(const Tableau& t, int i) {
  return apply_word_op(t, i, false);
}

std::pair<int, int> column_insert(Tableau& P, int x) {
  int v = x;
  for (int col = 0;; ++col) {
    // entries of this column: rows r with |row r| > col
    int nrows = 0;
    int bump = -1;
    for (int r = 0; r < P.num_rows(); ++r) {
      if (static_cast<int>(P.rows[static_cast<size_t>(r)].size()) > col) {
        nrows = r + 1;
        if (bump < 0 && P.rows[static_cast<size_t>(r)][static_cast<size_t>(col)] >= v)
          bump = r;
      }
    }
    if (bump < 0) {
      if (nrows == P.num_rows()) P.rows.emplace_back();
      P.rows[static_cast<size_t>(nrows)].push_back(v);
      return {nrows, col};
    }
    std::swap(P.rows[static_cast<size_t>(bump)][static_cast<size_t>(col)], v);
  }
}

int column_uninsert(Tableau& P, int row, int col) {
  auto& r = P.rows[static_cast<size_t>(row)];
  if (col != static_cast<int>(r.size()) - 1)
    throw Error("column_uninsert: cell is not at the end of its row");
  if (row + 1 < P.num_rows() &&
      static_cast<int>(P.rows[static_cast<size_t>(row + 1)].size()) > col)
    throw Error("column_uninsert: cell is not a corner");
  int v = r.back();
  r.pop_back();
  if (r.empty()) P.rows.pop_back();
  for (int c = col - 1; c >= 0; --c) {
    int pick = -1;
    for (int rr = 0; rr < P.num_rows(); ++rr) {
      auto& row_rr = P.rows[static_cast<size_t>(rr)];
      if (static_cast<int>(row_rr.size()) > c &&
          row_rr[static_cast<size_t>(c)] <= v)
        pick = rr;
    }
    if (pick < 0) throw InternalInconsistency("column_uninsert: no reverse bump");
    std::swap(P.rows[static_cast<size_t>(pick)][static_cast<size_t>(c)], v);
  }
  return v;
}

Tableau schensted_p(const Word& w) {
  Tableau P;
  for (auto it = w.rbegin(); it != w.rend(); ++it) column_insert(P, *it);
  return P;
}

bool is_yamanouchi(const Tableau& t) {
  for (int r = 0; r < t.num_rows(); ++r)
    for (int x : t.rows[static_cast<size_t>(r)])
      if (x != r + 1) return false;
  return true;
}

Tableau promote(const Tableau& b, int n) {
  Rect rc = b.rect();  // throws NonRectangular
  if (rc.rows == 0 || rc.cols == 0) return b;
  int c1 = 0;
  for (int x : b.rows[0]) c1 += (x == 1);
  if (rc.rows == 1) {
    // single row: drop the 1s, decrement, pad with the letter n
    Tableau out;
    out.rows.emplace_back();
    auto& row = out.rows[0];
    row.reserve(static_cast<size_t>(rc.cols));
    for (int c = c1; c < rc.cols; ++c) row.push_back(b.rows[0][static_cast<size_t>(c)] - 1);
    for (int c = 0; c < c1; ++c) row.push_back(n);
    return out;
  }
  // reading word of the subtableau with the 1s removed
  Word w;
  for (int r = rc.rows - 1; r >= 1; --r)
    w.insert(w.end(), b.rows[static_cast<size_t>(r)].begin(),
             b.rows[static_cast<size_t>(r)].end());
  w.insert(w.end(), b.rows[0].begin() + c1, b.rows[0].end());
  Tableau P = schensted_p(w);
  Parts want(static_cast<size_t>(rc.rows), rc.cols);
  want.back() = rc.cols - c1;
  while (!want.empty() && want.back() == 0) want.pop_back();
  if (P.shape() != want)
    throw InternalInconsistency("promote: unexpected P-tableau shape");
  for (auto& row : P.rows)
    for (int& x : row) x -= 1;
  while (P.num_rows() < rc.rows) P.rows.emplace_back();
  for (int j = 0; j < c1; ++j) P.rows[static_cast<size_t>(rc.rows - 1)].push_back(n);
  if (!P.is_column_strict())
    throw InternalInconsistency("promote: result not column-strict");
  return P;
}

Tableau psi(const Tableau& b, int n) { return psi_power(b, n, 1); }

Tableau psi_power(const Tableau& b, int n, int k) {
  int steps = ((-k) % n + n) % n;  // psi^k = promote^{-k mod n}
  Tableau out = b;
  for (int s = 0; s < steps; ++s) out = promote(out, n);
  return out;
}

Tableau psi_rotate(const Tableau& b, int n, RotateDir dir) {
  return dir == RotateDir::Forward ? psi_power(b, n, 1) : psi_power(b, n, -1);
}

std::optional<Tableau> raise_affine(const Tableau& t, int n, int i) {
  if (i == 0) {
    Tableau rot = psi_power(t, n, 1);
    auto r = raise_tableau(rot, 1);
    if (!r) return std::nullopt;
    return psi_power(*r, n, -1);
  }
  return raise_tableau(t, i);
}

std::optional<Tableau> lower_affine(const Tableau& t, int n, int i) {
  if (i == 0) {
    Tableau rot = psi_power(t, n, 1);
    auto r = lower_tableau(rot, 1);
    if (!r) return std::nullopt;
    return psi_power(*r, n, -1);
  }
  return lower_tableau(t, i);
}

int eps_tableau(const Tableau& t, int n, int i) {
  if (i == 0) return eps_word(reading_word(psi_power(t, n, 1)), 1);
  return eps_word(reading_word(t), i);
}

int phi_tableau(const Tableau& t, int n, int i) {
  if (i == 0) return phi_word(reading_word(psi_power(t, n, 1)), 1);
  return phi_word(reading_word(t), i);
}

static void enumerate_cst_rec(const Parts& shape, int n,
                              const std::vector<int>& content, Tableau& cur,
                              std::vector<int>& used, int r, int c,
                              std::vector<Tableau>& out) {
  if (r == static_cast<int>(shape.size())) {
    out.push_back(cur);
    return;
  }
  int next_r = r, next_c = c + 1;
  if (next_c >= shape[static_cast<size_t>(r)]) {
    next_r = r + 1;
    next_c = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, cur.rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
  if (r > 0) lo = std::max(lo, cur.rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
  lo = std::max(lo, r + 1);  // column-strictness forces letter >= row index + 1
  for (int v = lo; v <= n; ++v) {
    if (!content.empty() &&
        used[static_cast<size_t>(v - 1)] >= content[static_cast<size_t>(v - 1)])
      continue;
    cur.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
    used[static_cast<size_t>(v - 1)]++;
    enumerate_cst_rec(shape, n, content, cur, used, next_r, next_c, out);
    used[static_cast<size_t>(v - 1)]--;
  }
}

std::vector<Tableau> enumerate_cst(const Parts& shape, int n,
                                   const std::vector<int>& content) {
  std::vector<Tableau> out;
  Parts sh = shape;
  while (!sh.empty() && sh.back() == 0) sh.pop_back();
  if (!content.empty()) {
    int total = std::accumulate(content.begin(), content.end(), 0);
    int cells = std::accumulate(sh.begin(), sh.end(), 0);
    if (total != cells) return out;
  }
  Tableau cur;
  for (int len : sh) cur.rows.emplace_back(static_cast<size_t>(len), 0);
  std::vector<int> used(static_cast<size_t>(n), 0);
  if (sh.empty()) {
    out.push_back(cur);
    return out;
  }
  enumerate_cst_rec(sh, n, content, cur, used, 0, 0, out);
  return out;
}

const std::vector<Tableau>& rect_crystal(const Rect& r, int n) {
  static std::map<std::pair<std::pair<int, int>, int>, std::vector<Tableau>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(std::make_pair(r.rows, r.cols), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Parts shape(static_cast<size_t>(r.rows), r.cols);
  auto [ins, ok] = cache.emplace(key, enumerate_cst(shape, n));
  return ins->second;
}

}  // namespace kostka
