#include "kostka/branching.hpp"

#include <algorithm>
#include <functional>

#include "kostka/rigged.hpp"

namespace kostka {

ClWeight eps_weight(const Tableau& b, int n) {
  ClWeight w;
  w.z.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w.z[static_cast<size_t>(i)] = eps_tableau(b, n, i);
  return w;
}

ClWeight phi_weight(const Tableau& b, int n) {
  ClWeight w;
  w.z.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w.z[static_cast<size_t>(i)] = phi_tableau(b, n, i);
  return w;
}

static Tableau min_element_phi(const ClWeight& Lam, int k, int ell) {
  int n = Lam.n();
  // Bottom row: <h_i, Lam> copies of letter i for i = 1..n (h_n = h_0).
  std::vector<int> bottom;
  for (int i = 1; i <= n; ++i)
    for (int c = 0; c < Lam.pairing(i); ++c) bottom.push_back(i);
  std::sort(bottom.begin(), bottom.end());
  std::vector<std::vector<int>> T(static_cast<size_t>(k),
                                  std::vector<int>(static_cast<size_t>(ell)));
  for (int c = 0; c < ell; ++c) T[static_cast<size_t>(k - 1)][static_cast<size_t>(c)] =
      bottom[static_cast<size_t>(c)];
  for (int r = k - 2; r >= 0; --r)
    for (int c = 0; c < ell; ++c)
      T[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          T[static_cast<size_t>(r + 1)][static_cast<size_t>(c)] - 1;

  // Push the positive entries up within columns, then left within rows.
  std::vector<std::vector<int>> grid(static_cast<size_t>(k),
                                     std::vector<int>(static_cast<size_t>(ell), 0));
  for (int c = 0; c < ell; ++c) {
    std::vector<int> colvals;
    for (int r = 0; r < k; ++r)
      if (T[static_cast<size_t>(r)][static_cast<size_t>(c)] > 0)
        colvals.push_back(T[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    for (size_t r = 0; r < colvals.size(); ++r) grid[r][static_cast<size_t>(c)] = colvals[r];
  }
  Tableau b;
  b.rows.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(ell), 0));
  for (int r = 0; r < k; ++r) {
    std::vector<int> vals;
    for (int c = 0; c < ell; ++c)
      if (grid[static_cast<size_t>(r)][static_cast<size_t>(c)] > 0)
        vals.push_back(grid[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    for (size_t c = 0; c < vals.size(); ++c) b.rows[static_cast<size_t>(r)][c] = vals[c];
    // maximal filling on the complement: row r gets letter n - (k-1-r)
    for (int c = static_cast<int>(vals.size()); c < ell; ++c)
      b.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = n - (k - 1 - r);
  }
  if (!b.is_column_strict())
    throw InternalInconsistency("min_element(phi): result not column-strict");
  return b;
}

static Tableau min_element_eps(const ClWeight& Lam, int k, int ell) {
  int n = Lam.n();
  // First row: <h_i, Lam> copies of letter i+1 (letter n+1 wraps to 1).
  std::vector<int> top;
  for (int i = 1; i <= n; ++i) {
    int letter = (i == n) ? 1 : i + 1;
    for (int c = 0; c < Lam.pairing(i); ++c) top.push_back(letter);
  }
  std::sort(top.begin(), top.end());
  std::vector<std::vector<int>> U(static_cast<size_t>(k),
                                  std::vector<int>(static_cast<size_t>(ell)));
  for (int c = 0; c < ell; ++c) U[0][static_cast<size_t>(c)] = top[static_cast<size_t>(c)];
  for (int r = 1; r < k; ++r)
    for (int c = 0; c < ell; ++c)
      U[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          U[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1;

  // Push the <= n entries down within columns, then right within rows.
  std::vector<std::vector<int>> grid(static_cast<size_t>(k),
                                     std::vector<int>(static_cast<size_t>(ell), 0));
  for (int c = 0; c < ell; ++c) {
    std::vector<int> colvals;
    for (int r = 0; r < k; ++r)
      if (U[static_cast<size_t>(r)][static_cast<size_t>(c)] <= n)
        colvals.push_back(U[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    for (size_t j = 0; j < colvals.size(); ++j)
      grid[static_cast<size_t>(k) - colvals.size() + j][static_cast<size_t>(c)] =
          colvals[j];
  }
  Tableau b;
  b.rows.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(ell), 0));
  for (int r = 0; r < k; ++r) {
    std::vector<int> vals;
    for (int c = 0; c < ell; ++c)
      if (grid[static_cast<size_t>(r)][static_cast<size_t>(c)] > 0)
        vals.push_back(grid[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    // minimal filling on the left complement: letter r+1
    int pad = ell - static_cast<int>(vals.size());
    for (int c = 0; c < pad; ++c) b.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = r + 1;
    for (size_t j = 0; j < vals.size(); ++j)
      b.rows[static_cast<size_t>(r)][static_cast<size_t>(pad) + j] = vals[j];
  }
  if (!b.is_column_strict())
    throw InternalInconsistency("min_element(eps): result not column-strict");
  return b;
}

Tableau min_element(const ClWeight& Lam, int k, int ell, MinSide side) {
  int n = Lam.n();
  if (Lam.level() != ell) throw BadLevel("min_element: level(Lam) != ell");
  if (k < 1 || k > n - 1) throw BadLevel("min_element: need 1 <= k <= n-1");
  Tableau b = side == MinSide::Phi ? min_element_phi(Lam, k, ell)
                                   : min_element_eps(Lam, k, ell);
  ClWeight got = side == MinSide::Phi ? phi_weight(b, n) : eps_weight(b, n);
  if (!(got == Lam))
    throw InternalInconsistency("min_element: weight verification failed");
  return b;
}

Tableau sigma_map(const Tableau& b, int n) {
  Rect r = b.rect();
  if (r.rows >= n) throw BadLevel("sigma_map: need 1 <= rows < n");
  return psi_power(b, n, -r.rows);
}

Path ground_state_path(const ClWeight& Lam, int k, int N) {
  int n = Lam.n();
  int ell = Lam.level();
  Tableau b1 = min_element(Lam, k, ell, MinSide::Phi);
  Path p;
  p.n = n;
  p.shapes.assign(static_cast<size_t>(N), Rect{k, ell});
  p.factors.resize(static_cast<size_t>(N));
  Tableau cur = b1;
  for (int j = 1; j <= N; ++j) {
    p.factors[static_cast<size_t>(N - j)] = cur;  // step j is the (N-j)-th factor
    if (j < N) cur = sigma_map(cur, n);
  }
  return p;
}

bool check_theorem_iso(const ClWeight& Lam, const ClWeight& LamPrime, int k,
                       int ell, const Tableau& b) {
  int n = Lam.n();
  if (Lam.level() != ell || LamPrime.level() != ell) return false;
  Tableau x = min_element(Lam, k, ell, MinSide::Eps);
  Tableau y = min_element(LamPrime, k, ell, MinSide::Eps);
  // b must be LamPrime-restricted of weight Lam - LamPrime.
  for (int i = 0; i < n; ++i)
    if (eps_tableau(b, n, i) > LamPrime.pairing(i)) return false;
  Path in;
  in.n = n;
  in.shapes = {b.rect(), x.rect()};
  in.factors = {b, x};
  Path out = local_iso(in, 1);
  return out.factors[1] == psi_power(b, n, k) && out.factors[0] == y;
}

long long ground_energy_closed(long long energy_yprime, long long cells_yprime,
                               int k, int M, int n, int ellprime) {
  long long km = static_cast<long long>(k) * M;
  return energy_yprime + cells_yprime * km +
         static_cast<long long>(n) * ellprime * (km * (km - 1) / 2);
}

long long ground_energy_direct(const Path& yprime, int k, int M, int ellprime) {
  int n = yprime.n;
  ClWeight vac;
  vac.z.assign(static_cast<size_t>(n), 0);
  vac.z[0] = ellprime;
  Path p = ground_state_path(vac, k, n * M);
  Path full = p;
  full.shapes.insert(full.shapes.end(), yprime.shapes.begin(), yprime.shapes.end());
  full.factors.insert(full.factors.end(), yprime.factors.begin(),
                      yprime.factors.end());
  return energy(full);
}

// ---------------------------------------------------------------------------
// Branching pipelines
// ---------------------------------------------------------------------------

static std::vector<int> base_partition(const ClWeight& Lam) {
  int n = Lam.n();
  std::vector<int> base(static_cast<size_t>(n), 0);
  for (int i = n - 1; i >= 1; --i)
    base[static_cast<size_t>(i - 1)] =
        base[static_cast<size_t>(i)] + Lam.z[static_cast<size_t>(i)];
  return base;
}

QSeries branching_series(const ClWeight& Lam, int r, int s, int ellprime,
                         int elldoubleprime, long long truncation_degree,
                         const BranchingOptions& opt, BranchingDiagnostics* diag) {
  int n = Lam.n();
  int ell = ellprime + elldoubleprime;
  if (Lam.level() != ell) throw BadLevel("branching_series: level(Lam) != ell'+ell''");
  int k = opt.perfect_rows;
  if (k < 1 || k > n - 1) throw BadLevel("branching_series: bad perfect_rows");
  std::vector<int> base = base_partition(Lam);
  int base_size = std::accumulate(base.begin(), base.end(), 0);

  QPoly prev;
  bool have_prev = false;
  for (int M = 1; M <= opt.m_cap; ++M) {
    long long total = static_cast<long long>(r) * s +
                      static_cast<long long>(M) * n * k * ellprime;
    QPoly approx;
    long long diffsz = total - base_size;
    if (diffsz % n == 0 && diffsz / n >= 0) {
      std::vector<int> parts = base;
      for (int& x : parts) x += static_cast<int>(diffsz / n);
      Partition lam(parts, n);
      RectSeq R;
      R.push_back(Rect{s, r});
      for (int j = 0; j < n * M; ++j) R.push_back(Rect{k, ellprime});
      QPoly K = kostka_via_rc(lam, R, ell, opt.threads);
      long long shift = static_cast<long long>(r) * s * k * M +
                        static_cast<long long>(n) * ellprime *
                            (static_cast<long long>(k) * M * (k * M - 1) / 2);
      approx = K.shifted(-shift);
      if (!approx.is_zero() && approx.min_degree() < 0)
        throw InternalInconsistency("branching_series: negative normalized degree");
    } else if (diag) {
      diag->selection_rule_ok = false;
    }
    QPoly cut = approx.truncated(truncation_degree);
    if (have_prev && cut == prev) {
      if (diag) diag->stabilized_at = M;
      QSeries out;
      out.offset = Rat(0);
      out.truncation_degree = truncation_degree;
      for (auto& [e, c] : cut.terms()) out.coeffs.emplace(e, c);
      return out;
    }
    prev = cut;
    have_prev = true;
  }
  throw NoStabilization("branching_series: M cap reached without stabilization");
}

QSeries branching_fermionic(const ClWeight& Lam, int r, int s, int ellprime,
                            long long truncation_degree,
                            BranchingDiagnostics* diag) {
  int n = Lam.n();
  int ell = Lam.level();
  if (ell < 2) throw BadLevel("branching_fermionic: need level >= 2");
  if (r < 1 || s < 1 || s > n - 1 || r > ellprime)
    throw BadLevel("branching_fermionic: bad (r, s)");
  if (ellprime >= ell)
    throw BadLevel("branching_fermionic: need ell' < ell");

  std::vector<int> lambda_parts = base_partition(Lam);
  int base_size = std::accumulate(lambda_parts.begin(), lambda_parts.end(), 0);
  QSeries out;
  out.truncation_degree = truncation_degree;
  if (diag) diag->lambda_choice = lambda_parts;
  // Selection rule: |lambda| must be congruent to rs mod n for the
  // finitization to exist at all; otherwise the series vanishes.
  if ((static_cast<long long>(r) * s - base_size) % n != 0) {
    if (diag) diag->selection_rule_ok = false;
    out.offset = Rat(0);
    return out;
  }
  Partition lambda(lambda_parts, n);
  if (lambda[0] - lambda[n - 1] > ell)
    throw LevelTooSmall("branching_fermionic: lambda not level-restricted");

  std::vector<Tableau> witnesses = level_witness_set(lambda);
  if (witnesses.size() >= 20)
    throw TooLarge("branching_fermionic: witness set too large");
  long long size = lambda.size();
  Rat prefactor = Rat(static_cast<long long>(r) * s * (s - n), 2LL * n);
  for (int j = 1; j <= n; ++j) {
    Rat d = Rat(lambda[j - 1]) - Rat(size, n);
    prefactor = prefactor + Rat(1, 2LL * ell) * d * d;
  }

  struct CtxVec {
    int ell, n;
    size_t idx(int i, int a) const {
      return static_cast<size_t>((i - 1) * (n - 1) + (a - 1));
    }
  } iv{ell, n};
  int dim = (ell - 1) * (n - 1);

  std::vector<std::pair<Rat, QPoly>> terms;
  Rat emin(0);
  bool have_emin = false;

  for (unsigned mask = 1; mask < (1u << witnesses.size()); ++mask) {
    int sign = (__builtin_popcount(mask) % 2 == 1) ? 1 : -1;
    std::vector<int> f = subset_correction(lambda, ell, witnesses, mask);
    std::vector<int> u = u_vector_direct(lambda, ell, f);

    // exact rational matrices per S
    auto clinv = [&](int i, int j) { return cartan_inverse_entry(ell - 1, i, j); };
    auto cninv = [&](int a, int b) { return cartan_inverse_entry(n - 1, a, b); };
    // (C^{-1} (x) C^{-1}) u and (I (x) C^{-1}) u
    std::vector<Rat> cninv_u(static_cast<size_t>(dim), Rat(0));
    for (int i = 1; i <= ell - 1; ++i)
      for (int a = 1; a <= n - 1; ++a) {
        Rat v(0);
        for (int b = 1; b <= n - 1; ++b)
          v = v + cninv(a, b) * Rat(u[iv.idx(i, b)]);
        cninv_u[iv.idx(i, a)] = v;
      }
    std::vector<Rat> clcn_u(static_cast<size_t>(dim), Rat(0));
    for (int i = 1; i <= ell - 1; ++i)
      for (int a = 1; a <= n - 1; ++a) {
        Rat v(0);
        for (int j = 1; j <= ell - 1; ++j)
          v = v + clinv(i, j) * cninv_u[iv.idx(j, a)];
        clcn_u[iv.idx(i, a)] = v;
      }
    Rat u_quad(0);
    for (int i = 1; i <= ell - 1; ++i)
      for (int a = 1; a <= n - 1; ++a)
        u_quad = u_quad + Rat(u[iv.idx(i, a)]) * clcn_u[iv.idx(i, a)];
    u_quad = Rat(1, 2) * u_quad;

    // Enumerate m >= 0 in growing boxes; positive-definiteness of the
    // quadratic form guarantees only finitely many terms reach the window.
    std::vector<int> m(static_cast<size_t>(dim), 0);
    int idle_shells = 0;
    for (int B = 0; B <= 80 && idle_shells < 2; ++B) {
      bool contributed = false;
      std::function<void(int, bool)> rec = [&](int pos, bool onshell) {
        if (pos == dim) {
          if (B > 0 && !onshell) return;  // only the new shell
          // integrality conditions
          for (int a = 1; a <= n - 1; ++a) {
            Rat v(0);
            for (int b = 1; b <= n - 1; ++b)
              v = v + cninv(a, b) * Rat(m[iv.idx(ell - 1, b)]);
            v = v - clcn_u[iv.idx(ell - 1, a)];
            Rat acc(0);
            for (int j = 1; j <= a; ++j)
              acc = acc + Rat(lambda[j - 1]) - Rat(size, n);
            v = v - acc / Rat(ell);
            if (!v.is_integer()) return;
          }
          // n_i^{(a)}: finite multiplicities for i != ell'; at i = ell' the
          // multiplicity diverges but its fractional part is M-independent,
          // so integrality must still hold for the family to be nonempty.
          std::vector<int> nvec(static_cast<size_t>(dim), 0);
          for (int i = 1; i <= ell - 1; ++i) {
            for (int a = 1; a <= n - 1; ++a) {
              // (C (x) C^{-1}) m at (i, a)
              Rat cm(0);
              for (int b = 1; b <= n - 1; ++b) {
                Rat mi = Rat(2) * Rat(m[iv.idx(i, b)]);
                if (i > 1) mi = mi - Rat(m[iv.idx(i - 1, b)]);
                if (i < ell - 1) mi = mi - Rat(m[iv.idx(i + 1, b)]);
                cm = cm + cninv(a, b) * mi;
              }
              Rat v = -cm;
              for (int b = 1; b <= n - 1; ++b) {
                int extra = u[iv.idx(i, b)] + ((i == r && b == s) ? 1 : 0);
                v = v + cninv(a, b) * Rat(extra);
              }
              if (!v.is_integer()) return;
              if (i == ellprime) continue;
              if (v.num < 0) return;
              nvec[iv.idx(i, a)] = static_cast<int>(v.as_integer());
            }
          }
          // exponent
          Rat expo(0);
          for (int i = 1; i <= ell - 1; ++i)
            for (int a = 1; a <= n - 1; ++a) {
              Rat cm(0);
              for (int b = 1; b <= n - 1; ++b) {
                Rat mi = Rat(2) * Rat(m[iv.idx(i, b)]);
                if (i > 1) mi = mi - Rat(m[iv.idx(i - 1, b)]);
                if (i < ell - 1) mi = mi - Rat(m[iv.idx(i + 1, b)]);
                cm = cm + cninv(a, b) * mi;
              }
              expo = expo + Rat(m[iv.idx(i, a)]) * (Rat(1, 2) * cm - cninv_u[iv.idx(i, a)]);
            }
          expo = expo + u_quad;
          if (have_emin && (expo - emin).num > 0 &&
              !((expo - emin) < Rat(truncation_degree + 1)))
            return;  // beyond the window
          QPoly factor = QPoly::monomial(0, sign);
          for (int i = 1; i <= ell - 1; ++i) {
            if (i == ellprime) continue;
            for (int a = 1; a <= n - 1; ++a)
              factor = factor * q_binomial(m[iv.idx(i, a)], nvec[iv.idx(i, a)]);
          }
          for (int a = 1; a <= n - 1; ++a)
            factor = (factor * inv_q_pochhammer(m[iv.idx(ellprime, a)],
                                                truncation_degree))
                         .truncated(truncation_degree);
          if (factor.is_zero()) return;
          terms.emplace_back(expo, factor);
          if (!have_emin || expo < emin) {
            emin = expo;
            have_emin = true;
          }
          contributed = true;
          return;
        }
        for (int v = 0; v <= B; ++v) {
          m[static_cast<size_t>(pos)] = v;
          rec(pos + 1, onshell || v == B);
        }
      };
      rec(0, false);
      if (B > 0) idle_shells = contributed ? 0 : idle_shells + 1;
    }
  }

  if (terms.empty()) {
    out.offset = Rat(0);
    return out;
  }
  out.offset = prefactor + emin;
  QPoly acc;
  for (auto& [e, poly] : terms) {
    Rat rel = e - emin;
    if (!rel.is_integer())
      throw InternalInconsistency("branching_fermionic: misaligned exponents");
    long long sh = rel.as_integer();
    if (sh > truncation_degree) continue;
    acc += poly.shifted(sh).truncated(truncation_degree);
  }
  for (auto& [e, c] : acc.terms()) out.coeffs.emplace(e, c);
  return out;
}

QPoly branch_limit_approximant(const ClWeight& Lam, const ClWeight& LamPrime,
                               const ClWeight& LamDoublePrime, int k, int N) {
  int n = Lam.n();
  int ellprime = LamPrime.level();
  if (N % n != 0) throw Error("branch_limit_approximant: N must be a multiple of n");
  Path gs = ground_state_path(LamPrime, k, N + 1);
  Tableau bbar1 = gs.factors[static_cast<size_t>(N)];  // leftmost step

  RectSeq R(static_cast<size_t>(N), Rect{k, ellprime});
  // weight condition: content differences match Lam - Lam' - Lam''
  std::vector<int> want(static_cast<size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i)
    want[static_cast<size_t>(i - 1)] = Lam.z[static_cast<size_t>(i)] -
                                       LamPrime.z[static_cast<size_t>(i)] -
                                       LamDoublePrime.z[static_cast<size_t>(i)];
  QPoly out;
  long long norm = 0;
  {
    Path p = gs;  // first N steps plus the appended step
    Path trunc;
    trunc.n = n;
    trunc.shapes.assign(static_cast<size_t>(N + 1), Rect{k, ellprime});
    trunc.factors.resize(static_cast<size_t>(N + 1));
    trunc.factors[0] = bbar1;
    for (int j = 0; j < N; ++j)
      trunc.factors[static_cast<size_t>(j + 1)] =
          gs.factors[static_cast<size_t>(j + 1)];
    norm = energy(trunc);
  }
  for_each_path(n, R, {}, [&](const Path& p) {
    for (int i = 0; i < n; ++i) {
      int sum = LamPrime.z[static_cast<size_t>(i)] + LamDoublePrime.z[static_cast<size_t>(i)];
      if (eps_path(p, i) > sum) return;
    }
    std::vector<int> c = p.content();
    for (int i = 1; i <= n - 1; ++i)
      if (c[static_cast<size_t>(i - 1)] - c[static_cast<size_t>(i)] !=
          want[static_cast<size_t>(i - 1)])
        return;
    Path ext;
    ext.n = n;
    ext.shapes.assign(static_cast<size_t>(N + 1), Rect{k, ellprime});
    ext.factors.resize(static_cast<size_t>(N + 1));
    ext.factors[0] = bbar1;
    for (int j = 0; j < N; ++j) ext.factors[static_cast<size_t>(j + 1)] = p.factors[static_cast<size_t>(j)];
    out.add_term(energy(ext) - norm, 1);
  });
  return out;
}

}  // namespace kostka
