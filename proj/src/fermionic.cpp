#include "kostka/fermionic.hpp"

#include <algorithm>
#include <functional>

#include "kostka/path.hpp"

namespace kostka {

MNSystem MNSystem::build(const Partition& lambda, const RectSeq& R, int ell) {
  MNSystem s;
  s.ell = ell;
  s.n = lambda.rank();
  s.L.assign(static_cast<size_t>(ell),
             std::vector<int>(static_cast<size_t>(s.n), 0));
  for (const Rect& r : R) {
    if (r.rows > s.n) throw LevelTooSmall("MNSystem: rectangle taller than n");
    if (r.rows == s.n) continue;  // invisible to the (m, n) window
    if (r.cols > ell)
      throw LevelTooSmall("MNSystem: rectangle exceeds the (ell, n) window");
    s.L[static_cast<size_t>(r.cols - 1)][static_cast<size_t>(r.rows - 1)]++;
  }
  return s;
}

void require_level_restricted_data(const Partition& lambda, const RectSeq& R,
                                   int ell) {
  int n = lambda.rank();
  if (lambda[0] - lambda[n - 1] > ell)
    throw LevelTooSmall("lambda is not restricted of level ell");
  for (const Rect& r : R)
    if (r.rows < n && r.cols > ell)
      throw LevelTooSmall("a rectangle is not restricted of level ell");
}

std::vector<int> witness_correction(const Partition& lambda, int ell,
                                    const Tableau& t) {
  int n = lambda.rank();
  int ltilde = ell - (lambda[0] - lambda[n - 1]);
  if (ltilde < 0) throw LevelTooSmall("witness_correction: ell too small");
  std::vector<int> f(static_cast<size_t>((ell - 1) * (n - 1)), 0);
  auto col_entry = [&](int j, int col) {
    return t.rows[static_cast<size_t>(j - 1)][static_cast<size_t>(col - 1)];
  };
  for (int a = 1; a <= n - 1; ++a)
    for (int i = 1; i <= ell - 1; ++i) {
      int v = 0;
      for (int j = 1; j <= lambda[a - 1] - lambda[n - 1]; ++j)
        v -= (i >= ltilde + col_entry(j, a)) ? 1 : 0;
      if (a + 1 <= n - 1)
        for (int j = 1; j <= lambda[a] - lambda[n - 1]; ++j)
          v += (i >= ltilde + col_entry(j, a + 1)) ? 1 : 0;
      f[static_cast<size_t>((i - 1) * (n - 1) + (a - 1))] = v;
    }
  return f;
}

std::vector<int> subset_correction(const Partition& lambda, int ell,
                                   const std::vector<Tableau>& witnesses,
                                   unsigned mask) {
  if (mask == 0) throw Error("subset_correction: empty subset");
  std::vector<int> best;
  for (size_t w = 0; w < witnesses.size(); ++w) {
    if (!(mask & (1u << w))) continue;
    std::vector<int> f = witness_correction(lambda, ell, witnesses[w]);
    if (best.empty())
      best = f;
    else
      for (size_t k = 0; k < f.size(); ++k) best[k] = std::min(best[k], f[k]);
  }
  return best;
}

std::vector<int> u_vector_direct(const Partition& lambda, int ell,
                                 const std::vector<int>& f) {
  int n = lambda.rank();
  std::vector<int> u(f.size(), 0);
  auto F = [&](int i, int a) -> int {
    if (i == 0) return 0;
    if (i == ell) return -(lambda[a - 1] - lambda[a]);
    return f[static_cast<size_t>((i - 1) * (n - 1) + (a - 1))];
  };
  for (int a = 1; a <= n - 1; ++a)
    for (int i = 1; i <= ell - 1; ++i)
      u[static_cast<size_t>((i - 1) * (n - 1) + (a - 1))] =
          -F(i - 1, a) + 2 * F(i, a) - F(i + 1, a);
  return u;
}

std::vector<int> u_vector_cartan(const Partition& lambda, int ell,
                                 const std::vector<int>& f) {
  int n = lambda.rank();
  std::vector<int> u(f.size(), 0);
  if (ell < 2) return u;
  auto F = [&](int i, int a) -> int {
    if (i < 1 || i > ell - 1) return 0;
    return f[static_cast<size_t>((i - 1) * (n - 1) + (a - 1))];
  };
  for (int a = 1; a <= n - 1; ++a) {
    for (int i = 1; i <= ell - 1; ++i)
      u[static_cast<size_t>((i - 1) * (n - 1) + (a - 1))] =
          -F(i - 1, a) + 2 * F(i, a) - F(i + 1, a);
    u[static_cast<size_t>((ell - 2) * (n - 1) + (a - 1))] +=
        lambda[a - 1] - lambda[a];
  }
  return u;
}

Rat cartan_inverse_entry(int size, int i, int j) {
  return Rat(std::min(i, j)) - Rat(static_cast<long long>(i) * j, size + 1);
}

Rat g_offset(const Partition& lambda, const RectSeq& R, int ell) {
  int n = lambda.rank();
  MNSystem s = MNSystem::build(lambda, R, ell);
  Rat g(rect_pair_overlap(R));
  auto Lbar = [&](int i, int a) {
    int v = 0;
    for (int j = 1; j <= ell; ++j)
      v += std::min(i, j) * s.L[static_cast<size_t>(j - 1)][static_cast<size_t>(a - 1)];
    return v;
  };
  for (int a = 1; a <= n - 1; ++a)
    for (int b = 1; b <= n - 1; ++b)
      for (int j = 1; j <= ell; ++j)
        g = g - Rat(1, 2) * cartan_inverse_entry(n - 1, a, b) *
                    Rat(s.L[static_cast<size_t>(j - 1)][static_cast<size_t>(a - 1)]) *
                    Rat(Lbar(j, b));
  long long size = lambda.size();
  for (int j = 1; j <= n; ++j) {
    Rat d = Rat(lambda[j - 1]) - Rat(size, n);
    g = g + Rat(1, 2 * static_cast<long long>(ell)) * d * d;
  }
  return g;
}

QPoly fermionic_kostka(const Partition& lambda, const RectSeq& R) {
  if (lambda.size() != total_cells(R))
    throw SizeMismatch("fermionic_kostka: |lambda| != |R|");
  QPoly out;
  for (const Configuration& nu : enumerate_configs(lambda, R)) {
    QPoly term = QPoly::monomial(charges(nu).c, 1);
    for (int k = 1; k < nu.rank(); ++k) {
      const Parts& p = nu.nu(k);
      int maxi = p.empty() ? 0 : p[0];
      for (int i = 1; i <= maxi; ++i) {
        int m = part_multiplicity(p, i);
        if (m > 0) term = term * q_binomial(m, vacancy(nu, k, i));
      }
    }
    out += term;
  }
  return out;
}

QPoly fermionic_level_kostka(const Partition& lambda, const RectSeq& R, int ell) {
  if (lambda.size() != total_cells(R))
    throw SizeMismatch("fermionic_level_kostka: |lambda| != |R|");
  require_level_restricted_data(lambda, R, ell);
  int n = lambda.rank();
  std::vector<Tableau> witnesses = level_witness_set(lambda);
  if (witnesses.size() >= 20)
    throw TooLarge("fermionic_level_kostka: witness set too large");
  std::vector<Configuration> configs = enumerate_configs(lambda, R, ell);
  QPoly out;
  for (unsigned mask = 1; mask < (1u << witnesses.size()); ++mask) {
    int sign = (__builtin_popcount(mask) % 2 == 1) ? 1 : -1;
    std::vector<int> f = subset_correction(lambda, ell, witnesses, mask);
    for (const Configuration& nu : configs) {
      QPoly term = QPoly::monomial(charges(nu).c, sign);
      bool dead = false;
      for (int k = 1; k <= n - 1 && !dead; ++k)
        for (int i = 1; i <= ell - 1 && !dead; ++i) {
          int m = part_multiplicity(nu.nu(k), i);
          int p = vacancy(nu, k, i) +
                  f[static_cast<size_t>((i - 1) * (n - 1) + (k - 1))];
          if (p < 0) {
            dead = true;
            break;
          }
          if (m > 0) term = term * q_binomial(m, p);
        }
      if (!dead) out += term;
    }
  }
  if (!out.nonnegative())
    throw InternalInconsistency("fermionic_level_kostka: negative coefficient");
  return out;
}

// Quadratic/bilinear helpers over Rat for flattened (i, a) vectors.
namespace {

struct MNContext {
  int ell, n;
  std::vector<std::vector<Rat>> cl_inv;  // (ell-1)^2
  std::vector<std::vector<Rat>> cn_inv;  // (n-1)^2

  explicit MNContext(int ell_, int n_) : ell(ell_), n(n_) {
    cl_inv.assign(static_cast<size_t>(ell - 1),
                  std::vector<Rat>(static_cast<size_t>(ell - 1)));
    for (int i = 1; i <= ell - 1; ++i)
      for (int j = 1; j <= ell - 1; ++j)
        cl_inv[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
            cartan_inverse_entry(ell - 1, i, j);
    cn_inv.assign(static_cast<size_t>(n - 1),
                  std::vector<Rat>(static_cast<size_t>(n - 1)));
    for (int a = 1; a <= n - 1; ++a)
      for (int b = 1; b <= n - 1; ++b)
        cn_inv[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] =
            cartan_inverse_entry(n - 1, a, b);
  }

  size_t idx(int i, int a) const {
    return static_cast<size_t>((i - 1) * (n - 1) + (a - 1));
  }

  // Cartan matrix applied in the i-slot.
  template <typename T>
  std::vector<Rat> apply_cartan_i(const std::vector<T>& v) const {
    std::vector<Rat> out(v.size());
    for (int i = 1; i <= ell - 1; ++i)
      for (int a = 1; a <= n - 1; ++a) {
        Rat s = Rat(2) * Rat(v[idx(i, a)]);
        if (i > 1) s = s - Rat(v[idx(i - 1, a)]);
        if (i < ell - 1) s = s - Rat(v[idx(i + 1, a)]);
        out[idx(i, a)] = s;
      }
    return out;
  }

  // Inverse Cartan applied in the a-slot.
  template <typename T>
  std::vector<Rat> apply_cninv_a(const std::vector<T>& v) const {
    std::vector<Rat> out(v.size());
    for (int i = 1; i <= ell - 1; ++i)
      for (int a = 1; a <= n - 1; ++a) {
        Rat s(0);
        for (int b = 1; b <= n - 1; ++b)
          s = s + cn_inv[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] *
                      Rat(v[idx(i, b)]);
        out[idx(i, a)] = s;
      }
    return out;
  }

  // Inverse Cartan applied in the i-slot.
  template <typename T>
  std::vector<Rat> apply_clinv_i(const std::vector<T>& v) const {
    std::vector<Rat> out(v.size());
    for (int i = 1; i <= ell - 1; ++i)
      for (int a = 1; a <= n - 1; ++a) {
        Rat s(0);
        for (int j = 1; j <= ell - 1; ++j)
          s = s + cl_inv[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] *
                      Rat(v[idx(j, a)]);
        out[idx(i, a)] = s;
      }
    return out;
  }

  template <typename T>
  static Rat dot(const std::vector<T>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (size_t k = 0; k < a.size(); ++k) s = s + Rat(a[k]) * b[k];
    return s;
  }
};

}  // namespace

QPoly kostka_level_mn(const Partition& lambda, const RectSeq& R, int ell,
                      bool prune_negative_nl) {
  if (lambda.size() != total_cells(R))
    throw SizeMismatch("kostka_level_mn: |lambda| != |R|");
  require_level_restricted_data(lambda, R, ell);
  int n = lambda.rank();
  MNSystem sys = MNSystem::build(lambda, R, ell);
  MNContext ctx(ell, n);
  std::vector<Tableau> witnesses = level_witness_set(lambda);
  if (witnesses.size() >= 20) throw TooLarge("kostka_level_mn: witness set too large");
  Rat g = g_offset(lambda, R, ell);

  // Sizes |nu^(a)| fixed by lambda and R.
  std::vector<int> sz;
  for (int a = 1; a <= n - 1; ++a) sz.push_back(required_size(lambda, R, a));

  // Enumerate multiplicity vectors n_i^(a), i = 1..ell-1, with
  // sum_i i*n_i <= |nu^(a)| and the remainder divisible by ell
  // (the remainder/ell is the multiplicity of parts of size ell).
  int slack = prune_negative_nl ? 0 : 2 * ell;
  std::vector<std::vector<std::vector<int>>> per_a;  // choices per a
  for (int a = 1; a <= n - 1; ++a) {
    std::vector<std::vector<int>> choices;
    std::vector<int> cur(static_cast<size_t>(ell - 1), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
      if (i == ell) {
        int rem = sz[static_cast<size_t>(a - 1)] - used;
        if (rem % ell == 0 && (prune_negative_nl ? rem >= 0 : true))
          choices.push_back(cur);
        return;
      }
      for (int v = 0; used + v * i <= sz[static_cast<size_t>(a - 1)] + slack; ++v) {
        cur[static_cast<size_t>(i - 1)] = v;
        rec(i + 1, used + v * i);
      }
      cur[static_cast<size_t>(i - 1)] = 0;
    };
    rec(1, 0);
    per_a.push_back(std::move(choices));
  }

  QPoly out;
  for (unsigned mask = 1; mask < (1u << witnesses.size()); ++mask) {
    int sign = (__builtin_popcount(mask) % 2 == 1) ? 1 : -1;
    std::vector<int> f = subset_correction(lambda, ell, witnesses, mask);
    std::vector<int> u = u_vector_direct(lambda, ell, f);
    Rat u_quad = Rat(1, 2) *
                 MNContext::dot(u, ctx.apply_clinv_i(ctx.apply_cninv_a(u)));
    std::vector<Rat> cninv_u = ctx.apply_cninv_a(u);

    // Assemble n-vectors coordinate-block by block (one block per a).
    std::vector<size_t> pick(static_cast<size_t>(n - 1), 0);
    std::function<void(int)> rec = [&](int a) {
      if (a == n) {
        std::vector<int> nvec(static_cast<size_t>((ell - 1) * (n - 1)), 0);
        for (int aa = 1; aa <= n - 1; ++aa)
          for (int i = 1; i <= ell - 1; ++i)
            nvec[ctx.idx(i, aa)] =
                per_a[static_cast<size_t>(aa - 1)][pick[static_cast<size_t>(aa - 1)]]
                     [static_cast<size_t>(i - 1)];
        // rhs = L + u - (I (x) C_n) n ; m = (C_ell^{-1} (x) I) rhs
        std::vector<int> rhs(nvec.size(), 0);
        for (int i = 1; i <= ell - 1; ++i)
          for (int aa = 1; aa <= n - 1; ++aa) {
            int v = sys.L[static_cast<size_t>(i - 1)][static_cast<size_t>(aa - 1)] +
                    u[ctx.idx(i, aa)] - 2 * nvec[ctx.idx(i, aa)];
            if (aa > 1) v += nvec[ctx.idx(i, aa - 1)];
            if (aa < n - 1) v += nvec[ctx.idx(i, aa + 1)];
            rhs[ctx.idx(i, aa)] = v;
          }
        std::vector<Rat> mrat = ctx.apply_clinv_i(rhs);
        std::vector<int> m(mrat.size(), 0);
        for (size_t k = 0; k < mrat.size(); ++k) {
          if (!mrat[k].is_integer() || mrat[k].num < 0) return;
          m[k] = static_cast<int>(mrat[k].as_integer());
        }
        // exponent = 1/2 m (C (x) C^{-1}) m - m (I (x) C^{-1}) u + u-part + g
        std::vector<Rat> cm = ctx.apply_cninv_a(ctx.apply_cartan_i(m));
        Rat expo = Rat(1, 2) * MNContext::dot(m, cm) - MNContext::dot(m, cninv_u) +
                   u_quad + g;
        if (!expo.is_integer())
          throw InternalInconsistency("kostka_level_mn: non-integral exponent");
        QPoly term = QPoly::monomial(expo.as_integer(), sign);
        for (int i = 1; i <= ell - 1; ++i)
          for (int aa = 1; aa <= n - 1; ++aa)
            term = term * q_binomial(m[ctx.idx(i, aa)], nvec[ctx.idx(i, aa)]);
        out += term;
        return;
      }
      for (size_t c = 0; c < per_a[static_cast<size_t>(a - 1)].size(); ++c) {
        pick[static_cast<size_t>(a - 1)] = c;
        rec(a + 1);
      }
    };
    if (n >= 2 && ell >= 1) rec(1);
  }
  if (!out.nonnegative())
    throw InternalInconsistency("kostka_level_mn: negative coefficient");
  return out;
}

QPoly kostka_level_weyl(const Partition& lambda, const RectSeq& R, int ell,
                        int threads) {
  if (lambda.size() != total_cells(R))
    throw SizeMismatch("kostka_level_weyl: |lambda| != |R|");
  require_level_restricted_data(lambda, R, ell);
  int n = lambda.rank();
  auto buckets = path_energy_by_content(n, R, threads);

  std::vector<int> rho;
  for (int i = 0; i < n; ++i) rho.push_back(n - 1 - i);
  int size = lambda.size();

  // permutations with sign
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  std::vector<std::pair<std::vector<int>, int>> perms;
  std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& p,
                                                             int k, int sign) {
    if (k == n) {
      perms.emplace_back(p, sign);
      return;
    }
    for (int j = k; j < n; ++j) {
      std::swap(p[static_cast<size_t>(k)], p[static_cast<size_t>(j)]);
      gen(p, k + 1, j == k ? sign : -sign);
      std::swap(p[static_cast<size_t>(k)], p[static_cast<size_t>(j)]);
    }
  };
  gen(perm, 0, 1);

  int q = ell + n;
  QPoly out;
  std::vector<int> beta(static_cast<size_t>(n), 0);
  std::function<void(int, int)> betarec = [&](int j, int partial) {
    if (j == n - 1) {
      int last = -partial;
      int lo = (lambda[n - 1] + rho[static_cast<size_t>(n - 1)] - (n - 1 + size));
      // floor/ceil bounds for beta_j derived from 0 <= x_j <= n-1+|lambda|
      if (last * q > lambda[n - 1] + rho[static_cast<size_t>(n - 1)] ||
          last * q < lo)
        return;
      beta[static_cast<size_t>(n - 1)] = last;
      // assemble term for every permutation
      std::vector<int> x(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        x[static_cast<size_t>(i)] =
            lambda[i] + rho[static_cast<size_t>(i)] - q * beta[static_cast<size_t>(i)];
      long long bb = 0, lb = 0;
      for (int i = 0; i < n; ++i) {
        bb += static_cast<long long>(beta[static_cast<size_t>(i)]) *
              beta[static_cast<size_t>(i)];
        lb += static_cast<long long>(lambda[i] + rho[static_cast<size_t>(i)]) *
              beta[static_cast<size_t>(i)];
      }
      long long half = static_cast<long long>(q) * bb;
      if (half % 2 != 0)
        throw InternalInconsistency("kostka_level_weyl: odd quadratic term");
      long long expo0 = -half / 2 + lb;
      for (auto& [tau, sign] : perms) {
        std::vector<int> v(static_cast<size_t>(n));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          v[static_cast<size_t>(i)] =
              x[static_cast<size_t>(tau[static_cast<size_t>(i)])] -
              rho[static_cast<size_t>(i)];
          if (v[static_cast<size_t>(i)] < 0) ok = false;
        }
        if (!ok) continue;
        auto it = buckets.find(v);
        if (it == buckets.end()) continue;
        for (auto& [e, c] : it->second.terms())
          out.add_term(expo0 + e, sign * c);
      }
      return;
    }
    int hi_num = lambda[j] + rho[static_cast<size_t>(j)];
    int lo_num = hi_num - (n - 1 + size);
    int lo = (lo_num + q - 1) / q;
    if (lo_num <= 0) lo = -((-lo_num) / q);
    int hi = hi_num >= 0 ? hi_num / q : -((-hi_num + q - 1) / q);
    for (int b = lo; b <= hi; ++b) {
      beta[static_cast<size_t>(j)] = b;
      betarec(j + 1, partial + b);
    }
  };
  betarec(0, 0);
  if (!out.is_zero() && out.min_degree() < 0)
    throw InternalInconsistency("kostka_level_weyl: negative exponent survived");
  if (!out.nonnegative())
    throw InternalInconsistency("kostka_level_weyl: negative coefficient");
  return out;
}

}  // namespace kostka
