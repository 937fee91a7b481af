#include "kostka/verify.hpp"

#include <algorithm>
#include <set>

#include "kostka/format.hpp"

namespace kostka {

CheckReport verify_bijection_instance(const Partition& lambda, const RectSeq& R,
                                      std::optional<int> ell) {
  CheckReport rep;
  int n = lambda.rank();
  std::vector<LRTableau> domain = enumerate_lr(lambda, R, Family::RLR);
  std::set<RiggedConfig> images;
  std::vector<Tableau> witnesses;
  if (ell) witnesses = level_witness_set(lambda);
  for (const LRTableau& T : domain) {
    RiggedConfig rc = tableau_to_rc(T, n);
    rep.require(images.insert(rc).second, "bijection image repeated");
    LRTableau back = rc_to_tableau(rc);
    rep.require(relabel_std(back).tab == T.tab, "round trip failed");
    if (static_cast<int>(R.size()) <= 6) {
      int c_avg = charge(T, ChargeMethod::ViaAverage);
      int c_rc = charges(rc.config).c + rc.label_sum();
      rep.require(c_avg == c_rc, "charge not preserved");
    }
    if (ell) {
      bool lr_side = is_level_restricted_lr(T, *ell, n);
      bool rc_side = is_level_restricted_rc(rc, *ell, nullptr, &witnesses);
      rep.require(lr_side == rc_side, "level restriction not preserved");
    }
  }
  // Image must exhaust RC(lambda; R).
  size_t total = 0;
  for (const Configuration& nu : enumerate_configs(lambda, R))
    total += enumerate_riggings(nu).size();
  rep.require(total == images.size(), "bijection is not onto");
  return rep;
}

static RectSeq rho_columns(const Partition& rho) {
  RectSeq out;
  Parts t = transpose(rho.trimmed());
  for (int h : t) out.push_back(Rect{h, 1});
  return out;
}

static Tableau rho_key(const Partition& rho) {
  Tableau t;
  Parts tr = transpose(rho.trimmed());
  Parts shape = rho.trimmed();
  t.rows.resize(shape.size());
  for (size_t r = 0; r < shape.size(); ++r)
    t.rows[r].resize(static_cast<size_t>(shape[r]));
  int next = 1;
  for (size_t c = 0; c < tr.size(); ++c)
    for (int r = 0; r < tr[c]; ++r)
      t.rows[static_cast<size_t>(r)][c] = next++;
  return t;
}

std::vector<LRTableau> enumerate_rlr_skew(const Partition& lambda,
                                          const Partition& rho,
                                          const RectSeq& R, int ell) {
  int n = lambda.rank();
  RectSeq Rall = rho_columns(rho);
  Rall.insert(Rall.end(), R.begin(), R.end());
  Tableau key = rho_key(rho);
  std::vector<LRTableau> out;
  for (const LRTableau& T : enumerate_lr(lambda, Rall, Family::RLR)) {
    bool match = true;
    for (size_t r = 0; r < key.rows.size() && match; ++r)
      for (size_t c = 0; c < key.rows[r].size() && match; ++c)
        if (T.tab.rows[r][c] != key.rows[r][c]) match = false;
    if (!match) continue;
    if (!is_level_restricted_lr(T, ell, n)) continue;
    out.push_back(T);
  }
  return out;
}

std::vector<RiggedConfig> enumerate_rc_skew(const Partition& lambda,
                                            const Partition& rho,
                                            const RectSeq& R, int ell) {
  int n = lambda.rank();
  RectSeq Rall = rho_columns(rho);
  Rall.insert(Rall.end(), R.begin(), R.end());
  std::vector<Tableau> lam_witnesses = level_witness_set(lambda);

  // witnesses over CST(rho') for the imposed minima
  Parts diffs;
  for (int a = 1; a < n; ++a) diffs.push_back(rho[a - 1] - rho[n - 1]);
  while (!diffs.empty() && diffs.back() == 0) diffs.pop_back();
  std::vector<Tableau> rho_witnesses =
      enumerate_cst(transpose(diffs), rho[0] - rho[n - 1]);

  std::vector<RiggedConfig> out;
  for (const Configuration& nu : enumerate_configs(lambda, Rall, ell)) {
    int imax = std::max(ell, rho[0]) + 1;
    for (const RiggedConfig& rc : enumerate_riggings(nu)) {
      if (!is_level_restricted_rc(rc, ell, nullptr, &lam_witnesses)) continue;
      bool found = false;
      for (const Tableau& t : rho_witnesses) {
        bool ok = true;
        for (int k = 1; k < n && ok; ++k)
          for (int i = 1; i <= imax && ok; ++i) {
            int m = minima_table(t, rho, k, i);
            if (m > vacancy(nu, k, i)) ok = false;
            if (ok && m > 0) {
              for (auto& [len, label] : rc.strings[static_cast<size_t>(k - 1)])
                if (len == i && label < m) ok = false;
            }
          }
        if (ok) {
          found = true;
          break;
        }
      }
      if (found) out.push_back(rc);
    }
  }
  return out;
}

CheckReport conjecture_skew_scan(int n, int max_size, int ell_max,
                                 int max_rect_side) {
  CheckReport rep;
  for (int size = 1; size <= max_size; ++size) {
    for (const Partition& lambda : partitions_of_rank(size, n)) {
      // subshapes rho of lambda (nonempty)
      std::vector<Partition> rhos;
      std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur,
                                                            int i) {
        if (i == n) {
          Partition rho(cur, n);
          if (rho.size() > 0) rhos.push_back(rho);
          return;
        }
        int hi = std::min(lambda[i], i > 0 ? cur[static_cast<size_t>(i - 1)] : lambda[i]);
        for (int v = 0; v <= hi; ++v) {
          cur.push_back(v);
          rec(cur, i + 1);
          cur.pop_back();
        }
      };
      std::vector<int> cur;
      rec(cur, 0);
      for (const Partition& rho : rhos) {
        int rest = size - rho.size();
        for (const RectSeq& R : rect_menu(rest, max_rect_side)) {
          for (int ell = 1; ell <= ell_max; ++ell) {
            if (lambda[0] - lambda[n - 1] > ell) continue;
            bool rect_ok = true;
            for (const Rect& r : R)
              if (r.rows < n && r.cols > ell) rect_ok = false;
            if (rho[0] - rho[n - 1] > ell) rect_ok = false;
            if (!rect_ok) continue;
            std::vector<LRTableau> tabs = enumerate_rlr_skew(lambda, rho, R, ell);
            std::set<RiggedConfig> lhs;
            for (const LRTableau& T : tabs) lhs.insert(tableau_to_rc(T, n));
            std::vector<RiggedConfig> rcs = enumerate_rc_skew(lambda, rho, R, ell);
            std::set<RiggedConfig> rhs(rcs.begin(), rcs.end());
            std::string where;
            for (int i = 0; i < n; ++i)
              where += (i ? "," : "lambda=") + std::to_string(lambda[i]);
            for (int i = 0; i < n; ++i)
              where += (i ? "," : " rho=") + std::to_string(rho[i]);
            where += " R=" + rects_str(R) + " ell=" + std::to_string(ell);
            rep.require(lhs == rhs, "skew discrepancy at " + where);
          }
        }
      }
    }
  }
  return rep;
}

std::vector<RectSeq> rect_menu(int total, int max_side) {
  std::vector<Rect> kinds;
  for (int h = 1; h <= max_side; ++h)
    for (int w = 1; w <= max_side; ++w) kinds.push_back(Rect{h, w});
  std::vector<RectSeq> out;
  RectSeq cur;
  std::function<void(int, size_t)> rec = [&](int rem, size_t k) {
    if (rem == 0) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    if (k == kinds.size()) return;
    rec(rem, k + 1);
    if (kinds[k].cells() <= rem) {
      cur.push_back(kinds[k]);
      rec(rem - kinds[k].cells(), k);
      cur.pop_back();
    }
  };
  rec(total, 0);
  return out;
}

std::vector<Partition> partitions_of_rank(int size, int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int hi) {
    if (static_cast<int>(cur.size()) > n) return;
    if (rem == 0) {
      out.emplace_back(cur, n);
      return;
    }
    if (static_cast<int>(cur.size()) == n) return;
    for (int v = std::min(rem, hi); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;
}

}  // namespace kostka
