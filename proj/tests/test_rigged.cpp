#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kostka/format.hpp"
#include "kostka/path.hpp"
#include "kostka/rigged.hpp"

using namespace kostka;

namespace {

Configuration worked_config() {
  // lambda = (3,2,2,1), R = ((2),(2,2),(1,1)), nu = ((2),(2,1),(1))
  Configuration nu;
  nu.lambda = Partition({3, 2, 2, 1}, 4);
  nu.R = {Rect{1, 2}, Rect{2, 2}, Rect{2, 1}};
  nu.nus = {{2}, {2, 1}, {1}};
  return nu;
}

}  // namespace

TEST_CASE("xi partitions") {
  RectSeq R = {Rect{1, 2}, Rect{2, 2}, Rect{2, 1}};
  CHECK(xi_partition(R, 1) == Parts({2}));
  CHECK(xi_partition(R, 2) == Parts({2, 1}));
  CHECK(xi_partition(R, 3) == Parts({}));
}

TEST_CASE("vacancy numbers of the worked configuration") {
  Configuration nu = worked_config();
  CHECK(vacancy(nu, 1, 2) == 1);
  CHECK(vacancy(nu, 2, 2) == 0);
  CHECK(vacancy(nu, 2, 1) == 0);
  CHECK(vacancy(nu, 3, 1) == 0);
  for (int k = 1; k <= 3; ++k) CHECK(vacancy(nu, k, 0) == 0);
  CHECK(is_admissible(nu));
}

TEST_CASE("vacancy stabilizes at lambda_k - lambda_{k+1}") {
  Configuration nu = worked_config();
  for (int k = 1; k <= 3; ++k) {
    int ell = std::max(2, nu.nu(k).empty() ? 0 : nu.nu(k)[0]);
    for (int i = ell + 2; i <= ell + 5; ++i)
      CHECK(vacancy(nu, k, i) == nu.lambda[k - 1] - nu.lambda[k]);
  }
}

TEST_CASE("charges of the worked configuration") {
  ChargeData cd = charges(worked_config());
  CHECK(cd.cc == 3);
  CHECK(cd.normR == 5);
  CHECK(cd.absP == 1);
  CHECK(cd.c == 1);
}

TEST_CASE("charge identities") {
  Partition lam({3, 2, 1}, 3);
  RectSeq R = {Rect{1, 2}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}};
  for (const Configuration& nu : enumerate_configs(lam, R)) {
    ChargeData cd = charges(nu);
    CHECK(cd.c + cd.cc + cd.absP == cd.normR);
    for (const RiggedConfig& rc : enumerate_riggings(nu)) {
      rc.validate();
      CHECK(cd.c + rc.label_sum() >= 0);
    }
  }
}

TEST_CASE("enumerate_configs for the level example") {
  Partition lam({3, 2, 1}, 3);
  RectSeq R = {Rect{1, 2}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}};
  std::vector<Configuration> level2 = enumerate_configs(lam, R, 2);
  CHECK(level2.size() == 2);
  std::set<std::vector<Parts>> nus;
  for (auto& c : level2) nus.insert(c.nus);
  CHECK(nus.count({{1, 1, 1}, {1}}) == 1);
  CHECK(nus.count({{2, 1}, {1}}) == 1);
  Configuration w = worked_config();
  auto all = enumerate_configs(w.lambda, w.R);
  CHECK(std::find(all.begin(), all.end(), w) != all.end());
}

TEST_CASE("riggings exhaust the boxes") {
  Partition lam({3, 2, 1}, 3);
  RectSeq R = {Rect{1, 2}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}};
  size_t total = 0;
  for (const Configuration& nu : enumerate_configs(lam, R)) {
    auto rigs = enumerate_riggings(nu);
    long long expect = 1;
    for (int k = 1; k < nu.rank(); ++k) {
      const Parts& p = nu.nu(k);
      int maxi = p.empty() ? 0 : p[0];
      for (int i = 1; i <= maxi; ++i) {
        int m = part_multiplicity(p, i);
        if (m > 0) expect *= q_binomial(m, vacancy(nu, k, i)).eval_one();
      }
    }
    CHECK(static_cast<long long>(rigs.size()) == expect);
    total += rigs.size();
  }
  CHECK(total == 8);  // K(1) for the worked level example
}

TEST_CASE("theta complements labels") {
  Partition lam({3, 2, 1}, 3);
  RectSeq R = {Rect{1, 2}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}};
  for (const Configuration& nu : enumerate_configs(lam, R)) {
    ChargeData cd = charges(nu);
    for (const RiggedConfig& rc : enumerate_riggings(nu)) {
      RiggedConfig t = theta(rc);
      CHECK(theta(t) == rc);
      // all-singular complements to all-zero labels
      bool all_singular = true, all_zero = true;
      for (int k = 1; k <= 2; ++k)
        for (auto& [len, label] : rc.strings[static_cast<size_t>(k - 1)])
          all_singular &= (label == vacancy(nu, k, len));
      for (auto& block : t.strings)
        for (auto& [len, label] : block) all_zero &= (label == 0);
      if (all_singular) CHECK(all_zero);
      // complement identity: c(theta(rc)) = ||R|| - cc(rc)
      int c_theta = cd.c + t.label_sum();
      int cc_rc = cd.cc + rc.label_sum();
      CHECK(c_theta == cd.normR - cc_rc);
    }
  }
}

TEST_CASE("modified vacancy numbers") {
  // vacuum shape: no witness letters, modified = plain
  Partition vac({2, 2}, 2);
  RectSeq R = {Rect{1, 2}, Rect{1, 1}, Rect{1, 1}};
  CHECK(level_witness_shape(vac) == Parts{});
  for (const Configuration& nu : enumerate_configs(vac, R)) {
    Tableau empty;
    for (int i = 1; i <= 3; ++i)
      CHECK(modified_vacancy(nu, empty, 1, i, 2) == vacancy(nu, 1, i));
  }

  // two-corner case: P(nu,t) = P(nu) - delta_{k,alpha} max(i - ltilde, 0)
  Partition two({2, 2, 1}, 3);  // alpha = 2
  RectSeq R2(5, Rect{1, 1});
  auto wits = level_witness_set(two);
  REQUIRE(wits.size() == 1);
  int ell = 2, ltilde = ell - 1;
  for (const Configuration& nu : enumerate_configs(two, R2, ell))
    for (int k = 1; k <= 2; ++k)
      for (int i = 1; i <= ell; ++i)
        CHECK(modified_vacancy(nu, wits[0], k, i, ell) ==
              vacancy(nu, k, i) - (k == 2 ? std::max(i - ltilde, 0) : 0));
}

TEST_CASE("modified vacancy rejects bad witnesses") {
  Partition lam({3, 2, 1}, 3);
  RectSeq R = {Rect{1, 2}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}};
  Configuration nu = enumerate_configs(lam, R, 2).front();
  Tableau wrong_shape;
  wrong_shape.rows = {{1, 1, 1}};
  CHECK_THROWS_AS(modified_vacancy(nu, wrong_shape, 1, 1, 2), BadWitness);
  CHECK_THROWS_AS(modified_vacancy(nu, level_witness_set(lam)[0], 1, 1, 1),
                  LevelTooSmall);
}

TEST_CASE("modified vacancy vanishes at and beyond the level") {
  Partition lam({3, 2, 1}, 3);
  RectSeq R = {Rect{1, 2}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}};
  for (int ell = 2; ell <= 3; ++ell)
    for (const Configuration& nu : enumerate_configs(lam, R, ell))
      for (const Tableau& t : level_witness_set(lam))
        for (int k = 1; k <= 2; ++k)
          for (int i = ell; i <= ell + 2; ++i)
            CHECK(modified_vacancy(nu, t, k, i, ell) == 0);
}

TEST_CASE("level-restricted rigged configurations of the worked example") {
  Partition lam({3, 2, 1}, 3);
  RectSeq R = {Rect{1, 2}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}};
  CHECK(level_witness_set(lam).size() == 2);
  std::multiset<int> charges_found;
  for (const Configuration& nu : enumerate_configs(lam, R, 2)) {
    ChargeData cd = charges(nu);
    for (const RiggedConfig& rc : enumerate_riggings(nu)) {
      Tableau witness;
      if (is_level_restricted_rc(rc, 2, &witness)) {
        charges_found.insert(cd.c + rc.label_sum());
        CHECK(witness.is_column_strict());
      }
    }
  }
  CHECK(charges_found == std::multiset<int>({2, 3, 4}));
}

TEST_CASE("level restriction fails fast on wide strings") {
  Configuration nu;
  nu.lambda = Partition({2, 2}, 2);
  nu.R = {Rect{1, 2}, Rect{1, 2}};
  nu.nus = {{2}};
  REQUIRE(is_admissible(nu));
  for (const RiggedConfig& rc : enumerate_riggings(nu)) {
    CHECK_FALSE(is_level_restricted_rc(rc, 1));
    CHECK(is_level_restricted_rc(rc, 2));  // vacuum shape: x <= P suffices
  }
}

TEST_CASE("minima table") {
  // rectangular rho with n rows: empty witness shape, M = 0
  Partition rho({1, 1}, 2);
  Tableau empty;
  for (int i = 1; i <= 3; ++i) CHECK(minima_table(empty, rho, 1, i) == 0);

  // monotone decreasing in i
  Partition rho2({2, 1, 0}, 3);
  Parts shape = transpose({2, 1});
  for (const Tableau& t : enumerate_cst(shape, 2))
    for (int k = 1; k <= 2; ++k)
      for (int i = 1; i <= 3; ++i)
        CHECK(minima_table(t, rho2, k, i) >= minima_table(t, rho2, k, i + 1));
}

TEST_CASE("kostka via rigged configurations") {
  Partition lam({3, 2, 1}, 3);
  RectSeq R = {Rect{1, 2}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}, Rect{1, 1}};
  CHECK(kostka_via_rc(lam, R, 2).str() == "q^2 + q^3 + q^4");
  CHECK(kostka_via_rc(lam, R).str() == "q^2 + 2*q^3 + 2*q^4 + 2*q^5 + q^6");
  for (const RectSeq& Rx :
       {RectSeq{Rect{2, 2}, Rect{1, 1}}, RectSeq{Rect{1, 2}, Rect{2, 1}, Rect{1, 1}}})
    for (const Partition& mu :
         {Partition({3, 2}, 3), Partition({3, 1, 1}, 3), Partition({2, 2, 1}, 3)}) {
      CHECK(kostka_via_rc(mu, Rx) == kostka_via_paths(mu, Rx));
      for (int ell = 1; ell <= 3; ++ell) {
        bool ok = mu[0] - mu[2] <= ell;
        for (const Rect& r : Rx)
          if (r.rows < 3 && r.cols > ell) ok = false;
        if (ok)
          CHECK(kostka_via_rc(mu, Rx, ell) == kostka_via_paths(mu, Rx, ell));
      }
    }
}

TEST_CASE("rc generating function is order-insensitive") {
  Partition lam({3, 2, 1}, 3);
  RectSeq R1 = {Rect{2, 1}, Rect{1, 2}, Rect{1, 1}, Rect{1, 1}};
  RectSeq R2 = {Rect{1, 1}, Rect{1, 2}, Rect{1, 1}, Rect{2, 1}};
  CHECK(kostka_via_rc(lam, R1) == kostka_via_rc(lam, R2));
}

TEST_CASE("rigged config text form") {
  Configuration nu = worked_config();
  auto rigs = enumerate_riggings(nu);
  REQUIRE(!rigs.empty());
  std::string s = rigged_str(rigs[0]);
  CHECK(s.find("||") != std::string::npos);
}
