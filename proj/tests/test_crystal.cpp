#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kostka/format.hpp"
#include "kostka/tableau.hpp"

using namespace kostka;

namespace {

// Oracle: literal iterated invisibility matching from the definition of the
// crystal operators.  An opening (letter i+1) immediately followed by a
// closing (letter i) among the visible letters gets matched, repeatedly.
std::pair<int, int> naive_string_stats(const Word& w, int i) {
  std::vector<bool> visible(w.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    int open_pos = -1;
    for (size_t p = 0; p < w.size(); ++p) {
      if (!visible[p]) continue;
      if (w[p] == i + 1) {
        open_pos = static_cast<int>(p);
      } else if (w[p] == i) {
        if (open_pos >= 0) {
          visible[static_cast<size_t>(open_pos)] = false;
          visible[p] = false;
          changed = true;
          break;
        }
      } else {
        continue;
      }
    }
  }
  int closes = 0, opens = 0;
  bool seen_open = false;
  for (size_t p = 0; p < w.size(); ++p) {
    if (!visible[p]) continue;
    if (w[p] == i) {
      closes++;
      CHECK(!seen_open);  // unmatched pattern must be i^p (i+1)^q
    } else if (w[p] == i + 1) {
      opens++;
      seen_open = true;
    }
  }
  return {closes, opens};
}

std::vector<Word> all_words(int n, int len) {
  std::vector<Word> out;
  Word cur(static_cast<size_t>(len), 1);
  for (;;) {
    out.push_back(cur);
    int j = len - 1;
    while (j >= 0 && cur[static_cast<size_t>(j)] == n) {
      cur[static_cast<size_t>(j)] = 1;
      j--;
    }
    if (j < 0) break;
    cur[static_cast<size_t>(j)]++;
  }
  return out;
}

}  // namespace

TEST_CASE("reading word") {
  CHECK(reading_word(parse_tableau("1,1/2,2")) == Word({2, 2, 1, 1}));
  CHECK(reading_word(parse_tableau("1,2")) == Word({1, 2}));
  CHECK(reading_word(parse_tableau("1/2/3")) == Word({3, 2, 1}));
}

TEST_CASE("string_stats basics and oracle") {
  CHECK(string_stats({2}, 1) == std::make_pair(0, 1));
  // Frozen from the iterated-matching oracle: "12" leaves both letters
  // unmatched (the closing precedes the opening), "2211" matches fully.
  CHECK(string_stats({1, 2}, 1) == std::make_pair(1, 1));
  CHECK(string_stats({2, 2, 1, 1}, 1) == std::make_pair(0, 0));
  CHECK(string_stats({2, 2, 1, 1, 1}, 1) == std::make_pair(1, 0));
  for (int len = 1; len <= 6; ++len)
    for (const Word& w : all_words(3, len))
      for (int i = 1; i <= 2; ++i)
        CHECK(string_stats(w, i) == naive_string_stats(w, i));
}

TEST_CASE("crystal operators on words") {
  CHECK(*raise_word({2}, 1) == Word({1}));
  CHECK(*lower_word({1}, 1) == Word({2}));
  CHECK_FALSE(lower_word({2}, 1).has_value());
  // raise/lower inverse property on all small words
  for (const Word& w : all_words(3, 5))
    for (int i = 1; i <= 2; ++i) {
      auto up = raise_word(w, i);
      if (up) CHECK(*lower_word(*up, i) == w);
      auto down = lower_word(w, i);
      if (down) CHECK(*raise_word(*down, i) == w);
    }
}

TEST_CASE("crystal operators on tableaux") {
  Tableau hw = parse_tableau("1,1/2,2");
  CHECK_FALSE(raise_tableau(hw, 1).has_value());
  for (const Parts& shape : {Parts{2, 1}, Parts{3}, Parts{2, 2}, Parts{1, 1, 1}})
    for (const Tableau& b : enumerate_cst(shape, 4))
      for (int i = 1; i <= 3; ++i) {
        auto up = raise_tableau(b, i);
        if (up) {
          CHECK(*lower_tableau(*up, i) == b);
          CHECK(reading_word(*up) == *raise_word(reading_word(b), i));
        }
        // weight string length identity
        auto [phi, eps] = string_stats(reading_word(b), i);
        auto c = b.content(4);
        CHECK(c[static_cast<size_t>(i - 1)] - c[static_cast<size_t>(i)] ==
              phi - eps);
      }
}

TEST_CASE("column insertion") {
  CHECK(schensted_p({2, 2, 1, 1, 1}) == parse_tableau("1,1,1/2,2"));
  CHECK(schensted_p({}) == Tableau{});
  CHECK(schensted_p({3, 2, 1}) == parse_tableau("1/2/3"));
  // schensted_p(word(b)) == b for straight-shape tableaux
  for (const Parts& shape : {Parts{3, 2}, Parts{2, 2, 1}, Parts{4}})
    for (const Tableau& b : enumerate_cst(shape, 4))
      CHECK(schensted_p(reading_word(b)) == b);
}

TEST_CASE("column uninsert reverses insert") {
  for (const Tableau& b : enumerate_cst({2, 2}, 3))
    for (int x = 1; x <= 3; ++x) {
      Tableau p = b;
      auto cell = column_insert(p, x);
      Tableau q = p;
      int y = column_uninsert(q, cell.first, cell.second);
      CHECK(y == x);
      CHECK(q == b);
    }
}

TEST_CASE("is_yamanouchi") {
  CHECK(is_yamanouchi(parse_tableau("1,1,1/2,2")));
  CHECK_FALSE(is_yamanouchi(parse_tableau("1,2")));
  CHECK(is_yamanouchi(Tableau{}));
}

TEST_CASE("promotion") {
  // n=2 identity on the 2x2 highest weight tableau
  CHECK(promote(parse_tableau("1,1/2,2"), 2) == parse_tableau("1,1/2,2"));
  // single box rotates through the alphabet
  CHECK(promote(parse_tableau("1"), 3) == parse_tableau("3"));
  CHECK(promote(parse_tableau("3"), 3) == parse_tableau("2"));
  CHECK_THROWS_AS(promote(parse_tableau("1,1/2"), 3), NonRectangular);
}

TEST_CASE("psi has order n") {
  for (int n = 2; n <= 4; ++n)
    for (const Rect r : {Rect{1, 1}, Rect{1, 2}, Rect{2, 2}}) {
      if (r.rows >= n) continue;
      for (const Tableau& b : rect_crystal(r, n)) {
        // content rotation check for a single application
        Tableau p = promote(b, n);
        auto c = b.content(n);
        std::vector<int> want(c.begin() + 1, c.end());
        want.push_back(c[0]);
        CHECK(p.content(n) == want);
        CHECK(psi(promote(b, n), n) == b);
        Tableau it = b;
        for (int s = 0; s < n; ++s) it = psi(it, n);
        CHECK(it == b);
      }
    }
}

TEST_CASE("psi conjugation of crystal operators") {
  // f_i = psi^{-1} f_{i+1} psi on rectangular crystals, indices mod n
  for (int n = 2; n <= 4; ++n)
    for (const Rect r : {Rect{1, 1}, Rect{2, 1}, Rect{2, 2}, Rect{1, 2}}) {
      if (r.rows > n) continue;
      for (const Tableau& b : rect_crystal(r, n))
        for (int i = 0; i < n; ++i) {
          auto direct = lower_affine(b, n, i);
          int inext = (i + 1) % n;
          auto via = lower_affine(psi(b, n), n, inext);
          if (direct) {
            REQUIRE(via.has_value());
            CHECK(*direct == promote(*via, n));
          } else {
            CHECK_FALSE(via.has_value());
          }
        }
    }
}

TEST_CASE("affine operators require rectangular tableaux") {
  CHECK_THROWS_AS(raise_affine(parse_tableau("1,1/2"), 3, 0), NonRectangular);
  CHECK_THROWS_AS(lower_affine(parse_tableau("1,1/2"), 3, 0), NonRectangular);
  // classical indices stay defined on skew-free non-rectangles
  CHECK(lower_affine(parse_tableau("1,1/2"), 3, 2).has_value());
}

TEST_CASE("enumerate_cst counts") {
  CHECK(enumerate_cst({2, 1}, 3).size() == 8);   // dim of the adjoint of sl3
  CHECK(enumerate_cst({1, 1}, 2).size() == 1);
  CHECK(enumerate_cst({2, 1}, 3, {1, 1, 1}).size() == 2);
  CHECK(enumerate_cst({}, 3).size() == 1);
}
