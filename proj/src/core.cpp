#include "kostka/core.hpp"

#include <algorithm>
#include <sstream>

namespace kostka {

static long long gcd_ll(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

Rat::Rat(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw Error("Rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = gcd_ll(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw Error("Rat: division by zero");
  return Rat(num * o.den, den * o.num);
}

long long Rat::as_integer() const {
  if (den != 1) throw Error("Rat: " + str() + " is not an integer");
  return num;
}

std::string Rat::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

Partition::Partition(std::vector<int> p, int n) {
  if (n < 0) throw Error("Partition: negative rank");
  if (static_cast<int>(p.size()) > n)
    throw Error("Partition: more parts than the rank allows");
  p.resize(static_cast<size_t>(n), 0);
  if (!is_weakly_decreasing(p) || (!p.empty() && p.back() < 0))
    throw Error("Partition: parts must be weakly decreasing and nonnegative");
  parts = std::move(p);
}

Parts Partition::trimmed() const {
  Parts out = parts;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

int total_cells(const RectSeq& R) {
  int s = 0;
  for (const Rect& r : R) s += r.cells();
  return s;
}

int rect_pair_overlap(const RectSeq& R) {
  int s = 0;
  for (size_t i = 0; i < R.size(); ++i)
    for (size_t j = i + 1; j < R.size(); ++j)
      s += std::min(R[i].rows, R[j].rows) * std::min(R[i].cols, R[j].cols);
  return s;
}

int column_counts(const Parts& rho, int i) {
  int s = 0;
  for (int part : rho) s += std::min(i, part);
  return s;
}

bool is_weakly_decreasing(const Parts& p) {
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) return false;
  return true;
}

int part_multiplicity(const Parts& rho, int i) {
  int m = 0;
  for (int part : rho) m += (part == i);
  return m;
}

Parts transpose(const Parts& p) {
  Parts out;
  if (p.empty()) return out;
  int maxp = *std::max_element(p.begin(), p.end());
  for (int i = 1; i <= maxp; ++i) {
    int c = 0;
    for (int part : p) c += (part >= i);
    out.push_back(c);
  }
  return out;
}

static void partitions_in_box_rec(int m, int p, Parts& cur, std::vector<Parts>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == m) return;
  int hi = cur.empty() ? p : cur.back();
  for (int v = hi; v >= 1; --v) {
    cur.push_back(v);
    partitions_in_box_rec(m, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Parts> partitions_in_box(int m, int p) {
  std::vector<Parts> out;
  if (m < 0 || p < 0) return out;
  Parts cur;
  partitions_in_box_rec(m, p, cur, out);
  return out;
}

QPoly QPoly::monomial(long long exp, long long coeff) {
  QPoly q;
  q.add_term(exp, coeff);
  return q;
}

void QPoly::add_term(long long exp, long long coeff) {
  if (coeff == 0) return;
  auto it = c_.find(exp);
  if (it == c_.end()) {
    c_.emplace(exp, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

long long QPoly::coeff(long long exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

long long QPoly::eval_one() const {
  long long s = 0;
  for (auto& [e, c] : c_) s += c;
  return s;
}

long long QPoly::min_degree() const {
  if (c_.empty()) throw Error("QPoly: min_degree of zero polynomial");
  return c_.begin()->first;
}

long long QPoly::max_degree() const {
  if (c_.empty()) throw Error("QPoly: max_degree of zero polynomial");
  return c_.rbegin()->first;
}

bool QPoly::nonnegative() const {
  for (auto& [e, c] : c_)
    if (c < 0) return false;
  return true;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  r += o;
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  r -= o;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r;
  for (auto& [e1, c1] : c_)
    for (auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

QPoly QPoly::shifted(long long d) const {
  QPoly r;
  for (auto& [e, c] : c_) r.add_term(e + d, c);
  return r;
}

QPoly QPoly::truncated(long long maxdeg) const {
  QPoly r;
  for (auto& [e, c] : c_)
    if (e <= maxdeg) r.add_term(e, c);
  return r;
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : c_) {
    long long a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

QPoly q_binomial(int m, int p) {
  QPoly zero;
  if (m < 0 || p < 0) return zero;
  // G(m,p) = G(m,p-1) + q^p * G(m-1,p): split on whether a part equals p.
  std::vector<QPoly> col(static_cast<size_t>(m) + 1);
  for (int mm = 0; mm <= m; ++mm) col[static_cast<size_t>(mm)] = QPoly::one();
  for (int pp = 1; pp <= p; ++pp) {
    for (int mm = 1; mm <= m; ++mm) {
      QPoly t = col[static_cast<size_t>(mm - 1)].shifted(pp);
      col[static_cast<size_t>(mm)] += t;
    }
  }
  return col[static_cast<size_t>(m)];
}

QPoly inv_q_pochhammer(int m, long long maxdeg) {
  QPoly r = QPoly::one();
  for (int t = 1; t <= m; ++t) {
    // multiply by 1/(1-q^t) = 1 + q^t + q^{2t} + ...
    QPoly geo;
    for (long long e = 0; e <= maxdeg; e += t) geo.add_term(e, 1);
    r = (r * geo).truncated(maxdeg);
  }
  return r;
}

QSeries QSeries::aligned() const {
  if (coeffs.empty()) return *this;
  QSeries out = *this;
  long long lo = coeffs.begin()->first;
  out.coeffs.clear();
  for (auto& [e, c] : coeffs) out.coeffs.emplace(e - lo, c);
  out.offset = offset + Rat(lo);
  out.truncation_degree = truncation_degree - lo;
  return out;
}

std::string QSeries::str() const {
  std::ostringstream os;
  os << "q^(" << offset.str() << ") * [";
  if (coeffs.empty()) os << "0";
  bool first = true;
  for (auto& [e, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    if (c != 1 || e == 0) os << c;
    if (e != 0) {
      if (c != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  os << " + O(q^" << (truncation_degree + 1) << ")]";
  return os.str();
}

}  // namespace kostka
