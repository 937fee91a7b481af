#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kostka {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SizeMismatch : Error {
  explicit SizeMismatch(const std::string& m) : Error("SizeMismatch: " + m) {}
};
struct NonRectangular : Error {
  explicit NonRectangular(const std::string& m) : Error("NonRectangular: " + m) {}
};
struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& m)
      : Error("InternalInconsistency: " + m) {}
};
struct DomainMismatch : Error {
  explicit DomainMismatch(const std::string& m) : Error("DomainMismatch: " + m) {}
};
struct TooLarge : Error {
  explicit TooLarge(const std::string& m) : Error("TooLarge: " + m) {}
};
struct MissingPadString : Error {
  explicit MissingPadString(const std::string& m) : Error("MissingPadString: " + m) {}
};
struct BadLevel : Error {
  explicit BadLevel(const std::string& m) : Error("BadLevel: " + m) {}
};
struct BadWitness : Error {
  explicit BadWitness(const std::string& m) : Error("BadWitness: " + m) {}
};
struct LevelTooSmall : Error {
  explicit LevelTooSmall(const std::string& m) : Error("LevelTooSmall: " + m) {}
};
struct NoStabilization : Error {
  explicit NoStabilization(const std::string& m) : Error("NoStabilization: " + m) {}
};

// ---------------------------------------------------------------------------
// Exact rationals (small numerators/denominators throughout)
// ---------------------------------------------------------------------------

struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d);

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat operator-() const { return Rat(-num, den); }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return num * o.den < o.num * den; }

  bool is_integer() const { return den == 1; }
  long long as_integer() const;
  std::string str() const;
};

// ---------------------------------------------------------------------------
// Partitions and rectangle sequences
// ---------------------------------------------------------------------------

// A free partition: weakly decreasing nonnegative parts, trailing zeros allowed.
using Parts = std::vector<int>;

// Partition with an explicit rank n: exactly n parts, zeros included.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::vector<int> p, int n);

  int rank() const { return static_cast<int>(parts.size()); }
  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int operator[](int i) const { return parts[static_cast<size_t>(i)]; }  // 0-based
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }

  Parts trimmed() const;
};

struct Rect {
  int rows = 0;  // height
  int cols = 0;  // width
  int cells() const { return rows * cols; }
  bool operator==(const Rect& o) const { return rows == o.rows && cols == o.cols; }
  bool operator<(const Rect& o) const {
    return rows != o.rows ? rows < o.rows : cols < o.cols;
  }
};

using RectSeq = std::vector<Rect>;

int total_cells(const RectSeq& R);

// min(eta_i,eta_j)*min(mu_i,mu_j) summed over pairs i<j.
int rect_pair_overlap(const RectSeq& R);

// Number of cells of rho in the first i columns: sum_j min(i, rho_j).
// Works for weak compositions as well as partitions.
int column_counts(const Parts& rho, int i);

bool is_weakly_decreasing(const Parts& p);

// Multiplicity of i as a part.
int part_multiplicity(const Parts& rho, int i);

// Transpose of a partition.
Parts transpose(const Parts& p);

// All partitions with at most m parts, each part at most p.
std::vector<Parts> partitions_in_box(int m, int p);

// ---------------------------------------------------------------------------
// Sparse integer polynomials in q
// ---------------------------------------------------------------------------

class QPoly {
 public:
  QPoly() = default;
  static QPoly one() { return monomial(0, 1); }
  static QPoly monomial(long long exp, long long coeff);

  void add_term(long long exp, long long coeff);
  long long coeff(long long exp) const;
  bool is_zero() const { return c_.empty(); }
  long long eval_one() const;  // value at q = 1
  long long min_degree() const;
  long long max_degree() const;
  bool nonnegative() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  QPoly shifted(long long d) const;           // multiply by q^d
  QPoly truncated(long long maxdeg) const;    // drop exponents > maxdeg

  const std::map<long long, long long>& terms() const { return c_; }

  // Text form: ascending exponents, "q^2 + q^3 + q^4", coefficients >= 2
  // rendered as "2*q^3", constant term as plain integer.
  std::string str() const;

 private:
  std::map<long long, long long> c_;  // exponent -> nonzero coefficient
};

// Gaussian binomial [m+p choose m]_q: generating function of partitions in
// an m x p box.  Zero polynomial when either argument is negative.
QPoly q_binomial(int m, int p);

// Truncation of 1/((1-q)(1-q^2)...(1-q^m)) to the given degree.
QPoly inv_q_pochhammer(int m, long long maxdeg);

// ---------------------------------------------------------------------------
// Truncated q-series with an exact rational exponent offset
// ---------------------------------------------------------------------------

struct QSeries {
  Rat offset;                              // global q-power
  std::map<long long, long long> coeffs;   // exponent (relative) -> coefficient
  long long truncation_degree = 0;

  bool is_zero() const { return coeffs.empty(); }
  long long coeff(long long e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? 0 : it->second;
  }
  // Shift so that the first nonzero coefficient sits at exponent 0;
  // the offset absorbs the shift.  No-op for the zero series.
  QSeries aligned() const;
  std::string str() const;
};

}  // namespace kostka
