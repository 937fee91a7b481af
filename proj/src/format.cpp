#include "kostka/format.hpp"

#include <sstream>

namespace kostka {

static std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string tableau_str(const Tableau& t) {
  std::ostringstream os;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (r) os << "/";
    for (size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c) os << ",";
      os << t.rows[r][c];
    }
  }
  return os.str();
}

Tableau parse_tableau(const std::string& s) {
  Tableau t;
  if (s.empty()) return t;
  for (const std::string& row : split(s, '/')) {
    std::vector<int> vals;
    for (const std::string& e : split(row, ','))
      vals.push_back(std::stoi(e));
    t.rows.push_back(std::move(vals));
  }
  if (!t.is_column_strict()) throw Error("parse_tableau: not column-strict");
  return t;
}

std::string path_str(const Path& p) {
  std::ostringstream os;
  for (int j = p.length() - 1; j >= 0; --j) {
    os << tableau_str(p.factors[static_cast<size_t>(j)]);
    if (j) os << "|";
  }
  return os.str();
}

Path parse_path(const std::string& s, int n) {
  std::vector<std::string> chunks = split(s, '|');
  Path p;
  p.n = n;
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) {
    Tableau t = parse_tableau(*it);
    p.shapes.push_back(t.rect());
    p.factors.push_back(std::move(t));
  }
  p.validate();
  return p;
}

std::string rects_str(const RectSeq& R) {
  std::ostringstream os;
  for (size_t j = 0; j < R.size(); ++j) {
    if (j) os << ",";
    os << R[j].rows << "x" << R[j].cols;
  }
  return os.str();
}

RectSeq parse_rects(const std::string& s) {
  RectSeq R;
  for (const std::string& e : split(s, ',')) {
    size_t x = e.find('x');
    if (x == std::string::npos) throw Error("parse_rects: expected HxW");
    int h = std::stoi(e.substr(0, x));
    int w = std::stoi(e.substr(x + 1));
    if (h < 1 || w < 1) throw Error("parse_rects: entries must be positive");
    R.push_back(Rect{h, w});
  }
  return R;
}

Partition parse_partition(const std::string& s, int n) {
  std::vector<int> parts;
  if (!s.empty())
    for (const std::string& e : split(s, ',')) parts.push_back(std::stoi(e));
  return Partition(parts, n);
}

std::string rigged_str(const RiggedConfig& rc) {
  std::ostringstream os;
  for (size_t k = 0; k < rc.strings.size(); ++k) {
    if (k) os << "||";
    for (size_t i = 0; i < rc.strings[k].size(); ++i) {
      if (i) os << ",";
      os << rc.strings[k][i].first << ":" << rc.strings[k][i].second;
    }
  }
  return os.str();
}

std::string qpoly_json(const QPoly& p) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [e, c] : p.terms()) {
    if (!first) os << ",";
    first = false;
    os << "\"" << e << "\":" << c;
  }
  os << "}";
  return os.str();
}

}  // namespace kostka
