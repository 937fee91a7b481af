#pragma once

#include <string>

#include "kostka/bijection.hpp"

namespace kostka {

// Tableau text form: rows of comma-separated letters joined by "/",
// e.g. "1,1/2,2".
std::string tableau_str(const Tableau& t);
Tableau parse_tableau(const std::string& s);

// Path text form: factors joined by "|", rightmost factor last,
// e.g. "1,1/2,2|1".
std::string path_str(const Path& p);
Path parse_path(const std::string& s, int n);

// Rectangle list "HxW,HxW,..." (H rows, W columns).
std::string rects_str(const RectSeq& R);
RectSeq parse_rects(const std::string& s);

// Partition "3,2,1" padded with zeros to rank n.
Partition parse_partition(const std::string& s, int n);

// Rigged configuration: per block "len:label" pairs comma-separated,
// blocks joined by "||".
std::string rigged_str(const RiggedConfig& rc);

// Polynomial JSON object text {"2":1,"3":1}.
std::string qpoly_json(const QPoly& p);

}  // namespace kostka
