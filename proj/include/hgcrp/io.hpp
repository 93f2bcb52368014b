#pragma once

#include <istream>
#include <string>

#include "hgcrp/model.hpp"

namespace hgcrp {

// Instance file format (UTF-8, line based):
//
//   hgcrp 1
//   agents <n>
//   allow-non-ir            (optional directive, emitted by generators that
//                            keep a non-IR coalition formable)
//   <i1>,<i2>,...,<ik> <p>/<q>
//   <i1>,<i2>,...,<ik> <p>
//
// Members must be strictly ascending. '#' starts a comment line; blank lines
// are ignored. Utilities are non-negative rationals.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

// Canonical text: header, optional directive, coalitions sorted by size then
// lexicographically, utilities in lowest terms. parse(serialize(x)) == x.
std::string serialize_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

// Partition file: one coalition per line (same member syntax, comments and
// blank lines allowed); the lines must partition [0, n) into listed coalitions.
Partition parse_partition(const Instance& inst, std::istream& in);
Partition parse_partition(const Instance& inst, const std::string& text);
Partition load_partition(const Instance& inst, const std::string& path);

std::string serialize_partition(const Partition& pi);
void save_partition(const Partition& pi, const std::string& path);

}  // namespace hgcrp
