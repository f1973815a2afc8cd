#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crlen/semigroup.hpp"

namespace crlen {

// Cayley file format (text):
//   line 1: n
//   next n lines: n space-separated 0-based indices
//   optional trailing "labels:" block, one label per line
//
// Transformation file format (text):
//   line 1: m (number of points)
//   one generator per line, m space-separated images

Semigroup read_cayley(std::istream& in, bool validate_associativity = true);
Semigroup read_cayley_file(const std::string& path,
                           bool validate_associativity = true);

void write_cayley(std::ostream& out, const Semigroup& s);
void write_cayley_file(const std::string& path, const Semigroup& s);

std::vector<Transformation> read_transformations(std::istream& in);
std::vector<Transformation> read_transformations_file(const std::string& path);

/// Loads a semigroup from a file.  Files with extension .gens or .trans are
/// read as transformation generators and closed; anything else is read as a
/// Cayley table.
Semigroup load_semigroup_file(const std::string& path,
                              bool validate_associativity = true);

}  // namespace crlen
