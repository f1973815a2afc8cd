#pragma once

#include <string>
#include <vector>

#include "crlen/semigroup.hpp"

namespace crlen::testing {

// Elements of a permutation group (labelled by image words) whose
// permutation is even.
inline std::vector<Elem> even_permutation_carrier(const Semigroup& sg) {
  std::vector<Elem> out;
  for (Elem x = 0; x < sg.size(); ++x) {
    const std::string& label = sg.label(x);
    int inversions = 0;
    for (size_t i = 0; i < label.size(); ++i) {
      for (size_t j = i + 1; j < label.size(); ++j) {
        if (label[i] > label[j]) ++inversions;
      }
    }
    if (inversions % 2 == 0) out.push_back(x);
  }
  return out;
}

// Literal check of all triples; the hand oracle for associativity examples.
inline bool associative_by_bruteforce(const std::vector<std::vector<Elem>>& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
      }
    }
  }
  return true;
}

}  // namespace crlen::testing
