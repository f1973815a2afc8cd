#pragma once

#include <optional>
#include <vector>

#include "crlen/group.hpp"

namespace crlen {

/// Outcome of the relativized computation for (G, N, p): whether G has a
/// completely reducible representation over characteristic p restricting
/// faithfully to N, and if so the minimum number of irreducible
/// constituents.
struct ZmudResult {
  int p = 0;
  bool exists = false;
  std::optional<int> k;
  std::optional<std::vector<Elem>> witness;
  std::optional<int> obstruction;  // the characteristic, when it divides |A(G) ∩ N|

  bool operator==(const ZmudResult& other) const = default;
};

/// Existence test: true iff p = 0 or p does not divide |A(G) ∩ N|.
/// Cross-checked internally against the equivalent condition that N has a
/// trivial p-core.
bool faithful_cr_exists(const Subgroup& g, const NormalSubgroup& n, int p);

/// The minimum constituent count: the number of generators of S(G) ∩ N as a
/// normal subgroup of G, cross-checked against the Sylow-piece reduction.
ZmudResult zmud_number(const Subgroup& g, const NormalSubgroup& n, int p);

/// True iff G has a faithful irreducible representation over characteristic
/// p: the socle is generated by a single element as a normal subgroup and p
/// does not divide |A(G)|.  Trivial groups pass degenerately.
bool gaschutz_check(const Subgroup& g, int p);

inline void require_characteristic(int p) {
  if (p != 0 && !is_prime(p)) {
    fail(ErrorCode::not_prime_or_zero,
         "characteristic " + std::to_string(p) + " is neither 0 nor prime");
  }
}

}  // namespace crlen
