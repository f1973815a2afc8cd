#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crlen/semigroup.hpp"

namespace crlen::corpus {

struct NamedSemigroup {
  std::string name;
  Semigroup sg;
};

/// Groups of order <= max_order: cyclic, dihedral, symmetric and alternating
/// of small degree, the quaternion group and elementary abelian p-groups.
std::vector<NamedSemigroup> group_corpus(int max_order = 24);

/// Chains, Boolean lattices and seeded random meet-closed posets.
std::vector<NamedSemigroup> semilattice_corpus();

/// Non-group, non-semilattice examples: transformation monoids, matrix
/// monoids, group-with-quotient semigroups and small degenerate tables.
std::vector<NamedSemigroup> misc_corpus();

/// Coset monoids of the small-group suite.
std::vector<NamedSemigroup> coset_monoid_corpus();

std::vector<NamedSemigroup> full_corpus(int max_group_order = 24);

/// Deterministic meet-closed poset: random subsets of a small universe
/// closed under intersection, retried until at most max_elements remain.
Semigroup random_meet_semilattice(unsigned seed, int max_elements = 12);

/// Structural invariant audit for one semigroup: associativity, stability,
/// H = R ∩ L, Green classes against brute-force principal ideals, congruence
/// compatibility, relative-kernel normality and independence from the choice
/// of idempotent, socle direct-product audits and the minimal-normal
/// complement property on every maximal subgroup.  Throws on failure.
void audit_semigroup(const Semigroup& sg, const std::string& name);

/// Full cross-check suite over the built-in corpus; one log line per entry.
/// Returns false when any check failed.
bool run_oracle_suite(int max_group_order, std::ostream& log);

}  // namespace crlen::corpus
