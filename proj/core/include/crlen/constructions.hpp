#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crlen/group.hpp"
#include "crlen/semigroup.hpp"

namespace crlen {

/// A finite poset given by covering pairs (lower, upper).
struct PosetSpec {
  int n = 0;
  std::vector<std::pair<int, int>> covers;
};

/// The meet semilattice of a poset with binary meets, as a commutative
/// idempotent semigroup with x*y = meet(x, y).
Semigroup build_semilattice(const PosetSpec& poset);

/// The monoid of all cosets gN over all normal subgroups N of a group,
/// under setwise product.  Exposes the coset bookkeeping for cross-checks.
struct CosetMonoid {
  Semigroup sg;
  std::vector<std::vector<Elem>> normal_subgroups;  // sorted ambient carriers
  std::vector<std::vector<Elem>> coset_elements;    // per monoid element
  std::vector<int> coset_subgroup;                  // index into normal_subgroups
};

CosetMonoid build_coset_monoid(const Subgroup& g);

/// The semigroup G ∪ G/N: group elements together with the cosets of a
/// proper nontrivial normal subgroup, where g(hN) = ghN and (hN)g = hgN.
/// The quotient part is an ideal.  Elements 0..|G|-1 are the group, the
/// cosets follow in order of their smallest member.
Semigroup build_group_union_quotient(const Subgroup& g,
                                     const std::vector<Elem>& normal_carrier);

/// The monoid of all n x n matrices over the field with q elements,
/// q in {2, 3, 4, 5} and n <= 2.
Semigroup build_matrix_monoid(int n, int q);

/// Cayley tables for named test groups: cyclic(m), dihedral(m),
/// symmetric(m<=5), alternating(m<=5), elementary_abelian(p,k),
/// quaternion8, klein4.
Semigroup builtin_group(const std::string& name, const std::vector<int>& args);

/// Evaluates a builtin expression such as "M(2,2)", "QG(cyclic(4))" or
/// "union_quotient(symmetric(3), alternating(3))".
Semigroup parse_builtin(const std::string& expr);

/// Convenience builders used across the test corpus.
Semigroup chain_semilattice(int n);
Semigroup boolean_lattice(int atoms);

}  // namespace crlen
