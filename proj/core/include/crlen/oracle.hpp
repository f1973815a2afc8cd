#pragma once

#include <utility>
#include <vector>

#include "crlen/group.hpp"
#include "crlen/semigroup.hpp"

namespace crlen::oracle {

/// Every normal subgroup of a group, with the inclusion order.  Exhaustive
/// and guarded; a partial oracle would be worse than none.
struct NormalLattice {
  std::vector<NormalSubgroup> all_normals;  // sorted by (order, members)
  std::vector<std::vector<bool>> leq;       // leq[i][j]: normals[i] ⊆ normals[j]

  int size() const { return static_cast<int>(all_normals.size()); }
  int index_of(const NormalSubgroup& n) const;
};

NormalLattice all_normal_subgroups(const Subgroup& g, int max_order = 200);

/// Join irreducible elements of a meet semilattice: elements that are not
/// the least upper bound of the elements strictly below them.  The minimum
/// element (the empty join) never qualifies.
std::vector<Elem> join_irreducibles(const Semigroup& s);

/// Meet irreducible normal subgroups M, paired with the unique smallest
/// normal subgroup strictly above them.  The full group never qualifies.
std::vector<std::pair<NormalSubgroup, NormalSubgroup>> meet_irreducible_normals(
    const Subgroup& g, const NormalLattice& lattice);

/// Unpruned tuple enumeration for the minimum normal generation count; the
/// independent check for the pruned search.
int exhaustive_min_normal_gen(const Subgroup& g, const NormalSubgroup& m,
                              long long tuple_guard = 10'000'000);

/// In a modular lattice the meet and join irreducible element counts agree;
/// the normal subgroup lattice is modular, so this must return true.
bool dilworth_check(const Subgroup& g, const NormalLattice& lattice);

/// Values computed while cross-checking the generation-count equivalences
/// for one (G, N, p) triple.  Construction throws on any mismatch.
struct CrosscheckReport {
  int k_socle_cap = 0;        // exhaustive count for S(G) ∩ N
  int k_abelian_cap = 0;      // exhaustive count for A(G) ∩ N
  int k_sylow_max = 0;        // max of exhaustive counts over Sylow pieces
  int k_optimized = 0;        // pruned search on S(G) ∩ N
  int a_cap_n_order = 0;
  bool t_cap_nontrivial = false;
  bool exists_by_divisibility = false;
  bool exists_by_pcore = false;
};

CrosscheckReport crosscheck_equivalences(const Subgroup& g,
                                         const NormalSubgroup& n, int p,
                                         long long tuple_guard = 10'000'000);

}  // namespace crlen::oracle
