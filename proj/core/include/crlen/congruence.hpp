#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crlen/green.hpp"
#include "crlen/group.hpp"
#include "crlen/semigroup.hpp"

namespace crlen {

/// A congruence stored as a canonical partition: class_of[s] is the smallest
/// element equivalent to s, so two congruences are equal exactly when their
/// arrays are.
struct Congruence {
  std::vector<int> class_of;
  int num_classes = 0;

  int size() const { return static_cast<int>(class_of.size()); }
  bool related(Elem s, Elem t) const { return class_of[s] == class_of[t]; }
  bool is_trivial() const { return num_classes == size(); }
  bool is_universal() const { return num_classes <= 1; }

  bool operator==(const Congruence& other) const = default;

  /// Lexicographically smallest pair of distinct related elements, if any.
  std::optional<std::pair<Elem, Elem>> nontrivial_pair() const;
};

Congruence universal_congruence(int n);
Congruence equality_congruence(int n);

/// Canonicalizes an arbitrary class assignment into the smallest-member form.
Congruence canonicalize(const std::vector<int>& raw_class_of);

/// Per regular J-class: whether the class is irreducible, and for
/// irreducible classes a witness pair (s, t) that is separated by the
/// class's congruence but by no congruence strictly below it.
struct JClassification {
  struct Entry {
    bool regular = false;
    bool irreducible = false;
    std::optional<std::pair<Elem, Elem>> witness;
  };
  std::vector<Entry> per_class;  // indexed by J-class id

  bool irreducible(int j) const { return per_class[j].irreducible; }
  std::vector<int> irreducible_ids() const;
};

/// The normal subgroup N_J of a maximal subgroup G_J: the elements that are
/// congruent to e_J under every congruence of a regular class strictly below
/// J.  carrier holds semigroup elements.
struct RelativeKernel {
  int j_class = 0;
  Elem e = 0;
  std::vector<Elem> carrier;

  int order() const { return static_cast<int>(carrier.size()); }
};

/// The generalized group mapping congruence of a regular J-class J:
/// s == t  iff  for all x, y in J, xsy lands in J exactly when xty does,
/// and when both land in J they are equal.  The returned partition is
/// audited for left/right compatibility (exhaustively for n <= 50, sampled
/// with a fixed seed above that).
Congruence ggm_congruence(const Semigroup& s, const GreenData& green,
                          int j_class, unsigned audit_seed = 0x5eed);

/// Coarsest common refinement: related in the meet iff related in both.
Congruence meet(const Congruence& c1, const Congruence& c2);

/// All per-class congruences for regular classes, keyed by J-class id.
std::map<int, Congruence> ggm_family(const Semigroup& s,
                                     const GreenData& green,
                                     unsigned audit_seed = 0x5eed);

/// The intersection of the congruences over all regular J-classes.
Congruence ggm_all(const Semigroup& s, const GreenData& green);
Congruence ggm_all(int n, const std::map<int, Congruence>& family);

/// Marks every regular class reducible or irreducible.  A class J is
/// reducible when the meet of the congruences of the regular classes
/// strictly below J refines the congruence of J; the empty meet is the
/// universal relation.
JClassification classify_j_classes(const Semigroup& s, const GreenData& green,
                                   const JOrder& order,
                                   const std::map<int, Congruence>& family);

/// N_J for a regular class, verified to be a normal subgroup of G_J.
/// When no regular class lies strictly below J, N_J is all of G_J.
RelativeKernel relative_kernel(const Semigroup& s, const GreenData& green,
                               const JOrder& order,
                               const std::map<int, Congruence>& family,
                               const MaxSubgroup& gj);

/// The distinguished J-class whose congruence is the equality relation, if
/// one exists; for nontrivial semigroups this is cross-checked against the
/// equivalent condition (trivial intersection congruence plus a unique
/// irreducible regular class).
std::optional<int> is_generalized_group_mapping(const Semigroup& s);

/// Left/right compatibility audit; throws on violation.  Exhaustive for
/// n <= exhaustive_limit, otherwise 1000 seeded random triples.
void verify_congruence(const Semigroup& s, const Congruence& c,
                       unsigned seed = 0x5eed, int exhaustive_limit = 50);

}  // namespace crlen
