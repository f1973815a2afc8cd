#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crlen/semigroup.hpp"

namespace crlen {

/// One J-class: its elements (sorted), regularity flag and idempotents.
/// A class is regular exactly when it contains an idempotent.
struct JClass {
  int id = 0;
  std::vector<Elem> elements;
  bool regular = false;
  std::vector<Elem> idempotents;
};

/// Green's relations R, L, J, H as class-id arrays, plus the list of
/// J-classes.  Class ids are dense and canonical: classes are numbered by
/// their smallest element index, ascending.
struct GreenData {
  std::vector<int> r_class_of;
  std::vector<int> l_class_of;
  std::vector<int> j_class_of;
  std::vector<int> h_class_of;
  std::vector<JClass> j_classes;

  // Condensation edges of the two-sided multiplication graph: for each
  // J-class, the distinct strictly-smaller classes reached in one step.
  // Input to j_order(); not part of the relation itself.
  std::vector<std::vector<int>> j_successors;

  int num_j_classes() const { return static_cast<int>(j_classes.size()); }
};

/// Partial order on J-classes: leq(a, b) holds when every element of class a
/// lies in the two-sided principal ideal of (any element of) class b.
class JOrder {
 public:
  JOrder() = default;
  JOrder(int num_classes, std::vector<std::vector<bool>> leq);

  int num_classes() const { return num_classes_; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  bool lt(int a, int b) const { return a != b && leq_[a][b]; }

  /// Covering pairs (lower, upper) of the order, for Hasse-diagram output.
  std::vector<std::pair<int, int>> covers() const;

 private:
  int num_classes_ = 0;
  std::vector<std::vector<bool>> leq_;
};

/// The maximal subgroup at a regular J-class: the H-class of a chosen
/// idempotent e, with the induced group structure.  group_table holds local
/// indices into carrier.
struct MaxSubgroup {
  int j_class = 0;
  Elem e = 0;
  std::vector<Elem> carrier;
  std::vector<int> group_table;

  int order() const { return static_cast<int>(carrier.size()); }
};

/// Linking pair for transporting the maximal subgroup at e to the one at f
/// (both idempotents of the same regular J-class): a*a' = f, a'*a = e and
/// x -> a*x*a' is a group isomorphism carrier(e) -> carrier(f).
struct TransportIso {
  Elem a = 0;
  Elem a_prime = 0;
};

GreenData compute_green(const Semigroup& s);

JOrder j_order(const GreenData& green);

/// Regular J-class ids strictly below j, ascending.
std::vector<int> regular_below(const GreenData& green, const JOrder& order,
                               int j);

/// Maximal subgroup of a regular class.  Default idempotent: the one with
/// the lowest element index, so reports are deterministic.
MaxSubgroup maximal_subgroup(const Semigroup& s, const GreenData& green,
                             int j_class, std::optional<Elem> e = std::nullopt);

TransportIso subgroup_transport_iso(const Semigroup& s, const GreenData& green,
                                    int j_class, Elem e, Elem f);

inline Elem apply_transport(const Semigroup& s, const TransportIso& iso,
                            Elem x) {
  return s.product(iso.a, x, iso.a_prime);
}

/// Checks both stability identities sS^1 ∩ J_s = R_s and S^1 s ∩ J_s = L_s
/// for every element.  They hold in every finite semigroup; a false return
/// signals a bug.
bool stability_audit(const Semigroup& s, const GreenData& green);

}  // namespace crlen
