#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "crlen/semigroup.hpp"

namespace crlen {

/// A group sitting inside a semigroup: a carrier subset that is closed under
/// the ambient product, has an identity and inverses.  Group operations work
/// on dense local indices 0..order-1; carrier maps local -> ambient element.
class Subgroup {
 public:
  Subgroup() = default;

  int order() const { return static_cast<int>(carrier_.size()); }
  const Semigroup& parent() const { return *parent_; }
  const std::vector<Elem>& carrier() const { return carrier_; }

  Elem identity_elem() const { return carrier_[id_]; }
  int identity_local() const { return id_; }

  Elem elem(int local) const { return carrier_[local]; }
  int local(Elem ambient) const { return local_of_[ambient]; }
  bool contains(Elem ambient) const {
    return ambient >= 0 && ambient < static_cast<Elem>(local_of_.size()) &&
           local_of_[ambient] >= 0;
  }

  int mul(int a, int b) const {
    return table_[static_cast<size_t>(a) * order() + b];
  }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  /// Order of a local element in the group.
  int element_order(int a) const;

  bool is_abelian() const;

 private:
  friend Subgroup verify_group(const Semigroup& s,
                               const std::vector<Elem>& carrier);

  const Semigroup* parent_ = nullptr;
  std::vector<Elem> carrier_;      // sorted ambient indices
  std::vector<int> local_of_;      // ambient -> local, -1 if absent
  std::vector<int> table_;         // local products
  std::vector<int> inverse_;       // local inverses
  int id_ = 0;                     // local identity
};

/// A normal subgroup, stored as sorted local indices of its group.
struct NormalSubgroup {
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool trivial() const { return members.size() <= 1; }
  bool contains(int local) const {
    return std::find(members.begin(), members.end(), local) != members.end();
  }
  bool operator==(const NormalSubgroup& other) const = default;

  std::vector<Elem> ambient_elements(const Subgroup& g) const {
    std::vector<Elem> out;
    out.reserve(members.size());
    for (int m : members) out.push_back(g.elem(m));
    return out;
  }
};

/// Socle decomposition: minimal normal subgroups with abelian tags, the
/// subgroup A generated by the abelian ones, T by the nonabelian ones, and
/// the socle A*T (an internal direct product).
struct SocleData {
  std::vector<NormalSubgroup> minimal_normals;
  std::vector<bool> abelian;  // parallel to minimal_normals
  NormalSubgroup a;
  NormalSubgroup t;
  NormalSubgroup socle;
};

struct SylowPiece {
  int p = 0;
  NormalSubgroup carrier;
};

struct SocleIntersection {
  NormalSubgroup a_cap;
  NormalSubgroup t_cap;
  NormalSubgroup s_cap;
};

struct GenerationResult {
  int k = 0;
  std::vector<Elem> witness;  // ambient elements, lexicographically smallest
};

/// Validates that carrier is a subgroup of s and builds the local tables.
/// The semigroup must outlive the returned view.
Subgroup verify_group(const Semigroup& s, const std::vector<Elem>& carrier);
Subgroup verify_group(Semigroup&&, const std::vector<Elem>&) = delete;

bool is_normal(const Subgroup& g, const NormalSubgroup& n);

/// Smallest normal subgroup of g containing the given ambient elements.
NormalSubgroup normal_closure(const Subgroup& g, const std::vector<Elem>& x);

NormalSubgroup normal_closure_local(const Subgroup& g,
                                    const std::vector<int>& x_local);

/// Setwise product of two normal subgroups (their join).
NormalSubgroup join(const Subgroup& g, const NormalSubgroup& n1,
                    const NormalSubgroup& n2);

NormalSubgroup intersect(const NormalSubgroup& n1, const NormalSubgroup& n2);

bool subgroup_is_abelian(const Subgroup& g, const NormalSubgroup& n);

/// The minimal nontrivial normal subgroups, each tagged abelian/nonabelian
/// via SocleData.  Empty for the trivial group.
std::vector<NormalSubgroup> minimal_normal_subgroups(const Subgroup& g);

/// Computes A(G), T(G) and the socle S(G) = A(G) x T(G), with internal
/// direct-product audits (A ∩ T = 1, Z(T) = 1).
SocleData socle_data(const Subgroup& g);

/// Intersections of A, T and the socle with a normal subgroup n, audited:
/// S ∩ N = (A ∩ N) x (T ∩ N) and T ∩ N is a product of a subset of the
/// nonabelian minimal normal subgroups.
SocleIntersection intersect_with_normal(const Subgroup& g,
                                        const SocleData& socle,
                                        const NormalSubgroup& n);

/// Splits an abelian normal subgroup into its Sylow pieces.  Each piece is
/// audited elementary abelian (true for any subgroup of A(G), which is all
/// this is used on); non-elementary input is rejected.
std::vector<SylowPiece> sylow_decompose(const Subgroup& g,
                                        const NormalSubgroup& a);

/// Largest normal p-subgroup of the group n (p-core O_p(n)).
NormalSubgroup p_core(const Subgroup& n, int p);

/// Smallest k such that some k-tuple of elements of m generates m as a
/// normal subgroup of g, with the lexicographically smallest witness tuple.
/// k = 0 exactly when m is trivial.
GenerationResult min_normal_generators(const Subgroup& g,
                                       const NormalSubgroup& m);

/// Same count, computed through the socle reduction: the maximum over the
/// Sylow pieces of A(G) ∩ N, bumped to at least 1 when T(G) ∩ N is
/// nontrivial.  Equals min_normal_generators(g, S(G) ∩ N).
int min_normal_generators_reduced(const Subgroup& g, const NormalSubgroup& n);

/// Conjugacy-class representatives (smallest local index per class) of the
/// elements of m under conjugation by all of g.
std::vector<int> conjugacy_class_reps(const Subgroup& g,
                                      const NormalSubgroup& m);

/// Views a whole semigroup that happens to be a group as a Subgroup.
/// The semigroup must outlive the returned view.
Subgroup as_group(const Semigroup& s);
Subgroup as_group(Semigroup&&) = delete;

/// Views a normal subgroup as a group in its own right (same ambient
/// semigroup, restricted carrier).
Subgroup subgroup_from_normal(const Subgroup& g, const NormalSubgroup& n);

NormalSubgroup full_subgroup(const Subgroup& g);
NormalSubgroup trivial_subgroup(const Subgroup& g);

/// Normal subgroup from ambient carrier elements; checks membership and
/// normality.
NormalSubgroup normal_from_elements(const Subgroup& g,
                                    const std::vector<Elem>& carrier);

// Small number-theory helpers used throughout.
bool is_prime(int p);
std::vector<int> prime_divisors(int n);

}  // namespace crlen
