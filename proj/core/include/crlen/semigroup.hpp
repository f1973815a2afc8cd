#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crlen/error.hpp"

namespace crlen {

/// Elements are dense indices into the multiplication table; labels are
/// metadata only.
using Elem = int;

/// A total map on {0, ..., degree-1}, used to encode semigroup generators.
struct Transformation {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int pt) const { return images[pt]; }

  /// Product `*this then other` (maps act on the right).
  Transformation then(const Transformation& other) const;

  bool operator==(const Transformation& other) const = default;
  bool operator<(const Transformation& other) const {
    return images < other.images;
  }
};

/// A finite semigroup as an n x n multiplication table.  Immutable after
/// construction; safe to share read-only across threads.
class Semigroup {
 public:
  Semigroup() = default;

  int size() const { return n_; }
  Elem product(Elem s, Elem t) const {
    return table_[static_cast<size_t>(s) * n_ + t];
  }
  Elem product(Elem a, Elem b, Elem c) const {
    return product(product(a, b), c);
  }
  bool is_idempotent(Elem s) const { return product(s, s) == s; }

  const std::vector<Elem>& table() const { return table_; }
  const std::string& label(Elem s) const { return labels_[s]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// The two-sided identity, when one exists.
  std::optional<Elem> identity() const { return identity_; }

  /// Exhaustive triple-loop associativity audit.  Returns a violating
  /// triple, or nothing if the table is associative.
  std::optional<std::array<Elem, 3>> find_associativity_violation() const;

  bool same_table(const Semigroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  friend Semigroup make_semigroup(int n, std::vector<Elem> table,
                                  std::vector<std::string> labels,
                                  bool validate_associativity);

  int n_ = 0;
  std::vector<Elem> table_;  // row-major, table_[s*n_+t] = s*t
  std::vector<std::string> labels_;
  std::optional<Elem> identity_;
};

/// Internal factory shared by all builders: range-checks the table, detects
/// an identity element, and (optionally) audits associativity.
Semigroup make_semigroup(int n, std::vector<Elem> table,
                         std::vector<std::string> labels,
                         bool validate_associativity);

/// Builds a semigroup from an explicit Cayley table.  Associativity is
/// validated eagerly (O(n^3)) unless skipped for trusted input.
Semigroup build_from_cayley(const std::vector<std::vector<Elem>>& rows,
                            std::vector<std::string> labels = {},
                            bool validate_associativity = true);

/// Enumerates the semigroup generated by transformations, by breadth-first
/// closure: generators first, then products in discovery order, so element
/// indices are deterministic across runs.  Labels record a shortest word in
/// the generators for each element.
Semigroup closure_from_transformations(const std::vector<Transformation>& gens);

/// Adjoins a fresh two-sided identity as element n, even if the semigroup
/// already had one.  Products of the original elements are unchanged.
Semigroup adjoin_identity(const Semigroup& s);

/// Componentwise direct product; element (a, b) has index a*|T| + b.
Semigroup direct_product(const Semigroup& s, const Semigroup& t);

}  // namespace crlen
