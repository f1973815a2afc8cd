#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crlen/semigroup.hpp"

namespace crlen {

/// One row per regular J-class of the analyzed semigroup.
struct JRow {
  int j = 0;
  bool irreducible = false;
  int gj_order = 0;
  int nj_order = 0;
  int a_cap_n_order = 0;  // |A(G_J) ∩ N_J|
  bool obstruction = false;
  int k_j = 0;
};

/// Existence verdict and exact minimum number of irreducible constituents in
/// a faithful completely reducible representation over characteristic p.
/// k_total is present exactly when such a representation exists, and then
/// equals the sum of the per-class counts.
struct AnalysisReport {
  int characteristic = 0;
  bool ggm_trivial = false;
  std::optional<std::pair<Elem, Elem>> ggm_witness;  // related pair when nontrivial
  std::vector<JRow> rows;
  bool exists = false;
  std::optional<int> k_total;
  std::vector<int> obstruction_primes;
};

AnalysisReport analyze(const Semigroup& s, int p);

/// k_total of analyze(s, p); empty when no faithful completely reducible
/// representation exists over characteristic p.
std::optional<int> min_faithful_cr_length(const Semigroup& s, int p);

/// True iff s has a faithful irreducible representation over characteristic
/// p: s is generalized group mapping and the maximal subgroup of its
/// distinguished class passes the single-generator socle test.
bool rhodes_irreducible_check(const Semigroup& s, int p);

/// Primes p > 0 for which no faithful completely reducible representation
/// exists; meaningful (and returned) only when the intersection congruence
/// is trivial — otherwise every characteristic is obstructed and the result
/// is empty.
std::optional<std::vector<int>> obstruction_primes(const Semigroup& s);

/// Deterministic JSON rendering of a report; parsing and re-serializing the
/// output is byte-identical.
std::string report_to_json(const AnalysisReport& report);

std::string report_to_text(const AnalysisReport& report);

}  // namespace crlen
