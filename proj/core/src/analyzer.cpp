#include "crlen/analyzer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "crlen/congruence.hpp"
#include "crlen/green.hpp"
#include "crlen/group.hpp"
#include "crlen/zmud.hpp"

namespace crlen {

AnalysisReport analyze(const Semigroup& s, int p) {
  require_characteristic(p);
  AnalysisReport report;
  report.characteristic = p;

  const GreenData green = compute_green(s);
  const JOrder order = j_order(green);
  const std::map<int, Congruence> family = ggm_family(s, green);
  const Congruence ggm = ggm_all(s.size(), family);
  report.ggm_trivial = ggm.is_trivial();
  if (!report.ggm_trivial) report.ggm_witness = ggm.nontrivial_pair();

  const JClassification cls = classify_j_classes(s, green, order, family);

  std::set<int> bad_primes;
  for (const JClass& jc : green.j_classes) {
    if (!jc.regular) continue;
    JRow row;
    row.j = jc.id;
    row.irreducible = cls.irreducible(jc.id);

    const MaxSubgroup max = maximal_subgroup(s, green, jc.id);
    const RelativeKernel kernel =
        relative_kernel(s, green, order, family, max);
    row.gj_order = max.order();
    row.nj_order = kernel.order();

    const Subgroup gj = verify_group(s, max.carrier);
    const NormalSubgroup nj = normal_from_elements(gj, kernel.carrier);
    const SocleIntersection inter =
        intersect_with_normal(gj, socle_data(gj), nj);
    row.a_cap_n_order = inter.a_cap.order();

    if (row.irreducible) {
      for (int q : prime_divisors(row.a_cap_n_order)) bad_primes.insert(q);
      row.obstruction = p != 0 && row.a_cap_n_order % p == 0;
      // The generation count is characteristic-free; p only gates existence.
      row.k_j = std::max(1, min_normal_generators(gj, inter.s_cap).k);
      if (!row.obstruction) {
        // Cross-check against the full relativized computation.
        const ZmudResult z = zmud_number(gj, nj, p);
        if (!z.exists || std::max(1, *z.k) != row.k_j) {
          fail(ErrorCode::internal, "per-class count disagrees with the "
                                    "relativized computation");
        }
      }
    }
    report.rows.push_back(row);
  }

  report.obstruction_primes.assign(bad_primes.begin(), bad_primes.end());
  report.exists =
      report.ggm_trivial &&
      std::none_of(report.rows.begin(), report.rows.end(),
                   [](const JRow& r) { return r.obstruction; });
  if (report.exists) {
    int total = 0;
    for (const JRow& r : report.rows) total += r.k_j;
    report.k_total = total;
  }
  return report;
}

std::optional<int> min_faithful_cr_length(const Semigroup& s, int p) {
  return analyze(s, p).k_total;
}

bool rhodes_irreducible_check(const Semigroup& s, int p) {
  require_characteristic(p);
  if (s.size() == 0) {
    fail(ErrorCode::size_mismatch, "the check requires a nonempty semigroup");
  }
  bool result = false;
  if (s.size() == 1) {
    result = true;  // the one-dimensional representation is faithful
  } else {
    const std::optional<int> distinguished = is_generalized_group_mapping(s);
    if (distinguished) {
      const GreenData green = compute_green(s);
      const MaxSubgroup max = maximal_subgroup(s, green, *distinguished);
      result = gaschutz_check(verify_group(s, max.carrier), p);
    }
  }
  if (s.size() > 1) {
    const AnalysisReport report = analyze(s, p);
    const bool via_length = report.exists && report.k_total == 1;
    if (result != via_length) {
      fail(ErrorCode::internal,
           "irreducibility characterizations disagree");
    }
  }
  return result;
}

std::optional<std::vector<int>> obstruction_primes(const Semigroup& s) {
  const AnalysisReport report = analyze(s, 0);
  if (!report.ggm_trivial) return std::nullopt;
  return report.obstruction_primes;
}

std::string report_to_json(const AnalysisReport& report) {
  nlohmann::ordered_json j;
  j["char"] = report.characteristic;
  j["ggm_trivial"] = report.ggm_trivial;
  j["rows"] = nlohmann::ordered_json::array();
  for (const JRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["j"] = row.j;
    r["irreducible"] = row.irreducible;
    r["gj_order"] = row.gj_order;
    r["nj_order"] = row.nj_order;
    r["a_cap_n_order"] = row.a_cap_n_order;
    r["k_j"] = row.k_j;
    j["rows"].push_back(std::move(r));
  }
  j["exists"] = report.exists;
  if (report.k_total) {
    j["k_total"] = *report.k_total;
  } else {
    j["k_total"] = nullptr;
  }
  j["obstruction_primes"] = report.obstruction_primes;
  return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "characteristic: " << report.characteristic << "\n";
  out << "ggm congruence trivial: " << (report.ggm_trivial ? "yes" : "no");
  if (report.ggm_witness) {
    out << "  (identifies " << report.ggm_witness->first << " and "
        << report.ggm_witness->second << ")";
  }
  out << "\n";
  out << "regular J-classes:\n";
  out << "  j  irreducible  |G_J|  |N_J|  |A∩N|  obstruction  k_J\n";
  for (const JRow& r : report.rows) {
    out << "  " << r.j << "  " << (r.irreducible ? "yes" : "no ") << "          "
        << r.gj_order << "      " << r.nj_order << "      " << r.a_cap_n_order
        << "      " << (r.obstruction ? "yes" : "no ") << "          " << r.k_j
        << "\n";
  }
  out << "faithful completely reducible representation exists: "
      << (report.exists ? "yes" : "no") << "\n";
  if (report.k_total) {
    out << "minimum number of irreducible constituents: " << *report.k_total
        << "\n";
  }
  out << "obstruction primes: {";
  for (size_t i = 0; i < report.obstruction_primes.size(); ++i) {
    if (i) out << ", ";
    out << report.obstruction_primes[i];
  }
  out << "}\n";
  return out.str();
}

}  // namespace crlen
