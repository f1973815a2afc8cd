#include "crlen/corpus.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "crlen/analyzer.hpp"
#include "crlen/congruence.hpp"
#include "crlen/constructions.hpp"
#include "crlen/green.hpp"
#include "crlen/group.hpp"
#include "crlen/oracle.hpp"

namespace crlen::corpus {

std::vector<NamedSemigroup> group_corpus(int max_order) {
  std::vector<NamedSemigroup> out;
  auto add = [&](std::string name, Semigroup sg) {
    if (sg.size() <= max_order) out.push_back({std::move(name), std::move(sg)});
  };
  for (int m = 1; m <= std::min(max_order, 24); ++m) {
    add("cyclic(" + std::to_string(m) + ")", builtin_group("cyclic", {m}));
  }
  for (int m = 3; 2 * m <= std::min(max_order, 24); ++m) {
    add("dihedral(" + std::to_string(m) + ")", builtin_group("dihedral", {m}));
  }
  for (int m = 2; m <= 4; ++m) {
    add("symmetric(" + std::to_string(m) + ")",
        builtin_group("symmetric", {m}));
  }
  for (int m = 3; m <= 4; ++m) {
    add("alternating(" + std::to_string(m) + ")",
        builtin_group("alternating", {m}));
  }
  add("quaternion8", builtin_group("quaternion8", {}));
  const std::vector<std::pair<int, int>> elementary = {
      {2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}};
  for (auto [p, k] : elementary) {
    add("elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) +
            ")",
        builtin_group("elementary_abelian", {p, k}));
  }
  return out;
}

Semigroup random_meet_semilattice(unsigned seed, int max_elements) {
  for (unsigned attempt = 0;; ++attempt) {
    std::mt19937 rng(seed * 1000 + attempt);
    std::uniform_int_distribution<int> subset(1, 30);  // nonempty subsets of 5 points
    std::set<int> family;
    for (int draws = 0; draws < 4; ++draws) family.insert(subset(rng));
    // close under intersection
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> snapshot(family.begin(), family.end());
      for (size_t i = 0; i < snapshot.size(); ++i) {
        for (size_t j = i + 1; j < snapshot.size(); ++j) {
          if (family.insert(snapshot[i] & snapshot[j]).second) grew = true;
        }
      }
    }
    if (static_cast<int>(family.size()) > max_elements ||
        family.size() < 4) {
      continue;
    }
    // intersection-closed set family ordered by inclusion: meets exist
    std::vector<int> sets(family.begin(), family.end());
    const int n = static_cast<int>(sets.size());
    std::vector<Elem> table(static_cast<size_t>(n) * n);
    std::map<int, int> index_of;
    for (int i = 0; i < n; ++i) index_of[sets[i]] = i;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        table[static_cast<size_t>(i) * n + j] = index_of.at(sets[i] & sets[j]);
      }
    }
    return make_semigroup(n, std::move(table), {}, true);
  }
}

std::vector<NamedSemigroup> semilattice_corpus() {
  std::vector<NamedSemigroup> out;
  for (int len = 1; len <= 6; ++len) {
    out.push_back({"chain(" + std::to_string(len) + ")",
                   chain_semilattice(len)});
  }
  for (int atoms = 0; atoms <= 3; ++atoms) {
    out.push_back({"boolean(" + std::to_string(atoms) + ")",
                   boolean_lattice(atoms)});
  }
  for (unsigned seed = 1; seed <= 3; ++seed) {
    out.push_back({"meetposet(seed=" + std::to_string(seed) + ")",
                   random_meet_semilattice(seed)});
  }
  // two incomparable elements over a bottom
  PosetSpec vee;
  vee.n = 3;
  vee.covers = {{0, 1}, {0, 2}};
  out.push_back({"vee", build_semilattice(vee)});
  return out;
}

std::vector<NamedSemigroup> misc_corpus() {
  std::vector<NamedSemigroup> out;
  out.push_back({"left_zero(2)",
                 build_from_cayley({{0, 0}, {1, 1}})});
  out.push_back({"null(2)", build_from_cayley({{0, 0}, {0, 0}})});
  out.push_back({"T(2)", parse_builtin("T(2)")});
  out.push_back({"T(3)", parse_builtin("T(3)")});
  out.push_back({"M(1,3)", build_matrix_monoid(1, 3)});
  out.push_back({"M(1,5)", build_matrix_monoid(1, 5)});
  out.push_back({"M(2,2)", build_matrix_monoid(2, 2)});
  out.push_back({"union_quotient(symmetric(3),alternating(3))",
                 parse_builtin("union_quotient(symmetric(3), alternating(3))")});
  out.push_back({"union_quotient(cyclic(4),cyclic(2))",
                 parse_builtin("union_quotient(cyclic(4), cyclic(2))")});
  out.push_back({"union_quotient(symmetric(4),klein4)",
                 parse_builtin("union_quotient(symmetric(4), klein4)")});
  out.push_back({"left_zero(2)+1",
                 adjoin_identity(build_from_cayley({{0, 0}, {1, 1}}))});
  out.push_back({"cyclic(2)+1", adjoin_identity(builtin_group("cyclic", {2}))});
  return out;
}

std::vector<NamedSemigroup> coset_monoid_corpus() {
  std::vector<NamedSemigroup> out;
  const std::vector<std::string> names = {"cyclic(2)", "cyclic(4)", "cyclic(6)",
                                          "symmetric(3)", "klein4",
                                          "dihedral(4)", "quaternion8"};
  for (const std::string& name : names) {
    out.push_back({"QG(" + name + ")", parse_builtin("QG(" + name + ")")});
  }
  return out;
}

std::vector<NamedSemigroup> full_corpus(int max_group_order) {
  std::vector<NamedSemigroup> out = group_corpus(max_group_order);
  for (auto& entry : semilattice_corpus()) out.push_back(std::move(entry));
  for (auto& entry : misc_corpus()) out.push_back(std::move(entry));
  for (auto& entry : coset_monoid_corpus()) out.push_back(std::move(entry));
  return out;
}

namespace {

[[noreturn]] void audit_fail(const std::string& name, const std::string& what) {
  fail(ErrorCode::internal, "audit of " + name + " failed: " + what);
}

// Principal ideals computed the slow literal way, as the independent route
// for checking the Green computation.
std::vector<char> bruteforce_two_sided_ideal(const Semigroup& sg, Elem s) {
  std::vector<char> in(sg.size(), 0);
  std::vector<Elem> queue{s};
  in[s] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (Elem u = 0; u < sg.size(); ++u) {
      for (Elem y : {sg.product(x, u), sg.product(u, x)}) {
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  return in;
}

void audit_green_against_ideals(const Semigroup& sg, const GreenData& green,
                                const std::string& name) {
  const int n = sg.size();
  std::vector<std::vector<char>> ideal(n);
  for (Elem s = 0; s < n; ++s) ideal[s] = bruteforce_two_sided_ideal(sg, s);
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      const bool same = ideal[s] == ideal[t];
      if (same != (green.j_class_of[s] == green.j_class_of[t])) {
        audit_fail(name, "J-classes disagree with brute-force ideals");
      }
    }
  }
  // regularity flags: a class is regular iff it contains an idempotent
  for (const JClass& jc : green.j_classes) {
    bool has_idem = false;
    for (Elem x : jc.elements) has_idem = has_idem || sg.is_idempotent(x);
    if (has_idem != jc.regular) audit_fail(name, "regularity flag wrong");
  }
}

void audit_group_theory(const Subgroup& gj, const std::string& name) {
  const SocleData socle = socle_data(gj);  // runs its own direct-product audits
  // Abelian minimal normal subgroups are elementary abelian of prime power
  // order.
  for (size_t i = 0; i < socle.minimal_normals.size(); ++i) {
    if (!socle.abelian[i]) continue;
    const auto primes = prime_divisors(socle.minimal_normals[i].order());
    if (primes.size() != 1) {
      audit_fail(name, "abelian minimal normal subgroup of non-prime-power order");
    }
    for (int x : socle.minimal_normals[i].members) {
      const int o = gj.element_order(x);
      if (o != 1 && o != primes[0]) {
        audit_fail(name, "abelian minimal normal subgroup is not elementary");
      }
    }
  }
  if (gj.order() <= 24) {
    const oracle::NormalLattice lattice = oracle::all_normal_subgroups(gj);
    // minimal normal subgroups = minimal nontrivial members of the lattice
    std::vector<NormalSubgroup> from_lattice;
    for (int i = 0; i < lattice.size(); ++i) {
      const NormalSubgroup& cand = lattice.all_normals[i];
      if (cand.trivial()) continue;
      bool minimal = true;
      for (int j = 0; j < lattice.size() && minimal; ++j) {
        if (j != i && !lattice.all_normals[j].trivial() &&
            lattice.leq[j][i]) {
          minimal = false;
        }
      }
      if (minimal) from_lattice.push_back(cand);
    }
    if (from_lattice != socle.minimal_normals) {
      audit_fail(name, "minimal normal subgroups disagree with the lattice");
    }
    // complement property: a minimal normal M and any normal N satisfy
    // M <= N or M ∩ N = 1
    for (const NormalSubgroup& m : socle.minimal_normals) {
      for (const NormalSubgroup& n : lattice.all_normals) {
        const NormalSubgroup cap = intersect(m, n);
        if (!cap.trivial() && !(cap == m)) {
          audit_fail(name, "minimal normal complement property violated");
        }
      }
    }
  }
}

}  // namespace

void audit_semigroup(const Semigroup& sg, const std::string& name) {
  if (sg.find_associativity_violation()) {
    audit_fail(name, "associativity");
  }
  const GreenData green = compute_green(sg);
  if (!stability_audit(sg, green)) audit_fail(name, "stability");
  for (Elem x = 0; x < sg.size(); ++x) {
    for (Elem y = 0; y < sg.size(); ++y) {
      const bool same_h = green.h_class_of[x] == green.h_class_of[y];
      const bool same_rl = green.r_class_of[x] == green.r_class_of[y] &&
                           green.l_class_of[x] == green.l_class_of[y];
      if (same_h != same_rl) audit_fail(name, "H is not R ∩ L");
    }
  }
  if (sg.size() <= 30) audit_green_against_ideals(sg, green, name);

  const JOrder order = j_order(green);
  const std::map<int, Congruence> family = ggm_family(sg, green);
  const JClassification cls = classify_j_classes(sg, green, order, family);
  for (const auto& [j, cj] : family) {
    verify_congruence(sg, cj);
    // witness pairs for irreducible classes really are separated by the
    // class congruence and identified below it
    const auto& entry = cls.per_class[j];
    if (entry.irreducible) {
      const auto [s, t] = *entry.witness;
      if (cj.related(s, t)) audit_fail(name, "witness not separated");
      for (int j2 : regular_below(green, order, j)) {
        if (!family.at(j2).related(s, t)) {
          audit_fail(name, "witness separated strictly below");
        }
      }
    }
  }

  for (const JClass& jc : green.j_classes) {
    if (!jc.regular) continue;
    const MaxSubgroup max = maximal_subgroup(sg, green, jc.id);
    const RelativeKernel kernel = relative_kernel(sg, green, order, family, max);
    const Subgroup gj = verify_group(sg, max.carrier);
    audit_group_theory(gj, name + "/G_" + std::to_string(jc.id));

    // N_J is independent of the choice of idempotent: transporting along a
    // linking pair maps the kernel at e onto the kernel at f.
    for (Elem f : jc.idempotents) {
      if (f == max.e) continue;
      const MaxSubgroup max_f = maximal_subgroup(sg, green, jc.id, f);
      const RelativeKernel kernel_f =
          relative_kernel(sg, green, order, family, max_f);
      const TransportIso iso =
          subgroup_transport_iso(sg, green, jc.id, max.e, f);
      std::vector<Elem> transported;
      for (Elem x : kernel.carrier) {
        transported.push_back(apply_transport(sg, iso, x));
      }
      std::sort(transported.begin(), transported.end());
      if (transported != kernel_f.carrier) {
        audit_fail(name, "relative kernel depends on the idempotent choice");
      }
    }
  }
}

bool run_oracle_suite(int max_group_order, std::ostream& log) {
  bool ok = true;
  auto run = [&](const std::string& name, auto&& body) {
    try {
      body();
      log << "ok   " << name << "\n";
    } catch (const std::exception& e) {
      log << "FAIL " << name << ": " << e.what() << "\n";
      ok = false;
    }
  };

  for (const NamedSemigroup& entry : group_corpus(max_group_order)) {
    run(entry.name, [&] {
      const Subgroup g = as_group(entry.sg);
      const oracle::NormalLattice lattice = oracle::all_normal_subgroups(g);
      if (!oracle::dilworth_check(g, lattice)) {
        fail(ErrorCode::internal, "Dilworth count mismatch");
      }
      for (const NormalSubgroup& n : lattice.all_normals) {
        for (int p : {0, 2, 3, 5, 7}) {
          oracle::crosscheck_equivalences(g, n, p);
        }
      }
    });
  }

  for (const NamedSemigroup& entry : semilattice_corpus()) {
    run(entry.name, [&] {
      const auto joins = oracle::join_irreducibles(entry.sg);
      const AnalysisReport report = analyze(entry.sg, 0);
      if (!report.k_total ||
          *report.k_total != static_cast<int>(joins.size())) {
        fail(ErrorCode::internal, "semilattice constituent count mismatch");
      }
    });
  }

  const std::vector<std::string> qg_names = {"cyclic(4)", "cyclic(6)",
      "symmetric(3)", "klein4", "dihedral(4)", "quaternion8"};
  for (const std::string& name : qg_names) {
    run("QG(" + name + ")", [&] {
      const Semigroup base = parse_builtin(name);
      const Subgroup g = as_group(base);
      const oracle::NormalLattice lattice = oracle::all_normal_subgroups(g);
      const auto meet_irr = oracle::meet_irreducible_normals(g, lattice);
      const CosetMonoid qg = build_coset_monoid(g);
      const AnalysisReport report = analyze(qg.sg, 0);
      if (!report.k_total ||
          *report.k_total != static_cast<int>(meet_irr.size())) {
        fail(ErrorCode::internal, "coset monoid constituent count mismatch");
      }
      // the idempotents of the coset monoid are exactly the normal subgroups
      int idempotents = 0;
      for (Elem x = 0; x < qg.sg.size(); ++x) {
        if (qg.sg.is_idempotent(x)) ++idempotents;
      }
      if (idempotents != lattice.size()) {
        fail(ErrorCode::internal, "idempotent count != normal subgroup count");
      }
    });
  }

  for (const NamedSemigroup& entry : full_corpus(max_group_order)) {
    run("audit " + entry.name, [&] { audit_semigroup(entry.sg, entry.name); });
  }
  return ok;
}

}  // namespace crlen::corpus
