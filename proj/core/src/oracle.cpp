#include "crlen/oracle.hpp"

#include <algorithm>
#include <set>

namespace crlen::oracle {

int NormalLattice::index_of(const NormalSubgroup& n) const {
  for (int i = 0; i < size(); ++i) {
    if (all_normals[i] == n) return i;
  }
  return -1;
}

NormalLattice all_normal_subgroups(const Subgroup& g, int max_order) {
  if (g.order() > max_order) {
    fail(ErrorCode::too_large, "group order " + std::to_string(g.order()) +
                                   " exceeds the oracle guard " +
                                   std::to_string(max_order));
  }
  // Every normal subgroup is a join of normal closures of single elements,
  // so closing that seed set under pairwise joins reaches all of them.
  std::set<std::vector<int>> found;
  found.insert(trivial_subgroup(g).members);
  for (int x = 0; x < g.order(); ++x) {
    found.insert(normal_closure_local(g, {x}).members);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        auto joined = join(g, NormalSubgroup{snapshot[i]},
                           NormalSubgroup{snapshot[j]});
        if (found.insert(joined.members).second) grew = true;
      }
    }
  }

  NormalLattice lattice;
  for (const auto& members : found) {
    lattice.all_normals.push_back(NormalSubgroup{members});
  }
  std::sort(lattice.all_normals.begin(), lattice.all_normals.end(),
            [](const NormalSubgroup& a, const NormalSubgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.members < b.members;
            });

  const int count = lattice.size();
  lattice.leq.assign(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      lattice.leq[i][j] = std::includes(
          lattice.all_normals[j].members.begin(),
          lattice.all_normals[j].members.end(),
          lattice.all_normals[i].members.begin(),
          lattice.all_normals[i].members.end());
    }
  }
  // Lattice audit: closed under intersection.
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      auto cap = intersect(lattice.all_normals[i], lattice.all_normals[j]);
      bool present = false;
      for (const auto& n : lattice.all_normals) {
        if (n == cap) {
          present = true;
          break;
        }
      }
      if (!present) {
        fail(ErrorCode::internal,
             "normal subgroup lattice is not intersection-closed");
      }
    }
  }
  return lattice;
}

namespace {

void require_semilattice(const Semigroup& s) {
  for (Elem x = 0; x < s.size(); ++x) {
    if (!s.is_idempotent(x)) {
      fail(ErrorCode::not_a_semilattice,
           "element " + std::to_string(x) + " is not idempotent");
    }
    for (Elem y = 0; y < s.size(); ++y) {
      if (s.product(x, y) != s.product(y, x)) {
        fail(ErrorCode::not_a_semilattice, "multiplication is not commutative");
      }
    }
  }
}

}  // namespace

std::vector<Elem> join_irreducibles(const Semigroup& s) {
  require_semilattice(s);
  const int n = s.size();
  // natural order: x <= y iff x*y = x
  auto leq = [&](Elem x, Elem y) { return s.product(x, y) == x; };

  std::vector<Elem> out;
  for (Elem e = 0; e < n; ++e) {
    std::vector<Elem> below;
    for (Elem x = 0; x < n; ++x) {
      if (x != e && leq(x, e)) below.push_back(x);
    }
    if (below.empty()) continue;  // the minimum: the empty join
    // least upper bound of `below`: the meet of all its upper bounds
    std::optional<Elem> lub;
    for (Elem u = 0; u < n; ++u) {
      bool upper = true;
      for (Elem x : below) {
        if (!leq(x, u)) {
          upper = false;
          break;
        }
      }
      if (upper) lub = lub ? s.product(*lub, u) : u;
    }
    if (!lub || *lub != e) out.push_back(e);
  }
  return out;
}

std::vector<std::pair<NormalSubgroup, NormalSubgroup>> meet_irreducible_normals(
    const Subgroup& g, const NormalLattice& lattice) {
  std::vector<std::pair<NormalSubgroup, NormalSubgroup>> out;
  for (int i = 0; i < lattice.size(); ++i) {
    // intersection of all strict overgroups; empty intersection = G
    NormalSubgroup bar = full_subgroup(g);
    bool has_over = false;
    for (int j = 0; j < lattice.size(); ++j) {
      if (i != j && lattice.leq[i][j]) {
        bar = intersect(bar, lattice.all_normals[j]);
        has_over = true;
      }
    }
    if (has_over && !(bar == lattice.all_normals[i])) {
      out.emplace_back(lattice.all_normals[i], bar);
    }
  }
  return out;
}

namespace {

// Join irreducibles of the normal lattice, for the Dilworth count: N is
// join irreducible when the smallest lattice member containing all strict
// subgroups of N is not N itself.
int count_join_irreducible_normals(const NormalLattice& lattice) {
  int count = 0;
  for (int i = 0; i < lattice.size(); ++i) {
    std::vector<int> union_members;
    bool has_under = false;
    for (int j = 0; j < lattice.size(); ++j) {
      if (i != j && lattice.leq[j][i]) {
        has_under = true;
        union_members.insert(union_members.end(),
                             lattice.all_normals[j].members.begin(),
                             lattice.all_normals[j].members.end());
      }
    }
    if (!has_under) continue;  // the trivial subgroup: the empty join
    std::sort(union_members.begin(), union_members.end());
    union_members.erase(std::unique(union_members.begin(), union_members.end()),
                        union_members.end());
    // smallest member containing the union (the lattice is
    // intersection-closed, so this is the fold of all such members)
    std::optional<NormalSubgroup> smallest;
    for (int j = 0; j < lattice.size(); ++j) {
      const auto& n = lattice.all_normals[j];
      if (std::includes(n.members.begin(), n.members.end(),
                        union_members.begin(), union_members.end())) {
        smallest = smallest ? intersect(*smallest, n) : n;
      }
    }
    if (!smallest || !(*smallest == lattice.all_normals[i])) ++count;
  }
  return count;
}

// Deliberately naive fixpoint closure, independent of the library's
// worklist implementation.
std::vector<int> dumb_normal_closure(const Subgroup& g,
                                     const std::vector<int>& seed) {
  std::vector<char> mask(g.order(), 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!mask[x]) {
      mask[x] = 1;
      members.push_back(x);
      return true;
    }
    return false;
  };
  add(g.identity_local());
  for (int x : seed) add(x);
  bool changed = true;
  while (changed) {
    changed = false;
    const size_t count = members.size();
    for (size_t i = 0; i < count; ++i) {
      for (int h = 0; h < g.order(); ++h) {
        if (add(g.conj(h, members[i]))) changed = true;
      }
      for (size_t j = 0; j < count; ++j) {
        if (add(g.mul(members[i], members[j]))) changed = true;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

bool dilworth_check(const Subgroup& g, const NormalLattice& lattice) {
  const int meet_irr =
      static_cast<int>(meet_irreducible_normals(g, lattice).size());
  return meet_irr == count_join_irreducible_normals(lattice);
}

int exhaustive_min_normal_gen(const Subgroup& g, const NormalSubgroup& m,
                              long long tuple_guard) {
  if (m.trivial()) return 0;
  const int size = m.order();
  for (int k = 1; k <= 32; ++k) {
    long long tuples = 1;
    for (int i = 0; i < k; ++i) {
      tuples *= size;
      if (tuples > tuple_guard) {
        fail(ErrorCode::too_large,
             "tuple enumeration would exceed the guard at k=" +
                 std::to_string(k));
      }
    }
    std::vector<int> odometer(k, 0);
    while (true) {
      std::vector<int> seed;
      seed.reserve(k);
      for (int idx : odometer) seed.push_back(m.members[idx]);
      if (dumb_normal_closure(g, seed) == m.members) return k;
      int pos = k - 1;
      while (pos >= 0 && odometer[pos] == size - 1) odometer[pos--] = 0;
      if (pos < 0) break;
      ++odometer[pos];
    }
  }
  fail(ErrorCode::internal, "exhaustive generator search did not terminate");
}

CrosscheckReport crosscheck_equivalences(const Subgroup& g,
                                         const NormalSubgroup& n, int p,
                                         long long tuple_guard) {
  if (!is_normal(g, n)) fail(ErrorCode::not_normal, "N is not normal in G");
  CrosscheckReport report;

  const SocleData socle = socle_data(g);
  const SocleIntersection inter = intersect_with_normal(g, socle, n);
  report.a_cap_n_order = inter.a_cap.order();
  report.t_cap_nontrivial = !inter.t_cap.trivial();

  report.k_socle_cap = exhaustive_min_normal_gen(g, inter.s_cap, tuple_guard);
  report.k_abelian_cap =
      exhaustive_min_normal_gen(g, inter.a_cap, tuple_guard);
  for (const SylowPiece& piece : sylow_decompose(g, inter.a_cap)) {
    report.k_sylow_max =
        std::max(report.k_sylow_max,
                 exhaustive_min_normal_gen(g, piece.carrier, tuple_guard));
  }
  report.k_optimized = min_normal_generators(g, inter.s_cap).k;

  const int adjust = report.t_cap_nontrivial ? 1 : 0;
  const int via_abelian = std::max(report.k_abelian_cap, adjust);
  const int via_sylow = std::max(report.k_sylow_max, adjust);
  if (report.k_socle_cap != via_abelian || report.k_socle_cap != via_sylow ||
      report.k_socle_cap != report.k_optimized) {
    fail(ErrorCode::internal,
         "generation equivalences disagree: socle=" +
             std::to_string(report.k_socle_cap) + " abelian=" +
             std::to_string(via_abelian) + " sylow=" +
             std::to_string(via_sylow) + " optimized=" +
             std::to_string(report.k_optimized));
  }

  if (p != 0) {
    if (!is_prime(p)) {
      fail(ErrorCode::not_prime_or_zero,
           std::to_string(p) + " is neither 0 nor prime");
    }
    report.exists_by_divisibility = report.a_cap_n_order % p != 0;
    report.exists_by_pcore = p_core(subgroup_from_normal(g, n), p).trivial();
    if (report.exists_by_divisibility != report.exists_by_pcore) {
      fail(ErrorCode::internal,
           "existence criteria disagree for p=" + std::to_string(p));
    }
  } else {
    report.exists_by_divisibility = report.exists_by_pcore = true;
  }
  return report;
}

}  // namespace crlen::oracle
