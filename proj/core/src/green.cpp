#include "crlen/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "crlen/group.hpp"

namespace crlen {

namespace {

// Strongly connected components of the graph on elements with edges
// x -> x*u and x -> u*x for all u.  Mutual reachability under two-sided
// translation is exactly equality of principal two-sided ideals, so the
// components are the J-classes.  Iterative Tarjan; components are emitted
// in reverse topological order (ideals first).
struct SccResult {
  std::vector<int> comp_of;
  int num_comps = 0;
};

SccResult tarjan_two_sided(const Semigroup& s) {
  const int n = s.size();
  SccResult res;
  res.comp_of.assign(n, -1);
  if (n == 0) return res;

  std::vector<int> index(n, -1), lowlink(n, 0), next_edge(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack, call;
  stack.reserve(n);
  int counter = 0;

  auto neighbor = [&](int x, int i) {
    // Edges 0..n-1: x*u; edges n..2n-1: u*x.
    return i < n ? s.product(x, i) : s.product(i - n, x);
  };

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back(root);
    while (!call.empty()) {
      int v = call.back();
      if (index[v] == -1) {
        index[v] = lowlink[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (next_edge[v] < 2 * n) {
        int w = neighbor(v, next_edge[v]++);
        if (index[w] == -1) {
          call.push_back(w);
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
      }
      if (descended) continue;
      call.pop_back();
      if (!call.empty()) {
        lowlink[call.back()] = std::min(lowlink[call.back()], lowlink[v]);
      }
      if (lowlink[v] == index[v]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          res.comp_of[w] = res.num_comps;
          if (w == v) break;
        }
        ++res.num_comps;
      }
    }
  }
  return res;
}

// Classes keyed by set of elements; ids assigned by first occurrence while
// scanning elements in ascending order, which makes the id order canonical.
std::vector<int> classes_by_key(int n,
                                const std::vector<std::vector<bool>>& key) {
  std::vector<int> class_of(n, -1);
  std::map<std::vector<bool>, int> seen;
  for (int x = 0; x < n; ++x) {
    auto [it, inserted] = seen.emplace(key[x], static_cast<int>(seen.size()));
    class_of[x] = it->second;
  }
  return class_of;
}

std::vector<std::vector<bool>> right_ideals(const Semigroup& s) {
  const int n = s.size();
  std::vector<std::vector<bool>> ideal(n, std::vector<bool>(n, false));
  for (Elem x = 0; x < n; ++x) {
    ideal[x][x] = true;  // the S^1 factor
    for (Elem u = 0; u < n; ++u) ideal[x][s.product(x, u)] = true;
  }
  return ideal;
}

std::vector<std::vector<bool>> left_ideals(const Semigroup& s) {
  const int n = s.size();
  std::vector<std::vector<bool>> ideal(n, std::vector<bool>(n, false));
  for (Elem x = 0; x < n; ++x) {
    ideal[x][x] = true;
    for (Elem u = 0; u < n; ++u) ideal[x][s.product(u, x)] = true;
  }
  return ideal;
}

}  // namespace

GreenData compute_green(const Semigroup& s) {
  const int n = s.size();
  GreenData g;

  // R- and L-classes by equality of principal one-sided ideals, which are
  // single table rows/columns plus the element itself.
  g.r_class_of = classes_by_key(n, right_ideals(s));
  g.l_class_of = classes_by_key(n, left_ideals(s));

  {
    std::map<std::pair<int, int>, int> seen;
    g.h_class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      auto [it, inserted] = seen.emplace(
          std::make_pair(g.r_class_of[x], g.l_class_of[x]),
          static_cast<int>(seen.size()));
      g.h_class_of[x] = it->second;
    }
  }

  // J-classes as strongly connected components, renumbered canonically.
  SccResult scc = tarjan_two_sided(s);
  std::vector<int> renumber(scc.num_comps, -1);
  int next_id = 0;
  for (int x = 0; x < n; ++x) {
    if (renumber[scc.comp_of[x]] == -1) renumber[scc.comp_of[x]] = next_id++;
  }
  g.j_class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) g.j_class_of[x] = renumber[scc.comp_of[x]];

  g.j_classes.resize(next_id);
  for (int j = 0; j < next_id; ++j) g.j_classes[j].id = j;
  for (Elem x = 0; x < n; ++x) {
    JClass& jc = g.j_classes[g.j_class_of[x]];
    jc.elements.push_back(x);
    if (s.is_idempotent(x)) jc.idempotents.push_back(x);
  }
  for (JClass& jc : g.j_classes) jc.regular = !jc.idempotents.empty();

  // Condensation edges (one-step reachability between distinct classes).
  g.j_successors.assign(next_id, {});
  {
    std::vector<std::vector<bool>> edge(next_id,
                                        std::vector<bool>(next_id, false));
    for (Elem x = 0; x < n; ++x) {
      const int cx = g.j_class_of[x];
      for (Elem u = 0; u < n; ++u) {
        edge[cx][g.j_class_of[s.product(x, u)]] = true;
        edge[cx][g.j_class_of[s.product(u, x)]] = true;
      }
    }
    for (int a = 0; a < next_id; ++a) {
      for (int b = 0; b < next_id; ++b) {
        if (a != b && edge[a][b]) g.j_successors[a].push_back(b);
      }
    }
  }
  return g;
}

JOrder::JOrder(int num_classes, std::vector<std::vector<bool>> leq)
    : num_classes_(num_classes), leq_(std::move(leq)) {}

std::vector<std::pair<int, int>> JOrder::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int lo = 0; lo < num_classes_; ++lo) {
    for (int hi = 0; hi < num_classes_; ++hi) {
      if (!lt(lo, hi)) continue;
      bool is_cover = true;
      for (int mid = 0; mid < num_classes_ && is_cover; ++mid) {
        if (lt(lo, mid) && lt(mid, hi)) is_cover = false;
      }
      if (is_cover) out.emplace_back(lo, hi);
    }
  }
  return out;
}

JOrder j_order(const GreenData& green) {
  const int c = green.num_j_classes();
  // reach[a][b]: class b reachable from class a (i.e. b <= a).
  std::vector<std::vector<bool>> reach(c, std::vector<bool>(c, false));

  // Depth-first closure over the condensation DAG, memoized per class.
  std::vector<bool> done(c, false);
  std::vector<int> order;
  order.reserve(c);
  for (int start = 0; start < c; ++start) {
    if (done[start]) continue;
    // post-order traversal
    std::vector<std::pair<int, size_t>> frame{{start, 0}};
    while (!frame.empty()) {
      auto& [v, i] = frame.back();
      if (i < green.j_successors[v].size()) {
        int w = green.j_successors[v][i++];
        if (!done[w]) frame.emplace_back(w, 0);
        continue;
      }
      if (!done[v]) {
        reach[v][v] = true;
        for (int w : green.j_successors[v]) {
          for (int b = 0; b < c; ++b) {
            if (reach[w][b]) reach[v][b] = true;
          }
        }
        done[v] = true;
      }
      frame.pop_back();
    }
  }

  std::vector<std::vector<bool>> leq(c, std::vector<bool>(c, false));
  for (int a = 0; a < c; ++a) {
    for (int b = 0; b < c; ++b) leq[a][b] = reach[b][a];
  }
  return JOrder(c, std::move(leq));
}

std::vector<int> regular_below(const GreenData& green, const JOrder& order,
                               int j) {
  std::vector<int> out;
  for (int k = 0; k < green.num_j_classes(); ++k) {
    if (green.j_classes[k].regular && order.lt(k, j)) out.push_back(k);
  }
  return out;
}

MaxSubgroup maximal_subgroup(const Semigroup& s, const GreenData& green,
                             int j_class, std::optional<Elem> e) {
  const JClass& jc = green.j_classes.at(j_class);
  if (!jc.regular) {
    fail(ErrorCode::not_regular,
         "J-class " + std::to_string(j_class) + " has no idempotent");
  }
  Elem chosen = e.value_or(jc.idempotents.front());
  if (!s.is_idempotent(chosen) ||
      green.j_class_of[chosen] != j_class) {
    fail(ErrorCode::not_idempotent_in_class,
         "element " + std::to_string(chosen) + " is not an idempotent of class " +
             std::to_string(j_class));
  }

  MaxSubgroup out;
  out.j_class = j_class;
  out.e = chosen;
  const int h = green.h_class_of[chosen];
  for (Elem x = 0; x < s.size(); ++x) {
    if (green.h_class_of[x] == h) out.carrier.push_back(x);
  }
  // The H-class of an idempotent is a group; verify_group also builds the
  // induced table and would reject a broken Green computation.
  Subgroup sub = verify_group(s, out.carrier);
  const int m = out.order();
  out.group_table.resize(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      out.group_table[static_cast<size_t>(a) * m + b] = sub.mul(a, b);
    }
  }
  return out;
}

TransportIso subgroup_transport_iso(const Semigroup& s, const GreenData& green,
                                    int j_class, Elem e, Elem f) {
  const JClass& jc = green.j_classes.at(j_class);
  auto in_class_idempotent = [&](Elem x) {
    return s.is_idempotent(x) && green.j_class_of[x] == j_class;
  };
  if (!jc.regular) fail(ErrorCode::not_regular, "class has no idempotent");
  if (!in_class_idempotent(e) || !in_class_idempotent(f)) {
    fail(ErrorCode::not_idempotent_in_class,
         "transport endpoints must be idempotents of the class");
  }
  TransportIso iso;
  if (e == f) {
    iso.a = iso.a_prime = e;
    return iso;
  }

  // A linking pair lives in the H-classes R_f ∩ L_e and R_e ∩ L_f.
  std::vector<Elem> from, to;
  for (Elem x : jc.elements) {
    if (green.r_class_of[x] == green.r_class_of[f] &&
        green.l_class_of[x] == green.l_class_of[e]) {
      from.push_back(x);
    }
    if (green.r_class_of[x] == green.r_class_of[e] &&
        green.l_class_of[x] == green.l_class_of[f]) {
      to.push_back(x);
    }
  }
  bool found = false;
  for (Elem a : from) {
    for (Elem ap : to) {
      if (s.product(a, ap, a) == a && s.product(ap, a, ap) == ap &&
          s.product(a, ap) == f && s.product(ap, a) == e) {
        iso.a = a;
        iso.a_prime = ap;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) {
    fail(ErrorCode::no_linking_pair,
         "no linking pair between idempotents " + std::to_string(e) + " and " +
             std::to_string(f));
  }

  // Audit: x -> a x a' is a bijective homomorphism between the H-classes.
  MaxSubgroup ge = maximal_subgroup(s, green, j_class, e);
  MaxSubgroup gf = maximal_subgroup(s, green, j_class, f);
  std::vector<bool> hit(s.size(), false);
  for (Elem x : ge.carrier) {
    Elem y = apply_transport(s, iso, x);
    if (!std::binary_search(gf.carrier.begin(), gf.carrier.end(), y) ||
        hit[y]) {
      fail(ErrorCode::internal, "transport map is not a bijection onto G_f");
    }
    hit[y] = true;
  }
  for (Elem x : ge.carrier) {
    for (Elem y : ge.carrier) {
      if (apply_transport(s, iso, s.product(x, y)) !=
          s.product(apply_transport(s, iso, x), apply_transport(s, iso, y))) {
        fail(ErrorCode::internal, "transport map is not a homomorphism");
      }
    }
  }
  return iso;
}

bool stability_audit(const Semigroup& s, const GreenData& green) {
  const int n = s.size();
  auto right = right_ideals(s);
  auto left = left_ideals(s);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const bool same_j = green.j_class_of[x] == green.j_class_of[y];
      if ((right[x][y] && same_j) != (green.r_class_of[x] == green.r_class_of[y])) {
        return false;
      }
      if ((left[x][y] && same_j) != (green.l_class_of[x] == green.l_class_of[y])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace crlen
