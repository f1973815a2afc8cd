#include "crlen/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crlen {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

bool is_p_power(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

int Subgroup::element_order(int a) const {
  int o = 1;
  int x = a;
  while (x != id_) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

bool Subgroup::is_abelian() const {
  const int m = order();
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

Subgroup verify_group(const Semigroup& s, const std::vector<Elem>& carrier) {
  if (carrier.empty()) fail(ErrorCode::no_identity, "empty carrier");

  Subgroup g;
  g.parent_ = &s;
  g.carrier_ = carrier;
  std::sort(g.carrier_.begin(), g.carrier_.end());
  g.carrier_.erase(std::unique(g.carrier_.begin(), g.carrier_.end()),
                   g.carrier_.end());
  for (Elem x : g.carrier_) {
    if (x < 0 || x >= s.size()) {
      fail(ErrorCode::index_out_of_range,
           "carrier element " + std::to_string(x) + " outside semigroup");
    }
  }
  const int m = g.order();
  g.local_of_.assign(s.size(), -1);
  for (int i = 0; i < m; ++i) g.local_of_[g.carrier_[i]] = i;

  g.table_.assign(static_cast<size_t>(m) * m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const Elem p = s.product(g.carrier_[a], g.carrier_[b]);
      const int lp = g.local_of_[p];
      if (lp < 0) {
        fail(ErrorCode::not_closed,
             "product " + std::to_string(g.carrier_[a]) + "*" +
                 std::to_string(g.carrier_[b]) + " = " + std::to_string(p) +
                 " leaves the carrier");
      }
      g.table_[static_cast<size_t>(a) * m + b] = lp;
    }
  }

  g.id_ = -1;
  for (int e = 0; e < m && g.id_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x) {
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    }
    if (ok) g.id_ = e;
  }
  if (g.id_ < 0) fail(ErrorCode::no_identity, "carrier has no identity");

  g.inverse_.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (g.mul(a, b) == g.id_ && g.mul(b, a) == g.id_) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0) {
      fail(ErrorCode::no_inverse, "element " + std::to_string(g.carrier_[a]) +
                                      " has no inverse in the carrier");
    }
  }
  return g;
}

bool is_normal(const Subgroup& g, const NormalSubgroup& n) {
  const int m = g.order();
  std::vector<char> mask(m, 0);
  for (int x : n.members) {
    if (x < 0 || x >= m) return false;
    mask[x] = 1;
  }
  if (!mask[g.identity_local()]) return false;
  for (int a : n.members) {
    if (!mask[g.inv(a)]) return false;
    for (int b : n.members) {
      if (!mask[g.mul(a, b)]) return false;
    }
    for (int h = 0; h < m; ++h) {
      if (!mask[g.conj(h, a)]) return false;
    }
  }
  return true;
}

NormalSubgroup normal_closure_local(const Subgroup& g,
                                    const std::vector<int>& x_local) {
  const int m = g.order();
  // All conjugates of the seed elements; the subgroup they generate is
  // automatically normal.
  std::vector<char> is_gen(m, 0);
  std::vector<int> gens;
  for (int x : x_local) {
    for (int h = 0; h < m; ++h) {
      const int y = g.conj(h, x);
      if (!is_gen[y]) {
        is_gen[y] = 1;
        gens.push_back(y);
      }
    }
  }
  std::vector<char> mask(m, 0);
  std::vector<int> members{g.identity_local()};
  mask[g.identity_local()] = 1;
  for (size_t head = 0; head < members.size(); ++head) {
    for (int c : gens) {
      const int y = g.mul(members[head], c);
      if (!mask[y]) {
        mask[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return NormalSubgroup{std::move(members)};
}

NormalSubgroup normal_closure(const Subgroup& g, const std::vector<Elem>& x) {
  std::vector<int> locals;
  locals.reserve(x.size());
  for (Elem e : x) {
    if (!g.contains(e)) {
      fail(ErrorCode::element_outside_group,
           "element " + std::to_string(e) + " is not in the group carrier");
    }
    locals.push_back(g.local(e));
  }
  return normal_closure_local(g, locals);
}

NormalSubgroup join(const Subgroup& g, const NormalSubgroup& n1,
                    const NormalSubgroup& n2) {
  // Both factors are normal, so the setwise product is already the join.
  std::vector<char> mask(g.order(), 0);
  std::vector<int> members;
  for (int a : n1.members) {
    for (int b : n2.members) {
      const int y = g.mul(a, b);
      if (!mask[y]) {
        mask[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return NormalSubgroup{std::move(members)};
}

NormalSubgroup intersect(const NormalSubgroup& n1, const NormalSubgroup& n2) {
  NormalSubgroup out;
  std::set_intersection(n1.members.begin(), n1.members.end(),
                        n2.members.begin(), n2.members.end(),
                        std::back_inserter(out.members));
  return out;
}

bool subgroup_is_abelian(const Subgroup& g, const NormalSubgroup& n) {
  for (size_t i = 0; i < n.members.size(); ++i) {
    for (size_t j = i + 1; j < n.members.size(); ++j) {
      if (g.mul(n.members[i], n.members[j]) !=
          g.mul(n.members[j], n.members[i])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<NormalSubgroup> minimal_normal_subgroups(const Subgroup& g) {
  const int m = g.order();
  std::vector<NormalSubgroup> out;
  if (m == 1) return out;

  // A minimal normal subgroup is the normal closure of any of its
  // nontrivial elements, so the minimal closures of single elements are
  // exactly the minimal normal subgroups.
  std::set<std::vector<int>> distinct;
  for (int x = 0; x < m; ++x) {
    if (x == g.identity_local()) continue;
    distinct.insert(normal_closure_local(g, {x}).members);
  }
  for (const auto& cand : distinct) {
    bool minimal = true;
    for (const auto& other : distinct) {
      if (other.size() < cand.size() &&
          std::includes(cand.begin(), cand.end(), other.begin(),
                        other.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(NormalSubgroup{cand});
  }
  std::sort(out.begin(), out.end(),
            [](const NormalSubgroup& a, const NormalSubgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.members < b.members;
            });
  return out;
}

NormalSubgroup full_subgroup(const Subgroup& g) {
  NormalSubgroup out;
  out.members.resize(g.order());
  for (int i = 0; i < g.order(); ++i) out.members[i] = i;
  return out;
}

NormalSubgroup trivial_subgroup(const Subgroup& g) {
  return NormalSubgroup{{g.identity_local()}};
}

SocleData socle_data(const Subgroup& g) {
  SocleData out;
  out.minimal_normals = minimal_normal_subgroups(g);
  out.a = trivial_subgroup(g);
  out.t = trivial_subgroup(g);
  for (const NormalSubgroup& mn : out.minimal_normals) {
    const bool ab = subgroup_is_abelian(g, mn);
    out.abelian.push_back(ab);
    if (ab) {
      out.a = join(g, out.a, mn);
    } else {
      out.t = join(g, out.t, mn);
    }
  }
  out.socle = join(g, out.a, out.t);

  // Structure audits: the socle is the internal direct product A x T, A is
  // abelian and T has trivial center.
  if (!intersect(out.a, out.t).trivial()) {
    fail(ErrorCode::internal, "socle audit: A ∩ T is nontrivial");
  }
  if (out.socle.order() != out.a.order() * out.t.order()) {
    fail(ErrorCode::internal, "socle audit: |S| != |A|*|T|");
  }
  if (!subgroup_is_abelian(g, out.a)) {
    fail(ErrorCode::internal, "socle audit: A(G) is not abelian");
  }
  for (int t : out.t.members) {
    if (t == g.identity_local()) continue;
    bool central = true;
    for (int u : out.t.members) {
      if (g.mul(t, u) != g.mul(u, t)) {
        central = false;
        break;
      }
    }
    if (central) fail(ErrorCode::internal, "socle audit: Z(T) is nontrivial");
  }
  return out;
}

SocleIntersection intersect_with_normal(const Subgroup& g,
                                        const SocleData& socle,
                                        const NormalSubgroup& n) {
  if (!is_normal(g, n)) {
    fail(ErrorCode::not_normal, "subgroup is not normal");
  }
  SocleIntersection out;
  out.a_cap = intersect(socle.a, n);
  out.t_cap = intersect(socle.t, n);
  out.s_cap = intersect(socle.socle, n);

  if (!intersect(out.a_cap, out.t_cap).trivial() ||
      out.s_cap.order() != out.a_cap.order() * out.t_cap.order() ||
      !(join(g, out.a_cap, out.t_cap) == out.s_cap)) {
    fail(ErrorCode::internal,
         "socle audit: S ∩ N is not the direct product (A ∩ N) x (T ∩ N)");
  }
  // T ∩ N must be the product of the nonabelian minimal normals inside N.
  NormalSubgroup t_from_factors = trivial_subgroup(g);
  for (size_t i = 0; i < socle.minimal_normals.size(); ++i) {
    if (socle.abelian[i]) continue;
    const NormalSubgroup& ti = socle.minimal_normals[i];
    const NormalSubgroup cap = intersect(ti, n);
    if (cap.order() == ti.order()) {
      t_from_factors = join(g, t_from_factors, ti);
    } else if (!cap.trivial()) {
      fail(ErrorCode::internal,
           "socle audit: nonabelian minimal normal meets N partially");
    }
  }
  if (!(t_from_factors == out.t_cap)) {
    fail(ErrorCode::internal,
         "socle audit: T ∩ N is not a product of minimal normal factors");
  }
  return out;
}

std::vector<SylowPiece> sylow_decompose(const Subgroup& g,
                                        const NormalSubgroup& a) {
  if (!subgroup_is_abelian(g, a)) {
    fail(ErrorCode::not_abelian, "sylow decomposition needs an abelian input");
  }
  std::vector<SylowPiece> out;
  for (int p : prime_divisors(a.order())) {
    SylowPiece piece;
    piece.p = p;
    for (int x : a.members) {
      if (is_p_power(g.element_order(x), p)) piece.carrier.members.push_back(x);
    }
    for (int x : piece.carrier.members) {
      const int o = g.element_order(x);
      if (o != 1 && o != p) {
        fail(ErrorCode::internal,
             "Sylow piece for p=" + std::to_string(p) +
                 " is not elementary abelian");
      }
    }
    if (!is_normal(g, piece.carrier)) {
      fail(ErrorCode::internal, "Sylow piece is not normal");
    }
    out.push_back(std::move(piece));
  }
  // The pieces partition A.
  int product = 1;
  for (const auto& piece : out) product *= piece.carrier.order();
  if (product != a.order()) {
    fail(ErrorCode::internal, "Sylow pieces do not multiply up to |A|");
  }
  return out;
}

NormalSubgroup p_core(const Subgroup& n, int p) {
  if (!is_prime(p)) {
    fail(ErrorCode::not_prime_or_zero,
         std::to_string(p) + " is not prime");
  }
  NormalSubgroup core = trivial_subgroup(n);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < n.order(); ++x) {
      if (core.contains(x)) continue;
      if (!is_p_power(n.element_order(x), p)) continue;
      const NormalSubgroup cl = normal_closure_local(n, {x});
      if (!is_p_power(cl.order(), p)) continue;
      core = join(n, core, cl);
      grew = true;
    }
  }
  return core;
}

std::vector<int> conjugacy_class_reps(const Subgroup& g,
                                      const NormalSubgroup& m) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> reps;
  for (int x : m.members) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int h = 0; h < g.order(); ++h) seen[g.conj(h, x)] = 1;
  }
  return reps;
}

namespace {

struct GenSearch {
  const Subgroup& g;
  const NormalSubgroup& target;
  std::vector<char> target_mask;
  std::vector<std::optional<NormalSubgroup>> single_closure;
  std::vector<int> reps;
  std::vector<int> witness_local;

  explicit GenSearch(const Subgroup& g_, const NormalSubgroup& m)
      : g(g_), target(m), target_mask(g_.order(), 0),
        single_closure(g_.order()) {
    for (int x : m.members) target_mask[x] = 1;
    for (int r : conjugacy_class_reps(g, m)) {
      if (r != g.identity_local()) reps.push_back(r);
    }
  }

  const NormalSubgroup& closure_of(int x) {
    if (!single_closure[x]) single_closure[x] = normal_closure_local(g, {x});
    return *single_closure[x];
  }

  bool dfs(int depth, int k, const NormalSubgroup& have) {
    if (depth == k) return have == target;
    std::vector<char> have_mask(g.order(), 0);
    for (int x : have.members) have_mask[x] = 1;
    if (depth == 0) {
      for (int x : reps) {
        const NormalSubgroup next = join(g, have, closure_of(x));
        witness_local.push_back(x);
        if (dfs(depth + 1, k, next)) return true;
        witness_local.pop_back();
      }
      return false;
    }
    for (int x : target.members) {
      if (have_mask[x]) continue;
      const NormalSubgroup next = join(g, have, closure_of(x));
      witness_local.push_back(x);
      if (dfs(depth + 1, k, next)) return true;
      witness_local.pop_back();
    }
    return false;
  }
};

}  // namespace

GenerationResult min_normal_generators(const Subgroup& g,
                                       const NormalSubgroup& m) {
  if (!is_normal(g, m)) {
    fail(ErrorCode::not_normal, "generation target is not normal");
  }
  GenerationResult out;
  if (m.trivial()) return out;  // k = 0 for the trivial subgroup

  GenSearch search(g, m);
  const NormalSubgroup start = trivial_subgroup(g);
  // Iterative deepening; k never exceeds log2 |m| since each new generator
  // at least doubles the subgroup.
  for (int k = 1; k <= 32; ++k) {
    search.witness_local.clear();
    if (search.dfs(0, k, start)) {
      out.k = k;
      for (int x : search.witness_local) out.witness.push_back(g.elem(x));
      return out;
    }
  }
  fail(ErrorCode::internal, "generator search did not terminate");
}

int min_normal_generators_reduced(const Subgroup& g, const NormalSubgroup& n) {
  const SocleData socle = socle_data(g);
  const SocleIntersection inter = intersect_with_normal(g, socle, n);
  int k = 0;
  for (const SylowPiece& piece : sylow_decompose(g, inter.a_cap)) {
    k = std::max(k, min_normal_generators(g, piece.carrier).k);
  }
  if (!inter.t_cap.trivial()) k = std::max(k, 1);
  return k;
}

Subgroup as_group(const Semigroup& s) {
  std::vector<Elem> all(s.size());
  for (int i = 0; i < s.size(); ++i) all[i] = i;
  return verify_group(s, all);
}

Subgroup subgroup_from_normal(const Subgroup& g, const NormalSubgroup& n) {
  return verify_group(g.parent(), n.ambient_elements(g));
}

NormalSubgroup normal_from_elements(const Subgroup& g,
                                    const std::vector<Elem>& carrier) {
  NormalSubgroup out;
  for (Elem e : carrier) {
    if (!g.contains(e)) {
      fail(ErrorCode::element_outside_group,
           "element " + std::to_string(e) + " is not in the group");
    }
    out.members.push_back(g.local(e));
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()),
                    out.members.end());
  if (!is_normal(g, out)) {
    fail(ErrorCode::not_normal, "carrier is not a normal subgroup");
  }
  return out;
}

}  // namespace crlen
