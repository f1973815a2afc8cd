#include "crlen/congruence.hpp"

#include <algorithm>
#include <random>

namespace crlen {

std::optional<std::pair<Elem, Elem>> Congruence::nontrivial_pair() const {
  for (Elem s = 0; s < size(); ++s) {
    if (class_of[s] != s) return std::make_pair(class_of[s], s);
  }
  return std::nullopt;
}

Congruence universal_congruence(int n) {
  Congruence c;
  c.class_of.assign(n, 0);
  c.num_classes = n > 0 ? 1 : 0;
  return c;
}

Congruence equality_congruence(int n) {
  Congruence c;
  c.class_of.resize(n);
  for (int i = 0; i < n; ++i) c.class_of[i] = i;
  c.num_classes = n;
  return c;
}

Congruence canonicalize(const std::vector<int>& raw_class_of) {
  const int n = static_cast<int>(raw_class_of.size());
  Congruence c;
  c.class_of.assign(n, -1);
  std::map<int, int> rep_of;  // raw id -> smallest member
  for (int s = 0; s < n; ++s) {
    auto [it, inserted] = rep_of.emplace(raw_class_of[s], s);
    c.class_of[s] = it->second;
  }
  c.num_classes = static_cast<int>(rep_of.size());
  return c;
}

namespace {

// Trace comparison with early exit: s and t act the same on J by two-sided
// translation.  The pairwise scan is O(n^2 |J|^2) in the worst case, which
// is fine at desk scale; computing the translation action on R-classes
// (Schützenberger representation) would be the next step for larger inputs.
bool ggm_equivalent(const Semigroup& sg, const std::vector<Elem>& j_elems,
                    const std::vector<char>& in_j, Elem s, Elem t) {
  for (Elem x : j_elems) {
    const Elem xs = sg.product(x, s);
    const Elem xt = sg.product(x, t);
    for (Elem y : j_elems) {
      const Elem xsy = sg.product(xs, y);
      const Elem xty = sg.product(xt, y);
      if (in_j[xsy] != in_j[xty]) return false;
      if (in_j[xsy] && xsy != xty) return false;
    }
  }
  return true;
}

}  // namespace

void verify_congruence(const Semigroup& s, const Congruence& c, unsigned seed,
                       int exhaustive_limit) {
  const int n = s.size();
  auto check = [&](Elem a, Elem b, Elem u) {
    if (!c.related(a, b)) return;
    if (!c.related(s.product(u, a), s.product(u, b)) ||
        !c.related(s.product(a, u), s.product(b, u))) {
      fail(ErrorCode::internal,
           "congruence audit failed at (" + std::to_string(a) + "," +
               std::to_string(b) + "," + std::to_string(u) + ")");
    }
  };
  if (n <= exhaustive_limit) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        if (!c.related(a, b)) continue;
        for (Elem u = 0; u < n; ++u) check(a, b, u);
      }
    }
    return;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Elem a = pick(rng);
    const Elem b = c.class_of[a];  // guaranteed related
    const Elem u = pick(rng);
    check(a, b, u);
    check(pick(rng), pick(rng), pick(rng));
  }
}

Congruence ggm_congruence(const Semigroup& s, const GreenData& green,
                          int j_class, unsigned audit_seed) {
  const JClass& jc = green.j_classes.at(j_class);
  if (!jc.regular) {
    fail(ErrorCode::not_regular,
         "J-class " + std::to_string(j_class) + " is not regular");
  }
  const int n = s.size();
  std::vector<char> in_j(n, 0);
  for (Elem x : jc.elements) in_j[x] = 1;

  Congruence c;
  c.class_of.assign(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    int found = -1;
    for (Elem r : reps) {
      if (ggm_equivalent(s, jc.elements, in_j, x, r)) {
        found = r;
        break;
      }
    }
    if (found < 0) {
      reps.push_back(x);
      found = x;
    }
    c.class_of[x] = found;
  }
  c.num_classes = static_cast<int>(reps.size());
  verify_congruence(s, c, audit_seed);
  return c;
}

Congruence meet(const Congruence& c1, const Congruence& c2) {
  if (c1.size() != c2.size()) {
    fail(ErrorCode::size_mismatch, "congruences over different semigroups");
  }
  const int n = c1.size();
  std::map<std::pair<int, int>, int> rep_of;
  Congruence c;
  c.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    auto [it, inserted] =
        rep_of.emplace(std::make_pair(c1.class_of[x], c2.class_of[x]), x);
    c.class_of[x] = it->second;
  }
  c.num_classes = static_cast<int>(rep_of.size());
  return c;
}

std::map<int, Congruence> ggm_family(const Semigroup& s,
                                     const GreenData& green,
                                     unsigned audit_seed) {
  std::map<int, Congruence> family;
  for (const JClass& jc : green.j_classes) {
    if (jc.regular) {
      family.emplace(jc.id, ggm_congruence(s, green, jc.id, audit_seed));
    }
  }
  return family;
}

Congruence ggm_all(int n, const std::map<int, Congruence>& family) {
  Congruence c = universal_congruence(n);
  for (const auto& [j, cj] : family) c = meet(c, cj);
  return c;
}

Congruence ggm_all(const Semigroup& s, const GreenData& green) {
  return ggm_all(s.size(), ggm_family(s, green));
}

namespace {

// True when every class of fine sits inside a single class of coarse.
bool refines(const Congruence& fine, const Congruence& coarse) {
  std::map<int, int> image;
  for (int x = 0; x < fine.size(); ++x) {
    auto [it, inserted] = image.emplace(fine.class_of[x], coarse.class_of[x]);
    if (!inserted && it->second != coarse.class_of[x]) return false;
  }
  return true;
}

std::optional<std::pair<Elem, Elem>> separation_witness(
    const Congruence& fine, const Congruence& coarse) {
  // Smallest pair related under fine but separated by coarse.
  for (Elem s = 0; s < fine.size(); ++s) {
    for (Elem t = s + 1; t < fine.size(); ++t) {
      if (fine.related(s, t) && !coarse.related(s, t)) {
        return std::make_pair(s, t);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> JClassification::irreducible_ids() const {
  std::vector<int> out;
  for (size_t j = 0; j < per_class.size(); ++j) {
    if (per_class[j].irreducible) out.push_back(static_cast<int>(j));
  }
  return out;
}

JClassification classify_j_classes(const Semigroup& s, const GreenData& green,
                                   const JOrder& order,
                                   const std::map<int, Congruence>& family) {
  JClassification out;
  out.per_class.resize(green.num_j_classes());
  for (const JClass& jc : green.j_classes) {
    if (!jc.regular) continue;
    JClassification::Entry& entry = out.per_class[jc.id];
    entry.regular = true;

    Congruence below = universal_congruence(s.size());
    for (int j2 : regular_below(green, order, jc.id)) {
      below = meet(below, family.at(j2));
    }
    const Congruence& cj = family.at(jc.id);
    if (refines(below, cj)) continue;  // reducible
    entry.irreducible = true;
    entry.witness = separation_witness(below, cj);
    if (!entry.witness) {
      fail(ErrorCode::internal, "irreducible class without witness pair");
    }
  }
  return out;
}

RelativeKernel relative_kernel(const Semigroup& s, const GreenData& green,
                               const JOrder& order,
                               const std::map<int, Congruence>& family,
                               const MaxSubgroup& gj) {
  RelativeKernel out;
  out.j_class = gj.j_class;
  out.e = gj.e;
  const std::vector<int> below = regular_below(green, order, gj.j_class);
  for (Elem g : gj.carrier) {
    bool in_kernel = true;
    for (int j2 : below) {
      if (!family.at(j2).related(g, gj.e)) {
        in_kernel = false;
        break;
      }
    }
    if (in_kernel) out.carrier.push_back(g);
  }
  // N_J is a normal subgroup of G_J because each congruence below is
  // left/right compatible; audit that.
  Subgroup group = verify_group(s, gj.carrier);
  NormalSubgroup nj;
  for (Elem g : out.carrier) nj.members.push_back(group.local(g));
  std::sort(nj.members.begin(), nj.members.end());
  if (!is_normal(group, nj)) {
    fail(ErrorCode::internal, "relative kernel is not normal in G_J");
  }
  return out;
}

std::optional<int> is_generalized_group_mapping(const Semigroup& s) {
  const GreenData green = compute_green(s);
  const std::map<int, Congruence> family = ggm_family(s, green);
  std::optional<int> distinguished;
  for (const auto& [j, cj] : family) {
    if (cj.is_trivial()) {
      distinguished = j;
      break;
    }
  }
  if (s.size() > 1) {
    // Cross-check against the structural characterization.
    const JOrder order = j_order(green);
    const JClassification cls = classify_j_classes(s, green, order, family);
    const bool ggm_trivial = ggm_all(s.size(), family).is_trivial();
    const std::vector<int> irr = cls.irreducible_ids();
    const bool structural = ggm_trivial && irr.size() == 1;
    if (structural != distinguished.has_value() ||
        (structural && irr.front() != *distinguished)) {
      fail(ErrorCode::internal,
           "generalized group mapping characterizations disagree");
    }
  }
  return distinguished;
}

}  // namespace crlen
