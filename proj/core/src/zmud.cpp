#include "crlen/zmud.hpp"

namespace crlen {

bool faithful_cr_exists(const Subgroup& g, const NormalSubgroup& n, int p) {
  require_characteristic(p);
  if (!is_normal(g, n)) fail(ErrorCode::not_normal, "N is not normal in G");
  if (p == 0) return true;

  const SocleData socle = socle_data(g);
  const SocleIntersection inter = intersect_with_normal(g, socle, n);
  const bool by_order = inter.a_cap.order() % p != 0;

  // Equivalent condition: N has no nontrivial normal p-subgroup.
  const Subgroup n_group = subgroup_from_normal(g, n);
  const bool by_pcore = p_core(n_group, p).trivial();
  if (by_order != by_pcore) {
    fail(ErrorCode::internal,
         "existence criteria disagree: |A(G) ∩ N| divisibility vs p-core");
  }
  return by_order;
}

ZmudResult zmud_number(const Subgroup& g, const NormalSubgroup& n, int p) {
  ZmudResult out;
  out.p = p;
  if (!faithful_cr_exists(g, n, p)) {
    out.exists = false;
    out.obstruction = p;
    return out;
  }
  const SocleData socle = socle_data(g);
  const SocleIntersection inter = intersect_with_normal(g, socle, n);
  const GenerationResult gen = min_normal_generators(g, inter.s_cap);
  const int reduced = min_normal_generators_reduced(g, n);
  if (gen.k != reduced) {
    fail(ErrorCode::internal,
         "generation counts disagree: direct " + std::to_string(gen.k) +
             " vs reduced " + std::to_string(reduced));
  }
  out.exists = true;
  out.k = gen.k;
  out.witness = gen.witness;
  return out;
}

bool gaschutz_check(const Subgroup& g, int p) {
  require_characteristic(p);
  if (g.order() == 1) return true;  // the trivial representation is faithful
  const ZmudResult r = zmud_number(g, full_subgroup(g), p);
  return r.exists && *r.k <= 1;
}

}  // namespace crlen
