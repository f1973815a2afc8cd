#include "crlen/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "crlen/oracle.hpp"

namespace crlen {

namespace {

std::vector<std::vector<bool>> poset_order(const PosetSpec& poset) {
  const int n = poset.n;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [lo, hi] : poset.covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) {
      fail(ErrorCode::index_out_of_range, "cover pair outside poset");
    }
    leq[lo][hi] = true;
  }
  // transitive closure
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (leq[k][j]) leq[i][j] = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) {
        fail(ErrorCode::not_a_semilattice, "cover relation has a cycle");
      }
    }
  }
  return leq;
}

}  // namespace

Semigroup build_semilattice(const PosetSpec& poset) {
  const int n = poset.n;
  const auto leq = poset_order(poset);
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // greatest lower bound of {x, y}
      int glb = -1;
      for (int z = 0; z < n; ++z) {
        if (!leq[z][x] || !leq[z][y]) continue;
        bool greatest = true;
        for (int w = 0; w < n && greatest; ++w) {
          if (leq[w][x] && leq[w][y] && !leq[w][z]) greatest = false;
        }
        if (greatest) {
          glb = z;
          break;
        }
      }
      if (glb < 0) {
        fail(ErrorCode::no_meet, "elements " + std::to_string(x) + " and " +
                                     std::to_string(y) +
                                     " have no greatest lower bound");
      }
      table[static_cast<size_t>(x) * n + y] = glb;
    }
  }
  return make_semigroup(n, std::move(table), {}, true);
}

Semigroup chain_semilattice(int n) {
  PosetSpec poset;
  poset.n = n;
  for (int i = 0; i + 1 < n; ++i) poset.covers.emplace_back(i, i + 1);
  return build_semilattice(poset);
}

Semigroup boolean_lattice(int atoms) {
  if (atoms < 0 || atoms > 10) {
    fail(ErrorCode::too_large, "boolean lattice atom count out of range");
  }
  const int n = 1 << atoms;
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      table[static_cast<size_t>(x) * n + y] = x & y;
    }
  }
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    std::string bits;
    for (int b = atoms - 1; b >= 0; --b) bits += (x >> b) & 1 ? '1' : '0';
    labels[x] = bits.empty() ? "0" : bits;
  }
  return make_semigroup(n, std::move(table), std::move(labels), false);
}

CosetMonoid build_coset_monoid(const Subgroup& g) {
  const oracle::NormalLattice lattice = oracle::all_normal_subgroups(g);

  CosetMonoid out;
  for (const NormalSubgroup& n : lattice.all_normals) {
    out.normal_subgroups.push_back(n.ambient_elements(g));
  }

  std::map<std::vector<Elem>, int> index_of;
  std::vector<std::string> labels;
  for (size_t ni = 0; ni < lattice.all_normals.size(); ++ni) {
    const NormalSubgroup& n = lattice.all_normals[ni];
    std::vector<char> seen(g.order(), 0);
    for (int rep = 0; rep < g.order(); ++rep) {
      if (seen[rep]) continue;
      std::vector<Elem> coset;
      for (int m : n.members) {
        const int x = g.mul(rep, m);
        seen[x] = 1;
        coset.push_back(g.elem(x));
      }
      std::sort(coset.begin(), coset.end());
      auto [it, inserted] =
          index_of.emplace(coset, static_cast<int>(index_of.size()));
      if (inserted) {
        out.coset_elements.push_back(coset);
        out.coset_subgroup.push_back(static_cast<int>(ni));
        std::string label = g.parent().label(coset.front());
        if (!n.trivial()) label += "N" + std::to_string(ni);
        labels.push_back(std::move(label));
      }
    }
  }

  const int n = static_cast<int>(out.coset_elements.size());
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // setwise product of two cosets is again a coset
      std::vector<Elem> prod;
      for (Elem x : out.coset_elements[a]) {
        for (Elem y : out.coset_elements[b]) {
          prod.push_back(g.elem(g.mul(g.local(x), g.local(y))));
        }
      }
      std::sort(prod.begin(), prod.end());
      prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
      auto it = index_of.find(prod);
      if (it == index_of.end()) {
        fail(ErrorCode::internal, "coset product left the coset monoid");
      }
      table[static_cast<size_t>(a) * n + b] = it->second;
    }
  }
  out.sg = make_semigroup(n, std::move(table), std::move(labels), true);
  return out;
}

Semigroup build_group_union_quotient(const Subgroup& g,
                                     const std::vector<Elem>& normal_carrier) {
  const NormalSubgroup n = normal_from_elements(g, normal_carrier);
  if (n.trivial() || n.order() == g.order()) {
    fail(ErrorCode::not_proper_nontrivial,
         "quotient requires a proper nontrivial normal subgroup");
  }
  const int m = g.order();

  // cosets numbered by smallest member, ascending
  std::vector<int> coset_of(m, -1);
  std::vector<int> coset_rep;
  for (int x = 0; x < m; ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(x);
    for (int nn : n.members) coset_of[g.mul(x, nn)] = id;
  }
  const int num_cosets = static_cast<int>(coset_rep.size());
  const int total = m + num_cosets;

  std::vector<Elem> table(static_cast<size_t>(total) * total);
  auto at = [&](int a, int b) -> Elem& {
    return table[static_cast<size_t>(a) * total + b];
  };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) at(a, b) = g.mul(a, b);
    for (int c = 0; c < num_cosets; ++c) {
      at(a, m + c) = m + coset_of[g.mul(a, coset_rep[c])];
      at(m + c, a) = m + coset_of[g.mul(coset_rep[c], a)];
    }
  }
  for (int c = 0; c < num_cosets; ++c) {
    for (int d = 0; d < num_cosets; ++d) {
      at(m + c, m + d) = m + coset_of[g.mul(coset_rep[c], coset_rep[d])];
    }
  }

  std::vector<std::string> labels(total);
  for (int a = 0; a < m; ++a) labels[a] = g.parent().label(g.elem(a));
  for (int c = 0; c < num_cosets; ++c) {
    labels[m + c] = g.parent().label(g.elem(coset_rep[c])) + "N";
  }
  return make_semigroup(total, std::move(table), std::move(labels), true);
}

namespace {

struct Field {
  int q;
  int add(int a, int b) const {
    if (q == 4) return a ^ b;  // componentwise over F_2
    return (a + b) % q;
  }
  int mul(int a, int b) const {
    if (q == 4) {
      static constexpr int table[4][4] = {
          {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
      return table[a][b];
    }
    return (a * b) % q;
  }
};

}  // namespace

Semigroup build_matrix_monoid(int n, int q) {
  if (q != 2 && q != 3 && q != 4 && q != 5) {
    fail(ErrorCode::unsupported_field_size,
         "field size " + std::to_string(q) + " not supported");
  }
  if (n < 1 || n > 2) {
    fail(ErrorCode::too_large, "matrix dimension must be 1 or 2");
  }
  long long count = 1;
  for (int i = 0; i < n * n; ++i) count *= q;
  if (count > 10000) {
    fail(ErrorCode::too_large, "matrix monoid would have " +
                                   std::to_string(count) + " elements");
  }
  const Field field{q};
  const int size = static_cast<int>(count);
  const int cells = n * n;

  auto digits = [&](int idx) {
    std::vector<int> entry(cells);
    for (int i = 0; i < cells; ++i) {
      entry[i] = idx % q;
      idx /= q;
    }
    return entry;  // entry[r*n+c]
  };
  auto index = [&](const std::vector<int>& entry) {
    int idx = 0;
    for (int i = cells - 1; i >= 0; --i) idx = idx * q + entry[i];
    return idx;
  };

  std::vector<Elem> table(static_cast<size_t>(size) * size);
  for (int a = 0; a < size; ++a) {
    const auto ma = digits(a);
    for (int b = 0; b < size; ++b) {
      const auto mb = digits(b);
      std::vector<int> mc(cells, 0);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          int acc = 0;
          for (int k = 0; k < n; ++k) {
            acc = field.add(acc, field.mul(ma[r * n + k], mb[k * n + c]));
          }
          mc[r * n + c] = acc;
        }
      }
      table[static_cast<size_t>(a) * size + b] = index(mc);
    }
  }

  std::vector<std::string> labels(size);
  for (int a = 0; a < size; ++a) {
    const auto ma = digits(a);
    std::string s;
    for (int i = 0; i < cells; ++i) s += static_cast<char>('0' + ma[i]);
    labels[a] = s;
  }
  // Matrix multiplication is associative; skip the cubic audit for the
  // larger tables.
  return make_semigroup(size, std::move(table), std::move(labels),
                        size <= 100);
}

namespace {

Semigroup cyclic_group(int m) {
  if (m < 1) fail(ErrorCode::unknown_name, "cyclic order must be positive");
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) table[static_cast<size_t>(a) * m + b] = (a + b) % m;
  }
  return make_semigroup(m, std::move(table), {}, false);
}

Semigroup dihedral_group(int m) {
  if (m < 1) fail(ErrorCode::unknown_name, "dihedral parameter must be positive");
  const int n = 2 * m;
  // 0..m-1: rotations r^a; m..2m-1: reflections s r^a.
  auto rot = [&](int a) { return ((a % m) + m) % m; };
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  auto at = [&](int a, int b) -> Elem& {
    return table[static_cast<size_t>(a) * n + b];
  };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      at(a, b) = rot(a + b);              // r^a r^b
      at(a, m + b) = m + rot(b - a);      // r^a (s r^b) = s r^(b-a)
      at(m + a, b) = m + rot(a + b);      // (s r^a) r^b
      at(m + a, m + b) = rot(b - a);      // (s r^a)(s r^b) = r^(b-a)
    }
  }
  std::vector<std::string> labels(n);
  for (int a = 0; a < m; ++a) {
    labels[a] = "r" + std::to_string(a);
    labels[m + a] = "sr" + std::to_string(a);
  }
  return make_semigroup(n, std::move(table), std::move(labels), true);
}

int permutation_parity(const std::vector<int>& img) {
  int inversions = 0;
  for (size_t i = 0; i < img.size(); ++i) {
    for (size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] > img[j]) ++inversions;
    }
  }
  return inversions % 2;
}

Semigroup permutation_group(int m, bool even_only) {
  if (m < 1 || m > 5) {
    fail(ErrorCode::unknown_name, "permutation degree must be in 1..5");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  do {
    if (!even_only || permutation_parity(img) == 0) perms.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < n; ++i) index_of.emplace(perms[i], i);

  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(m);
      for (int x = 0; x < m; ++x) comp[x] = perms[b][perms[a][x]];
      table[static_cast<size_t>(a) * n + b] = index_of.at(comp);
    }
  }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    std::string s;
    for (int x : perms[a]) s += static_cast<char>('0' + x);
    labels[a] = s;
  }
  return make_semigroup(n, std::move(table), std::move(labels), false);
}

Semigroup elementary_abelian_group(int p, int k) {
  if (!is_prime(p)) {
    fail(ErrorCode::not_prime_or_zero, std::to_string(p) + " is not prime");
  }
  if (k < 1) fail(ErrorCode::unknown_name, "exponent must be at least 1");
  long long size = 1;
  for (int i = 0; i < k; ++i) {
    size *= p;
    if (size > 4096) fail(ErrorCode::too_large, "group order exceeds 4096");
  }
  const int n = static_cast<int>(size);
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int x = a, y = b, pow = 1, sum = 0;
      for (int i = 0; i < k; ++i) {
        sum += ((x % p) + (y % p)) % p * pow;
        x /= p;
        y /= p;
        pow *= p;
      }
      table[static_cast<size_t>(a) * n + b] = sum;
    }
  }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    std::string s;
    int x = a;
    for (int i = 0; i < k; ++i) {
      s += static_cast<char>('0' + x % p);
      x /= p;
    }
    labels[a] = s;
  }
  return make_semigroup(n, std::move(table), std::move(labels), false);
}

Semigroup quaternion_group() {
  // index = 2*axis + (sign < 0), axes 1, i, j, k
  static constexpr int axis_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Elem> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ax = a / 2, bx = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign_mul[ax][bx];
      table[static_cast<size_t>(a) * 8 + b] =
          2 * axis_mul[ax][bx] + (sign < 0 ? 1 : 0);
    }
  }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return make_semigroup(8, std::move(table), std::move(labels), true);
}

Semigroup full_transformation_monoid(int m) {
  if (m < 1 || m > 4) {
    fail(ErrorCode::too_large, "full transformation monoid limited to degree 4");
  }
  if (m == 1) {
    return closure_from_transformations({Transformation{{0}}});
  }
  std::vector<Transformation> gens;
  std::vector<int> cycle(m), swap01(m), collapse(m);
  for (int i = 0; i < m; ++i) {
    cycle[i] = (i + 1) % m;
    swap01[i] = i;
    collapse[i] = i;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  collapse[1] = 0;
  gens.push_back(Transformation{cycle});
  gens.push_back(Transformation{swap01});
  gens.push_back(Transformation{collapse});
  return closure_from_transformations(gens);
}

}  // namespace

Semigroup builtin_group(const std::string& name,
                        const std::vector<int>& args) {
  auto want = [&](size_t count) {
    if (args.size() != count) {
      fail(ErrorCode::unknown_name,
           name + " takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (name == "cyclic") {
    want(1);
    return cyclic_group(args[0]);
  }
  if (name == "dihedral") {
    want(1);
    return dihedral_group(args[0]);
  }
  if (name == "symmetric") {
    want(1);
    return permutation_group(args[0], false);
  }
  if (name == "alternating") {
    want(1);
    return permutation_group(args[0], true);
  }
  if (name == "elementary_abelian") {
    want(2);
    return elementary_abelian_group(args[0], args[1]);
  }
  if (name == "quaternion8") {
    want(0);
    return quaternion_group();
  }
  if (name == "klein4") {
    want(0);
    return elementary_abelian_group(2, 2);
  }
  fail(ErrorCode::unknown_name, "unknown group '" + name + "'");
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      ++pos;
    }
    if (start == pos) {
      fail(ErrorCode::parse_error,
           "expected a name at position " + std::to_string(pos) + " of '" +
               text + "'");
    }
    return text.substr(start, pos - start);
  }

  Semigroup expr() {
    const std::string name = ident();
    std::vector<int> int_args;
    std::vector<Semigroup> sg_args;
    if (eat('(')) {
      if (!eat(')')) {
        do {
          skip_ws();
          if (pos < text.size() &&
              (std::isdigit(static_cast<unsigned char>(text[pos])))) {
            size_t used = 0;
            int_args.push_back(std::stoi(text.substr(pos), &used));
            pos += used;
          } else {
            sg_args.push_back(expr());
          }
        } while (eat(','));
        if (!eat(')')) {
          fail(ErrorCode::parse_error, "expected ')' in '" + text + "'");
        }
      }
    }
    return build(name, int_args, sg_args);
  }

  Semigroup build(const std::string& name, const std::vector<int>& ints,
                  std::vector<Semigroup>& sgs) {
    auto no_sg = [&] {
      if (!sgs.empty()) {
        fail(ErrorCode::parse_error, name + " takes numeric arguments only");
      }
    };
    if (name == "M") {
      no_sg();
      if (ints.size() != 2) {
        fail(ErrorCode::parse_error, "M takes two arguments: M(n,q)");
      }
      return build_matrix_monoid(ints[0], ints[1]);
    }
    if (name == "T") {
      no_sg();
      if (ints.size() != 1) fail(ErrorCode::parse_error, "T takes one argument");
      return full_transformation_monoid(ints[0]);
    }
    if (name == "QG") {
      if (sgs.size() != 1 || !ints.empty()) {
        fail(ErrorCode::parse_error, "QG takes one group expression");
      }
      return build_coset_monoid(as_group(sgs[0])).sg;
    }
    if (name == "union_quotient") {
      if (sgs.size() != 2 || !ints.empty()) {
        fail(ErrorCode::parse_error,
             "union_quotient takes two group expressions");
      }
      return resolve_union_quotient(sgs[0], sgs[1]);
    }
    if (name == "chain") {
      no_sg();
      if (ints.size() != 1) fail(ErrorCode::parse_error, "chain takes one argument");
      return chain_semilattice(ints[0]);
    }
    if (name == "boolean") {
      no_sg();
      if (ints.size() != 1) fail(ErrorCode::parse_error, "boolean takes one argument");
      return boolean_lattice(ints[0]);
    }
    if (name == "product") {
      if (sgs.size() != 2 || !ints.empty()) {
        fail(ErrorCode::parse_error, "product takes two expressions");
      }
      return direct_product(sgs[0], sgs[1]);
    }
    if (name == "trivial") {
      no_sg();
      return cyclic_group(1);
    }
    no_sg();
    return builtin_group(name, ints);
  }

  static Semigroup resolve_union_quotient(const Semigroup& big,
                                          const Semigroup& sub) {
    const Subgroup g = as_group(big);
    const oracle::NormalLattice lattice = oracle::all_normal_subgroups(g);
    std::vector<const NormalSubgroup*> candidates;
    for (const NormalSubgroup& n : lattice.all_normals) {
      if (n.order() == sub.size()) candidates.push_back(&n);
    }
    if (candidates.size() > 1) {
      // narrow by label match
      std::vector<std::string> want = sub.labels();
      std::sort(want.begin(), want.end());
      std::vector<const NormalSubgroup*> matched;
      for (const NormalSubgroup* n : candidates) {
        std::vector<std::string> have;
        for (Elem e : n->ambient_elements(g)) have.push_back(big.label(e));
        std::sort(have.begin(), have.end());
        if (have == want) matched.push_back(n);
      }
      candidates = matched;
    }
    if (candidates.size() != 1) {
      fail(ErrorCode::parse_error,
           "cannot resolve a unique normal subgroup of order " +
               std::to_string(sub.size()) + " in the first argument");
    }
    return build_group_union_quotient(g, candidates.front()->ambient_elements(g));
  }
};

}  // namespace

Semigroup parse_builtin(const std::string& expr) {
  Parser parser{expr};
  Semigroup out = parser.expr();
  parser.skip_ws();
  if (parser.pos != expr.size()) {
    fail(ErrorCode::parse_error,
         "trailing input after expression: '" + expr + "'");
  }
  return out;
}

}  // namespace crlen
