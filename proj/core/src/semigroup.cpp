#include "crlen/semigroup.hpp"

#include <array>
#include <deque>
#include <map>

namespace crlen {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::non_associative: return "NonAssociative";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::empty_generator_set: return "EmptyGeneratorSet";
    case ErrorCode::not_regular: return "NotRegular";
    case ErrorCode::not_idempotent_in_class: return "NotIdempotentInClass";
    case ErrorCode::no_linking_pair: return "NoLinkingPair";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::not_closed: return "NotClosed";
    case ErrorCode::no_identity: return "NoIdentity";
    case ErrorCode::no_inverse: return "NoInverse";
    case ErrorCode::element_outside_group: return "ElementOutsideGroup";
    case ErrorCode::not_normal: return "NotNormal";
    case ErrorCode::not_abelian: return "NotAbelian";
    case ErrorCode::not_prime_or_zero: return "NotPrimeOrZero";
    case ErrorCode::no_meet: return "NoMeet";
    case ErrorCode::not_proper_nontrivial: return "NotProperNontrivial";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::unsupported_field_size: return "UnsupportedFieldSize";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::not_a_semilattice: return "NotASemilattice";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::internal: return "InternalError";
  }
  return "UnknownError";
}

Transformation Transformation::then(const Transformation& other) const {
  Transformation out;
  out.images.resize(images.size());
  for (size_t i = 0; i < images.size(); ++i) {
    out.images[i] = other.images[images[i]];
  }
  return out;
}

std::optional<std::array<Elem, 3>> Semigroup::find_associativity_violation()
    const {
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      const Elem ab = product(a, b);
      for (Elem c = 0; c < n_; ++c) {
        if (product(ab, c) != product(a, product(b, c))) {
          return std::array<Elem, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::optional<Elem> detect_identity(int n, const std::vector<Elem>& table) {
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem s = 0; s < n && ok; ++s) {
      ok = table[static_cast<size_t>(e) * n + s] == s &&
           table[static_cast<size_t>(s) * n + e] == s;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

Semigroup make_semigroup(int n, std::vector<Elem> table,
                         std::vector<std::string> labels,
                         bool validate_associativity) {
  if (n < 0) fail(ErrorCode::index_out_of_range, "negative order");
  if (table.size() != static_cast<size_t>(n) * n) {
    fail(ErrorCode::size_mismatch,
         "table has " + std::to_string(table.size()) + " entries, expected " +
             std::to_string(static_cast<size_t>(n) * n));
  }
  for (size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= n) {
      fail(ErrorCode::index_out_of_range,
           "table entry " + std::to_string(table[i]) + " at position " +
               std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
    }
  }
  if (labels.empty()) {
    labels = default_labels(n);
  } else if (labels.size() != static_cast<size_t>(n)) {
    fail(ErrorCode::size_mismatch, "expected " + std::to_string(n) +
                                       " labels, got " +
                                       std::to_string(labels.size()));
  }

  Semigroup s;
  s.n_ = n;
  s.table_ = std::move(table);
  s.labels_ = std::move(labels);
  if (validate_associativity) {
    if (auto bad = s.find_associativity_violation()) {
      const auto [a, b, c] = *bad;
      fail(ErrorCode::non_associative,
           "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
               std::to_string(c) + " != " + std::to_string(a) + "*(" +
               std::to_string(b) + "*" + std::to_string(c) + ")");
    }
  }
  s.identity_ = detect_identity(n, s.table_);
  return s;
}

Semigroup build_from_cayley(const std::vector<std::vector<Elem>>& rows,
                            std::vector<std::string> labels,
                            bool validate_associativity) {
  const int n = static_cast<int>(rows.size());
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (row.size() != static_cast<size_t>(n)) {
      fail(ErrorCode::size_mismatch, "table is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_semigroup(n, std::move(flat), std::move(labels),
                        validate_associativity);
}

Semigroup closure_from_transformations(
    const std::vector<Transformation>& gens) {
  if (gens.empty()) {
    fail(ErrorCode::empty_generator_set, "no generators given");
  }
  const int degree = gens.front().degree();
  if (degree <= 0) fail(ErrorCode::size_mismatch, "degree must be positive");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      fail(ErrorCode::size_mismatch, "generators act on different point sets");
    }
    for (int img : g.images) {
      if (img < 0 || img >= degree) {
        fail(ErrorCode::index_out_of_range,
             "image " + std::to_string(img) + " outside [0, " +
                 std::to_string(degree) + ")");
      }
    }
  }

  auto letter = [&](size_t i) -> std::string {
    if (gens.size() <= 26) return std::string(1, static_cast<char>('a' + i));
    return "g" + std::to_string(i);
  };

  std::vector<Transformation> elems;
  std::vector<std::string> words;
  std::map<Transformation, Elem> index_of;

  // Distinct generators first, in the order given.
  std::vector<Elem> gen_ids;
  for (size_t i = 0; i < gens.size(); ++i) {
    auto [it, inserted] =
        index_of.emplace(gens[i], static_cast<Elem>(elems.size()));
    if (inserted) {
      elems.push_back(gens[i]);
      words.push_back(letter(i));
    }
    gen_ids.push_back(it->second);
  }

  // Breadth-first products in discovery order; first discovery of an
  // element is via a shortest word.
  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Transformation prod = elems[head].then(gens[gi]);
      auto [it, inserted] =
          index_of.emplace(std::move(prod), static_cast<Elem>(elems.size()));
      if (inserted) {
        elems.push_back(it->first);
        words.push_back(words[head] + letter(gi));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      table[static_cast<size_t>(s) * n + t] = index_of.at(elems[s].then(elems[t]));
    }
  }
  // Function composition is associative; skip the O(n^3) audit.
  return make_semigroup(n, std::move(table), std::move(words), false);
}

Semigroup adjoin_identity(const Semigroup& s) {
  const int n = s.size();
  const int m = n + 1;
  std::vector<Elem> table(static_cast<size_t>(m) * m);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      table[static_cast<size_t>(a) * m + b] = s.product(a, b);
    }
  }
  for (Elem a = 0; a < m; ++a) {
    table[static_cast<size_t>(a) * m + n] = a;
    table[static_cast<size_t>(n) * m + a] = a;
  }
  std::vector<std::string> labels = s.labels();
  labels.push_back("1");
  return make_semigroup(m, std::move(table), std::move(labels), false);
}

Semigroup direct_product(const Semigroup& s, const Semigroup& t) {
  const int ns = s.size();
  const int nt = t.size();
  const int n = ns * nt;
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < ns; ++a) {
    for (Elem b = 0; b < nt; ++b) {
      const Elem left = a * nt + b;
      for (Elem c = 0; c < ns; ++c) {
        for (Elem d = 0; d < nt; ++d) {
          table[static_cast<size_t>(left) * n + (c * nt + d)] =
              s.product(a, c) * nt + t.product(b, d);
        }
      }
    }
  }
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < ns; ++a) {
    for (Elem b = 0; b < nt; ++b) {
      labels[a * nt + b] = "(" + s.label(a) + "," + t.label(b) + ")";
    }
  }
  return make_semigroup(n, std::move(table), std::move(labels), false);
}

}  // namespace crlen
