// Command-line front end: loads semigroups from Cayley/transformation files
// or builtin expressions and runs the analysis pipeline.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "crlen/analyzer.hpp"
#include "crlen/cayley_io.hpp"
#include "crlen/congruence.hpp"
#include "crlen/constructions.hpp"
#include "crlen/corpus.hpp"
#include "crlen/green.hpp"
#include "crlen/group.hpp"
#include "crlen/oracle.hpp"
#include "crlen/zmud.hpp"

namespace {

using namespace crlen;

constexpr unsigned kDefaultSeed = 0x5eed;

struct Options {
  std::string input;
  std::string group;
  std::string normal = "full";
  std::string builtin;
  std::string out;
  int characteristic = 0;
  bool json = false;
  int max_order = 24;
  bool skip_assoc_check = false;
  unsigned seed = kDefaultSeed;
};

Semigroup resolve_input(const std::string& spec, bool skip_assoc_check) {
  constexpr const char* prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    return parse_builtin(spec.substr(std::string(prefix).size()));
  }
  return load_semigroup_file(spec, !skip_assoc_check);
}

std::vector<Elem> resolve_normal_spec(const Semigroup& sg,
                                      const std::string& spec) {
  if (spec == "full" || spec.empty()) {
    std::vector<Elem> all(sg.size());
    for (int i = 0; i < sg.size(); ++i) all[i] = i;
    return all;
  }
  if (spec == "trivial") {
    if (!sg.identity()) {
      fail(ErrorCode::no_identity, "no identity element for 'trivial'");
    }
    return {*sg.identity()};
  }
  std::vector<std::string> items;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  std::vector<Elem> out;
  for (const std::string& item : items) {
    try {
      size_t used = 0;
      const int idx = std::stoi(item, &used);
      if (used == item.size() && idx >= 0 && idx < sg.size()) {
        out.push_back(idx);
        continue;
      }
    } catch (const std::exception&) {
    }
    int match = -1;
    for (Elem x = 0; x < sg.size(); ++x) {
      if (sg.label(x) == item) {
        match = x;
        break;
      }
    }
    if (match < 0) {
      fail(ErrorCode::parse_error,
           "'" + item + "' is neither an element index nor a label");
    }
    out.push_back(match);
  }
  return out;
}

void note_sampled_audits(const Semigroup& sg, unsigned seed) {
  if (sg.size() > 50) {
    std::cerr << "note: congruence audits sampled with seed " << seed << "\n";
  }
}

int cmd_green(const Options& opt) {
  const Semigroup sg = resolve_input(opt.input, opt.skip_assoc_check);
  const GreenData green = compute_green(sg);
  const JOrder order = j_order(green);

  std::cout << "order: " << sg.size();
  if (sg.identity()) {
    std::cout << ", identity: " << *sg.identity() << " ("
              << sg.label(*sg.identity()) << ")";
  }
  std::cout << "\n";
  std::cout << "J-classes (id  size  regular  idempotents  |G_J|):\n";
  for (const JClass& jc : green.j_classes) {
    std::cout << "  " << jc.id << "  " << jc.elements.size() << "  "
              << (jc.regular ? "yes" : "no") << "  " << jc.idempotents.size();
    if (jc.regular) {
      std::cout << "  " << maximal_subgroup(sg, green, jc.id).order();
    } else {
      std::cout << "  -";
    }
    std::cout << "\n";
  }
  std::cout << "J-order Hasse edges (lower < upper):\n";
  for (auto [lo, hi] : order.covers()) {
    std::cout << "  " << lo << " < " << hi << "\n";
  }
  return 0;
}

int cmd_congruence(const Options& opt) {
  const Semigroup sg = resolve_input(opt.input, opt.skip_assoc_check);
  note_sampled_audits(sg, opt.seed);
  const GreenData green = compute_green(sg);
  const JOrder order = j_order(green);
  const auto family = ggm_family(sg, green, opt.seed);
  const Congruence ggm = ggm_all(sg.size(), family);
  const JClassification cls = classify_j_classes(sg, green, order, family);

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [j, cj] : family) {
    const MaxSubgroup max = maximal_subgroup(sg, green, j);
    const RelativeKernel kernel = relative_kernel(sg, green, order, family, max);
    nlohmann::ordered_json row;
    row["j"] = j;
    row["classes"] = cj.num_classes;
    row["irreducible"] = cls.irreducible(j);
    row["nj_order"] = kernel.order();
    rows.push_back(std::move(row));
  }
  if (opt.json) {
    nlohmann::ordered_json out;
    out["per_j"] = std::move(rows);
    out["ggm_trivial"] = ggm.is_trivial();
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "regular J-classes (j  #classes  irreducible  |N_J|):\n";
  for (const auto& row : rows) {
    std::cout << "  " << row["j"] << "  " << row["classes"] << "  "
              << (row["irreducible"].get<bool>() ? "yes" : "no") << "  "
              << row["nj_order"] << "\n";
  }
  std::cout << "intersection congruence trivial: "
            << (ggm.is_trivial() ? "yes" : "no") << "\n";
  if (auto pair = ggm.nontrivial_pair()) {
    std::cout << "identified pair: " << pair->first << " " << pair->second
              << "\n";
  }
  return 0;
}

int cmd_socle(const Options& opt) {
  const Semigroup sg = resolve_input(opt.input, opt.skip_assoc_check);
  const Subgroup g = as_group(sg);
  const NormalSubgroup n =
      normal_from_elements(g, resolve_normal_spec(sg, opt.normal));

  const SocleData socle = socle_data(g);
  std::cout << "group order: " << g.order() << "\n";
  std::cout << "minimal normal subgroups:\n";
  for (size_t i = 0; i < socle.minimal_normals.size(); ++i) {
    std::cout << "  order " << socle.minimal_normals[i].order() << " "
              << (socle.abelian[i] ? "abelian" : "nonabelian") << " {";
    const auto elems = socle.minimal_normals[i].ambient_elements(g);
    for (size_t k = 0; k < elems.size(); ++k) {
      if (k) std::cout << ",";
      std::cout << sg.label(elems[k]);
    }
    std::cout << "}\n";
  }
  std::cout << "|A(G)| = " << socle.a.order() << ", |T(G)| = "
            << socle.t.order() << ", |S(G)| = " << socle.socle.order() << "\n";

  const SocleIntersection inter = intersect_with_normal(g, socle, n);
  std::cout << "normal subgroup N: order " << n.order() << "\n";
  std::cout << "|A(G) ∩ N| = " << inter.a_cap.order() << ", |T(G) ∩ N| = "
            << inter.t_cap.order() << ", |S(G) ∩ N| = " << inter.s_cap.order()
            << "\n";
  std::cout << "Sylow pieces of A(G) ∩ N:";
  for (const SylowPiece& piece : sylow_decompose(g, inter.a_cap)) {
    std::cout << " p=" << piece.p << " order " << piece.carrier.order();
  }
  std::cout << "\n";
  const GenerationResult gen = min_normal_generators(g, inter.s_cap);
  std::cout << "min normal generators of S(G) ∩ N: k = " << gen.k
            << ", witness: {";
  for (size_t i = 0; i < gen.witness.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << sg.label(gen.witness[i]);
  }
  std::cout << "}\n";
  return 0;
}

int cmd_zmud(const Options& opt) {
  const Semigroup sg = resolve_input(opt.group, opt.skip_assoc_check);
  const Subgroup g = as_group(sg);
  const NormalSubgroup n =
      normal_from_elements(g, resolve_normal_spec(sg, opt.normal));
  const ZmudResult result = zmud_number(g, n, opt.characteristic);

  nlohmann::ordered_json out;
  out["char"] = result.p;
  out["exists"] = result.exists;
  out["k"] = result.k ? nlohmann::ordered_json(*result.k)
                      : nlohmann::ordered_json(nullptr);
  if (result.witness) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (Elem x : *result.witness) w.push_back(sg.label(x));
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  out["obstruction"] = result.obstruction
                           ? nlohmann::ordered_json(*result.obstruction)
                           : nlohmann::ordered_json(nullptr);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_analyze(const Options& opt) {
  const Semigroup sg = resolve_input(opt.input, opt.skip_assoc_check);
  note_sampled_audits(sg, opt.seed);
  const AnalysisReport report = analyze(sg, opt.characteristic);
  const std::string rendered =
      opt.json ? report_to_json(report) : report_to_text(report);
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) fail(ErrorCode::parse_error, "cannot open '" + opt.out + "'");
    f << rendered;
  } else {
    std::cout << rendered;
  }
  return 0;
}

int cmd_construct(const Options& opt) {
  const Semigroup sg = parse_builtin(opt.builtin);
  if (opt.out.empty()) {
    write_cayley(std::cout, sg);
  } else {
    write_cayley_file(opt.out, sg);
    std::cout << "wrote " << sg.size() << " elements to " << opt.out << "\n";
  }
  return 0;
}

int cmd_oracle(const Options& opt) {
  const bool ok = corpus::run_oracle_suite(opt.max_order, std::cout);
  std::cout << (ok ? "all cross-checks passed" : "cross-check failures above")
            << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"faithful completely reducible representation analysis for "
               "finite semigroups"};
  app.require_subcommand(1);

  Options opt;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "Cayley file, .gens file, or builtin:EXPR")
        ->required();
    cmd->add_flag("--skip-assoc-check", opt.skip_assoc_check,
                  "trust the input table");
  };
  auto add_char = [&](CLI::App* cmd) {
    cmd->add_option("--char", opt.characteristic,
                    "field characteristic (0 or a prime)");
  };

  CLI::App* green = app.add_subcommand("green", "Green's relations and J-order");
  add_input(green);

  CLI::App* congruence =
      app.add_subcommand("congruence", "per-class congruences and irreducibility");
  add_input(congruence);
  congruence->add_flag("--json", opt.json, "machine-readable output");
  congruence->add_option("--seed", opt.seed, "seed for sampled audits");

  CLI::App* socle = app.add_subcommand("socle", "socle structure of a group");
  add_input(socle);
  socle->add_option("--normal", opt.normal,
                    "normal subgroup: full | trivial | comma-separated "
                    "elements or labels");

  CLI::App* zmud = app.add_subcommand(
      "zmud", "minimum constituents faithful on a normal subgroup");
  zmud->add_option("--group", opt.group, "group input")->required();
  zmud->add_option("--normal", opt.normal,
                   "normal subgroup: full | trivial | comma-separated "
                   "elements or labels");
  add_char(zmud);
  zmud->add_flag("--skip-assoc-check", opt.skip_assoc_check,
                 "trust the input table");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "existence and minimum length of a faithful representation");
  add_input(analyze);
  add_char(analyze);
  analyze->add_flag("--json", opt.json, "machine-readable output");
  analyze->add_option("--out", opt.out, "write the report to a file");
  analyze->add_option("--seed", opt.seed, "seed for sampled audits");

  CLI::App* construct =
      app.add_subcommand("construct", "emit a builtin semigroup as a Cayley file");
  construct->add_option("--builtin", opt.builtin, "builtin expression")
      ->required();
  construct->add_option("--out", opt.out, "output path (stdout if omitted)");

  CLI::App* oracle =
      app.add_subcommand("oracle", "run the cross-check suite on the corpus");
  oracle->add_option("--max-order", opt.max_order,
                     "largest group order in the corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (opt.characteristic != 0 && !crlen::is_prime(opt.characteristic)) {
    std::cerr << "error: --char must be 0 or a prime, got "
              << opt.characteristic << "\n";
    return 2;
  }

  try {
    if (green->parsed()) return cmd_green(opt);
    if (congruence->parsed()) return cmd_congruence(opt);
    if (socle->parsed()) return cmd_socle(opt);
    if (zmud->parsed()) return cmd_zmud(opt);
    if (analyze->parsed()) return cmd_analyze(opt);
    if (construct->parsed()) return cmd_construct(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
