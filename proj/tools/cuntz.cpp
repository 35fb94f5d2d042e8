// cuntz: command-line front end for the library.
//
//   cuntz normal "s1' s1 + s2 s2'"
//   cuntz eq "s1' s1" "1"
//   cuntz branch --rep "P(12)" --endo "psi:142" --json
//   cuntz verify table2 theorem14
//
// Exit codes: 0 success, 1 verification mismatch / false, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cuntz/classify.hpp"
#include "cuntz/fermions.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/reps.hpp"

using namespace cuntz;
using nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  int n = 2;
  std::optional<std::size_t> level;
  std::optional<std::size_t> seed_bound;
};

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

BranchOptions branch_opts(const Globals& g) {
  BranchOptions o;
  o.seed_bound = g.seed_bound;
  return o;
}

std::string components_text(const BranchResult& r) {
  std::string s = r.fingerprint.to_string();
  s += "\n(seed bound " + std::to_string(r.seed_bound) + ", " + std::to_string(r.seeds) + " seeds)";
  for (const auto& c : r.certificates)
    s += "\n  " + c.component + ": GP vector " + c.gp_vector.to_string() +
         (c.verified ? " verified" : " NOT verified");
  return s;
}

int cmd_branch(const Globals& g, const std::string& rep_text, const std::string& endo_text) {
  const Morphism m = parse_endo(endo_text, g.n);
  const RepSpec rep = parse_rep(rep_text, m.alphabet_size());
  switch (rep.kind) {
    case RepKind::cycle: {
      auto r = branch(PermRep::cycle(rep.word, rep.phase), m, branch_opts(g));
      emit(g, r.to_json(), components_text(r));
      return 0;
    }
    case RepKind::chain: {
      auto r = branch(PermRep::chain(rep.tail), m, branch_opts(g));
      emit(g, r.to_json(), components_text(r));
      return 0;
    }
    case RepKind::uhf_cycle: {
      auto r = uhf_branch(rep.word, m, branch_opts(g));
      emit(g, r.to_json(), components_text(r));
      return 0;
    }
    case RepKind::fermion: {
      auto r = fermion_branch(rep.fermion, m);
      json j = r.uhf.to_json();
      j["names"] = r.names;
      emit(g, j, r.to_string());
      return 0;
    }
    case RepKind::gp:
    case RepKind::uhf_gp: {
      auto r = gp_branch(rep.sign, m, rep.kind == RepKind::uhf_gp);
      json j = {{"derivable", r.fingerprint.has_value()}, {"derivation", r.derivation}};
      if (r.fingerprint) j["components"] = r.fingerprint->to_json();
      emit(g, j, (r.fingerprint ? r.fingerprint->to_string() : std::string("---")) + "\n" + r.derivation);
      return r.fingerprint ? 0 : 1;
    }
    case RepKind::uhf_chain:
      throw std::invalid_argument("branching of UHF chain representations is not supported");
  }
  return 2;
}

int cmd_verify(const Globals& g, std::vector<std::string> names) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = report_names();
  ClassifyOptions opts;
  if (g.level) opts.level = *g.level;
  opts.seed_bound = g.seed_bound;
  bool ok = true;
  json all = json::array();
  for (const auto& name : names) {
    Report r = classify_table(name, opts);
    ok = ok && r.ok();
    if (g.json) {
      json j = r.to_json();
      if (!r.ok()) {
        json diff = json::array();
        for (const auto& c : r.checks)
          if (!c.pass) diff.push_back({{"name", c.name}, {"detail", c.detail}});
        j["diff"] = diff;
      }
      all.push_back(j);
    } else {
      std::cout << name << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size()
                << " checks pass\n";
      for (const auto& c : r.checks)
        if (!c.pass) std::cout << "  FAIL " << c.name << ": " << c.detail << "\n";
    }
  }
  if (g.json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_classify(const Globals& g, const std::string& endo_text) {
  PermEndo e = endo_text == "nakanishi" ? nakanishi()
                                        : PermEndo(WordPermutation::parse_cycles(
                                              endo_text.rfind("psi", 0) == 0 ? endo_text.substr(4) : endo_text,
                                              g.n, 2));
  const std::size_t level = g.level.value_or(3);
  json j = {{"endo", e.name()}};
  std::string text = e.name() + "\n";
  if (e.alphabet_size() == 2) {
    auto o2 = o2_property(e);
    auto uhf = uhf_property(e, level);
    j["o2"] = o2.to_json();
    j["uhf"] = uhf.to_json();
    text += "O_2:   " + to_string(o2.verdict) + "  (" + o2.evidence + ")\n";
    text += "UHF_2: " + to_string(uhf.verdict) + "  (" + uhf.evidence + ")\n";
  }
  BranchOptions bo = branch_opts(g);
  bo.parallel = true;
  json cells = json::array();
  const std::vector<std::string> o2t = e.alphabet_size() == 2 ? o2_tests() : std::vector<std::string>{"P(1)", "P(12)"};
  const std::vector<std::string> uhft = e.alphabet_size() == 2 ? uhf_tests() : std::vector<std::string>{"P[1]", "P[12]"};
  for (const auto* tests : {&o2t, &uhft})
    for (const auto& c : fingerprint(e.morphism(), *tests, bo)) {
      cells.push_back(c.to_json());
      text += "  " + c.to_string() + "\n";
    }
  j["fingerprint"] = cells;
  text.pop_back();
  emit(g, j, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in the Cuntz algebra O_N, UHF_N and CAR"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--n", g.n, "number of Cuntz generators")->check(CLI::Range(2, 64));
  app.add_option("--level", g.level, "certification depth");
  app.add_option("--seed-bound", g.seed_bound, "branching seed word length bound");

  std::string a, b, rep, endo, k = "7/2";
  int sign = 1;
  bool uhf = false;
  long window = 4;
  std::vector<std::string> names;

  auto* normal = app.add_subcommand("normal", "normal form of an O_N expression");
  normal->add_option("expr", a)->required();
  auto* eq = app.add_subcommand("eq", "decide equality of two expressions");
  eq->add_option("lhs", a)->required();
  eq->add_option("rhs", b)->required();
  auto* apply_cmd = app.add_subcommand("apply", "apply an endomorphism to an expression");
  apply_cmd->add_option("--endo", endo)->required();
  apply_cmd->add_option("expr", a)->required();
  auto* branch_cmd = app.add_subcommand("branch", "branching law of rep . endo");
  branch_cmd->add_option("--rep", rep)->required();
  branch_cmd->add_option("--endo", endo)->required();
  auto* restrict_cmd = app.add_subcommand("restrict", "restriction of P(J) or P(K) to UHF_N");
  restrict_cmd->add_option("--rep", rep)->required();
  restrict_cmd->add_option("--window", window, "shift window for chains");
  auto* gp = app.add_subcommand("gp", "GP(+-) . endo by the GP rules");
  gp->add_option("--sign", sign)->check(CLI::IsMember({1, -1}));
  gp->add_flag("--uhf", uhf, "GP[+-] on UHF_2");
  gp->add_option("--endo", endo)->required();
  auto* car = app.add_subcommand("car", "CAR expression in O_2");
  car->add_option("expr", a)->required();
  auto* mixture_cmd = app.add_subcommand("mixture", "the mixture b_k");
  mixture_cmd->add_option("k", a)->required();
  auto* vacuum = app.add_subcommand("vacuum", "vacuum identities of a fermion representation");
  vacuum->add_option("--rep", rep)->required();
  vacuum->add_option("--cutoff", k);
  auto* verify = app.add_subcommand("verify", "check reproduced tables and theorems");
  verify->add_option("names", names, "table1 ... car, or all");
  auto* classify = app.add_subcommand("classify", "properties and fingerprint of psi_sigma");
  classify->add_option("endo", endo)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*normal) {
      auto x = parse_poly(a, g.n);
      emit(g, x.to_json(), x.to_string());
    } else if (*eq) {
      const bool same = parse_poly(a, g.n) == parse_poly(b, g.n);
      emit(g, json(same), same ? "true" : "false");
      return same ? 0 : 1;
    } else if (*apply_cmd) {
      auto y = apply(parse_endo(endo, g.n), parse_poly(a, g.n));
      emit(g, y.to_json(), y.to_string());
    } else if (*branch_cmd) {
      return cmd_branch(g, rep, endo);
    } else if (*restrict_cmd) {
      const RepSpec r = parse_rep(rep, g.n);
      if (r.kind != RepKind::cycle && r.kind != RepKind::chain)
        throw std::invalid_argument("restrict expects P(J) or P(K)");
      auto res = restrict_to_uhf(r.kind == RepKind::cycle ? PermRep::cycle(r.word, r.phase)
                                                          : PermRep::chain(r.tail),
                                 window);
      std::string text = res.components.to_string();
      if (res.infinite_multiplicity) text += " (each with infinite multiplicity)";
      for (const auto& t : res.window)
        text += "\n  eta=" + std::to_string(t.eta) + ": " + t.word.to_string() + "  ~ " + t.tail.to_string();
      emit(g, res.to_json(), text);
    } else if (*gp) {
      auto r = gp_branch(sign, parse_endo(endo, g.n), uhf);
      json j = {{"derivable", r.fingerprint.has_value()}, {"derivation", r.derivation}};
      if (r.fingerprint) j["components"] = r.fingerprint->to_json();
      emit(g, j, (r.fingerprint ? r.fingerprint->to_string() : std::string("---")) + "\n" + r.derivation);
      return r.fingerprint ? 0 : 1;
    } else if (*car) {
      const CarExpr x = parse_car(a);
      auto y = psi_map(x);
      emit(g, json{{"car", x.to_string()}, {"o2", y.to_json()}}, x.to_string() + "\n= " + y.to_string());
    } else if (*mixture_cmd) {
      const CarExpr x = mixture(HalfInt::parse(a));
      auto y = psi_map(x);
      emit(g, json{{"k", a}, {"car", x.to_string()}, {"o2", y.to_json()}},
           "b[" + a + "] = " + x.to_string() + "\n= " + y.to_string());
    } else if (*vacuum) {
      Report r = vacuum_check(parse_fermion_rep(rep), HalfInt::parse(k));
      std::string text;
      for (const auto& c : r.checks)
        text += (c.pass ? "ok   " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
      if (!text.empty()) text.pop_back();
      emit(g, r.to_json(), text);
      return r.ok() ? 0 : 1;
    } else if (*verify) {
      return cmd_verify(g, names);
    } else if (*classify) {
      return cmd_classify(g, endo);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
