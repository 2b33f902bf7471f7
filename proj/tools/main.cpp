#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "spincover/cover.hpp"
#include "spincover/errors.hpp"
#include "spincover/group.hpp"
#include "spincover/report.hpp"
#include "spincover/tgroup.hpp"

using namespace spincover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitRange = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitVerify = 5;

struct Options {
  std::string group = "2A";
  int degree = 0;
  int prime = 2;
  uint64_t seed = 0;
  size_t budget_closure = kDefaultClosureBudget;
  size_t budget_search = 10'000'000;
  std::string format = "json";
};

int cmd_cover_eval(const std::string& expr, int n, const std::string& cover,
                   const std::string& format) {
  const int alpha = cover == "minus" ? 1 : 0;
  CoverElement e = parse_cover_element(expr, n, alpha);
  int ord = order(e);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = n;
    j["cover"] = cover;
    j["expr"] = expr;
    j["element"] = e.to_string();
    j["sign"] = e.sign();
    j["order"] = ord;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << e.to_string() << "  sign " << (e.sign() > 0 ? "+1" : "-1")
              << "  order " << ord << "\n";
  }
  return kExitOk;
}

int cmd_tgroup(const Options& opt) {
  GroupSpec spec = make_spec(parse_family(opt.group), opt.degree);
  TGroupReport rep = compute_T(spec, opt.prime, opt.seed);
  rep.budget_closure = opt.budget_closure;
  rep.budget_search = opt.budget_search;
  if (opt.format == "md")
    std::cout << to_markdown(rep);
  else if (opt.format == "text")
    std::cout << to_text(rep);
  else
    std::cout << to_json(rep);
  return kExitOk;
}

int cmd_tables(const std::string& which, const Options& opt) {
  TableReport t;
  if (which == "1")
    t = reproduce_table1();
  else if (which == "2")
    t = reproduce_table2();
  else if (which == "A")
    t = reproduce_theoremA();
  else if (which == "B")
    t = reproduce_theoremB();
  else
    throw ParseError("tables: --which must be one of 1, 2, A, B");
  if (opt.format == "md")
    std::cout << to_markdown(t);
  else if (opt.format == "text")
    std::cout << to_text(t);
  else
    std::cout << to_json(t);
  return t.all_match() ? kExitOk : kExitMismatch;
}

int cmd_verify(int n_min, int n_max, int fuzz_n, uint64_t trials,
               uint64_t seed, bool corrupt, const std::string& format) {
  VerifySummary v;
  for (int alpha : {0, 1})
    for (int n = n_min; n <= n_max; ++n)
      v.relations.push_back(verify_presentation(n, alpha));
  if (corrupt) {
    // negative control: check a deliberately wrong relation t1^2 = z^(1-a)
    for (int alpha : {0, 1}) {
      RelationReport bad;
      bad.n = n_max;
      bad.alpha = alpha;
      CoverElement t1 = gen_t(1, n_max, alpha);
      CoverElement rhs = alpha == 0 ? central_z(n_max, 0)
                                    : cover_identity(n_max, 1);
      ++bad.checked;
      if (!(t1 * t1 == rhs))
        bad.failures.push_back("t1^2 != z^(1-alpha) at n=" +
                               std::to_string(n_max));
      v.relations.push_back(bad);
    }
  }
  if (trials > 0)
    for (int alpha : {0, 1})
      v.fuzz.push_back(associativity_fuzz(fuzz_n, alpha, trials, seed));
  if (format == "text") {
    std::cout << "relations: " << v.relations.size() << " reports, fuzz: "
              << v.fuzz.size() << " reports, "
              << (v.ok() ? "all pass" : "FAILURES") << "\n";
  } else {
    std::cout << to_json(v);
  }
  return v.ok() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic and classification reports for the Schur "
               "covers of the symmetric and alternating groups"};
  app.require_subcommand(1);
  Options opt;

  auto* eval = app.add_subcommand(
      "cover-eval", "evaluate a word in z, t<j>, [i,j] in a double cover");
  std::string expr, cover = "plus";
  eval->add_option("expr", expr, "expression, e.g. \"[1,2][3,4]\"")
      ->required();
  eval->add_option("-n,--degree", opt.degree, "degree n")->required();
  eval->add_option("--cover", cover, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  eval->add_option("--format", opt.format, "json, md or text");

  auto* tg = app.add_subcommand("tgroup",
                                "endotrivial group structure report");
  tg->add_option("-g,--group", opt.group,
                 "family: 2A, 2S+, 2S-, 3A6, 3A7, 6A6, 6A7")
      ->required();
  tg->add_option("-n,--degree", opt.degree, "degree n (covers of Sn/An)");
  tg->add_option("-p,--prime", opt.prime, "characteristic")->required();
  tg->add_option("--seed", opt.seed, "run seed (recorded in the report)");
  tg->add_option("--budget-closure", opt.budget_closure,
                 "max elements in closure enumeration");
  tg->add_option("--budget-search", opt.budget_search,
                 "max search nodes for clique/conjugacy search");
  tg->add_option("--format", opt.format, "json, md or text");

  auto* tb = app.add_subcommand("tables",
                                "reproduce the classification tables");
  std::string which;
  tb->add_option("--which", which, "1, 2, A or B")->required();
  tb->add_option("--seed", opt.seed, "run seed");
  tb->add_option("--format", opt.format, "json, md or text");

  auto* vf = app.add_subcommand(
      "verify", "presentation relations and cocycle associativity fuzz");
  int n_min = 4, n_max = 8, fuzz_n = 15;
  uint64_t trials = 0;
  bool corrupt = false;
  vf->add_option("--n-min", n_min, "smallest degree checked");
  vf->add_option("--n-max", n_max, "largest degree checked");
  vf->add_option("--trials", trials, "associativity fuzz trials (0 = skip)");
  vf->add_option("--fuzz-n", fuzz_n, "degree for the fuzz check");
  vf->add_option("--seed", opt.seed, "fuzz seed");
  vf->add_flag("--corrupt-relation", corrupt)->group("");  // negative control
  vf->add_option("--format", opt.format, "json or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*eval) return cmd_cover_eval(expr, opt.degree, cover, opt.format);
    if (*tg) return cmd_tgroup(opt);
    if (*tb) return cmd_tables(which, opt);
    if (*vf)
      return cmd_verify(n_min, n_max, fuzz_n, trials, opt.seed, corrupt,
                        opt.format);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const OutOfClassification& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const NotCyclicSylow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
