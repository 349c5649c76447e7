#include "cli.h"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cores.h"
#include "json.hpp"
#include "kschur.h"
#include "render.h"
#include "rootcat.h"
#include "verify.h"

namespace cf::cli {

namespace {

Ints parse_ints(const std::string& s) {
  Ints out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad integer list: " + s);
    out.push_back(v);
  }
  return out;
}

struct Sink {
  std::ostream& out;
  bool json;
  template <typename T>
  void value(const T& v) {
    out << (json ? render_json(v) : render_text(v)) << "\n";
  }
};

void print_tableaux(Sink& sink, const std::vector<StrongMarkedTableau>& ts) {
  if (sink.json) {
    sink.out << render_json(ts) << "\n";
    return;
  }
  for (size_t i = 0; i < ts.size(); ++i) {
    sink.out << "T" << (i + 1) << " spin " << ts[i].spin_total() << "\n"
             << render_text(ts[i]);
  }
  sink.out << ts.size() << " tableaux\n";
}

int print_verify(Sink& sink, const std::vector<verify::SuiteResult>& rs) {
  long failures = 0;
  if (sink.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) {
      arr.push_back({{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}});
      failures += r.failures;
    }
    sink.out << arr.dump() << "\n";
  } else {
    for (const auto& r : rs) {
      sink.out << r.name << ": " << r.cases << " cases, " << r.failures
               << " failures\n";
      failures += r.failures;
    }
  }
  return failures == 0 ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"graded k-Schur and Catalan function calculator", "kcatalan"};
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string mu_s, lambda_s, shape_s, rows_s, gamma_s, weight_s;
  std::string via = "catalan", direction, suite = "all";
  int k = 0, d = 0, z = 0, ell = 0, max_mark = -1, k_max = 3, size_max = 7;

  CLI::App* ks = app.add_subcommand("kschur", "k-Schur operations");
  CLI::App* expand = ks->add_subcommand("expand", "Schur expansion");
  expand->add_option("--k", k)->required();
  expand->add_option("--mu", mu_s)->required();
  expand->add_option("--via", via)->check(CLI::IsMember({"tableaux", "catalan"}));
  CLI::App* branch_c = ks->add_subcommand("branch", "expansion one level up");
  branch_c->add_option("--k", k)->required();
  branch_c->add_option("--mu", mu_s)->required();
  CLI::App* pieri = ks->add_subcommand("pieri", "dual Pieri expansion");
  pieri->add_option("--k", k)->required();
  pieri->add_option("--mu", mu_s)->required();
  pieri->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);
  pieri->add_option("--direction", direction)
      ->required()
      ->check(CLI::IsMember({"vertical", "horizontal"}));
  pieri->add_option("--max-mark", max_mark);
  CLI::App* str = ks->add_subcommand("straighten", "one lowered row");
  str->add_option("--k", k)->required();
  str->add_option("--lambda", lambda_s)->required();
  str->add_option("--z", z)->required();

  CLI::App* cat = app.add_subcommand("catalan", "Catalan functions");
  CLI::App* eval = cat->add_subcommand("eval", "evaluate one function");
  eval->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  eval->add_option("--rowcounts", rows_s)->required();
  eval->add_option("--gamma", gamma_s)->required();
  bool t1 = false;
  eval->add_flag("--t1", t1, "specialize t = 1");

  CLI::App* cores_c = app.add_subcommand("cores", "core conversions");
  CLI::App* to_core_c = cores_c->add_subcommand("to-core", "bounded to core");
  to_core_c->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  to_core_c->add_option("--shape", shape_s)->required();
  CLI::App* to_bdd = cores_c->add_subcommand("to-bounded", "core to bounded");
  to_bdd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  to_bdd->add_option("--shape", shape_s)->required();

  CLI::App* tab = app.add_subcommand("tableaux", "strong marked tableaux");
  CLI::App* enu = tab->add_subcommand("enumerate", "list tableaux");
  enu->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  enu->add_option("--outside", shape_s)->required();
  enu->add_option("--weight", weight_s)->required();
  bool vertical = false;
  enu->add_flag("--vertical", vertical, "strictly increasing marks per block");

  CLI::App* ver = app.add_subcommand("verify", "identity sweeps");
  ver->add_option("--suite", suite);
  ver->add_option("--k-max", k_max)->check(CLI::PositiveNumber);
  ver->add_option("--size-max", size_max)->check(CLI::PositiveNumber);

  app.require_subcommand(1);
  for (CLI::App* grp : {ks, cat, cores_c, tab}) grp->require_subcommand(1);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  Sink sink{out, format == "json"};
  try {
    if (expand->parsed()) {
      Ints mu = parse_ints(mu_s);
      if (via == "tableaux")
        sink.value(schur_expand(mu, k));
      else
        sink.value(kschur(KWeight(mu, k)));
    } else if (branch_c->parsed()) {
      sink.value(branch(parse_ints(mu_s), k));
    } else if (pieri->parsed()) {
      Ints mu = parse_ints(mu_s);
      if (max_mark >= 0) {
        if (direction != "vertical")
          throw std::invalid_argument("pieri: --max-mark needs --direction vertical");
        sink.value(partial_restriction(mu, k, d, max_mark));
      } else if (direction == "vertical") {
        sink.value(vertical_pieri(mu, k, d));
      } else {
        sink.value(horizontal_pieri(mu, k, d));
      }
    } else if (str->parsed()) {
      sink.value(straighten(parse_ints(lambda_s), z, k));
    } else if (eval->parsed()) {
      IndexedRootIdeal iri{RootIdeal(ell, parse_ints(rows_s)),
                           parse_ints(gamma_s)};
      if (static_cast<int>(iri.gamma.size()) != ell)
        throw std::invalid_argument("catalan eval: gamma must have length ell");
      sink.value(t1 ? catalan_t1(iri) : catalan_chl(iri));
    } else if (to_core_c->parsed()) {
      sink.value(to_core(parse_ints(shape_s), k));
    } else if (to_bdd->parsed()) {
      sink.value(to_bounded(Core(parse_ints(shape_s), k + 1)));
    } else if (enu->parsed()) {
      auto ts = enumerate_tableaux(parse_ints(shape_s), k, parse_ints(weight_s),
                                   vertical);
      print_tableaux(sink, ts);
    } else if (ver->parsed()) {
      verify::Options opt{k_max, size_max};
      if (suite == "all") return print_verify(sink, verify::run_all(opt));
      return print_verify(sink, {verify::run_suite(suite, opt)});
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cf::cli
