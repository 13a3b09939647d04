#include "fixsub/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "fixsub/classify.hpp"
#include "fixsub/constructions.hpp"
#include "fixsub/errors.hpp"
#include "fixsub/fixpipe.hpp"
#include "fixsub/json_io.hpp"
#include "fixsub/surface.hpp"

namespace fixsub {

namespace {

struct Options {
  bool json = false;
  std::string ambient, subgroup, recipe, file, out_file, n, alpha = "identity", target;
  std::size_t g = 2, k = 2, t = 2, m = 1, s = 0;
  std::size_t witnesses = 0;
  bool witnesses_given = false;
  std::size_t brute = 0;
  std::size_t max_len = 5;
  std::size_t rank_bound = 8;
  bool all = false, serial = false;
};

void add_recipe_flags(CLI::App* app, Options& o) {
  app->add_option("--recipe", o.recipe, "catalog recipe identifier");
  app->add_option("--g", o.g, "rank or genus");
  app->add_option("--t", o.t, "target rank");
  app->add_option("--m", o.m, "index parameter");
  app->add_option("--k", o.k, "abelian rank");
  app->add_option("--s", o.s, "fixed abelian rank");
  app->add_option("--n", o.n, "rank_witness target (a number or aleph0)");
  app->add_option("--alpha", o.alpha, "surface_endo alpha: identity or phi1");
  app->add_option("--target", o.target, "thm33 target type");
}

RecipeParams recipe_params(const Options& o) {
  RecipeParams q;
  q.g = o.g;
  q.k = o.k;
  q.t = o.t;
  q.m = o.m;
  q.s = o.s;
  if (!o.ambient.empty()) q.ambient = parse_ambient(o.ambient);
  if (!o.n.empty() && o.n != "aleph0") {
    try {
      q.n = std::stoul(o.n);
    } catch (const std::exception&) {
      throw ParseError("--n must be a number or aleph0");
    }
  } else if (o.n.empty() && o.recipe == "rank_witness") {
    throw ParseError("rank_witness needs --n");
  }
  if (o.alpha == "phi1")
    q.alpha = AlphaChoice::phi1;
  else if (o.alpha != "identity")
    throw ParseError("--alpha must be identity or phi1");
  if (!o.target.empty()) q.target = parse_iso(o.target);
  return q;
}

EndoDocument load_endo(const Options& o) {
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw ParseError("cannot open " + o.file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& ex) {
      throw ParseError(o.file + ": " + ex.what());
    }
    return endo_from_json(j);
  }
  if (o.recipe.empty()) throw ParseError("give --recipe or --file");
  Recipe r = build_recipe(o.recipe, recipe_params(o));
  return {r.endo, r.inverse};
}

int run_classify(const Options& o, std::ostream& out) {
  Ambient a = parse_ambient(o.ambient);
  IsoType t = parse_iso(o.subgroup);
  auto v = is_aut_fixed(a, t);
  if (o.json) {
    out << Json{{"ambient", to_string(a)},
                {"subgroup", to_string(t)},
                {"aut_fixed", v.answer},
                {"realizable", subgroup_realizable(a, t)},
                {"tag", to_string(v.tag)},
                {"witness", v.witness ? Json(*v.witness) : Json(nullptr)}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << (v.answer ? "yes" : "no") << '\n';
  out << "tag: " << to_string(v.tag) << '\n';
  if (v.witness) out << "witness: " << *v.witness << '\n';
  return kExitOk;
}

int run_fix(const Options& o, std::ostream& out) {
  EndoDocument doc = load_endo(o);
  FixOptions fo;
  fo.infinite_witnesses = o.witnesses;
  FixDescription d = fix_subgroup(doc.endo, fo);
  const Ambient& a = doc.endo.ambient;
  std::size_t shown = o.witnesses_given ? std::min(o.witnesses, d.witnesses.size()) : d.witnesses.size();
  int code = kExitOk;
  std::optional<OracleReport> report;
  if (o.brute > 0) report = check_oracle_agreement(doc.endo, d, o.brute, {!o.serial});
  bool expected_ok = !doc.endo.expected_iso || *doc.endo.expected_iso == d.iso;
  if (!expected_ok || (report && !report->agree())) code = kExitMismatch;

  if (o.json) {
    Json j = fix_to_json(a, d);
    j["witnesses"] = Json(std::vector<Json>(j["witnesses"].begin(), j["witnesses"].begin() + static_cast<long>(shown)));
    if (doc.endo.expected_iso) j["expected"] = to_string(*doc.endo.expected_iso);
    if (report)
      j["oracle"] = {{"agree", report->agree()},
                     {"words_checked", report->words_checked},
                     {"fixed_elements", report->fixed_elements},
                     {"discrepancies", report->discrepancies}};
    out << j.dump(2) << '\n';
    return code;
  }
  out << "iso: " << to_string(d.iso) << '\n';
  out << "s: " << d.s << '\n';
  Rank r = rank_of(d.projected.iso);
  out << "projected: " << to_string(d.projected.tag) << " index " << d.projected.index << " rank " << to_string(r) << '\n';
  for (std::size_t i = 0; i < shown; ++i) out << "witness: " << to_string(a, d.witnesses[i]) << '\n';
  for (const auto& note : d.notes) out << "note: " << note << '\n';
  if (!expected_ok) out << "expected: " << to_string(*doc.endo.expected_iso) << " (MISMATCH)\n";
  if (report) {
    if (report->agree()) {
      out << "oracle: agree (" << report->words_checked << " words checked)\n";
    } else {
      out << "oracle: DISAGREE\n";
      for (const auto& msg : report->discrepancies) out << "  " << msg << '\n';
    }
  }
  return code;
}

int run_construct(const Options& o, std::ostream& out) {
  Recipe r;
  if (!o.recipe.empty()) {
    r = build_recipe(o.recipe, recipe_params(o));
  } else {
    if (o.ambient.empty() || o.subgroup.empty()) throw ParseError("give --recipe, or --ambient with --subgroup");
    Ambient a = parse_ambient(o.ambient);
    IsoType t = parse_iso(o.subgroup);
    auto built = realize(a, t);
    if (!built) {
      auto v = is_aut_fixed(a, t);
      out << (v.answer ? "aut-fixed, but no catalog construction" : "not aut-fixed") << '\n';
      return kExitMismatch;
    }
    r = *built;
  }
  Json j = recipe_to_json(r);
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    if (!f) throw ParseError("cannot write " + o.out_file);
    f << endo_to_json(r.endo, r.inverse).dump(2) << '\n';
  }
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    out << "recipe: " << r.id << " (" << r.params << ")\n";
    out << "ambient: " << to_string(r.endo.ambient) << '\n';
    out << "expected: " << to_string(r.expected) << '\n';
    for (const auto& note : r.notes) out << "note: " << note << '\n';
    if (!o.out_file.empty()) out << "wrote " << o.out_file << '\n';
  }
  return kExitOk;
}

int run_count(const Options& o, std::ostream& out) {
  Ambient a = parse_ambient(o.ambient);
  auto c = count_aut_fixed(a);
  if (c && enumerate_aut_fixed(a, 0).size() != *c) {
    out << "count " << *c << " disagrees with enumeration\n";
    return kExitMismatch;
  }
  if (o.json)
    out << Json{{"ambient", to_string(a)}, {"count", c ? Json(*c) : Json("infinite")}}.dump() << '\n';
  else
    out << (c ? std::to_string(*c) : std::string("infinite")) << '\n';
  return kExitOk;
}

int run_enumerate(const Options& o, std::ostream& out) {
  Ambient a = parse_ambient(o.ambient);
  auto list = enumerate_aut_fixed(a, o.rank_bound);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& t : list) arr.push_back(to_string(t));
    out << Json{{"ambient", to_string(a)}, {"types", arr}}.dump(2) << '\n';
  } else {
    for (const auto& t : list) out << to_string(t) << '\n';
  }
  return kExitOk;
}

// One verify case: a label and a check that returns an empty string on
// success or a failure reason.
struct Case {
  std::string recipe;
  std::string label;
  std::function<std::string()> check;
};

std::string check_recipe(const Recipe& r, std::size_t oracle_len, bool parallel) {
  FixDescription d = fix_subgroup(r.endo);
  std::string computed = to_string(d.iso);
  if (!(d.iso == r.expected)) return "expected " + to_string(r.expected) + ", computed " + computed;
  if (r.endo.claims_automorphism && (!r.inverse || !verify_automorphism(r.endo, *r.inverse)))
    return "inverse does not verify";
  if (r.id != "endo_m" && r.id != "rank_witness" && !is_aut_fixed(r.endo.ambient, r.expected).answer)
    return "expected type is not aut-fixed per the classification";
  if (oracle_len > 0) {
    auto report = check_oracle_agreement(r.endo, d, oracle_len, {parallel});
    if (!report.agree()) return "oracle: " + report.discrepancies.front();
  }
  return "";
}

std::vector<Case> verify_grid(std::size_t max_len, bool parallel) {
  std::vector<Case> cases;
  auto add = [&](std::function<Recipe()> build, bool oracle) {
    Recipe r = build();
    cases.push_back({r.id, r.id + "(" + r.params + ") expected " + to_string(r.expected),
                     [=] { return check_recipe(r, oracle ? max_len : 0, parallel); }});
  };
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t t = 0; t <= n; ++t) add([=] { return prop27_aut(n, t); }, n == 2);
  for (std::size_t g = 2; g <= 4; ++g)
    for (std::size_t t = 2; t <= 10; ++t) {
      add([=] { return phi_t(g, t); }, g <= 3 && t <= 3);
      add([=] { return psi_t(g, t); }, g <= 3 && t <= 3);
    }
  for (std::size_t g = 2; g <= 3; ++g)
    for (std::size_t m = 1; m <= 6; ++m) {
      add([=] { return endo_m(g, m); }, m <= 2);
      cases.push_back({"endo_m", "endo_m(g=" + std::to_string(g) + ",m=" + std::to_string(m) + ") is not an automorphism",
                       [=] {
                         Recipe r = endo_m(g, m);
                         StdEndo guess = r.endo;
                         guess.L = IntMatrix{{1}};
                         if (r.endo.claims_automorphism || verify_automorphism(r.endo, r.endo) ||
                             verify_automorphism(r.endo, guess))
                           return std::string("negative control passed as an automorphism");
                         return std::string();
                       }});
    }
  for (std::size_t g = 2; g <= 3; ++g) {
    add([=] { return aleph_aut(g); }, true);
    cases.push_back({"aleph", "aleph(g=" + std::to_string(g) + ") conjugate witnesses", [=] {
                       Recipe r = aleph_aut(g);
                       auto d = fix_subgroup(r.endo, {kDefaultVertexGuard, 11});
                       KernelStream stream(r.endo, d.projected);
                       for (int i = 0; i < 11; ++i) {
                         GroupElement x = stream.next();
                         if (!element_equal(r.endo.ambient, eval_endo(r.endo, x), x))
                           return "witness " + to_string(r.endo.ambient, x) + " not fixed";
                       }
                       return std::string();
                     }});
  }
  for (std::size_t g = 2; g <= 4; ++g)
    for (const auto& t : enumerate_aut_fixed(Ambient::free(g, 1), 0))
      add([=] { return theorem33_witness(g, t); }, g == 2);
  for (std::size_t g = 2; g <= 3; ++g)
    for (std::size_t k = 2; k <= 3; ++k)
      for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t s = 0; s + 1 <= k; ++s)
          for (AlphaChoice c : {AlphaChoice::identity, AlphaChoice::phi1})
            add([=] { return surface_endo(g, k, m, s, c); }, g == 2 && k == 2 && m == 1 && s == 0);
  for (std::size_t g = 2; g <= 3; ++g) {
    add([=] { return surface_psi(g); }, g == 2);
    cases.push_back({"surface_psi", "surface_psi(g=" + std::to_string(g) + ") fixes the listed generators, moves b_g", [=] {
                       Recipe r = surface_psi(g);
                       const auto& im = r.endo.alpha.images;
                       for (const auto& w : r.endo.alpha.fix->basis)
                         if (!surface_equal(apply_map(im, w), w, g)) return "generator " + to_string(w, Alphabet::surface) + " moved";
                       Word bg = Word::generator(2 * g, b_gen(static_cast<std::uint32_t>(g)));
                       if (surface_equal(apply_map(im, bg), bg, g)) return std::string("b_g is fixed");
                       return std::string();
                     }});
  }
  for (const Ambient& a : {Ambient::free(2, 2), Ambient::surface(2, 2)}) {
    for (std::size_t n = 0; n <= 12; ++n) {
      cases.push_back({"rank_witness", "rank_witness(" + to_string(a) + ",n=" + std::to_string(n) + ")", [=] {
                         Recipe r = rank_witness(a, n);
                         Rank rk = rank_of(fix_subgroup(r.endo).iso);
                         if (rk.infinite || rk.value != n) return "computed rank " + to_string(rk);
                         if (!verify_automorphism(r.endo, *r.inverse)) return std::string("inverse does not verify");
                         return std::string();
                       }});
    }
    cases.push_back({"rank_witness", "rank_witness(" + to_string(a) + ",n=aleph0)", [=] {
                       Rank rk = rank_of(fix_subgroup(rank_witness(a, std::nullopt).endo).iso);
                       return rk.infinite ? std::string() : "computed rank " + to_string(rk);
                     }});
  }
  return cases;
}

int run_verify(const Options& o, std::ostream& out) {
  if (!o.all && o.recipe.empty()) throw ParseError("give --all or --recipe");
  if (!o.recipe.empty()) {
    const auto& ids = recipe_ids();
    if (std::find(ids.begin(), ids.end(), o.recipe) == ids.end()) throw ParseError("unknown recipe \"" + o.recipe + "\"");
  }
  std::size_t total = 0, failed = 0;
  Json results = Json::array();
  for (const auto& c : verify_grid(o.max_len, !o.serial)) {
    if (!o.all && c.recipe != o.recipe) continue;
    ++total;
    std::string why = c.check();
    if (!why.empty()) ++failed;
    if (o.json)
      results.push_back({{"case", c.label}, {"pass", why.empty()}, {"reason", why}});
    else
      out << (why.empty() ? "PASS " : "FAIL ") << c.label << (why.empty() ? "" : ": " + why) << '\n';
  }
  if (o.json)
    out << Json{{"cases", results}, {"total", total}, {"failed", failed}}.dump(2) << '\n';
  else if (failed == 0)
    out << "all " << total << " cases pass\n";
  else
    out << failed << " of " << total << " cases fail\n";
  return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed subgroups of automorphisms of free and surface groups times Z^k"};
  app.require_subcommand(1, 1);
  Options o;

  auto* classify = app.add_subcommand("classify", "is a subgroup type aut-fixed in an ambient group");
  classify->add_option("--ambient", o.ambient, "e.g. free:g=3,k=2")->required();
  classify->add_option("--subgroup", o.subgroup, "e.g. \"F_3 x Z\"")->required();

  auto* fix = app.add_subcommand("fix", "compute the fixed subgroup of an endomorphism");
  add_recipe_flags(fix, o);
  fix->add_option("--ambient", o.ambient, "ambient for rank_witness");
  fix->add_option("--file", o.file, "endomorphism JSON file");
  fix->add_option("--witnesses", o.witnesses, "number of witnesses to print");
  fix->add_option("--brute-check", o.brute, "run the brute-force oracle to this word length");
  fix->add_flag("--serial", o.serial, "single-threaded oracle");

  auto* construct = app.add_subcommand("construct", "build an endomorphism with a prescribed Fix");
  add_recipe_flags(construct, o);
  construct->add_option("--ambient", o.ambient, "ambient group");
  construct->add_option("--subgroup", o.subgroup, "target type");
  construct->add_option("--out", o.out_file, "write the endomorphism JSON here");

  auto* count = app.add_subcommand("count", "number of aut-fixed types");
  count->add_option("--ambient", o.ambient, "ambient group")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list aut-fixed types");
  enumerate->add_option("--ambient", o.ambient, "ambient group")->required();
  enumerate->add_option("--rank-bound", o.rank_bound, "largest finite rank listed when k >= 2");

  auto* verify = app.add_subcommand("verify", "run the catalog checks");
  verify->add_flag("--all", o.all, "every recipe");
  verify->add_option("--recipe", o.recipe, "one recipe");
  verify->add_option("--max-len", o.max_len, "oracle word length");
  verify->add_flag("--serial", o.serial, "single-threaded oracle");

  for (auto* sub : {classify, fix, construct, count, enumerate, verify}) sub->add_flag("--json", o.json, "JSON output");

  std::vector<std::string> argv_store{"fixsub"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  o.witnesses_given = fix->count("--witnesses") > 0;

  try {
    if (*classify) return run_classify(o, out);
    if (*fix) return run_fix(o, out);
    if (*construct) return run_construct(o, out);
    if (*count) return run_count(o, out);
    if (*enumerate) return run_enumerate(o, out);
    if (*verify) return run_verify(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CertificateError& e) {
    err << "certificate error: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace fixsub
