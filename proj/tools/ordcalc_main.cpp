#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ordcalc/bar.hpp"
#include "ordcalc/fundseq.hpp"
#include "ordcalc/iso.hpp"
#include "ordcalc/norms.hpp"
#include "ordcalc/order.hpp"
#include "ordcalc/suite.hpp"
#include "ordcalc/term.hpp"
#include "ordcalc/universe.hpp"

using namespace ord;

namespace {

const char* class_name(NumClass c) {
  switch (c) {
    case NumClass::Zero: return "zero";
    case NumClass::Successor: return "successor";
    default: return "limit";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic workbench for collapsing-based ordinal notations"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI file");

  bool bar = false, json = false, pretty = false;
  app.add_flag("--bar", bar, "parse input terms in the simultaneous system")
      ->envname("ORDCALC_BAR");
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--pretty", pretty, "human-oriented printing");

  int rc = 0;
  auto sys = [&] { return bar ? Sys::Sim : Sys::Step; };
  auto emit_term = [&](TermPtr t) {
    if (json) {
      nlohmann::json j;
      j["term"] = print(t);
      j["pretty"] = print_pretty(t);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (pretty ? print_pretty(t) : print(t)) << "\n";
    }
  };
  auto emit_number = [&](const char* key, std::uint64_t v) {
    if (json) {
      nlohmann::json j;
      j[key] = v;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << v << "\n";
    }
  };

  // parse
  auto* c_parse = app.add_subcommand("parse", "parse a term, print its canonical form");
  std::string parse_in;
  c_parse->add_option("term", parse_in, "term expression")->required();
  c_parse->callback([&] {
    TermPtr t = ord::parse(parse_in, sys());
    if (json) {
      nlohmann::json j;
      j["term"] = print(t);
      j["pretty"] = print_pretty(t);
      j["nodes"] = t->nodes;
      j["height"] = ht(t);
      j["class"] = class_name(classify(t));
      std::cout << j.dump() << "\n";
    } else {
      emit_term(t);
    }
  });

  // cmp
  auto* c_cmp = app.add_subcommand("cmp", "compare two terms");
  std::string cmp_a, cmp_b;
  c_cmp->add_option("a", cmp_a)->required();
  c_cmp->add_option("b", cmp_b)->required();
  c_cmp->callback([&] {
    Cmp r = compare(ord::parse(cmp_a, sys()), ord::parse(cmp_b, sys()));
    const char* s = r == Cmp::LT ? "<" : r == Cmp::EQ ? "=" : ">";
    if (json) {
      nlohmann::json j;
      j["order"] = s;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << s << "\n";
    }
  });

  // star
  auto* c_star = app.add_subcommand("star", "largest collapse of a level inside a term");
  std::string star_in;
  int star_level = 0;
  c_star->add_option("term", star_in)->required();
  c_star->add_option("-l,--level", star_level, "collapse level (default 0)");
  c_star->callback([&] {
    TermPtr t = ord::parse(star_in, sys());
    emit_term(star_of(t, star_level, sys()));
  });

  // loc
  auto* c_loc = app.add_subcommand("loc", "localization of a term at a level");
  std::string loc_in;
  int loc_level = -1;
  c_loc->add_option("term", loc_in)->required();
  c_loc->add_option("-l,--level", loc_level, "level (default: the term's own)");
  c_loc->callback([&] {
    TermPtr t = ord::parse(loc_in, sys());
    int lv = loc_level >= 0 ? loc_level : (t->kind == Kind::Collapse ? t->level : 0);
    auto seq = localization(t, lv);
    if (json) {
      nlohmann::json j;
      j["level"] = seq.level;
      nlohmann::json arr = nlohmann::json::array();
      for (TermPtr e : seq.entries) arr.push_back(print(e));
      j["entries"] = arr;
      std::cout << j.dump() << "\n";
    } else {
      for (TermPtr e : seq.entries) std::cout << print(e) << "\n";
    }
  });

  // fixp
  auto* c_fixp = app.add_subcommand("fixp", "fixed-point condition of a collapse's argument");
  std::string fixp_in;
  c_fixp->add_option("term", fixp_in)->required();
  c_fixp->callback([&] {
    TermPtr t = ord::parse(fixp_in, sys());
    if (t->kind != Kind::Collapse)
      throw DomainError("the fixed-point condition applies to collapse terms");
    bool r = fixpoint_F(delta_full(t->arg, t->level), eta_lt(t->arg, t->level), t->level);
    if (json) {
      nlohmann::json j;
      j["holds"] = r;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (r ? "true" : "false") << "\n";
    }
  });

  // fs
  auto* c_fs = app.add_subcommand("fs", "value of the assignment at a parameter");
  std::string fs_in, fs_zeta;
  c_fs->add_option("term", fs_in)->required();
  c_fs->add_option("zeta", fs_zeta, "parameter term or number")->required();
  c_fs->callback([&] {
    TermPtr t = ord::parse(fs_in, sys());
    TermPtr z = ord::parse(fs_zeta, sys());
    FsInfo info;
    TermPtr r = fundseq(t, z, info);
    if (json) {
      nlohmann::json j;
      j["value"] = print(r);
      j["clause"] = fs_clause_name(info.clause);
      j["support"] = print(info.support);
      std::cout << j.dump() << "\n";
    } else {
      emit_term(r);
    }
  });

  // chi
  auto* c_chi = app.add_subcommand("chi", "cofinality indicator at a level");
  std::string chi_in;
  int chi_level = 0;
  c_chi->add_option("term", chi_in)->required();
  c_chi->add_option("-l,--level", chi_level, "level (default 0)");
  c_chi->callback([&] {
    emit_number("chi", static_cast<std::uint64_t>(chi(chi_level, ord::parse(chi_in, sys()))));
  });

  // dom
  auto* c_dom = app.add_subcommand("dom", "cofinality degree of a term");
  std::string dom_in;
  c_dom->add_option("term", dom_in)->required();
  c_dom->callback([&] {
    TermPtr t = ord::parse(dom_in, sys());
    if (json) {
      nlohmann::json j;
      j["degree"] = dom_ind(t);
      if (bar) {
        nlohmann::json arr = nlohmann::json::array();
        for (int m = 0; m <= (t->top_level < 0 ? 0 : t->top_level) + 1; ++m)
          if (in_dom(t, m)) arr.push_back(m);
        j["domain_levels"] = arr;
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << dom_ind(t) << "\n";
    }
  });

  // support
  auto* c_sup = app.add_subcommand("support", "support term of a collapse");
  std::string sup_in;
  c_sup->add_option("term", sup_in)->required();
  c_sup->callback([&] { emit_term(support_term(ord::parse(sup_in, sys()))); });

  // norm
  auto* c_norm = app.add_subcommand("norm", "symbol-count norm of a term");
  std::string norm_in;
  c_norm->add_option("term", norm_in)->required();
  c_norm->callback([&] {
    TermPtr t = ord::parse(norm_in, sys());
    emit_number("norm", bar ? norm_bar(t) : cnorm(t));
  });

  // gnorm
  auto* c_gnorm = app.add_subcommand("gnorm", "descent-count norm of a term");
  std::string gnorm_in;
  c_gnorm->add_option("term", gnorm_in)->required();
  c_gnorm->callback([&] { emit_number("gnorm", gnorm(ord::parse(gnorm_in, sys()))); });

  // hardy
  auto* c_hardy = app.add_subcommand("hardy", "evaluate the descent hierarchy");
  std::string hardy_in;
  std::uint64_t hardy_n = 0;
  HardyBudget budget;
  c_hardy->add_option("term", hardy_in)->required();
  c_hardy->add_option("n", hardy_n, "start value")->required();
  c_hardy->add_option("--max-steps", budget.max_steps, "descent step budget")
      ->envname("ORDCALC_MAX_STEPS");
  c_hardy->add_option("--max-value", budget.max_value, "result size budget")
      ->envname("ORDCALC_MAX_VALUE");
  c_hardy->callback([&] {
    emit_number("value", hardy(ord::parse(hardy_in, sys()), hardy_n, budget));
  });

  // walk
  auto* c_walk = app.add_subcommand("walk", "two-index descent walk");
  std::string walk_in;
  std::uint64_t walk_n = 0, walk_k = 0;
  c_walk->add_option("term", walk_in)->required();
  c_walk->add_option("n", walk_n, "start index")->required();
  c_walk->add_option("k", walk_k, "end index")->required();
  c_walk->callback([&] {
    emit_term(bracket_walk(ord::parse(walk_in, sys()), walk_n, walk_k));
  });

  // to-bar / to-step
  auto* c_tobar = app.add_subcommand("to-bar", "translate into the simultaneous system");
  std::string tobar_in;
  c_tobar->add_option("term", tobar_in)->required();
  c_tobar->callback([&] { emit_term(to_bar(ord::parse(tobar_in, Sys::Step))); });

  auto* c_tostep = app.add_subcommand("to-step", "translate into the stepwise system");
  std::string tostep_in;
  c_tostep->add_option("term", tostep_in)->required();
  c_tostep->callback([&] { emit_term(to_step(ord::parse(tostep_in, Sys::Sim))); });

  // ht
  auto* c_ht = app.add_subcommand("ht", "height: one above the largest level used");
  std::string ht_in;
  c_ht->add_option("term", ht_in)->required();
  c_ht->callback([&] { emit_number("height", static_cast<std::uint64_t>(ht(ord::parse(ht_in, sys())))); });

  // check
  auto* c_check = app.add_subcommand("check", "run the exhaustive property suites");
  SuiteOptions sopt;
  std::vector<std::string> suites{"all"};
  bool list_only = false;
  c_check->add_option("--suite", suites, "property ids to run, or all")->delimiter(',');
  c_check->add_option("--max-norm", sopt.max_norm, "norm bound of the universe")
      ->envname("ORDCALC_MAX_NORM");
  c_check->add_option("--max-level", sopt.max_level, "level bound of the universe")
      ->envname("ORDCALC_MAX_LEVEL");
  c_check->add_option("--n-cap", sopt.n_cap, "finite parameter bound")
      ->envname("ORDCALC_N_CAP");
  c_check->add_option("--threads", sopt.threads, "worker threads (0: all cores)")
      ->envname("ORDCALC_THREADS");
  c_check->add_option("--max-counterexamples", sopt.max_counterexamples,
                      "counterexamples kept per property");
  c_check->add_flag("--list", list_only, "list property ids and exit");
  c_check->callback([&] {
    if (list_only) {
      for (const auto& id : all_property_ids()) std::cout << id << "\n";
      return;
    }
    std::vector<std::string> ids;
    for (const auto& s : suites) {
      if (s == "all") {
        auto a = all_property_ids();
        ids.insert(ids.end(), a.begin(), a.end());
      } else {
        ids.push_back(s);
      }
    }
    bool ok = true;
    auto reports = run_suite(ids, sopt);
    for (const auto& r : reports) {
      std::cout << report_json(r) << "\n";
      std::fprintf(stderr, "%-28s %s  %10llu instances  %6.2fs\n", r.id.c_str(),
                   r.passed() ? "pass" : "FAIL",
                   static_cast<unsigned long long>(r.instances), r.seconds);
      ok = ok && r.passed();
    }
    if (!ok) rc = 4;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ord::ParseError& e) {
    std::cerr << "parse error at position " << e.pos << ": " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded after " << e.steps_used << " steps, stopped at "
              << e.partial_term << " with index " << e.partial_n << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return rc;
}
