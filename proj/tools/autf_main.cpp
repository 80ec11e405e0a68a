// autf: command-line frontend. Exit codes: 0 success, 1 failed check,
// 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "autf/autf.hpp"
#include "autf/cmetrics.hpp"
#include "autf/eptree.hpp"
#include "autf/errors.hpp"
#include "autf/lab.hpp"
#include "autf/report.hpp"

namespace {

using autf::report::Json;

struct Options {
  std::string format = "text";
  std::string out;
  unsigned jobs = 1;
};

struct Outcome {
  std::string body;
  int code = 0;
};

class Usage : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Header lines for text and CSV; JSON carries the same data as fields.
std::string header(const autf::GeneratorCatalog& cat, const std::string& command) {
  std::string h;
  for (const std::string& line : autf::report::header_lines(cat.convention(), command)) h += line + "\n";
  return h;
}

Json json_envelope(const autf::GeneratorCatalog& cat, const std::string& command, Json payload) {
  payload["command"] = command;
  payload["convention"] = autf::report::to_json(cat.convention());
  return payload;
}

std::string word_or_one(const autf::Word& w) {
  std::string s = autf::format_word(w);
  return s.empty() ? "1" : s;
}

Outcome finish(const Options& o, const autf::GeneratorCatalog& cat, const std::string& command, Json json,
               const std::string& text, const std::string& csv, int code = 0) {
  if (o.format == "json") return {json_envelope(cat, command, std::move(json)).dump(2) + "\n", code};
  if (o.format == "csv") {
    if (csv.empty()) throw Usage("--format csv is not available for this command");
    return {header(cat, command) + csv, code};
  }
  return {header(cat, command) + text, code};
}

Outcome run_eval(const Options& o, const std::string& word, const std::string& view, bool in_f) {
  const auto& cat = autf::default_catalog();
  std::string command = "autf eval " + quoted(word) + (in_f ? " --in-f" : " --view " + view);
  std::ostringstream text;
  Json json;
  if (in_f) {
    autf::Word w = autf::parse_word(word);
    autf::TreePair p = cat.eval_f(w);
    json = autf::report::to_json(p);
    text << "source " << p.source().to_string() << "\ntarget " << p.target().to_string() << "\ncarets "
         << p.carets() << "\n";
  } else if (view == "tree") {
    autf::EPTreePair p = autf::eptree_view(cat.eval(word));
    json = autf::report::to_json(p);
    for (const auto* side : {&p.source, &p.target}) {
      text << (side == &p.source ? "source" : "target") << " window " << side->window << " left "
           << side->left_block.to_string() << " right " << side->right_block.to_string();
      for (const auto& t : side->window_trees) text << " | " << t.to_string();
      text << "\n";
    }
    text << "target_mark " << p.target_mark << "\n";
  } else {
    autf::EPMap g = cat.eval(word);
    json = autf::report::to_json(g);
    autf::Membership m = autf::membership(g);
    text << "M " << g.window() << "\n";
    for (const autf::Point& pt : g.points()) text << "break " << pt.x.to_string() << " " << pt.y.to_string() << "\n";
    text << "in_Fx " << m.in_Fx << "\nin_A " << m.in_A << "\nin_C " << m.in_C << "\n";
  }
  return finish(o, cat, command, json, text.str(), "");
}

Outcome run_metrics(const Options& o, const std::string& word) {
  const auto& cat = autf::default_catalog();
  autf::MetricProfile p = autf::profile(cat, cat.eval(word));
  Json j;
  j["type"] = "metrics";
  j["word"] = word;
  j["a"] = p.a;
  j["b"] = p.b;
  j["c"] = p.c;
  j["projection"] = autf::report::to_json(p.projection);
  j["projection_word"] = word_or_one(autf::normal_form(p.projection));
  j["debris"] = autf::report::to_json(p.debris);
  j["debris_word"] = word_or_one(autf::normal_form(p.debris));
  std::ostringstream text, csv;
  text << "a=" << p.a << " b=" << p.b << " c=" << p.c << "\nprojection " << j["projection_word"].get<std::string>()
       << "\ndebris " << j["debris_word"].get<std::string>() << "\n";
  csv << "a,b,c\n" << p.a << ',' << p.b << ',' << p.c << '\n';
  return finish(o, cat, "autf metrics " + quoted(word), j, text.str(), csv.str());
}

Outcome run_relators(const Options& o, std::vector<std::string> sets) {
  const auto& cat = autf::default_catalog();
  if (sets.empty()) {
    for (const auto& s : autf::relator_catalog()) sets.push_back(s.id);
  }
  std::vector<autf::RelatorResult> all;
  std::string command = "autf relators";
  for (const std::string& id : sets) {
    command += " " + id;
    auto rs = autf::relator_suite(cat, id);
    all.insert(all.end(), rs.begin(), rs.end());
  }
  bool ok = true;
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& r : all) {
    ok = ok && r.pass;
    Json e;
    e["set"] = r.set;
    e["relator"] = r.name;
    e["text"] = r.text;
    e["rhs"] = r.rhs;
    e["status"] = r.pass ? "pass" : "fail";
    e["witness_word"] = r.witness;
    arr.push_back(e);
    text << r.set << "  " << r.name << "  " << (r.pass ? "PASS" : "FAIL");
    if (!r.pass) text << "  computed: " << r.witness;
    text << "\n";
  }
  Json j;
  j["type"] = "relators";
  j["results"] = arr;
  j["all_pass"] = ok;
  return finish(o, cat, command, j, text.str(), autf::report::relators_csv(all), ok ? 0 : 1);
}

Outcome run_rn(const Options& o, int n_max) {
  const auto& cat = autf::default_catalog();
  auto rows = autf::rn_sweep(cat, n_max, o.jobs);
  bool ok = true;
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& r : rows) {
    ok = ok && (r.n == 0 || r.carets >= static_cast<std::int64_t>(r.n) * r.n);
    arr.push_back({{"n", r.n},
                   {"word_length_bound", r.word_length_bound},
                   {"carets", r.carets},
                   {"ratio_num", r.ratio_num},
                   {"ratio_den", r.ratio_den}});
    text << "n=" << r.n << " length<=" << r.word_length_bound << " carets=" << r.carets << " carets/n^2="
         << r.ratio_num << "/" << r.ratio_den << "\n";
  }
  Json j;
  j["type"] = "rn_sweep";
  j["rows"] = arr;
  return finish(o, cat, "autf rn --n-max " + std::to_string(n_max), j, text.str(), autf::report::sweep_csv(rows),
                ok ? 0 : 1);
}

Outcome run_ball(const Options& o, int radius, const std::string& dump) {
  const auto& cat = autf::default_catalog();
  autf::BallTable ball = autf::bfs_ball(cat, radius, o.jobs);
  if (!dump.empty()) {
    std::ofstream f(dump);
    if (!f) throw Usage("cannot open " + dump);
    for (std::size_t i = 0; i < ball.entries().size(); ++i) {
      Json e;
      e["index"] = i;
      e["length"] = ball.entries()[i].length;
      e["word"] = word_or_one(ball.word(i));
      e["element"] = autf::report::to_json(ball.entries()[i].element);
      f << e.dump() << "\n";
    }
  }
  Json j;
  j["type"] = "ball";
  j["radius"] = radius;
  j["sphere_sizes"] = ball.sphere_sizes();
  j["elements"] = ball.entries().size();
  std::ostringstream text;
  for (std::size_t r = 0; r < ball.sphere_sizes().size(); ++r) text << "radius " << r << ": " << ball.sphere_sizes()[r] << "\n";
  text << "elements " << ball.entries().size() << "\n";
  return finish(o, cat, "autf ball --radius " + std::to_string(radius), j, text.str(),
                autf::report::ball_csv(ball.sphere_sizes()));
}

Outcome run_audit(const Options& o, int radius) {
  const auto& cat = autf::default_catalog();
  autf::AuditReport r = autf::ball_audit(cat, radius, o.jobs);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"radius", row.radius},
                    {"elements", row.elements},
                    {"max_a", row.max_a},
                    {"max_c", row.max_c},
                    {"max_b", row.max_b},
                    {"K_estimate_num", row.k_num},
                    {"K_estimate_den", row.k_den}});
  }
  Json j;
  j["type"] = "audit";
  j["radius"] = r.radius;
  j["sphere_sizes"] = r.sphere_sizes;
  j["rows"] = rows;
  j["growth_violations"] = r.growth_violations;
  j["step_checks"] = r.step_checks;
  j["step_violations"] = r.step_violations;
  j["w_steps"] = r.w_steps;
  j["w_steps_c_changed"] = r.w_steps_c_changed;
  j["exactness_mismatches"] = r.exactness_mismatches;
  j["reconstruction_failures"] = r.reconstruction_failures;
  j["fx_elements"] = r.fx_elements;
  j["fx_bound_violations"] = r.fx_bound_violations;
  j["examples"] = r.examples;
  j["pass"] = r.pass();
  std::ostringstream text;
  text << autf::report::audit_csv(r);
  text << "growth_violations " << r.growth_violations << "\nstep_checks " << r.step_checks << "\nstep_violations "
       << r.step_violations << "\nw_steps " << r.w_steps << " (c changed on " << r.w_steps_c_changed
       << ")\nexactness_mismatches " << r.exactness_mismatches << "\nreconstruction_failures "
       << r.reconstruction_failures << "\nfx_elements " << r.fx_elements << "\nfx_bound_violations "
       << r.fx_bound_violations << "\n";
  for (const auto& e : r.examples) text << "violation: " << e << "\n";
  text << (r.pass() ? "PASS" : "FAIL") << "\n";
  return finish(o, cat, "autf audit --radius " + std::to_string(radius), j, text.str(), autf::report::audit_csv(r),
                r.pass() ? 0 : 1);
}

Outcome run_dot(const std::string& word, bool in_f) {
  const auto& cat = autf::default_catalog();
  std::string body = in_f ? autf::report::dot(cat.eval_f(autf::parse_word(word)))
                          : autf::report::dot(autf::eptree_view(cat.eval(word)));
  std::string h = "// command: autf dot " + quoted(word) + (in_f ? " --in-f" : "") +
                  "\n// convention: " + cat.convention().describe() + "\n";
  return {h + body, 0};
}

Outcome run_actions(const Options& o, const std::string& family) {
  const auto& cat = autf::default_catalog();
  auto rows = autf::derive_action_words(cat, family);
  bool ok = true;
  Json arr = Json::array();
  std::ostringstream text, csv;
  csv << "lhs,derived,printed,round_trip,printed_matches\n";
  for (const auto& r : rows) {
    ok = ok && r.round_trip;
    arr.push_back({{"lhs", r.lhs},
                   {"derived", r.derived},
                   {"printed", r.printed},
                   {"round_trip", r.round_trip},
                   {"printed_matches", r.printed_matches}});
    text << r.lhs << " = " << r.derived;
    if (!r.printed.empty()) text << "  [printed " << (r.printed_matches ? "matches" : "differs") << "]";
    text << "\n";
    csv << r.lhs << ',' << r.derived << ',' << r.printed << ',' << r.round_trip << ',' << r.printed_matches << '\n';
  }
  Json j;
  j["type"] = "actions";
  j["family"] = family;
  j["rows"] = arr;
  return finish(o, cat, "autf actions " + family, j, text.str(), csv.str(), ok ? 0 : 1);
}

Outcome run_calibrate(const Options& o, const std::string& gate_name) {
  const auto& cat = autf::default_catalog();
  autf::Gate gate = gate_name == "printed" ? autf::Gate::printed : autf::Gate::corrected;
  autf::CalibrationResult res = autf::calibrate_search(gate);
  Json reports = Json::array();
  for (const auto& r : res.reports) {
    reports.push_back({{"convention", autf::report::to_json(r.convention)},
                       {"f1", r.f1},
                       {"f2", r.f2},
                       {"x1_support", r.x1_support},
                       {"action_words", r.action_words},
                       {"survives", r.survives()}});
  }
  Json j;
  j["type"] = "calibration";
  j["gate"] = gate_name;
  j["reports"] = reports;
  j["survivors"] = res.survivors.size();
  return finish(o, cat, "autf calibrate --gate " + gate_name, j, res.describe(), "",
                res.survivors.size() == 1 ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiments with Thompson's groups F, T and Aut+F", "autf"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--out", opt.out, "Write output to FILE");
  app.add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)");

  std::string word, view = "map", dump, family, gate = "corrected";
  bool in_f = false;
  int n_max = 16, radius = 6;
  std::vector<std::string> sets;

  auto* eval = app.add_subcommand("eval", "Evaluate a word");
  eval->add_option("word", word)->required();
  eval->add_option("--view", view, "map or tree")->check(CLI::IsMember({"map", "tree"}));
  eval->add_flag("--in-f", in_f, "Evaluate over {x0, x1} as a tree pair on [0,1]");
  auto* metrics = app.add_subcommand("metrics", "Debris profile (a, b, c) of an element of C");
  metrics->add_option("word", word)->required();
  auto* relators = app.add_subcommand("relators", "Check relator sets");
  relators->add_option("sets", sets, "Set ids (default: all)");
  auto* rn = app.add_subcommand("rn", "r_n distortion sweep");
  rn->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  auto* ball = app.add_subcommand("ball", "Breadth-first ball in C");
  ball->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  ball->add_option("--dump", dump, "Write elements as JSON lines to FILE");
  auto* audit = app.add_subcommand("audit", "Metric inequality audit over the ball");
  audit->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  auto* dot = app.add_subcommand("dot", "DOT export of the diagram of a word");
  dot->add_option("word", word)->required();
  dot->add_flag("--in-f", in_f, "Draw the finite tree pair on [0,1]");
  auto* actions = app.add_subcommand("actions", "Derived conjugation actions on x0, x1");
  actions->add_option("family", family, "y, z or w")->required();
  auto* calibrate = app.add_subcommand("calibrate", "Convention search");
  calibrate->add_option("--gate", gate)->check(CLI::IsMember({"printed", "corrected"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Outcome result;
  try {
    if (*eval) result = run_eval(opt, word, view, in_f);
    else if (*metrics) result = run_metrics(opt, word);
    else if (*relators) result = run_relators(opt, sets);
    else if (*rn) result = run_rn(opt, n_max);
    else if (*ball) result = run_ball(opt, radius, dump);
    else if (*audit) result = run_audit(opt, radius);
    else if (*dot) result = run_dot(word, in_f);
    else if (*actions) result = run_actions(opt, family);
    else if (*calibrate) result = run_calibrate(opt, gate);
  } catch (const Usage& e) {
    std::cerr << "autf: " << e.what() << "\n";
    return 2;
  } catch (const autf::ParseError& e) {
    std::cerr << "autf: parse error: " << e.what() << "\n";
    return 2;
  } catch (const autf::UnknownName& e) {
    std::cerr << "autf: " << e.what() << "\n";
    return 2;
  } catch (const autf::MembershipError& e) {
    std::cerr << "autf: " << e.what() << "\n";
    return 2;
  } catch (const autf::BudgetExceeded& e) {
    std::cerr << "autf: " << e.what() << " (sphere sizes:";
    for (std::size_t s : e.partial().sphere_sizes()) std::cerr << " " << s;
    std::cerr << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "autf: " << e.what() << "\n";
    return 1;
  }

  if (opt.out.empty()) {
    std::cout << result.body;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "autf: cannot open " << opt.out << "\n";
      return 2;
    }
    f << result.body;
  }
  return result.code;
}
