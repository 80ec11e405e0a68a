#include "autf/lab.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "autf/errors.hpp"

namespace autf {

namespace {

std::string word_text(const Word& w) {
  std::string s = format_word(w);
  return s.empty() ? "1" : s;
}

std::vector<RelatorEntry> f_relators(char letter) {
  std::string a0 = std::string(1, letter) + "0", a1 = std::string(1, letter) + "1";
  return {{"f1", "[" + a0 + " " + a1 + "^-1, " + a0 + "^-1 " + a1 + " " + a0 + "]", ""},
          {"f2", "[" + a0 + " " + a1 + "^-1, " + a0 + "^-2 " + a1 + " " + a0 + "^2]", ""}};
}

std::vector<RelatorSet> build_catalog() {
  std::vector<RelatorSet> sets;
  sets.push_back({"F_X", false, f_relators('x')});
  sets.push_back({"F_Y", false, f_relators('y')});
  sets.push_back({"F_Z", false, f_relators('z')});
  sets.push_back({"F_W", false, f_relators('w')});
  sets.push_back({"COMM_YZ",
                  false,
                  {{"[y0,z0]", "[y0, z0]", ""},
                   {"[y0,z1]", "[y0, z1]", ""},
                   {"[y1,z0]", "[y1, z0]", ""},
                   {"[y1,z1]", "[y1, z1]", ""}}});
  RelatorSet c{"C_SET", false, {{"[x0,w0]", "[x0, w0]", ""}, {"[x0,w1]", "[x0, w1]", ""}}};
  for (const ActionWord& a : c_action_words()) c.entries.push_back({a.lhs, a.lhs, a.printed});
  sets.push_back(std::move(c));
  RelatorSet b{"B1_SET", false, {}};
  for (const ActionWord& a : b1_action_words()) b.entries.push_back({a.lhs, a.lhs, a.printed});
  sets.push_back(std::move(b));
  sets.push_back({"T_SET",
                  true,
                  {{"t1", "x1^-1 t x0^2 x1^-1 x0^-1 t", ""},
                   {"t2", "x1^-1 t x0^2 x1^-1 t x0 t x0", ""},
                   {"t3", "x1^-2 t x0^2 x1^-1 x0^-1 t", ""},
                   {"t4", "t^2", ""},
                   {"(t x0)^3", "t x0 t x0 t x0", ""}}});
  sets.push_back({"CROSS",
                  false,
                  {{"w0 x1 w0^-1", "w0 x1 w0^-1", "y0 x1 y0^-1"},
                   {"w1 x1 w1^-1", "w1 x1 w1^-1", "y1 x1 y1^-1"},
                   {"[z0,x1]", "[z0, x1]", ""},
                   {"[z1,x1]", "[z1, x1]", ""},
                   {"w0 = y0 z0", "w0", "y0 z0"},
                   {"w1 = y1 z1", "w1", "y1 z1"}}});
  return sets;
}

std::int64_t ceil_sqrt(std::int64_t b) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(b)));
  while (r * r < b) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= b) --r;
  return r;
}

// p1/q1 > p2/q2 with positive denominators.
bool ratio_greater(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
  return static_cast<__int128>(p1) * q2 > static_cast<__int128>(p2) * q1;
}

std::string describe_failure(const GeneratorCatalog& cat, const EPMap& lhs, const EPMap& rhs) {
  if (membership(lhs).in_Fx) return word_text(normal_form(cat.extract(lhs)));
  EPMap diff = compose(lhs, invert(rhs));
  Membership m = membership(diff);
  return std::string("lhs rhs^-1 outside F_x (in A: ") + (m.in_A ? "yes" : "no") +
         ", in C: " + (m.in_C ? "yes" : "no") + ")";
}

}  // namespace

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  auto workers = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = n * w / workers; i < n * (w + 1) / workers; ++i) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

const std::vector<RelatorSet>& relator_catalog() {
  static const std::vector<RelatorSet> sets = build_catalog();
  return sets;
}

const RelatorSet& relator_set(std::string_view id) {
  for (const RelatorSet& s : relator_catalog()) {
    if (s.id == id) return s;
  }
  throw UnknownName("unknown relator set: " + std::string(id));
}

std::vector<RelatorResult> relator_suite(const GeneratorCatalog& cat, std::string_view set_id) {
  const RelatorSet& set = relator_set(set_id);
  std::vector<RelatorResult> out;
  for (const RelatorEntry& e : set.entries) {
    RelatorResult r{set.id, e.name, e.text, e.rhs, false, ""};
    if (set.in_T) {
      RotatedTreePair lhs = eval_t_word(e.text);
      RotatedTreePair rhs = e.rhs.empty() ? RotatedTreePair() : eval_t_word(e.rhs);
      r.pass = lhs == rhs;
      if (!r.pass) {
        r.witness = t_is_in_F(lhs) ? word_text(normal_form(to_tree_pair(lhs))) : lhs.to_string();
      }
    } else {
      EPMap lhs = cat.eval(e.text);
      EPMap rhs = e.rhs.empty() ? EPMap() : cat.eval(e.rhs);
      r.pass = lhs == rhs;
      if (!r.pass) r.witness = describe_failure(cat, lhs, rhs);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<DistortionRow> rn_sweep(const GeneratorCatalog& cat, int n_max, unsigned jobs) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  std::vector<DistortionRow> rows(static_cast<std::size_t>(n_max) + 1);
  EPMap w0 = cat.generator(Gen::w0), x1 = cat.generator(Gen::x1);
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    int n = static_cast<int>(i);
    EPMap r = compose(compose(power(w0, -n), power(x1, n)), power(w0, n));
    if (!membership(r).in_Fx) throw std::logic_error("r_n left F_x at n = " + std::to_string(n));
    DistortionRow row;
    row.n = n;
    row.word_length_bound = 3LL * n;
    row.carets = static_cast<std::int64_t>(cat.extract(r).carets());
    if (n > 0) {
      std::int64_t den = static_cast<std::int64_t>(n) * n;
      std::int64_t g = std::gcd(row.carets, den);
      row.ratio_num = row.carets / g;
      row.ratio_den = den / g;
    }
    rows[i] = row;
  });
  return rows;
}

UndistortionReport undistortion_check(const GeneratorCatalog& cat, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  const std::vector<Letter> steps{{Gen::x0, 1}, {Gen::x0, -1}, {Gen::x1, 1}, {Gen::x1, -1}};
  std::vector<TreePair> step_pairs;
  for (const Letter& s : steps) step_pairs.push_back(power(cat.f_generator(s.gen == Gen::x0 ? 0 : 1), s.exponent));

  struct Node {
    TreePair element;
    Word word;
  };
  std::vector<Node> nodes{{TreePair(), {}}};
  std::unordered_map<TreePair, std::size_t, TreePairHash> seen{{TreePair(), 0}};
  std::size_t begin = 0;
  for (int r = 1; r <= radius; ++r) {
    std::size_t end = nodes.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t s = 0; s < steps.size(); ++s) {
        TreePair next = multiply(nodes[i].element, step_pairs[s]);
        if (seen.count(next)) continue;
        Word w = nodes[i].word;
        w.push_back(steps[s]);
        seen.emplace(next, nodes.size());
        nodes.push_back({std::move(next), std::move(w)});
      }
    }
    begin = end;
  }

  UndistortionReport rep;
  rep.radius = radius;
  rep.elements = nodes.size();
  for (const Node& nd : nodes) {
    EPMap lifted = sigma(nd.element);
    MetricProfile p = profile(cat, lifted);
    if (p.a != nd.element.carets() || p.b != 0 || p.c != 0) {
      ++rep.profile_violations;
      if (rep.examples.size() < 5) rep.examples.push_back("profile of sigma(" + word_text(nd.word) + ")");
    }
    Word image = nd.word;
    for (Letter& l : image) l.gen = l.gen == Gen::x0 ? Gen::w0 : Gen::w1;
    if (!(cat.eval(image) == lifted)) {
      ++rep.word_image_violations;
      if (rep.examples.size() < 5) rep.examples.push_back("word image of " + word_text(nd.word));
    }
  }
  return rep;
}

std::vector<ActionRow> derive_action_words(const GeneratorCatalog& cat, std::string_view family) {
  Gen g0, g1;
  const std::vector<ActionWord>* printed = nullptr;
  if (family == "y") {
    g0 = Gen::y0, g1 = Gen::y1, printed = &b1_action_words();
  } else if (family == "z") {
    g0 = Gen::z0, g1 = Gen::z1;
  } else if (family == "w") {
    g0 = Gen::w0, g1 = Gen::w1, printed = &c_action_words();
  } else {
    throw UnknownName("unknown generator family: " + std::string(family));
  }
  std::vector<ActionRow> rows;
  for (Gen g : {g0, g1}) {
    for (int i : {0, 1}) {
      ActionRow row;
      std::string name(gen_name(g));
      row.lhs = name + " x" + std::to_string(i) + " " + name + "^-1";
      TreePair conj = conjugate_F(cat, cat.generator(g), cat.f_generator(i));
      Word nf = normal_form(conj);
      row.derived = word_text(nf);
      row.round_trip = cat.eval_f(nf) == conj;
      if (printed) {
        for (const ActionWord& a : *printed) {
          if (a.lhs != row.lhs) continue;
          row.printed = a.printed;
          row.printed_matches = cat.eval_f(parse_word(a.printed)) == conj;
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

AuditReport ball_audit(const GeneratorCatalog& cat, int radius, unsigned jobs) {
  return ball_audit(cat, bfs_ball(cat, radius, jobs), jobs);
}

AuditReport ball_audit(const GeneratorCatalog& cat, const BallTable& ball, unsigned jobs) {
  const auto& entries = ball.entries();
  const std::size_t n = entries.size();
  const int R = ball.radius();
  std::vector<EPMap> step_maps;
  for (const Letter& s : c_steps()) step_maps.push_back(cat.eval(std::vector<Letter>{s}));

  std::vector<MetricProfile> profiles(n);
  parallel_for(n, jobs, [&](std::size_t i) { profiles[i] = profile(cat, entries[i].element); });

  struct Local {
    bool exact_ok = true, recon_ok = true;
    std::size_t step_checks = 0, w_steps = 0, w_changed = 0;
    std::vector<std::string> step_failures;
  };
  std::vector<Local> local(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    const EPMap& g = entries[i].element;
    const MetricProfile& p = profiles[i];
    Local& out = local[i];
    auto [neg, pos] = pi(g);
    bool trivial = neg.is_identity() && pos.is_identity();
    out.exact_ok = trivial == membership(g).in_Fx;
    out.recon_ok = compose(sigma(p.projection), cat.embed(p.debris)) == g;
    for (std::size_t s = 0; s < step_maps.size(); ++s) {
      const Letter& step = c_steps()[s];
      EPMap h = compose(g, step_maps[s]);
      std::optional<std::size_t> j = ball.find(h);
      StepReport rep = j ? step_check(p, profiles[*j], step) : step_check(p, profile(cat, h), step);
      ++out.step_checks;
      if (step.gen == Gen::w0 || step.gen == Gen::w1) {
        ++out.w_steps;
        if (!rep.c_unchanged) ++out.w_changed;
      }
      for (const Inequality& q : rep.checks) {
        if (!q.holds()) out.step_failures.push_back(q.name + " (" + std::to_string(q.lhs) + " vs " + std::to_string(q.rhs) + ")");
      }
    }
  });

  AuditReport rep;
  rep.radius = R;
  rep.sphere_sizes = ball.sphere_sizes();
  auto note = [&](const std::string& s) {
    if (rep.examples.size() < 10) rep.examples.push_back(s);
  };

  std::vector<AuditRow> rows(static_cast<std::size_t>(R) + 1);
  for (int r = 0; r <= R; ++r) rows[static_cast<std::size_t>(r)].radius = r;
  for (std::size_t i = 0; i < n; ++i) {
    const MetricProfile& p = profiles[i];
    const auto L = static_cast<std::int64_t>(entries[i].length);
    auto a = static_cast<std::int64_t>(p.a), b = static_cast<std::int64_t>(p.b), c = static_cast<std::int64_t>(p.c);
    auto who = [&] { return "g = " + word_text(ball.word(i)); };
    if (a > 3 * L || c > 3 * L || b > 9 * L * L) {
      ++rep.growth_violations;
      note("growth bound fails at " + who());
    }
    AuditRow& row = rows[static_cast<std::size_t>(L)];
    ++row.elements;
    row.max_a = std::max(row.max_a, p.a);
    row.max_b = std::max(row.max_b, p.b);
    row.max_c = std::max(row.max_c, p.c);
    if (L > 0) {
      std::int64_t num = a + c + ceil_sqrt(b);
      if (row.k_num == 0 || ratio_greater(num, L, row.k_num, row.k_den)) {
        std::int64_t g = std::gcd(num, L);
        row.k_num = num / g;
        row.k_den = L / g;
      }
    }
    const Local& loc = local[i];
    if (!loc.exact_ok) {
      ++rep.exactness_mismatches;
      note("pi exactness fails at " + who());
    }
    if (!loc.recon_ok) {
      ++rep.reconstruction_failures;
      note("reconstruction fails at " + who());
    }
    rep.step_checks += loc.step_checks;
    rep.w_steps += loc.w_steps;
    rep.w_steps_c_changed += loc.w_changed;
    rep.step_violations += loc.step_failures.size();
    for (const std::string& f : loc.step_failures) note(f + " at " + who());
  }
  // Rows become cumulative.
  for (std::size_t r = 1; r < rows.size(); ++r) {
    AuditRow& cur = rows[r];
    const AuditRow& prev = rows[r - 1];
    cur.elements += prev.elements;
    cur.max_a = std::max(cur.max_a, prev.max_a);
    cur.max_b = std::max(cur.max_b, prev.max_b);
    cur.max_c = std::max(cur.max_c, prev.max_c);
    if (prev.k_num != 0 && (cur.k_num == 0 || ratio_greater(prev.k_num, prev.k_den, cur.k_num, cur.k_den))) {
      cur.k_num = prev.k_num;
      cur.k_den = prev.k_den;
    }
  }
  rep.rows = rows;

  const AuditRow& last = rows.back();
  for (std::size_t i = 0; i < n; ++i) {
    if (!membership(entries[i].element).in_Fx) continue;
    ++rep.fx_elements;
    const auto L = static_cast<std::int64_t>(entries[i].length);
    auto b = static_cast<std::int64_t>(profiles[i].b);
    if (L > 0 && static_cast<__int128>(b) * last.k_den > static_cast<__int128>(last.k_num) * L * L) {
      ++rep.fx_bound_violations;
      note("carets exceed K L^2 at g = " + word_text(ball.word(i)));
    }
  }
  return rep;
}

}  // namespace autf
