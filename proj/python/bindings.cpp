#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "autf/autf.hpp"
#include "autf/cmetrics.hpp"
#include "autf/eptree.hpp"
#include "autf/errors.hpp"
#include "autf/lab.hpp"
#include "autf/report.hpp"

namespace py = pybind11;
using namespace autf;

namespace {

const GeneratorCatalog& cat() { return default_catalog(); }

std::string word_text(const Word& w) {
  std::string s = format_word(w);
  return s.empty() ? "1" : s;
}

py::dict profile_dict(const MetricProfile& p) {
  py::dict d;
  d["a"] = p.a;
  d["b"] = p.b;
  d["c"] = p.c;
  d["projection"] = word_text(normal_form(p.projection));
  d["debris"] = word_text(normal_form(p.debris));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in Thompson's groups F, T and Aut+F";

  static py::exception<Error> base(m, "AutfError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidPair>(m, "InvalidPair", base.ptr());
  py::register_exception<InvalidMap>(m, "InvalidMap", base.ptr());
  py::register_exception<MembershipError>(m, "MembershipError", base.ptr());
  py::register_exception<UnknownName>(m, "UnknownName", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<Convention>(m, "Convention")
      .def_readonly("x0_flipped", &Convention::x0_flipped)
      .def_readonly("phi_orientation", &Convention::phi_orientation)
      .def_property_readonly("y_side",
                             [](const Convention& c) { return c.y_side == Side::positive ? "positive" : "negative"; })
      .def("describe", &Convention::describe)
      .def("__repr__", &Convention::describe);

  py::class_<TreePair>(m, "TreePair")
      .def(py::init<>())
      .def_property_readonly("source", [](const TreePair& p) { return p.source().to_string(); })
      .def_property_readonly("target", [](const TreePair& p) { return p.target().to_string(); })
      .def_property_readonly("carets", &TreePair::carets)
      .def("normal_form", [](const TreePair& p) { return word_text(normal_form(p)); })
      .def("to_json", [](const TreePair& p) { return report::to_json(p).dump(); })
      .def("__mul__", [](const TreePair& p, const TreePair& q) { return multiply(p, q); })
      .def("inverse", [](const TreePair& p) { return invert(p); })
      .def("__eq__", [](const TreePair& p, const TreePair& q) { return p == q; })
      .def("__hash__", &TreePair::hash)
      .def("__repr__", &TreePair::to_string);

  py::class_<EPMap>(m, "EPMap")
      .def(py::init<>())
      .def_property_readonly("window", &EPMap::window)
      .def_property_readonly("breaks",
                             [](const EPMap& f) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const Point& p : f.points()) out.emplace_back(p.x.to_string(), p.y.to_string());
                               return out;
                             })
      .def("__call__", [](const EPMap& f, const std::string& x) { return f(Dyadic::parse(x)).to_string(); })
      .def("is_identity", &EPMap::is_identity)
      .def("inverse", [](const EPMap& f) { return invert(f); })
      .def("__mul__", [](const EPMap& f, const EPMap& g) { return compose(f, g); })
      .def("__eq__", [](const EPMap& f, const EPMap& g) { return f == g; })
      .def("__hash__", &EPMap::hash)
      .def("to_json", [](const EPMap& f) { return report::to_json(f).dump(); })
      .def_static("from_json", [](const std::string& s) { return report::epmap_from_json(report::Json::parse(s)); })
      .def("tree_json", [](const EPMap& f) { return report::to_json(eptree_view(f)).dump(); })
      .def("dot", [](const EPMap& f) { return report::dot(eptree_view(f)); });

  m.def("convention", [] { return cat().convention(); });
  m.def("eval", [](const std::string& w) { return cat().eval(w); }, py::arg("word"));
  m.def("eval_f", [](const std::string& w) { return cat().eval_f(parse_word(w)); }, py::arg("word"));
  m.def("tree_route", [](const std::string& w) { return eptree_to_map(ep_eval(cat(), parse_word(w))); },
        py::arg("word"), "Evaluates a word on eventually periodic diagrams");
  m.def("extract", [](const EPMap& g) { return cat().extract(g); });
  m.def("embed", [](const TreePair& f) { return cat().embed(f); });
  m.def("sigma", &sigma);
  m.def("membership", [](const EPMap& g) {
    Membership mm = membership(g);
    py::dict d;
    d["in_Fx"] = mm.in_Fx;
    d["in_A"] = mm.in_A;
    d["in_C"] = mm.in_C;
    return d;
  });
  m.def("profile", [](const EPMap& g) { return profile_dict(profile(cat(), g)); });

  m.def("relator_sets", [] {
    std::vector<std::string> ids;
    for (const RelatorSet& s : relator_catalog()) ids.push_back(s.id);
    return ids;
  });
  m.def("relator_suite", [](const std::string& id) {
    py::list out;
    for (const RelatorResult& r : relator_suite(cat(), id)) {
      py::dict d;
      d["set"] = r.set;
      d["relator"] = r.name;
      d["text"] = r.text;
      d["rhs"] = r.rhs;
      d["pass"] = r.pass;
      d["witness"] = r.witness;
      out.append(d);
    }
    return out;
  });
  m.def(
      "rn_sweep",
      [](int n_max, unsigned jobs) {
        py::list out;
        for (const DistortionRow& r : rn_sweep(cat(), n_max, jobs)) {
          py::dict d;
          d["n"] = r.n;
          d["word_length_bound"] = r.word_length_bound;
          d["carets"] = r.carets;
          d["ratio_num"] = r.ratio_num;
          d["ratio_den"] = r.ratio_den;
          out.append(d);
        }
        return out;
      },
      py::arg("n_max"), py::arg("jobs") = 1);
  m.def("undistortion_check", [](int radius) {
    UndistortionReport r = undistortion_check(cat(), radius);
    py::dict d;
    d["elements"] = r.elements;
    d["profile_violations"] = r.profile_violations;
    d["word_image_violations"] = r.word_image_violations;
    d["pass"] = r.pass();
    return d;
  });
  m.def("derive_action_words", [](const std::string& family) {
    py::list out;
    for (const ActionRow& r : derive_action_words(cat(), family)) {
      py::dict d;
      d["lhs"] = r.lhs;
      d["derived"] = r.derived;
      d["printed"] = r.printed;
      d["round_trip"] = r.round_trip;
      d["printed_matches"] = r.printed_matches;
      out.append(d);
    }
    return out;
  });
  m.def(
      "sphere_sizes",
      [](int radius, unsigned jobs) {
        py::gil_scoped_release release;
        return bfs_ball(cat(), radius, jobs).sphere_sizes();
      },
      py::arg("radius"), py::arg("jobs") = 1);
  m.def(
      "ball_audit",
      [](int radius, unsigned jobs) {
        AuditReport r;
        {
          py::gil_scoped_release release;
          r = ball_audit(cat(), radius, jobs);
        }
        py::dict d;
        d["sphere_sizes"] = r.sphere_sizes;
        d["csv"] = report::audit_csv(r);
        d["step_checks"] = r.step_checks;
        d["step_violations"] = r.step_violations;
        d["growth_violations"] = r.growth_violations;
        d["exactness_mismatches"] = r.exactness_mismatches;
        d["reconstruction_failures"] = r.reconstruction_failures;
        d["fx_bound_violations"] = r.fx_bound_violations;
        d["K"] = std::make_pair(r.rows.back().k_num, r.rows.back().k_den);
        d["pass"] = r.pass();
        return d;
      },
      py::arg("radius"), py::arg("jobs") = 1);
  m.def("calibration_survivors", [](bool printed) {
    return calibrate_search(printed ? Gate::printed : Gate::corrected).survivors;
  }, py::arg("printed") = false);
}
