#include "autf/report.hpp"

#include <optional>
#include <sstream>

#include "autf/errors.hpp"

namespace autf::report {

namespace {

Json breaks_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const Point& p : pts) arr.push_back(Json::array({p.x.to_string(), p.y.to_string()}));
  return arr;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError("JSON: " + what, 0);
}

std::vector<Point> breaks_from_json(const Json& j) {
  require(j.contains("breaks") && j["breaks"].is_array(), "missing breaks array");
  std::vector<Point> pts;
  for (const Json& b : j["breaks"]) {
    require(b.is_array() && b.size() == 2 && b[0].is_string() && b[1].is_string(), "break must be [\"x\",\"y\"]");
    pts.push_back({Dyadic::parse(b[0].get<std::string>()), Dyadic::parse(b[1].get<std::string>())});
  }
  return pts;
}

void require_type(const Json& j, const char* type) {
  require(j.is_object() && j.contains("type") && j["type"] == type, std::string("expected type ") + type);
}

std::string tree_field(const Json& j, const char* key) {
  require(j.contains(key) && j[key].is_string(), std::string("missing tree text ") + key);
  return j[key].get<std::string>();
}

EPTree eptree_from_json(const Json& j) {
  require(j.is_object(), "tree must be an object");
  EPTree t;
  require(j.contains("window") && j["window"].is_number_integer(), "missing window");
  t.window = j["window"].get<std::int64_t>();
  t.left_block = BinaryTree::parse(tree_field(j, "left_block"));
  t.right_block = BinaryTree::parse(tree_field(j, "right_block"));
  require(j.contains("window_trees") && j["window_trees"].is_array(), "missing window_trees");
  for (const Json& w : j["window_trees"]) {
    require(w.is_string(), "window tree must be text");
    t.window_trees.push_back(BinaryTree::parse(w.get<std::string>()));
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Emits the caret nodes and leaves of one tree; `mark` is a leaf position.
class DotWriter {
 public:
  explicit DotWriter(std::ostringstream& os) : os_(os) {}

  void tree(const std::string& cluster, const std::string& label, const BinaryTree& t,
            std::optional<std::size_t> mark) {
    os_ << "    subgraph cluster_" << cluster << " {\n      label=\"" << label << "\";\n";
    std::size_t leaf = 0, idx = 0;
    node(cluster, t.depths(), idx, 0, leaf, mark);
    os_ << "    }\n";
  }

 private:
  std::string node(const std::string& cluster, const std::vector<std::uint16_t>& d, std::size_t& idx, int depth,
                   std::size_t& leaf, std::optional<std::size_t> mark) {
    std::string id = cluster + "_" + std::to_string(counter_++);
    if (d[idx] == depth) {
      bool marked = mark && *mark == leaf;
      os_ << "      " << id << " [shape=" << (marked ? "doublecircle" : "circle") << ", label=\"\", width=0.15];\n";
      ++idx;
      ++leaf;
      return id;
    }
    os_ << "      " << id << " [shape=point];\n";
    std::string left = node(cluster, d, idx, depth + 1, leaf, mark);
    std::string right = node(cluster, d, idx, depth + 1, leaf, mark);
    os_ << "      " << id << " -> " << left << ";\n      " << id << " -> " << right << ";\n";
    return id;
  }

  std::ostringstream& os_;
  std::size_t counter_ = 0;
};

std::string interval(std::int64_t k) { return "[" + std::to_string(k) + "," + std::to_string(k + 1) + "]"; }

void dot_eptree(std::ostringstream& os, const std::string& name, const EPTree& t, std::int64_t mark_leaf) {
  auto [mk, mpos] = t.locate(mark_leaf);
  const std::int64_t n = t.window;
  DotWriter w(os);
  os << "  subgraph cluster_" << name << " {\n    label=\"" << name << "\";\n";
  auto mark_note = [&](bool in_block) {
    return in_block ? ", mark in " + interval(mk) : std::string();
  };
  if (n == 0 && t.left_block == t.right_block) {
    w.tree(name + "_block", "block, repeats for all k" + mark_note(true), t.right_block, mpos);
  } else {
    bool in_left = mk < -n, in_right = mk >= n;
    w.tree(name + "_left", "block, repeats for all k < " + std::to_string(-n) + mark_note(in_left), t.left_block,
           in_left ? std::optional<std::size_t>(mpos) : std::nullopt);
    for (std::int64_t k = -n; k < n; ++k) {
      w.tree(name + "_w" + std::to_string(k + n), interval(k), t.at(k),
             mk == k ? std::optional<std::size_t>(mpos) : std::nullopt);
    }
    w.tree(name + "_right", "block, repeats for all k >= " + std::to_string(n) + mark_note(in_right), t.right_block,
           in_right ? std::optional<std::size_t>(mpos) : std::nullopt);
  }
  os << "  }\n";
}

}  // namespace

Json to_json(const EPMap& f) {
  Json j;
  j["type"] = "epmap";
  j["M"] = f.window();
  j["breaks"] = breaks_json(f.points());
  return j;
}

Json to_json(const PLMap01& f) {
  Json j;
  j["type"] = "plmap01";
  j["breaks"] = breaks_json(f.points());
  return j;
}

Json to_json(const TreePair& p) {
  Json j;
  j["type"] = "treepair";
  j["source"] = p.source().to_string();
  j["target"] = p.target().to_string();
  return j;
}

Json to_json(const EPTree& t) {
  Json j;
  j["window"] = t.window;
  j["left_block"] = t.left_block.to_string();
  j["right_block"] = t.right_block.to_string();
  Json w = Json::array();
  for (const BinaryTree& b : t.window_trees) w.push_back(b.to_string());
  j["window_trees"] = w;
  return j;
}

Json to_json(const EPTreePair& p) {
  Json j;
  j["type"] = "eptreepair";
  j["source"] = to_json(p.source);
  j["target"] = to_json(p.target);
  j["source_mark"] = 0;
  j["target_mark"] = p.target_mark;
  return j;
}

Json to_json(const Convention& c) {
  Json j;
  j["x0_flipped"] = c.x0_flipped;
  j["phi_orientation"] = c.phi_orientation;
  j["y_side"] = c.y_side == Side::positive ? "positive" : "negative";
  return j;
}

EPMap epmap_from_json(const Json& j) {
  require_type(j, "epmap");
  require(j.contains("M") && j["M"].is_number_integer(), "missing M");
  return EPMap::from_points(j["M"].get<std::int64_t>(), breaks_from_json(j));
}

PLMap01 plmap01_from_json(const Json& j) {
  require_type(j, "plmap01");
  return PLMap01::from_points(breaks_from_json(j));
}

TreePair treepair_from_json(const Json& j) {
  require_type(j, "treepair");
  return TreePair(BinaryTree::parse(tree_field(j, "source")), BinaryTree::parse(tree_field(j, "target")));
}

EPTreePair eptreepair_from_json(const Json& j) {
  require_type(j, "eptreepair");
  require(j.contains("source") && j.contains("target"), "missing trees");
  require(j.contains("target_mark") && j["target_mark"].is_number_integer(), "missing target_mark");
  require(!j.contains("source_mark") || j["source_mark"] == 0, "source_mark must be 0");
  EPTreePair p;
  p.source = eptree_from_json(j["source"]);
  p.target = eptree_from_json(j["target"]);
  p.target_mark = j["target_mark"].get<std::int64_t>();
  p.validate();
  return p;
}

std::vector<std::string> header_lines(const Convention& c, const std::string& command) {
  return {"# command: " + command, "# convention: " + c.describe()};
}

std::string sweep_csv(const std::vector<DistortionRow>& rows) {
  std::ostringstream os;
  os << "n,word_length_bound,carets,ratio_num,ratio_den\n";
  for (const DistortionRow& r : rows) {
    os << r.n << ',' << r.word_length_bound << ',' << r.carets << ',' << r.ratio_num << ',' << r.ratio_den << '\n';
  }
  return os.str();
}

std::string audit_csv(const AuditReport& r) {
  std::ostringstream os;
  os << "radius,elements,max_a,max_c,max_b,K_estimate_num,K_estimate_den\n";
  for (const AuditRow& row : r.rows) {
    os << row.radius << ',' << row.elements << ',' << row.max_a << ',' << row.max_c << ',' << row.max_b << ','
       << row.k_num << ',' << row.k_den << '\n';
  }
  return os.str();
}

std::string relators_csv(const std::vector<RelatorResult>& rs) {
  std::ostringstream os;
  os << "set,relator,status,witness_word\n";
  for (const RelatorResult& r : rs) {
    os << csv_field(r.set) << ',' << csv_field(r.name) << ',' << (r.pass ? "pass" : "fail") << ','
       << csv_field(r.witness) << '\n';
  }
  return os.str();
}

std::string ball_csv(const std::vector<std::size_t>& sphere_sizes) {
  std::ostringstream os;
  os << "radius,sphere_size\n";
  for (std::size_t r = 0; r < sphere_sizes.size(); ++r) os << r << ',' << sphere_sizes[r] << '\n';
  return os.str();
}

std::string dot(const EPTreePair& p) {
  std::ostringstream os;
  os << "digraph eptreepair {\n  node [fontsize=10];\n";
  dot_eptree(os, "source", p.source, 0);
  dot_eptree(os, "target", p.target, p.target_mark);
  os << "}\n";
  return os.str();
}

std::string dot(const TreePair& p) {
  std::ostringstream os;
  os << "digraph treepair {\n  node [fontsize=10];\n";
  for (const auto& [name, tree] : {std::pair<std::string, const BinaryTree*>{"source", &p.source()},
                                   std::pair<std::string, const BinaryTree*>{"target", &p.target()}}) {
    DotWriter w(os);
    w.tree(name, name, *tree, std::nullopt);
  }
  os << "}\n";
  return os.str();
}

}  // namespace autf::report
