#pragma once

// Serialization shared by the command-line tool, the acceptance harness and
// the Python module: JSON for maps and diagrams, CSV tables, DOT export.
//
// EPMap JSON:      {"type":"epmap","M":int,"breaks":[["x","y"],...]}
// PLMap01 JSON:    {"type":"plmap01","breaks":[["x","y"],...]}
// TreePair JSON:   {"type":"treepair","source":"(L L)","target":"(L L)"}
// EPTreePair JSON: {"type":"eptreepair","source":EPTree,"target":EPTree,
//                   "source_mark":0,"target_mark":int}
// EPTree JSON:     {"window":int,"left_block":text,"right_block":text,
//                   "window_trees":[text,...]}
// Coordinates use the dyadic text form; trees the parenthesized form.

#include <string>
#include <vector>

#include <json.hpp>

#include "autf/autf.hpp"
#include "autf/cmetrics.hpp"
#include "autf/eptree.hpp"
#include "autf/lab.hpp"
#include "autf/plmaps.hpp"

namespace autf::report {

using Json = nlohmann::ordered_json;

Json to_json(const EPMap& f);
Json to_json(const PLMap01& f);
Json to_json(const TreePair& p);
Json to_json(const EPTree& t);
Json to_json(const EPTreePair& p);
Json to_json(const Convention& c);

// Throw ParseError on schema violations; the map constructors validate.
EPMap epmap_from_json(const Json& j);
PLMap01 plmap01_from_json(const Json& j);
TreePair treepair_from_json(const Json& j);
EPTreePair eptreepair_from_json(const Json& j);

// Lines "# key: value" prefixed to every text and CSV output.
std::vector<std::string> header_lines(const Convention& c, const std::string& command);

std::string sweep_csv(const std::vector<DistortionRow>& rows);
std::string audit_csv(const AuditReport& r);
std::string relators_csv(const std::vector<RelatorResult>& rs);
std::string ball_csv(const std::vector<std::size_t>& sphere_sizes);

// DOT digraph with one cluster per tree. Marked leaves are double circles;
// a periodic block is drawn once with a repetition annotation.
std::string dot(const EPTreePair& p);
// Finite diagram of an element of F on [0,1]; no marks.
std::string dot(const TreePair& p);

}  // namespace autf::report
