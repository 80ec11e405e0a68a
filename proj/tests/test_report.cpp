#include <doctest.h>

#include <random>

#include "autf/errors.hpp"
#include "autf/report.hpp"
#include "test_support.hpp"

using namespace autf;

TEST_CASE("json round trips") {
  const GeneratorCatalog& cat = default_catalog();
  std::mt19937_64 rng(71);
  for (int i = 0; i < 100; ++i) {
    EPMap g = cat.eval(test::random_aut_word(rng, 6));
    report::Json j = report::to_json(g);
    CHECK(j["type"] == "epmap");
    CHECK(j["M"] == g.window());
    CHECK(report::epmap_from_json(report::Json::parse(j.dump())) == g);
    EPTreePair v = eptree_view(g);
    CHECK(report::eptreepair_from_json(report::Json::parse(report::to_json(v).dump())) == v);
  }
  TreePair x1 = cat.f_generator(1);
  CHECK(report::treepair_from_json(report::to_json(x1)) == x1);
  PLMap01 f = tree_to_map01(x1);
  CHECK(report::plmap01_from_json(report::to_json(f)) == f);

  report::Json x0 = report::to_json(cat.generator(Gen::x0));
  CHECK(x0.dump() == R"({"type":"epmap","M":0,"breaks":[["-1","0"],["1","2"]]})");

  CHECK_THROWS_AS(report::epmap_from_json(report::Json::parse(R"({"type":"plmap01"})")), ParseError);
  CHECK_THROWS_AS(report::epmap_from_json(report::Json::parse(R"({"type":"epmap","M":0,"breaks":[[0,1]]})")),
                  ParseError);
  CHECK_THROWS_AS(report::epmap_from_json(report::Json::parse(R"({"type":"epmap","M":0,"breaks":[["0","1"]]})")),
                  InvalidMap);
}

TEST_CASE("csv tables") {
  std::vector<DistortionRow> rows{{0, 0, 0, 0, 1}, {4, 12, 31, 31, 16}};
  CHECK(report::sweep_csv(rows) == "n,word_length_bound,carets,ratio_num,ratio_den\n0,0,0,0,1\n4,12,31,31,16\n");
  CHECK(report::ball_csv({1, 8}) == "radius,sphere_size\n0,1\n1,8\n");
  RelatorResult r{"C_SET", "[x0,w0]", "[x0, w0]", "", true, ""};
  RelatorResult s{"T_SET", "t3", "x", "", false, "x1^-1"};
  CHECK(report::relators_csv({r, s}) ==
        "set,relator,status,witness_word\nC_SET,\"[x0,w0]\",pass,\nT_SET,t3,fail,x1^-1\n");
  AuditReport a;
  a.rows = {{0, 1, 0, 0, 0, 0, 1}, {1, 9, 3, 3, 3, 5, 1}};
  CHECK(report::audit_csv(a) ==
        "radius,elements,max_a,max_c,max_b,K_estimate_num,K_estimate_den\n0,1,0,0,0,0,1\n1,9,3,3,3,5,1\n");
  auto h = report::header_lines(Convention{}, "autf rn");
  REQUIRE(h.size() == 2);
  CHECK(h[0] == "# command: autf rn");
  CHECK(h[1].rfind("# convention: ", 0) == 0);
}

TEST_CASE("dot export") {
  const GeneratorCatalog& cat = default_catalog();
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
  };
  std::string id = report::dot(eptree_view(EPMap()));
  CHECK(count(id, "doublecircle") == 2);
  CHECK(count(id, "shape=point") == 0);
  CHECK(count(id, "repeats for all k\"") + count(id, "repeats for all k,") == 2);

  std::string w0 = report::dot(eptree_view(cat.generator(Gen::w0)));
  CHECK(count(w0, "cluster_source_block") == 1);
  CHECK(count(w0, "repeats for all k") == 2);
  CHECK(count(w0, "shape=point") == 4);

  std::string x0 = report::dot(cat.f_generator(0));
  CHECK(count(x0, "shape=point") == 4);
  CHECK(count(x0, "doublecircle") == 0);

  std::string y0 = report::dot(eptree_view(cat.generator(Gen::y0)));
  CHECK(count(y0, "repeats for all k <") == 2);
  CHECK(count(y0, "repeats for all k >=") == 2);
  CHECK(count(y0, "doublecircle") == 2);
}
