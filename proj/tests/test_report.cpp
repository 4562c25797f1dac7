#include <doctest.h>

#include <regex>

#include "emb6/report.hpp"

using namespace emb6;

namespace {

Manifold s1s2() { return Manifold({"S1xS2", IntMatrix{{0}}}); }
Manifold s3() { return Manifold({"S3", IntMatrix()}); }

}  // namespace

TEST_CASE("invariants files") {
  const auto inv = invariants_from_json(nlohmann::json::parse(R"({"W1":[1],"L1":[1],"W2":[],"L2":[],"delta":[0,0,1,0]})"));
  CHECK(inv.wl.W1.coords == IntVector{1});
  CHECK(inv.delta == LinkClass(0, 0, 1, 0));
  CHECK(invariants_from_json(invariants_to_json(inv)).delta == inv.delta);
  CHECK(invariants_from_json(nlohmann::json::parse(R"({"W1":[],"L1":[],"W2":[],"L2":[]})")).delta.is_trivial());
  CHECK_THROWS_AS(invariants_from_json(nlohmann::json::parse(R"({"W1":[1],"L1":[1],"W2":[]})")), ValidationError);
  CHECK_THROWS_AS(invariants_from_json(nlohmann::json::parse(R"({"W1":[],"L1":[],"W2":[],"L2":[],"delta":[1,0,0,0]})")),
                  ParityError);
}

TEST_CASE("link class arguments") {
  CHECK(parse_link_class("[0,2,1,0]") == LinkClass(0, 2, 1, 0));
  CHECK(parse_link_class("-2,0,3,4") == LinkClass(-2, 0, 3, 4));
  CHECK_THROWS_AS(parse_link_class("[1,0,0,0]"), ParityError);
  CHECK_THROWS_AS(parse_link_class("zero"), ValidationError);
  CHECK_THROWS_AS(parse_link_class("[0,0]"), DimensionError);
}

TEST_CASE("classification report") {
  const WLValue wl{H1Class{{1}}, H1Class{{1}}, H1Class{}, H1Class{}};
  const auto r = make_classification_report(s1s2(), s3(), wl, true, {"a.json", "b.json", "c.json"});
  CHECK(r.stabilizer_generators == std::vector<IntVector>{{0, 2, 1, 0}, {2, 2, 0, 0}});
  CHECK(r.fiber == AbelianGroupShape{2, {2}});
  CHECK(r.pl_fiber == AbelianGroupShape{0, {2}});
  CHECK(r.pl_simplification_holds);

  const auto j = to_json(r);
  CHECK(j.at("fiber").at("free_rank") == 2);
  CHECK(j.at("fiber").at("torsion") == nlohmann::json::array({2}));
  CHECK(j.at("pl").at("fiber").at("torsion") == nlohmann::json::array({2}));
  CHECK(classification_report_from_json(j) == r);
  CHECK(classification_report_from_json(nlohmann::json::parse(j.dump())) == r);

  const std::string text = to_text(r);
  CHECK(text.find("stabilizer generators: (0,2,1,0) (2,2,0,0)") != std::string::npos);
  CHECK(text.find("fiber: Z^2 + Z/2") != std::string::npos);
  CHECK(text.find("PL fiber: Z/2") != std::string::npos);
  CHECK(to_text(classification_report_from_json(j)) == text);
}

TEST_CASE("text and JSON agree on the numbers they carry") {
  const WLValue wl{H1Class{{0}}, H1Class{{3}}, H1Class{{1}}, H1Class{{-2}}};
  const auto r = make_classification_report(s1s2(), s1s2(), wl, true);
  const auto j = to_json(r);
  // every generator printed in the text appears in the JSON and vice versa
  const std::string text = to_text(r);
  std::vector<std::string> text_gens;
  const std::regex line_re("^stabilizer generators: (.*)$");
  std::smatch m;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    if (std::regex_match(line, m, line_re)) {
      const std::regex vec_re("\\(([-0-9,]*)\\)");
      const std::string body = m[1];
      for (auto it = std::sregex_iterator(body.begin(), body.end(), vec_re); it != std::sregex_iterator(); ++it)
        text_gens.push_back((*it)[1]);
    }
  std::vector<std::string> json_gens;
  for (const auto& g : j.at("stabilizer_generators")) {
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i].get<long>());
    json_gens.push_back(s);
  }
  CHECK(text_gens == json_gens);
  CHECK(text.find("fiber: " + shape_from_json(j.at("fiber")).to_string()) != std::string::npos);
}

TEST_CASE("isotopy report round trip") {
  const Manifold m1 = s1s2();
  const EmbeddingInvariants f{{H1Class{{0}}, H1Class{{1}}, H1Class{}, H1Class{}}, LinkClass()};
  const auto yes = make_isotopy_report(decide_isotopy(m1, s3(), f, act(f, LinkClass(0, 2, 0, 0))));
  CHECK(yes.isotopic);
  CHECK(isotopy_report_from_json(to_json(yes)) == yes);
  CHECK(to_text(yes).find("certificate: (1,0)") != std::string::npos);

  const EmbeddingInvariants g{{H1Class{{1}}, H1Class{{1}}, H1Class{}, H1Class{}}, LinkClass()};
  const auto no = make_isotopy_report(decide_isotopy(m1, s3(), g, act(g, LinkClass(0, 0, 1, 0))));
  CHECK_FALSE(no.isotopic);
  CHECK_FALSE(no.certificate.has_value());
  CHECK(isotopy_report_from_json(to_json(no)) == no);
}

TEST_CASE("homology and diagram reports round trip") {
  const auto h = make_homology_report(Manifold({"Q", IntMatrix{{0, 2}, {2, 0}}}));
  CHECK(homology_report_from_json(to_json(h)) == h);
  const auto e = make_homology_report(s3());
  CHECK(homology_report_from_json(to_json(e)) == e);

  const auto d = make_diagram_report(parse_diagram("components 2\nframings 0 0\nx 1 2 +\nx 2 1 +\n"), "hopf");
  CHECK(d.surgery.linking == IntMatrix{{0, 1}, {1, 0}});
  CHECK(d.surgery.h1.is_trivial());
  CHECK(diagram_report_from_json(to_json(d)) == d);
}

TEST_CASE("demos pass") {
  for (const char* name : {"cor1", "cor2", "examples"}) {
    const auto r = run_demo(name);
    CHECK_MESSAGE(r.all_passed(), to_text(r));
    CHECK(demo_report_from_json(to_json(r)) == r);
  }
  CHECK_THROWS_AS(run_demo("cor3"), std::invalid_argument);
}
