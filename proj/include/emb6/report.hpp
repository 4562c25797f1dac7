#pragma once

// Structured results of the command-line tool, with JSON and text renderings.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emb6/classifier.hpp"
#include "emb6/framedlink.hpp"
#include "json.hpp"

namespace emb6 {

/// {"W1":[...],"L1":[...],"W2":[...],"L2":[...],"delta":[l1,l2,r1,r2]}; delta defaults to 0.
EmbeddingInvariants invariants_from_json(const nlohmann::json& j);
nlohmann::json invariants_to_json(const EmbeddingInvariants& inv);
EmbeddingInvariants load_invariants(const std::string& path);

/// Accepts "[a,b,c,d]" or "a,b,c,d".
LinkClass parse_link_class(std::string_view text);

nlohmann::json shape_to_json(const AbelianGroupShape& s);
AbelianGroupShape shape_from_json(const nlohmann::json& j);

struct HomologyReport {
  std::string name;
  IntMatrix linking;
  AbelianGroupShape h1;
  AbelianGroupShape h2;
  std::vector<IntVector> h2_basis;

  friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

HomologyReport make_homology_report(const Manifold& m);

struct ClassificationReport {
  std::vector<std::string> inputs;
  HomologyReport m1;
  HomologyReport m2;
  std::vector<IntVector> wl;  // W1, L1, W2, L2
  std::vector<IntVector> stabilizer_generators;
  std::vector<IntVector> stabilizer_basis;
  AbelianGroupShape fiber;
  bool has_pl = false;
  std::vector<IntVector> pl_generators;
  std::vector<IntVector> pl_basis;
  AbelianGroupShape pl_fiber;
  bool pl_simplification_holds = false;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport make_classification_report(const Manifold& m1, const Manifold& m2, const WLValue& wl,
                                                bool with_pl, std::vector<std::string> inputs = {});

struct IsotopyReport {
  std::vector<std::string> inputs;
  bool same_wl = false;
  bool isotopic = false;
  IntVector difference;
  std::vector<IntVector> generators;
  std::optional<IntVector> certificate;

  friend bool operator==(const IsotopyReport&, const IsotopyReport&) = default;
};

IsotopyReport make_isotopy_report(const IsotopyVerdict& v, std::vector<std::string> inputs = {});

struct DiagramReport {
  std::size_t components = 0;
  std::vector<Integer> framings;
  IntMatrix pairwise_lk;
  HomologyReport surgery;

  friend bool operator==(const DiagramReport&, const DiagramReport&) = default;
};

DiagramReport make_diagram_report(const LinkDiagram& d, const std::string& name);

struct DemoCheck {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const DemoCheck&, const DemoCheck&) = default;
};

struct DemoReport {
  std::string name;
  std::vector<DemoCheck> checks;
  std::vector<std::string> notes;

  bool all_passed() const;
  friend bool operator==(const DemoReport&, const DemoReport&) = default;
};

/// "cor1", "cor2" or "examples"; throws std::invalid_argument otherwise.
DemoReport run_demo(std::string_view name);

nlohmann::json to_json(const HomologyReport& r);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const IsotopyReport& r);
nlohmann::json to_json(const DiagramReport& r);
nlohmann::json to_json(const DemoReport& r);

HomologyReport homology_report_from_json(const nlohmann::json& j);
ClassificationReport classification_report_from_json(const nlohmann::json& j);
IsotopyReport isotopy_report_from_json(const nlohmann::json& j);
DiagramReport diagram_report_from_json(const nlohmann::json& j);
DemoReport demo_report_from_json(const nlohmann::json& j);

std::string to_text(const HomologyReport& r);
std::string to_text(const ClassificationReport& r);
std::string to_text(const IsotopyReport& r);
std::string to_text(const DiagramReport& r);
std::string to_text(const DemoReport& r);

}  // namespace emb6
