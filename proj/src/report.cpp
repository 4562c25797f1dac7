#include "emb6/report.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace emb6 {

using nlohmann::json;

EmbeddingInvariants invariants_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("embedding invariants must be a JSON object");
  auto component = [&](const char* key) {
    if (!j.contains(key)) throw ValidationError(std::string("embedding invariants lack \"") + key + "\"");
    return H1Class{vector_from_json(j.at(key))};
  };
  EmbeddingInvariants inv{{component("W1"), component("L1"), component("W2"), component("L2")}, LinkClass()};
  if (j.contains("delta")) inv.delta = LinkClass::from_vector(vector_from_json(j.at("delta")));
  return inv;
}

json invariants_to_json(const EmbeddingInvariants& inv) {
  return {{"W1", vector_to_json(inv.wl.W1.coords)},
          {"L1", vector_to_json(inv.wl.L1.coords)},
          {"W2", vector_to_json(inv.wl.W2.coords)},
          {"L2", vector_to_json(inv.wl.L2.coords)},
          {"delta", vector_to_json(inv.delta.to_vector())}};
}

EmbeddingInvariants load_invariants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return invariants_from_json(j);
}

LinkClass parse_link_class(std::string_view text) {
  std::string s(text);
  if (s.empty() || s.front() != '[') s = "[" + s + "]";
  json j;
  try {
    j = json::parse(s);
  } catch (const json::parse_error&) {
    throw ValidationError("cannot read link class '" + std::string(text) + "'; expected [l1,l2,r1,r2]");
  }
  return LinkClass::from_vector(vector_from_json(j));
}

json shape_to_json(const AbelianGroupShape& s) {
  return {{"free_rank", s.free_rank}, {"torsion", vector_to_json(s.torsion)}};
}

AbelianGroupShape shape_from_json(const json& j) {
  return {j.at("free_rank").get<std::size_t>(), vector_from_json(j.at("torsion"))};
}

namespace {

json vectors_to_json(const std::vector<IntVector>& vs) {
  auto out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

std::vector<IntVector> vectors_from_json(const json& j) {
  std::vector<IntVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

IntMatrix matrix_from_json(const json& j) {
  const auto rows = vectors_from_json(j);
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return IntMatrix::from_rows(rows, cols);
}

std::string join(const std::vector<IntVector>& vs) {
  if (vs.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + to_string(vs[i]);
  return s;
}

}  // namespace

HomologyReport make_homology_report(const Manifold& m) {
  return {m.name(), m.presentation().linking, m.homology().h1, m.homology().h2(), m.homology().h2_basis};
}

ClassificationReport make_classification_report(const Manifold& m1, const Manifold& m2, const WLValue& wl,
                                                bool with_pl, std::vector<std::string> inputs) {
  ClassificationReport r;
  r.inputs = std::move(inputs);
  r.m1 = make_homology_report(m1);
  r.m2 = make_homology_report(m2);
  r.wl = {wl.W1.coords, wl.L1.coords, wl.W2.coords, wl.L2.coords};
  const FiberStructure fiber = fiber_structure(m1, m2, wl);
  r.stabilizer_generators = fiber.stab.generators().columns();
  r.stabilizer_basis = fiber.stab.hnf().columns();
  r.fiber = fiber.shape;
  r.has_pl = with_pl;
  if (with_pl) {
    const StabilizerSubgroup pl = pl_stabilizer(m1, m2, wl);
    r.pl_generators = pl.generators().columns();
    r.pl_basis = pl.hnf().columns();
    r.pl_fiber = pl_fiber_structure(m1, m2, wl);
    r.pl_simplification_holds = pl_simplification_check(m1, m2, wl);
  }
  return r;
}

IsotopyReport make_isotopy_report(const IsotopyVerdict& v, std::vector<std::string> inputs) {
  return {std::move(inputs), v.same_wl, v.isotopic, v.difference.to_vector(), v.generators.columns(), v.certificate};
}

DiagramReport make_diagram_report(const LinkDiagram& d, const std::string& name) {
  const FramedFamily f = framed_family(d);
  return {d.components, f.framings, f.pairwise_lk, make_homology_report(Manifold(surgery_matrix(d, name)))};
}

bool DemoReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json to_json(const HomologyReport& r) {
  return {{"name", r.name},
          {"linking_matrix", matrix_to_json(r.linking)},
          {"h1", shape_to_json(r.h1)},
          {"h2", shape_to_json(r.h2)},
          {"h2_basis", vectors_to_json(r.h2_basis)}};
}

HomologyReport homology_report_from_json(const json& j) {
  HomologyReport r;
  r.name = j.at("name").get<std::string>();
  r.linking = matrix_from_json(j.at("linking_matrix"));
  r.h1 = shape_from_json(j.at("h1"));
  r.h2 = shape_from_json(j.at("h2"));
  r.h2_basis = vectors_from_json(j.at("h2_basis"));
  return r;
}

json to_json(const ClassificationReport& r) {
  json out = {{"inputs", r.inputs},
              {"m1", to_json(r.m1)},
              {"m2", to_json(r.m2)},
              {"wl", vectors_to_json(r.wl)},
              {"stabilizer_generators", vectors_to_json(r.stabilizer_generators)},
              {"stabilizer_basis", vectors_to_json(r.stabilizer_basis)},
              {"fiber", shape_to_json(r.fiber)}};
  if (r.has_pl)
    out["pl"] = {{"stabilizer_generators", vectors_to_json(r.pl_generators)},
                 {"stabilizer_basis", vectors_to_json(r.pl_basis)},
                 {"fiber", shape_to_json(r.pl_fiber)},
                 {"simplification_holds", r.pl_simplification_holds}};
  return out;
}

ClassificationReport classification_report_from_json(const json& j) {
  ClassificationReport r;
  r.inputs = j.at("inputs").get<std::vector<std::string>>();
  r.m1 = homology_report_from_json(j.at("m1"));
  r.m2 = homology_report_from_json(j.at("m2"));
  r.wl = vectors_from_json(j.at("wl"));
  r.stabilizer_generators = vectors_from_json(j.at("stabilizer_generators"));
  r.stabilizer_basis = vectors_from_json(j.at("stabilizer_basis"));
  r.fiber = shape_from_json(j.at("fiber"));
  r.has_pl = j.contains("pl");
  if (r.has_pl) {
    const auto& pl = j.at("pl");
    r.pl_generators = vectors_from_json(pl.at("stabilizer_generators"));
    r.pl_basis = vectors_from_json(pl.at("stabilizer_basis"));
    r.pl_fiber = shape_from_json(pl.at("fiber"));
    r.pl_simplification_holds = pl.at("simplification_holds").get<bool>();
  }
  return r;
}

json to_json(const IsotopyReport& r) {
  json out = {{"inputs", r.inputs},
              {"same_wl", r.same_wl},
              {"isotopic", r.isotopic},
              {"difference", vector_to_json(r.difference)},
              {"stabilizer_generators", vectors_to_json(r.generators)},
              {"certificate", nullptr}};
  if (r.certificate) out["certificate"] = vector_to_json(*r.certificate);
  return out;
}

IsotopyReport isotopy_report_from_json(const json& j) {
  IsotopyReport r;
  r.inputs = j.at("inputs").get<std::vector<std::string>>();
  r.same_wl = j.at("same_wl").get<bool>();
  r.isotopic = j.at("isotopic").get<bool>();
  r.difference = vector_from_json(j.at("difference"));
  r.generators = vectors_from_json(j.at("stabilizer_generators"));
  if (!j.at("certificate").is_null()) r.certificate = vector_from_json(j.at("certificate"));
  return r;
}

json to_json(const DiagramReport& r) {
  return {{"components", r.components},
          {"framings", vector_to_json(r.framings)},
          {"pairwise_lk", matrix_to_json(r.pairwise_lk)},
          {"surgery", to_json(r.surgery)}};
}

DiagramReport diagram_report_from_json(const json& j) {
  DiagramReport r;
  r.components = j.at("components").get<std::size_t>();
  r.framings = vector_from_json(j.at("framings"));
  r.pairwise_lk = matrix_from_json(j.at("pairwise_lk"));
  r.surgery = homology_report_from_json(j.at("surgery"));
  return r;
}

json to_json(const DemoReport& r) {
  auto checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"demo", r.name}, {"checks", checks}, {"notes", r.notes}, {"passed", r.all_passed()}};
}

DemoReport demo_report_from_json(const json& j) {
  DemoReport r;
  r.name = j.at("demo").get<std::string>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string to_text(const HomologyReport& r) {
  std::ostringstream os;
  os << r.name << ": H1 = " << r.h1.to_string() << ", H2 = " << r.h2.to_string() << '\n';
  os << "  linking matrix " << r.linking.to_string() << '\n';
  os << "  H2 basis " << join(r.h2_basis) << '\n';
  return os.str();
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "M1 " << to_text(r.m1) << "M2 " << to_text(r.m2);
  os << "WL: W1=" << to_string(r.wl[0]) << " L1=" << to_string(r.wl[1]) << " W2=" << to_string(r.wl[2])
     << " L2=" << to_string(r.wl[3]) << '\n';
  os << "stabilizer generators: " << join(r.stabilizer_generators) << '\n';
  os << "stabilizer basis: " << join(r.stabilizer_basis) << '\n';
  os << "fiber: " << r.fiber.to_string() << '\n';
  if (r.has_pl) {
    os << "PL stabilizer generators: " << join(r.pl_generators) << '\n';
    os << "PL stabilizer basis: " << join(r.pl_basis) << '\n';
    os << "PL fiber: " << r.pl_fiber.to_string() << '\n';
    os << "PL simplified generators span the same subgroup: " << (r.pl_simplification_holds ? "yes" : "no") << '\n';
  }
  return os.str();
}

std::string to_text(const IsotopyReport& r) {
  std::ostringstream os;
  if (!r.same_wl) {
    os << "not isotopic: Whitney invariants differ\n";
    return os.str();
  }
  os << (r.isotopic ? "isotopic" : "not isotopic") << '\n';
  os << "delta difference: " << to_string(r.difference) << '\n';
  os << "stabilizer generators: " << join(r.generators) << '\n';
  if (r.certificate) os << "certificate: " << to_string(*r.certificate) << '\n';
  return os.str();
}

std::string to_text(const DiagramReport& r) {
  std::ostringstream os;
  os << "components: " << r.components << '\n';
  os << "framings: " << to_string(r.framings) << '\n';
  os << "linking numbers: " << r.pairwise_lk.to_string() << '\n';
  os << "surgery " << to_text(r.surgery);
  return os.str();
}

std::string to_text(const DemoReport& r) {
  std::ostringstream os;
  os << "demo " << r.name << '\n';
  for (const auto& c : r.checks)
    os << (c.passed ? "  [pass] " : "  [FAIL] ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  os << (r.all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
  return os.str();
}

}  // namespace emb6
