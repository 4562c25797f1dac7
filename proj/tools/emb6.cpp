// emb6: classification of embeddings of two 3-manifolds into 6-space.
//
// Exit codes: 0 success / affirmative verdict, 1 negative verdict, 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "emb6/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Inputs {
  std::string m1;
  std::string m2;
  std::string inv;
};

struct Loaded {
  emb6::Manifold m1;
  emb6::Manifold m2;
  emb6::EmbeddingInvariants inv;
};

Loaded load(const Inputs& in) {
  Loaded l{emb6::Manifold(emb6::load_presentation(in.m1)), emb6::Manifold(emb6::load_presentation(in.m2)),
           emb6::load_invariants(in.inv)};
  emb6::check_wl(l.m1, l.m2, l.inv.wl);
  return l;
}

void add_triple(CLI::App* cmd, Inputs& in) {
  cmd->add_option("m1", in.m1, "first manifold file (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("m2", in.m2, "second manifold file (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("invariants", in.inv, "embedding invariants (JSON)")->required()->check(CLI::ExistingFile);
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isotopy classification of embeddings M1 + M2 -> S^6 from surgery presentations"};
  app.require_subcommand(1);
  bool json_out = false;
  bool with_pl = false;
  app.add_flag("--json", json_out, "emit JSON instead of text");

  std::string path;
  auto* homology = app.add_subcommand("homology", "H1 and H2 of a surgery presentation");
  homology->add_option("manifold", path, "manifold file (JSON)")->required()->check(CLI::ExistingFile);

  Inputs classify_in;
  auto* classify = app.add_subcommand("classify", "stabilizer, fiber and optionally the PL layer");
  add_triple(classify, classify_in);
  classify->add_flag("--pl", with_pl, "include the PL classification");

  Inputs stab_in;
  auto* stab = app.add_subcommand("stab", "stabilizer subgroup of an embedding");
  add_triple(stab, stab_in);
  stab->add_flag("--pl", with_pl, "PL stabilizer instead of the smooth one");

  Inputs member_in;
  std::string g_text;
  auto* member = app.add_subcommand("member", "is a sphere link absorbed by connected sum? (exit 0 yes, 1 no)");
  add_triple(member, member_in);
  member->add_option("g", g_text, "link class [l1,l2,r1,r2]")->required();

  Inputs fiber_in;
  auto* fiber = app.add_subcommand("fiber", "group structure of the isotopy classes with fixed Whitney invariants");
  add_triple(fiber, fiber_in);

  Inputs pl_in;
  auto* pl = app.add_subcommand("pl", "PL stabilizer, PL fiber and the simplified generating set check");
  add_triple(pl, pl_in);

  Inputs iso_in;
  std::string other_inv;
  auto* iso = app.add_subcommand("isotopic", "decide isotopy of two invariant records (exit 0 yes, 1 no)");
  add_triple(iso, iso_in);
  iso->add_option("other", other_inv, "second embedding invariants (JSON)")->required()->check(CLI::ExistingFile);

  std::string diagram_path;
  auto* diagram = app.add_subcommand("diagram", "parse a framed link diagram and build its surgery presentation");
  diagram->add_option("file", diagram_path, "diagram text file")->required()->check(CLI::ExistingFile);

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "worked examples with self-checks");
  demo->add_option("name", demo_name, "cor1, cor2 or examples")
      ->required()
      ->check(CLI::IsMember({"cor1", "cor2", "examples"}));

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", json_out, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*homology) {
      const auto r = emb6::make_homology_report(emb6::Manifold(emb6::load_presentation(path)));
      if (json_out) emit(emb6::to_json(r));
      else std::cout << "H1 = " << r.h1.to_string() << ", H2 = " << r.h2.to_string() << '\n';
      return kOk;
    }
    if (*classify || *stab || *fiber || *pl) {
      const Inputs& in = *classify ? classify_in : *stab ? stab_in : *fiber ? fiber_in : pl_in;
      const bool need_pl = *pl || with_pl;
      const Loaded l = load(in);
      const auto r = emb6::make_classification_report(l.m1, l.m2, l.inv.wl, need_pl, {in.m1, in.m2, in.inv});
      auto j = emb6::to_json(r);
      if (*classify) {
        if (json_out) emit(j);
        else std::cout << emb6::to_text(r);
      } else if (*stab) {
        const auto& src = with_pl ? j["pl"] : j;
        if (json_out)
          emit({{"stabilizer_generators", src["stabilizer_generators"]}, {"stabilizer_basis", src["stabilizer_basis"]}});
        else {
          std::cout << (with_pl ? "PL " : "") << "stabilizer generators:";
          for (const auto& v : with_pl ? r.pl_generators : r.stabilizer_generators) std::cout << ' ' << emb6::to_string(v);
          std::cout << "\n" << (with_pl ? "PL " : "") << "stabilizer basis:";
          for (const auto& v : with_pl ? r.pl_basis : r.stabilizer_basis) std::cout << ' ' << emb6::to_string(v);
          std::cout << '\n';
        }
      } else if (*fiber) {
        if (json_out) emit({{"fiber", j["fiber"]}, {"stabilizer_generators", j["stabilizer_generators"]}});
        else std::cout << "fiber: " << r.fiber.to_string() << '\n';
      } else {
        if (json_out) emit({{"pl", j["pl"]}});
        else
          std::cout << "PL fiber: " << r.pl_fiber.to_string() << "\nPL simplified generators span the same subgroup: "
                    << (r.pl_simplification_holds ? "yes" : "no") << '\n';
      }
      return kOk;
    }
    if (*member) {
      const Loaded l = load(member_in);
      const emb6::LinkClass g = emb6::parse_link_class(g_text);
      const auto s = emb6::stabilizer(l.m1, l.m2, l.inv.wl);
      const auto c = s.coefficients(g.to_vector());
      if (json_out) {
        emit({{"member", c.has_value()},
              {"g", emb6::vector_to_json(g.to_vector())},
              {"stabilizer_generators", emb6::matrix_to_json(s.generators().transpose())},
              {"coefficients", c ? emb6::vector_to_json(*c) : nlohmann::json(nullptr)}});
      } else {
        std::cout << g.to_string() << (c ? " is in" : " is not in") << " the stabilizer\n";
        if (c) std::cout << "coefficients: " << emb6::to_string(*c) << '\n';
      }
      return c ? kOk : kNegative;
    }
    if (*iso) {
      const Loaded l = load(iso_in);
      const auto other = emb6::load_invariants(other_inv);
      const auto verdict = emb6::decide_isotopy(l.m1, l.m2, l.inv, other);
      const auto r = emb6::make_isotopy_report(verdict, {iso_in.m1, iso_in.m2, iso_in.inv, other_inv});
      if (json_out) emit(emb6::to_json(r));
      else std::cout << emb6::to_text(r);
      return r.isotopic ? kOk : kNegative;
    }
    if (*diagram) {
      const auto r = emb6::make_diagram_report(emb6::load_diagram(diagram_path), diagram_path);
      if (json_out) emit(emb6::to_json(r));
      else std::cout << emb6::to_text(r);
      return kOk;
    }
    if (*demo) {
      const auto r = emb6::run_demo(demo_name);
      if (json_out) emit(emb6::to_json(r));
      else std::cout << emb6::to_text(r);
      return r.all_passed() ? kOk : kNegative;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
