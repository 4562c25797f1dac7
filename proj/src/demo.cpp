#include <sstream>
#include <utility>

#include "emb6/report.hpp"

namespace emb6 {

namespace {

Manifold s1_x_s2() { return Manifold({"S1xS2", IntMatrix{{0}}}); }
Manifold s3() { return Manifold({"S3", IntMatrix()}); }

// Negative-definite E8 plumbing; surgery on it gives the Poincare homology sphere.
Manifold poincare_sphere() {
  IntMatrix a(8, 8);
  for (std::size_t i = 0; i < 8; ++i) a(i, i) = -2;
  auto edge = [&](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = 1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return Manifold({"Poincare sphere", std::move(a)});
}

WLValue zero_wl(const Manifold& m1, const Manifold& m2) {
  return {H1Class{IntVector(m1.size())}, H1Class{IntVector(m1.size())}, H1Class{IntVector(m2.size())},
          H1Class{IntVector(m2.size())}};
}

std::string columns_text(const IntMatrix& m) {
  std::string out;
  for (const auto& c : m.columns()) out += (out.empty() ? "" : " ") + to_string(c);
  return out;
}

void add(DemoReport& r, std::string name, bool passed, std::string detail = {}) {
  r.checks.push_back({std::move(name), passed, std::move(detail)});
}

DemoReport demo_cor2() {
  DemoReport r{"cor2", {}, {}};
  const Manifold m1 = s1_x_s2();
  const Manifold m2 = s3();
  const WLValue wl{H1Class{{1}}, H1Class{{1}}, H1Class{}, H1Class{}};
  const EmbeddingInvariants f{wl, LinkClass()};
  const LinkClass g(0, 0, 1, 0);

  const FiberStructure fiber = fiber_structure(m1, m2, wl);
  const StabilizerSubgroup expected(IntMatrix{{0, 2}, {2, 2}, {1, 0}, {0, 0}});
  add(r, "Stab_f is generated by (0,2,1,0) and (2,2,0,0)", fiber.stab.same_lattice(expected),
      "generators " + columns_text(fiber.stab.generators()));
  add(r, "g = (0,0,1,0) is unlinked", g.is_unlinked() && pl_forget(g).is_unlinked());

  const bool first = knot_stabilizer_check(m1.divisibility(wl.W1), KnotClass{g.r1()});
  const bool second = knot_stabilizer_check(m2.divisibility(wl.W2), KnotClass{g.r2()});
  add(r, "restrictions of f and f#g to each component are isotopic", first && second,
      "div W1 = " + m1.divisibility(wl.W1).get_str() + ", r1(g) = " + g.r1().get_str());

  add(r, "g is not in Stab_f", !is_in_stabilizer(fiber.stab, g));
  add(r, "f and f#g are not isotopic", !isotopic(m1, m2, f, act(f, g)));

  const AbelianGroupShape expected_fiber{2, {2}};
  add(r, "fiber is Z^2 + Z/2", fiber.shape == expected_fiber, fiber.shape.to_string());
  const AbelianGroupShape pl = pl_fiber_structure(m1, m2, wl);
  add(r, "PL fiber is Z/2", pl == AbelianGroupShape{0, {2}}, pl.to_string());
  return r;
}

DemoReport demo_cor1() {
  DemoReport r{"cor1", {}, {}};
  const Manifold m1 = s1_x_s2();
  const Manifold m2 = s3();
  const auto w = linked_absorption_witness(m1, m2);
  add(r, "H1(M1) is infinite, so a witness exists", w.has_value());
  if (!w) return r;
  add(r, "pairing of L1 with an H2 class is 1", pairing(w->alpha_prime, w->alpha) == 1,
      "L1 = " + to_string(w->alpha_prime.coords) + ", alpha = " + to_string(w->alpha.coords));
  add(r, "g = (0,2,0,0) is linked", !w->g_unlinked);
  add(r, "g is in Stab_f", w->g_in_stabilizer);
  const EmbeddingInvariants f{w->wl, LinkClass()};
  const IsotopyVerdict v = decide_isotopy(m1, m2, f, act(f, w->g));
  add(r, "f and f#g are isotopic", v.isotopic,
      v.certificate ? "certificate " + to_string(*v.certificate) : std::string("no certificate"));
  return r;
}

DemoReport demo_examples() {
  DemoReport r{"examples", {}, {}};
  const AbelianGroupShape free4{4, {}};

  const Manifold s3_1({"S3 (+1 surgery on the unknot)", IntMatrix{{1}}});
  for (const auto& [m1, m2] : {std::pair{s3_1, s3()}, std::pair{poincare_sphere(), s3_1}}) {
    const auto fiber = fiber_structure(m1, m2, zero_wl(m1, m2));
    add(r, "homology spheres " + m1.name() + " + " + m2.name() + ": action is free and transitive",
        fiber.stab.is_zero() && fiber.shape == free4, "fiber " + fiber.shape.to_string());
  }

  const Manifold l3({"L(3,1)", IntMatrix{{3}}});
  const Manifold l5({"L(5,1)", IntMatrix{{5}}});
  const Manifold rp3({"RP3", IntMatrix{{2}}});
  for (const auto& [m1, m2] : {std::pair{l3, l5}, std::pair{rp3, rp3}}) {
    const WLEnumeration e = enumerate_wl(m1, m2);
    bool all_free = true;
    for (const auto& wl : e.tuples) {
      const auto fiber = fiber_structure(m1, m2, wl);
      all_free = all_free && fiber.stab.is_zero() && fiber.shape == free4;
    }
    const Integer expected = *e.h1_m1.order() * *e.h1_m1.order() * *e.h1_m2.order() * *e.h1_m2.order();
    std::ostringstream detail;
    detail << e.tuples.size() << " invariant tuples, each fiber Z^4";
    add(r, "rational homology spheres " + m1.name() + " + " + m2.name() + ": every fiber is a copy of Z~4",
        all_free && Integer(static_cast<unsigned long>(e.tuples.size())) == expected, detail.str());
    std::ostringstream note;
    note << m1.name() << " + " << m2.name() << ": H1(M1)^2 x H1(M2)^2 has " << expected
         << " points; |H1(M1)|*|H1(M2)| = " << *e.h1_m1.order() * *e.h1_m2.order();
    r.notes.push_back(note.str());
  }
  return r;
}

}  // namespace

DemoReport run_demo(std::string_view name) {
  if (name == "cor1") return demo_cor1();
  if (name == "cor2") return demo_cor2();
  if (name == "examples") return demo_examples();
  throw std::invalid_argument("unknown demo '" + std::string(name) + "'; expected cor1, cor2 or examples");
}

}  // namespace emb6
