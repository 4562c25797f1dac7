#include "emb6/classifier.hpp"

#include <utility>

namespace emb6 {

StabilizerSubgroup::StabilizerSubgroup(IntMatrix generators)
    : generators_(std::move(generators)), hnf_(lattice_basis(generators_)) {
  if (generators_.rows() >= 2)
    for (std::size_t j = 0; j < generators_.cols(); ++j) {
      Integer diff = generators_(0, j) - generators_(1, j);
      if (mpz_odd_p(diff.get_mpz_t()))
        throw std::logic_error("stabilizer generator " + to_string(generators_.column(j)) +
                               " violates the linking parity constraint");
    }
}

bool StabilizerSubgroup::contains(const IntVector& v) const { return coefficients(v).has_value(); }

std::optional<IntVector> StabilizerSubgroup::coefficients(const IntVector& v) const {
  return solve_in_lattice(generators_, v);
}

void check_wl(const Manifold& m1, const Manifold& m2, const WLValue& wl) {
  m1.check_h1(wl.W1);
  m1.check_h1(wl.L1);
  m2.check_h1(wl.W2);
  m2.check_h1(wl.L2);
}

namespace {

void push_nonzero(std::vector<IntVector>& columns, IntVector v) {
  for (const auto& x : v)
    if (x != 0) {
      columns.push_back(std::move(v));
      return;
    }
}

void check_h2_set(const Manifold& m, const std::vector<H2Class>& classes) {
  for (const auto& c : classes) m.h2_class(c.coords);
}

}  // namespace

StabilizerSubgroup stabilizer(const Manifold& m1, const Manifold& m2, const WLValue& wl,
                              const std::vector<H2Class>& h2_m1, const std::vector<H2Class>& h2_m2) {
  check_wl(m1, m2, wl);
  check_h2_set(m1, h2_m1);
  check_h2_set(m2, h2_m2);
  std::vector<IntVector> columns;
  for (const auto& a : h2_m1) {
    const Integer l = pairing(wl.L1, a);
    const Integer w = pairing(wl.W1, a);
    push_nonzero(columns, {0, 2 * l, w, 0});
    push_nonzero(columns, {2 * l, 2 * w, 0, 0});
  }
  for (const auto& c : h2_m2) {
    const Integer l = pairing(wl.L2, c);
    const Integer w = pairing(wl.W2, c);
    push_nonzero(columns, {2 * l, 0, 0, w});
    push_nonzero(columns, {2 * w, 2 * l, 0, 0});
  }
  return StabilizerSubgroup(IntMatrix::from_columns(columns, 4));
}

StabilizerSubgroup stabilizer(const Manifold& m1, const Manifold& m2, const WLValue& wl) {
  return stabilizer(m1, m2, wl, m1.h2_basis(), m2.h2_basis());
}

bool is_in_stabilizer(const StabilizerSubgroup& stab, const LinkClass& g) {
  return stab.contains(g.to_vector());
}

FiberStructure fiber_structure(const Manifold& m1, const Manifold& m2, const WLValue& wl) {
  StabilizerSubgroup stab = stabilizer(m1, m2, wl);
  AbelianGroupShape shape = quotient_shape(ztilde4_basis(), stab.generators());
  return FiberStructure{std::move(shape), std::move(stab)};
}

IsotopyVerdict decide_isotopy(const Manifold& m1, const Manifold& m2, const EmbeddingInvariants& a,
                              const EmbeddingInvariants& b) {
  check_wl(m1, m2, a.wl);
  check_wl(m1, m2, b.wl);
  IsotopyVerdict verdict;
  verdict.difference = b.delta - a.delta;
  verdict.same_wl = m1.same_h1_class(a.wl.W1, b.wl.W1) && m1.same_h1_class(a.wl.L1, b.wl.L1) &&
                    m2.same_h1_class(a.wl.W2, b.wl.W2) && m2.same_h1_class(a.wl.L2, b.wl.L2);
  if (!verdict.same_wl) return verdict;
  const StabilizerSubgroup stab = stabilizer(m1, m2, a.wl);
  verdict.generators = stab.generators();
  verdict.certificate = stab.coefficients(verdict.difference.to_vector());
  verdict.isotopic = verdict.certificate.has_value();
  return verdict;
}

bool isotopic(const Manifold& m1, const Manifold& m2, const EmbeddingInvariants& a,
              const EmbeddingInvariants& b) {
  return decide_isotopy(m1, m2, a, b).isotopic;
}

EmbeddingInvariants act(const EmbeddingInvariants& inv, const LinkClass& g) {
  return EmbeddingInvariants{inv.wl, inv.delta + g};
}

StabilizerSubgroup pl_stabilizer(const Manifold& m1, const Manifold& m2, const WLValue& wl,
                                 const std::vector<H2Class>& h2_m1, const std::vector<H2Class>& h2_m2) {
  check_wl(m1, m2, wl);
  check_h2_set(m1, h2_m1);
  check_h2_set(m2, h2_m2);
  std::vector<IntVector> columns;
  for (const auto& a : h2_m1) {
    const Integer l = pairing(wl.L1, a);
    const Integer w = pairing(wl.W1, a);
    push_nonzero(columns, {0, 2 * l});
    push_nonzero(columns, {2 * l, 2 * w});
  }
  for (const auto& c : h2_m2) {
    const Integer l = pairing(wl.L2, c);
    const Integer w = pairing(wl.W2, c);
    push_nonzero(columns, {2 * l, 0});
    push_nonzero(columns, {2 * w, 2 * l});
  }
  return StabilizerSubgroup(IntMatrix::from_columns(columns, 2));
}

StabilizerSubgroup pl_stabilizer(const Manifold& m1, const Manifold& m2, const WLValue& wl) {
  return pl_stabilizer(m1, m2, wl, m1.h2_basis(), m2.h2_basis());
}

AbelianGroupShape pl_fiber_structure(const Manifold& m1, const Manifold& m2, const WLValue& wl) {
  return quotient_shape(ztilde2_basis(), pl_stabilizer(m1, m2, wl).generators());
}

StabilizerSubgroup pl_simplified_stabilizer(const Manifold& m1, const Manifold& m2, const WLValue& wl) {
  check_wl(m1, m2, wl);
  std::vector<IntVector> columns;
  push_nonzero(columns, {0, 2 * m1.divisibility(wl.L1)});
  for (const auto& b : m1.h2_basis())
    push_nonzero(columns, {2 * pairing(wl.L1, b), 2 * pairing(wl.W1, b)});
  push_nonzero(columns, {2 * m2.divisibility(wl.L2), 0});
  for (const auto& d : m2.h2_basis())
    push_nonzero(columns, {2 * pairing(wl.W2, d), 2 * pairing(wl.L2, d)});
  return StabilizerSubgroup(IntMatrix::from_columns(columns, 2));
}

bool pl_simplification_check(const Manifold& m1, const Manifold& m2, const WLValue& wl) {
  return pl_stabilizer(m1, m2, wl).same_lattice(pl_simplified_stabilizer(m1, m2, wl));
}

std::vector<H1Class> enumerate_h1(const Manifold& m) {
  const auto& factors = m.homology().h1_snf.invariant_factors;
  if (!m.homology().h1.is_finite()) throw std::invalid_argument("enumerate_h1: H1 of '" + m.name() + "' is infinite");
  std::vector<IntVector> points{IntVector(m.size())};
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<IntVector> next;
    for (const auto& p : points)
      for (Integer k = 0; k < factors[i]; ++k) {
        IntVector q = p;
        q[i] = k;
        next.push_back(std::move(q));
      }
    points = std::move(next);
  }
  std::vector<H1Class> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(m.h1_from_canonical(p));
  return out;
}

WLEnumeration enumerate_wl(const Manifold& m1, const Manifold& m2) {
  WLEnumeration result;
  result.h1_m1 = m1.homology().h1;
  result.h1_m2 = m2.homology().h1;
  result.finite = result.h1_m1.is_finite() && result.h1_m2.is_finite();
  if (!result.finite) return result;
  const auto e1 = enumerate_h1(m1);
  const auto e2 = enumerate_h1(m2);
  result.tuples.reserve(e1.size() * e1.size() * e2.size() * e2.size());
  for (const auto& w1 : e1)
    for (const auto& l1 : e1)
      for (const auto& w2 : e2)
        for (const auto& l2 : e2) result.tuples.push_back(WLValue{w1, l1, w2, l2});
  return result;
}

std::optional<IntVector> dual_vector(const IntVector& v) {
  IntVector x(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Integer next, s, t;
    mpz_gcdext(next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    // next = s * g + t * v[i]
    for (std::size_t k = 0; k < i; ++k) x[k] *= s;
    x[i] = t;
    g = next;
  }
  if (g != 1) return std::nullopt;
  return x;
}

std::optional<LinkedAbsorptionWitness> linked_absorption_witness(const Manifold& m1, const Manifold& m2) {
  const auto basis = m1.h2_basis();
  if (basis.empty()) return std::nullopt;
  const H2Class& alpha = basis.front();
  auto dual = dual_vector(alpha.coords);
  if (!dual) throw std::logic_error("H2 basis vector " + to_string(alpha.coords) + " is not primitive");

  LinkedAbsorptionWitness w;
  w.alpha = alpha;
  w.alpha_prime = H1Class{*dual};
  w.wl = WLValue{H1Class{IntVector(m1.size())}, w.alpha_prime, H1Class{IntVector(m2.size())},
                 H1Class{IntVector(m2.size())}};
  w.g = LinkClass(0, 2, 0, 0);
  w.g_unlinked = w.g.is_unlinked();
  w.g_in_stabilizer = is_in_stabilizer(stabilizer(m1, m2, w.wl), w.g);
  return w;
}

}  // namespace emb6
