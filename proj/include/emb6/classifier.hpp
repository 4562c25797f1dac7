#pragma once

// Isotopy classification of embeddings M1 + M2 -> S^6.
//
// An isotopy class is recorded by its Whitney invariants (W1, L1, W2, L2) and
// an offset in Z~4 = E^6(S^3 + S^3) measured from a fixed base point of the
// fiber over those invariants. The link group acts on each fiber by connected
// sum, transitively, with stabilizer Stab_f generated by
//
//   (0, 2 L1.a, W1.a, 0)        a in H2(M1)
//   (2 L1.b, 2 W1.b, 0, 0)      b in H2(M1)
//   (2 L2.c, 0, 0, W2.c)        c in H2(M2)
//   (2 W2.d, 2 L2.d, 0, 0)      d in H2(M2)
//
// where "." is the H1 x H2 intersection pairing. Each family is linear in its
// H2 argument, so evaluating on an H2 basis generates the whole subgroup.
// Two records describe the same isotopy class iff their invariants agree in
// H1 and their offsets differ by an element of Stab_f. The PL story is the
// same after forgetting (r1, r2).

#include <optional>
#include <vector>

#include "emb6/intlinalg.hpp"
#include "emb6/linkgroup.hpp"
#include "emb6/manifold.hpp"

namespace emb6 {

struct WLValue {
  H1Class W1;
  H1Class L1;
  H1Class W2;
  H1Class L2;
};

struct EmbeddingInvariants {
  WLValue wl;
  LinkClass delta;
};

/// Subgroup of Z^dim given by generator columns, with its canonical basis.
class StabilizerSubgroup {
 public:
  /// Asserts lambda1 = lambda2 mod 2 on every generator column.
  explicit StabilizerSubgroup(IntMatrix generators);

  std::size_t dimension() const { return generators_.rows(); }
  const IntMatrix& generators() const { return generators_; }
  /// Hermite basis of the generated lattice, as columns.
  const IntMatrix& hnf() const { return hnf_; }
  bool is_zero() const { return hnf_.cols() == 0; }

  bool contains(const IntVector& v) const;
  /// Coefficients c with generators() * c = v, when v is in the subgroup.
  std::optional<IntVector> coefficients(const IntVector& v) const;
  bool same_lattice(const StabilizerSubgroup& other) const { return hnf_ == other.hnf_; }

 private:
  IntMatrix generators_;
  IntMatrix hnf_;
};

struct FiberStructure {
  AbelianGroupShape shape;
  StabilizerSubgroup stab;
};

/// Throws DimensionError when a component has the wrong length.
void check_wl(const Manifold& m1, const Manifold& m2, const WLValue& wl);

StabilizerSubgroup stabilizer(const Manifold& m1, const Manifold& m2, const WLValue& wl);
/// Same generator families evaluated on caller-supplied H2 generating sets.
StabilizerSubgroup stabilizer(const Manifold& m1, const Manifold& m2, const WLValue& wl,
                              const std::vector<H2Class>& h2_m1, const std::vector<H2Class>& h2_m2);

bool is_in_stabilizer(const StabilizerSubgroup& stab, const LinkClass& g);

/// Z~4 / Stab_f against the fixed basis of ztilde4_basis().
FiberStructure fiber_structure(const Manifold& m1, const Manifold& m2, const WLValue& wl);

struct IsotopyVerdict {
  bool same_wl = false;
  bool isotopic = false;
  /// delta' - delta.
  LinkClass difference;
  /// Stabilizer coefficients expressing the difference, when isotopic.
  std::optional<IntVector> certificate;
  /// Generators the certificate refers to.
  IntMatrix generators;
};

IsotopyVerdict decide_isotopy(const Manifold& m1, const Manifold& m2, const EmbeddingInvariants& a,
                              const EmbeddingInvariants& b);
bool isotopic(const Manifold& m1, const Manifold& m2, const EmbeddingInvariants& a,
              const EmbeddingInvariants& b);

/// Connected sum with a sphere link: the invariants stay, the offset moves by g.
EmbeddingInvariants act(const EmbeddingInvariants& inv, const LinkClass& g);

StabilizerSubgroup pl_stabilizer(const Manifold& m1, const Manifold& m2, const WLValue& wl);
StabilizerSubgroup pl_stabilizer(const Manifold& m1, const Manifold& m2, const WLValue& wl,
                                 const std::vector<H2Class>& h2_m1, const std::vector<H2Class>& h2_m2);
/// {(a,b) : a = b mod 2} / Stab_PL,f.
AbelianGroupShape pl_fiber_structure(const Manifold& m1, const Manifold& m2, const WLValue& wl);

/// The PL stabilizer with the (0, 2 L1.a) and (2 L2.c, 0) families replaced by
/// (0, 2 div L1) and (2 div L2, 0).
StabilizerSubgroup pl_simplified_stabilizer(const Manifold& m1, const Manifold& m2, const WLValue& wl);
/// True iff the simplified generating set spans Stab_PL,f.
bool pl_simplification_check(const Manifold& m1, const Manifold& m2, const WLValue& wl);

struct WLEnumeration {
  /// False when some H1 is infinite; `tuples` is then empty.
  bool finite = true;
  AbelianGroupShape h1_m1;
  AbelianGroupShape h1_m2;
  std::vector<WLValue> tuples;
};

/// Every point of H1(M1)^2 x H1(M2)^2 in canonical coordinates, or the group
/// shapes when that set is infinite.
WLEnumeration enumerate_wl(const Manifold& m1, const Manifold& m2);

/// Elements of a finite H1, as canonical representatives (meridian coordinates).
std::vector<H1Class> enumerate_h1(const Manifold& m);

struct LinkedAbsorptionWitness {
  WLValue wl;
  LinkClass g;
  H1Class alpha_prime;
  H2Class alpha;
  bool g_unlinked = false;
  bool g_in_stabilizer = false;
};

/// For infinite H1(M1): invariants W1 = 0, L1 = a' with a'.a = 1 for an H2
/// class a, and the linked sphere link (0,2,0,0) that their stabilizer absorbs.
std::optional<LinkedAbsorptionWitness> linked_absorption_witness(const Manifold& m1, const Manifold& m2);

/// x with x . v = 1 for a primitive vector v; nullopt when gcd(v) != 1.
std::optional<IntVector> dual_vector(const IntVector& v);

}  // namespace emb6
