#pragma once

// Closed orientable 3-manifolds given by integer surgery on a framed link in S^3.
//
// The linking matrix A (framings on the diagonal, pairwise linking numbers off
// it) determines H1 = coker A in the meridian basis and H2 = ker A. The
// H1 x H2 -> Z intersection pairing is the meridian dot product.

#include "json.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "emb6/intlinalg.hpp"

namespace emb6 {

/// Input that violates a documented precondition (asymmetric matrix, bad file...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SurgeryPresentation {
  std::string name;
  IntMatrix linking;

  /// Number of surgery components (0 for S^3).
  std::size_t size() const { return linking.rows(); }
  /// Throws ValidationError unless the linking matrix is square and symmetric.
  void validate() const;
};

struct HomologyData {
  AbelianGroupShape h1;
  SmithDecomposition h1_snf;
  std::vector<IntVector> h2_basis;

  AbelianGroupShape h2() const { return {h2_basis.size(), {}}; }
};

/// A first-homology class as meridian coordinates, modulo the columns of A.
struct H1Class {
  IntVector coords;
  friend bool operator==(const H1Class&, const H1Class&) = default;
};

/// A second-homology class: an integer vector v with A v = 0.
struct H2Class {
  IntVector coords;
  friend bool operator==(const H2Class&, const H2Class&) = default;
};

HomologyData homology(const SurgeryPresentation& p);

Integer pairing(const H1Class& x, const H2Class& v);

/// Canonical coordinates of x in the Smith basis: entry i is reduced into
/// [0, d_i) for nonzero invariant factors d_i and left free where d_i = 0.
IntVector canonical_h1(const SurgeryPresentation& p, const H1Class& x);

/// Divisibility of the projection of x to the free part of H1; 0 when it vanishes.
Integer divisibility(const SurgeryPresentation& p, const H1Class& x);

/// A presentation bundled with its homology, computed once.
class Manifold {
 public:
  explicit Manifold(SurgeryPresentation p);

  const SurgeryPresentation& presentation() const { return presentation_; }
  const HomologyData& homology() const { return homology_; }
  const std::string& name() const { return presentation_.name; }
  std::size_t size() const { return presentation_.size(); }

  IntVector canonical_h1(const H1Class& x) const;
  Integer divisibility(const H1Class& x) const;
  bool same_h1_class(const H1Class& a, const H1Class& b) const;
  /// Meridian coordinates of the class with the given canonical coordinates.
  H1Class h1_from_canonical(const IntVector& canonical) const;
  /// Throws ValidationError when A v != 0.
  H2Class h2_class(IntVector v) const;
  std::vector<H2Class> h2_basis() const;

  void check_h1(const H1Class& x) const;

 private:
  SurgeryPresentation presentation_;
  HomologyData homology_;
  IntMatrix u_inverse_;
};

/// {"name": string, "linking_matrix": [[int,...],...]}; integers may be JSON
/// numbers or decimal strings.
SurgeryPresentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const SurgeryPresentation& p);
SurgeryPresentation load_presentation(const std::filesystem::path& path);

Integer integer_from_json(const nlohmann::json& j);
nlohmann::json integer_to_json(const Integer& x);
IntVector vector_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const IntVector& v);
nlohmann::json matrix_to_json(const IntMatrix& m);

}  // namespace emb6
