#pragma once

// Sphere knots and links in 6-space as integer data.
//
// E^6(S^3) is identified with Z by the Haefliger invariant r, and
// E^6(S^3 + S^3) with Z~4 = {(l1, l2, r1, r2) : l1 = l2 mod 2} through the
// linking coefficients and the componentwise Haefliger invariants. The PL
// classes keep only (l1, l2).

#include <array>
#include <stdexcept>
#include <string>

#include "emb6/intlinalg.hpp"

namespace emb6 {

/// A tuple that no embedding realizes (violates a parity or integrality constraint).
class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct KnotClass {
  Integer r;
  bool is_trivial() const { return r == 0; }
  friend bool operator==(const KnotClass&, const KnotClass&) = default;
};

class LinkClass {
 public:
  /// The trivial link.
  LinkClass() = default;
  /// Throws ParityError unless lambda1 = lambda2 mod 2.
  LinkClass(Integer lambda1, Integer lambda2, Integer r1, Integer r2);
  static LinkClass from_vector(const IntVector& v);

  const Integer& lambda1() const { return lambda1_; }
  const Integer& lambda2() const { return lambda2_; }
  const Integer& r1() const { return r1_; }
  const Integer& r2() const { return r2_; }

  bool is_trivial() const;
  bool is_unlinked() const;

  IntVector to_vector() const { return {lambda1_, lambda2_, r1_, r2_}; }
  std::string to_string() const;

  LinkClass operator-() const;
  friend LinkClass operator+(const LinkClass& a, const LinkClass& b);
  friend LinkClass operator-(const LinkClass& a, const LinkClass& b);
  friend bool operator==(const LinkClass&, const LinkClass&) = default;

 private:
  Integer lambda1_ = 0;
  Integer lambda2_ = 0;
  Integer r1_ = 0;
  Integer r2_ = 0;
};

class PLLinkClass {
 public:
  PLLinkClass() = default;
  PLLinkClass(Integer lambda1, Integer lambda2);

  const Integer& lambda1() const { return lambda1_; }
  const Integer& lambda2() const { return lambda2_; }
  bool is_unlinked() const { return lambda1_ == 0 && lambda2_ == 0; }
  IntVector to_vector() const { return {lambda1_, lambda2_}; }

  friend PLLinkClass operator+(const PLLinkClass& a, const PLLinkClass& b);
  friend bool operator==(const PLLinkClass&, const PLLinkClass&) = default;

 private:
  Integer lambda1_ = 0;
  Integer lambda2_ = 0;
};

LinkClass add(const LinkClass& a, const LinkClass& b);
LinkClass neg(const LinkClass& a);

/// Haefliger invariant of a connected sum of knots A and B whose linking
/// coefficients with each other are lamAB and lamBA:
///   r(A # B) = r(A) + r(B) + (lamAB + lamBA) / 2.
/// Throws ParityError when lamAB + lamBA is odd.
KnotClass knot_sum(const KnotClass& a, const KnotClass& b, const Integer& lam_ab, const Integer& lam_ba);

/// lambda(A # B, C) = lambda(A, C) + lambda(A, B). Only the left argument is
/// additive; there is deliberately no counterpart for lambda(A, B # C).
Integer lambda_of_sum(const Integer& lam_ac, const Integer& lam_ab);

PLLinkClass pl_forget(const LinkClass& g);

/// Whether a knot with invariant r can be absorbed by an embedding whose
/// Whitney invariant has divisibility d, i.e. r is a multiple of d.
bool knot_stabilizer_check(const Integer& d, const KnotClass& rg);

/// Columns (1,1,0,0), (0,2,0,0), (0,0,1,0), (0,0,0,1): a basis of Z~4.
const IntMatrix& ztilde4_basis();
/// Columns (1,1), (0,2): a basis of the PL image {(a,b) : a = b mod 2}.
const IntMatrix& ztilde2_basis();

}  // namespace emb6
