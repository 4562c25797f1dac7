#include "emb6/linkgroup.hpp"

#include <utility>

namespace emb6 {

namespace {

bool same_parity(const Integer& a, const Integer& b) {
  Integer diff = a - b;
  return mpz_even_p(diff.get_mpz_t()) != 0;
}

}  // namespace

LinkClass::LinkClass(Integer lambda1, Integer lambda2, Integer r1, Integer r2)
    : lambda1_(std::move(lambda1)), lambda2_(std::move(lambda2)), r1_(std::move(r1)), r2_(std::move(r2)) {
  if (!same_parity(lambda1_, lambda2_))
    throw ParityError("linking coefficients " + lambda1_.get_str() + " and " + lambda2_.get_str() +
                      " differ in parity; no link S^3 + S^3 -> S^6 has them");
}

LinkClass LinkClass::from_vector(const IntVector& v) {
  if (v.size() != 4) throw DimensionError("a link class has exactly 4 coordinates");
  return LinkClass(v[0], v[1], v[2], v[3]);
}

bool LinkClass::is_trivial() const { return is_unlinked() && r1_ == 0 && r2_ == 0; }

bool LinkClass::is_unlinked() const { return lambda1_ == 0 && lambda2_ == 0; }

std::string LinkClass::to_string() const { return emb6::to_string(to_vector()); }

LinkClass LinkClass::operator-() const { return LinkClass(-lambda1_, -lambda2_, -r1_, -r2_); }

LinkClass operator+(const LinkClass& a, const LinkClass& b) {
  return LinkClass(a.lambda1_ + b.lambda1_, a.lambda2_ + b.lambda2_, a.r1_ + b.r1_, a.r2_ + b.r2_);
}

LinkClass operator-(const LinkClass& a, const LinkClass& b) { return a + (-b); }

PLLinkClass::PLLinkClass(Integer lambda1, Integer lambda2)
    : lambda1_(std::move(lambda1)), lambda2_(std::move(lambda2)) {
  if (!same_parity(lambda1_, lambda2_))
    throw ParityError("PL linking coefficients " + lambda1_.get_str() + " and " + lambda2_.get_str() +
                      " differ in parity");
}

PLLinkClass operator+(const PLLinkClass& a, const PLLinkClass& b) {
  return PLLinkClass(a.lambda1_ + b.lambda1_, a.lambda2_ + b.lambda2_);
}

LinkClass add(const LinkClass& a, const LinkClass& b) { return a + b; }

LinkClass neg(const LinkClass& a) { return -a; }

KnotClass knot_sum(const KnotClass& a, const KnotClass& b, const Integer& lam_ab, const Integer& lam_ba) {
  Integer s = lam_ab + lam_ba;
  if (mpz_odd_p(s.get_mpz_t()))
    throw ParityError("lambda(A,B) + lambda(B,A) = " + s.get_str() + " is odd");
  Integer half;
  mpz_divexact_ui(half.get_mpz_t(), s.get_mpz_t(), 2);
  return KnotClass{a.r + b.r + half};
}

Integer lambda_of_sum(const Integer& lam_ac, const Integer& lam_ab) { return lam_ac + lam_ab; }

PLLinkClass pl_forget(const LinkClass& g) { return PLLinkClass(g.lambda1(), g.lambda2()); }

bool knot_stabilizer_check(const Integer& d, const KnotClass& rg) {
  if (d < 0) throw std::invalid_argument("divisibility must be non-negative");
  if (d == 0) return rg.r == 0;
  return mpz_divisible_p(rg.r.get_mpz_t(), d.get_mpz_t()) != 0;
}

const IntMatrix& ztilde4_basis() {
  static const IntMatrix basis{{1, 0, 0, 0}, {1, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  return basis;
}

const IntMatrix& ztilde2_basis() {
  static const IntMatrix basis{{1, 0}, {1, 2}};
  return basis;
}

}  // namespace emb6
