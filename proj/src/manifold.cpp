#include "emb6/manifold.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace emb6 {

void SurgeryPresentation::validate() const {
  if (!linking.is_square())
    throw ValidationError("linking matrix of '" + name + "' is not square");
  if (!linking.is_symmetric())
    throw ValidationError("linking matrix of '" + name + "' is not symmetric");
}

HomologyData homology(const SurgeryPresentation& p) {
  p.validate();
  HomologyData h;
  h.h1_snf = smith_normal_form(p.linking);
  h.h1.free_rank = p.size() - h.h1_snf.rank();
  for (const auto& d : h.h1_snf.invariant_factors)
    if (d > 1) h.h1.torsion.push_back(d);
  h.h2_basis = kernel_basis(p.linking);
  if (h.h2_basis.size() != h.h1.free_rank)
    throw std::logic_error("homology: rank H2 differs from rank H1 for '" + p.name + "'");
  return h;
}

Integer pairing(const H1Class& x, const H2Class& v) {
  if (x.coords.size() != v.coords.size())
    throw DimensionError("pairing: H1 and H2 classes come from different presentations");
  return dot(x.coords, v.coords);
}

namespace {

IntVector canonical_coords(const HomologyData& h, const IntVector& x) {
  IntVector y = h.h1_snf.U * x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Integer& d = h.h1_snf.invariant_factors[i];
    if (d != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
  }
  return y;
}

Integer free_part_gcd(const HomologyData& h, const IntVector& canonical) {
  Integer g = 0;
  for (std::size_t i = 0; i < canonical.size(); ++i)
    if (h.h1_snf.invariant_factors[i] == 0) g = gcd(g, canonical[i]);
  return g;
}

void check_length(const SurgeryPresentation& p, const IntVector& x, const char* what) {
  if (x.size() != p.size())
    throw DimensionError(std::string(what) + ": class has " + std::to_string(x.size()) +
                         " coordinates but '" + p.name + "' has " + std::to_string(p.size()) +
                         " surgery components");
}

}  // namespace

IntVector canonical_h1(const SurgeryPresentation& p, const H1Class& x) {
  check_length(p, x.coords, "canonical_h1");
  return canonical_coords(homology(p), x.coords);
}

Integer divisibility(const SurgeryPresentation& p, const H1Class& x) {
  check_length(p, x.coords, "divisibility");
  const HomologyData h = homology(p);
  return free_part_gcd(h, canonical_coords(h, x.coords));
}

Manifold::Manifold(SurgeryPresentation p)
    : presentation_(std::move(p)),
      homology_(emb6::homology(presentation_)),
      u_inverse_(unimodular_inverse(homology_.h1_snf.U)) {}

void Manifold::check_h1(const H1Class& x) const { check_length(presentation_, x.coords, "H1 class"); }

IntVector Manifold::canonical_h1(const H1Class& x) const {
  check_h1(x);
  return canonical_coords(homology_, x.coords);
}

Integer Manifold::divisibility(const H1Class& x) const {
  check_h1(x);
  return free_part_gcd(homology_, canonical_coords(homology_, x.coords));
}

bool Manifold::same_h1_class(const H1Class& a, const H1Class& b) const {
  return canonical_h1(a) == canonical_h1(b);
}

H1Class Manifold::h1_from_canonical(const IntVector& canonical) const {
  check_length(presentation_, canonical, "h1_from_canonical");
  return H1Class{u_inverse_ * canonical};
}

H2Class Manifold::h2_class(IntVector v) const {
  check_length(presentation_, v, "H2 class");
  const IntVector image = presentation_.linking * v;
  for (const auto& x : image)
    if (x != 0) throw ValidationError("vector " + to_string(v) + " is not in the kernel of the linking matrix");
  return H2Class{std::move(v)};
}

std::vector<H2Class> Manifold::h2_basis() const {
  std::vector<H2Class> out;
  out.reserve(homology_.h2_basis.size());
  for (const auto& v : homology_.h2_basis) out.push_back(H2Class{v});
  return out;
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      throw ValidationError("not a decimal integer: \"" + j.get<std::string>() + "\"");
    return x;
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

nlohmann::json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

IntVector vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of integers, got " + j.dump());
  IntVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

nlohmann::json vector_to_json(const IntVector& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

SurgeryPresentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("manifold file must be a JSON object");
  SurgeryPresentation p;
  p.name = j.value("name", std::string("unnamed"));
  if (!j.contains("linking_matrix")) throw ValidationError("manifold file lacks \"linking_matrix\"");
  const auto& rows = j.at("linking_matrix");
  if (!rows.is_array()) throw ValidationError("\"linking_matrix\" must be an array of rows");
  std::vector<IntVector> parsed;
  for (const auto& r : rows) parsed.push_back(vector_from_json(r));
  const std::size_t n = parsed.size();
  for (const auto& r : parsed)
    if (r.size() != n) throw ValidationError("linking matrix of '" + p.name + "' is not square");
  p.linking = IntMatrix::from_rows(parsed, n);
  p.validate();
  return p;
}

nlohmann::json presentation_to_json(const SurgeryPresentation& p) {
  return {{"name", p.name}, {"linking_matrix", matrix_to_json(p.linking)}};
}

SurgeryPresentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return presentation_from_json(j);
}

}  // namespace emb6
