#pragma once

// Framed link diagrams as signed crossing lists.
//
// Text format, one declaration per line, '#' starts a comment line:
//
//   components N
//   framings f1 ... fN
//   x i j s          component i crosses over component j with sign s in {+,-}
//
// Component indices in the text are 1-based; the C++ API is 0-based.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "emb6/intlinalg.hpp"
#include "emb6/manifold.hpp"

namespace emb6 {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Crossing {
  std::size_t over;
  std::size_t under;
  int sign;
};

struct LinkDiagram {
  std::size_t components = 0;
  std::vector<Crossing> crossings;
  std::vector<Integer> framings;

  /// Throws ValidationError on bad indices, signs, framing count or asymmetric linking.
  void validate() const;
};

/// Self-linking numbers h and pairwise linking numbers of a framed family of circles.
struct FramedFamily {
  std::vector<Integer> framings;
  IntMatrix pairwise_lk;

  std::size_t size() const { return framings.size(); }
  void validate() const;
};

LinkDiagram parse_diagram(std::string_view text);
LinkDiagram load_diagram(const std::string& path);

/// Sum of the signs of crossings where component i passes over component j.
Integer linking_number(const LinkDiagram& d, std::size_t i, std::size_t j);

FramedFamily framed_family(const LinkDiagram& d);

/// h of the union of the chosen components: the sum of their framings plus
/// twice the sum of pairwise linking numbers inside the subset.
Integer hopf_invariant(const FramedFamily& f, const std::vector<std::size_t>& subset);

/// Linking number between two disjoint sub-families.
Integer cross_linking(const FramedFamily& f, const std::vector<std::size_t>& s, const std::vector<std::size_t>& t);

SurgeryPresentation surgery_matrix(const LinkDiagram& d, std::string name = "diagram");

}  // namespace emb6
