#include "emb6/framedlink.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

namespace emb6 {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<Integer> parse_integer(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
  return Integer(std::string(s));
}

}  // namespace

LinkDiagram parse_diagram(std::string_view text) {
  LinkDiagram d;
  bool have_components = false;
  bool have_framings = false;
  std::size_t line_no = 0;
  // Last line mentioning each unordered pair, for symmetry diagnostics.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_line;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const Token& kw = tokens.front();
    if (kw.text == "components") {
      if (have_components) throw ParseError(line_no, kw.column, "duplicate 'components' declaration");
      if (tokens.size() != 2) throw ParseError(line_no, kw.column, "expected 'components N'");
      auto n = parse_integer(tokens[1].text);
      if (!n || *n < 0 || !n->fits_ulong_p())
        throw ParseError(line_no, tokens[1].column, "component count must be a non-negative integer");
      d.components = n->get_ui();
      have_components = true;
    } else if (kw.text == "framings") {
      if (!have_components) throw ParseError(line_no, kw.column, "'framings' before 'components'");
      if (have_framings) throw ParseError(line_no, kw.column, "duplicate 'framings' declaration");
      if (tokens.size() - 1 != d.components)
        throw ParseError(line_no, kw.column,
                         "expected " + std::to_string(d.components) + " framings, got " +
                             std::to_string(tokens.size() - 1));
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        auto f = parse_integer(tokens[k].text);
        if (!f) throw ParseError(line_no, tokens[k].column, "framing '" + std::string(tokens[k].text) + "' is not an integer");
        d.framings.push_back(*f);
      }
      have_framings = true;
    } else if (kw.text == "x") {
      if (!have_components) throw ParseError(line_no, kw.column, "crossing before 'components'");
      if (tokens.size() != 4) throw ParseError(line_no, kw.column, "expected 'x i j s'");
      std::size_t idx[2];
      for (int k = 0; k < 2; ++k) {
        const Token& t = tokens[1 + k];
        auto v = parse_integer(t.text);
        if (!v || *v < 1 || *v > static_cast<unsigned long>(d.components))
          throw ParseError(line_no, t.column,
                           "component index '" + std::string(t.text) + "' out of range 1.." +
                               std::to_string(d.components));
        idx[k] = v->get_ui() - 1;
      }
      const Token& s = tokens[3];
      int sign = 0;
      if (s.text == "+") sign = 1;
      else if (s.text == "-") sign = -1;
      else throw ParseError(line_no, s.column, "crossing sign must be '+' or '-', got '" + std::string(s.text) + "'");
      d.crossings.push_back({idx[0], idx[1], sign});
      pair_line[{std::min(idx[0], idx[1]), std::max(idx[0], idx[1])}] = line_no;
    } else {
      throw ParseError(line_no, kw.column, "unknown declaration '" + std::string(kw.text) + "'");
    }
    if (end == text.size()) break;
  }

  if (!have_components) throw ParseError(line_no, 1, "missing 'components' declaration");
  if (!have_framings) {
    if (d.components != 0) throw ParseError(line_no, 1, "missing 'framings' declaration");
  }
  for (const auto& [pair, where] : pair_line) {
    if (pair.first == pair.second) continue;
    if (linking_number(d, pair.first, pair.second) != linking_number(d, pair.second, pair.first))
      throw ParseError(where, 1,
                       "crossings between components " + std::to_string(pair.first + 1) + " and " +
                           std::to_string(pair.second + 1) + " give different over/under sign sums");
  }
  return d;
}

LinkDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

void LinkDiagram::validate() const {
  if (framings.size() != components)
    throw ValidationError("diagram has " + std::to_string(components) + " components but " +
                          std::to_string(framings.size()) + " framings");
  for (const auto& c : crossings) {
    if (c.over >= components || c.under >= components)
      throw ValidationError("crossing refers to a component out of range");
    if (c.sign != 1 && c.sign != -1) throw ValidationError("crossing sign must be +1 or -1");
  }
  for (std::size_t i = 0; i < components; ++i)
    for (std::size_t j = i + 1; j < components; ++j)
      if (linking_number(*this, i, j) != linking_number(*this, j, i))
        throw ValidationError("linking numbers of components " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " are not symmetric");
}

Integer linking_number(const LinkDiagram& d, std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("linking_number: a component with itself is its framing");
  if (i >= d.components || j >= d.components) throw DimensionError("linking_number: component out of range");
  Integer lk = 0;
  for (const auto& c : d.crossings)
    if (c.over == i && c.under == j) lk += c.sign;
  return lk;
}

void FramedFamily::validate() const {
  if (pairwise_lk.rows() != framings.size() || !pairwise_lk.is_symmetric())
    throw ValidationError("pairwise linking matrix must be square, symmetric and match the framings");
  for (std::size_t i = 0; i < framings.size(); ++i)
    if (pairwise_lk(i, i) != 0) throw ValidationError("pairwise linking matrix must have zero diagonal");
}

FramedFamily framed_family(const LinkDiagram& d) {
  d.validate();
  FramedFamily f{d.framings, IntMatrix(d.components, d.components)};
  for (std::size_t i = 0; i < d.components; ++i)
    for (std::size_t j = 0; j < d.components; ++j)
      if (i != j) f.pairwise_lk(i, j) = linking_number(d, i, j);
  return f;
}

namespace {

void check_subset(const FramedFamily& f, const std::vector<std::size_t>& s) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] >= f.size()) throw DimensionError("component index out of range");
    for (std::size_t m = 0; m < k; ++m)
      if (s[m] == s[k]) throw std::invalid_argument("component listed twice");
  }
}

}  // namespace

Integer hopf_invariant(const FramedFamily& f, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw std::invalid_argument("hopf_invariant: empty subset");
  check_subset(f, subset);
  Integer h = 0;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    h += f.framings[subset[k]];
    for (std::size_t m = k + 1; m < subset.size(); ++m) h += 2 * f.pairwise_lk(subset[k], subset[m]);
  }
  return h;
}

Integer cross_linking(const FramedFamily& f, const std::vector<std::size_t>& s, const std::vector<std::size_t>& t) {
  check_subset(f, s);
  check_subset(f, t);
  Integer lk = 0;
  for (auto i : s)
    for (auto j : t) {
      if (i == j) throw std::invalid_argument("cross_linking: subsets overlap");
      lk += f.pairwise_lk(i, j);
    }
  return lk;
}

SurgeryPresentation surgery_matrix(const LinkDiagram& d, std::string name) {
  const FramedFamily f = framed_family(d);
  SurgeryPresentation p{std::move(name), f.pairwise_lk};
  for (std::size_t i = 0; i < d.components; ++i) p.linking(i, i) = f.framings[i];
  p.validate();
  return p;
}

}  // namespace emb6
