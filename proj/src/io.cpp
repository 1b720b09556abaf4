#include "cutideal/io.hpp"

#include <algorithm>
#include <fstream>
#include <cctype>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cutideal {

using json = nlohmann::json;

namespace {

std::string edge_context(std::size_t index, const json& e) {
  std::ostringstream out;
  out << "edge #" << index;
  if (e.is_object() && e.contains("u") && e.contains("v"))
    out << " {" << e["u"].dump() << "," << e["v"].dump() << "}";
  return out.str();
}

template <class T>
T get_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": field \"" + key + "\" has the wrong type");
  }
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Graph parse_graph_json(std::string_view text) {
  const json doc = parse_json(text, "graph");
  if (!doc.is_object()) throw ParseError("graph JSON must be an object");
  const int n = get_field<int>(doc, "vertices", "graph");
  if (n < 1) throw ParseError("graph: \"vertices\" must be positive");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("graph: missing \"edges\" array");

  std::vector<Edge> edges;
  std::set<EdgeKey> seen;
  std::size_t index = 0;
  for (const json& e : doc["edges"]) {
    const std::string where = edge_context(index++, e);
    if (!e.is_object()) throw ParseError(where + ": not an object");
    Edge edge;
    edge.u = get_field<int>(e, "u", where);
    edge.v = get_field<int>(e, "v", where);
    if (edge.u == edge.v) throw ParseError(where + ": loop");
    if (edge.u < 1 || edge.v < 1 || edge.u > n || edge.v > n) throw ParseError(where + ": vertex out of range");
    if (edge.u > edge.v) std::swap(edge.u, edge.v);
    edge.label = e.contains("label") ? get_field<std::string>(e, "label", where)
                                     : canonical_label(edge.u, edge.v);
    if (edge.label.empty()) throw ParseError(where + ": empty label");
    edge.mult = e.contains("mult") ? get_field<Multiplicity>(e, "mult", where) : 1;
    if (edge.mult == 0) throw ParseError(where + ": zero multiplicity");
    if (!seen.insert(edge.key()).second) throw ParseError(where + ": duplicate edge");
    edges.push_back(std::move(edge));
  }
  return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}, {"mult", e.mult}});
  json doc = {{"vertices", g.vertex_count()}, {"edges", edges}};
  return doc.dump(2);
}

std::string format_monomial(const Monomial& m, int n) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += "r{" + to_string(Partition::from_index(n, k)) + "}";
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

std::string format_binomial(const Binomial& b, int n) {
  return format_monomial(b.plus(), n) + " - " + format_monomial(b.minus(), n);
}

namespace {

class BinomialParser {
 public:
  BinomialParser(std::string_view text, int n) : n_(n) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
    whole_ = std::string(text);
  }

  Binomial parse() {
    Monomial plus = monomial();
    expect('-');
    Monomial minus = monomial();
    if (pos_ != text_.size()) fail("trailing input at '" + text_.substr(pos_) + "'");
    if (plus == minus) fail("both sides are equal");
    return Binomial(std::move(plus), std::move(minus));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad binomial '" + whole_ + "': " + why);
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "' at position " + std::to_string(pos_));
    ++pos_;
  }

  Exponent number() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > std::numeric_limits<Exponent>::max()) fail("exponent too large");
    }
    if (pos_ == start) fail("expected a number at position " + std::to_string(start));
    return static_cast<Exponent>(v);
  }

  Monomial monomial() {
    Monomial m(partition_count(n_), 0);
    if (peek('1')) {
      ++pos_;
      return m;
    }
    while (true) {
      expect('r');
      expect('{');
      const std::size_t close = text_.find('}', pos_);
      if (close == std::string::npos) fail("unterminated '{'");
      const Partition p = parse_partition(text_.substr(pos_, close - pos_), n_);
      pos_ = close + 1;
      Exponent e = 1;
      if (peek('^')) {
        ++pos_;
        e = number();
      }
      m[p.index()] += e;
      if (!peek('*')) break;
      ++pos_;
    }
    return m;
  }

  int n_;
  std::string text_;
  std::string whole_;
  std::size_t pos_ = 0;
};

json monomial_json(const Monomial& m, int n) {
  json out = json::object();
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k] != 0) out[to_string(Partition::from_index(n, k))] = m[k];
  return out;
}

Monomial monomial_from_json(const json& j, int n, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be an object");
  Monomial m(partition_count(n), 0);
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
      throw ParseError(where + ": exponent of " + key + " must be a nonnegative integer");
    m[parse_partition(key, n).index()] += value.get<Exponent>();
  }
  return m;
}

}  // namespace

Binomial parse_binomial(std::string_view text, int n) { return BinomialParser(text, n).parse(); }

std::string format_ideal_text(const Ideal& ideal) {
  if (ideal.is_zero()) return "(0)\n";
  std::string out;
  for (const Binomial& b : ideal.gens()) out += format_binomial(b, ideal.ground_size()) + "\n";
  return out;
}

std::string ideal_to_json(const Ideal& ideal) {
  const int n = ideal.ground_size();
  json gens = json::array();
  for (const Binomial& b : ideal.gens())
    gens.push_back({{"plus", monomial_json(b.plus(), n)}, {"minus", monomial_json(b.minus(), n)}});
  json doc = {{"n", n}, {"order", ideal.order().name()}, {"generators", gens}};
  return doc.dump(2);
}

Ideal parse_ideal_json(std::string_view text) {
  const json doc = parse_json(text, "ideal");
  if (!doc.is_object()) throw ParseError("ideal JSON must be an object");
  const int n = get_field<int>(doc, "n", "ideal");
  if (n < 1 || n > 20) throw ParseError("ideal: \"n\" out of range");
  TermOrder order = TermOrder::degrevlex();
  if (doc.contains("order")) {
    const auto name = get_field<std::string>(doc, "order", "ideal");
    if (name == "lex")
      order = TermOrder::lex();
    else if (name != "degrevlex")
      throw ParseError("ideal: unknown order \"" + name + "\"");
  }
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw ParseError("ideal: missing \"generators\" array");
  std::vector<Binomial> gens;
  std::size_t index = 0;
  for (const json& g : doc["generators"]) {
    const std::string where = "generator #" + std::to_string(index++);
    if (!g.is_object() || !g.contains("plus") || !g.contains("minus"))
      throw ParseError(where + ": needs \"plus\" and \"minus\"");
    Monomial plus = monomial_from_json(g["plus"], n, where + " plus");
    Monomial minus = monomial_from_json(g["minus"], n, where + " minus");
    if (plus == minus) throw ParseError(where + ": zero binomial");
    gens.emplace_back(std::move(plus), std::move(minus));
  }
  return Ideal(n, std::move(gens), order);
}

std::string format_matrix(const ExponentMatrix& m) {
  std::vector<std::string> header;
  for (const Partition& p : m.cols()) header.push_back(to_string(p));
  std::vector<std::string> names;
  for (const RowKey& k : m.rows()) names.push_back(to_string(k));

  std::size_t name_width = 0;
  for (const auto& s : names) name_width = std::max(name_width, s.size());
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (std::size_t r = 0; r < m.rows().size(); ++r)
      width[c] = std::max(width[c], std::to_string(m.entries()(r, c)).size());
  }

  std::ostringstream out;
  out << std::string(name_width, ' ');
  for (std::size_t c = 0; c < header.size(); ++c) out << ' ' << std::setw(static_cast<int>(width[c])) << header[c];
  out << '\n';
  for (std::size_t r = 0; r < names.size(); ++r) {
    out << std::left << std::setw(static_cast<int>(name_width)) << names[r] << std::right;
    for (std::size_t c = 0; c < header.size(); ++c)
      out << ' ' << std::setw(static_cast<int>(width[c])) << m.entries()(r, c);
    out << '\n';
  }
  return out.str();
}

}  // namespace cutideal
