#include "soficonv/json_io.hpp"

#include <sstream>

#include "json.hpp"
#include "soficonv/error.hpp"

namespace soficonv::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

Rational rational_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  throw Error(ErrorCode::ParseError, "expected a rational as a \"p/q\" string, got " + v.dump());
}

RationalVector vector_of(const json& v) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "expected an array, got " + v.dump());
  RationalVector out;
  for (const auto& x : v) out.push_back(rational_of(x));
  return out;
}

RationalMatrix matrix_of(const json& v) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "expected a matrix, got " + v.dump());
  const std::size_t rows = v.size();
  const std::size_t cols = rows ? v[0].size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols) throw Error(ErrorCode::ParseError, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational_of(v[i][j]);
  }
  return m;
}

json to_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json to_json(const RationalMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

std::string state_name(std::size_t i) { return "q" + std::to_string(i); }

}  // namespace

FieldDescriptor descriptor_from_json(const std::string& text) {
  const json doc = parse(text);
  FieldDescriptor d;
  for (const auto& c : field(doc, "minpoly")) {
    if (c.is_string()) {
      d.minpoly.push_back(parse_integer(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      d.minpoly.emplace_back(std::to_string(c.get<long long>()));
    } else {
      throw Error(ErrorCode::ParseError, "minpoly coefficients must be integers");
    }
  }
  const json& iv = field(doc, "interval");
  if (!iv.is_array() || iv.size() != 2) throw Error(ErrorCode::ParseError, "interval must be [lo, hi]");
  d.lo = rational_of(iv[0]);
  d.hi = rational_of(iv[1]);
  return d;
}

std::string descriptor_to_json(const FieldDescriptor& d) {
  json doc;
  doc["schema"] = kSchema;
  json poly = json::array();
  for (const auto& c : d.minpoly) poly.push_back(c.get_str());
  doc["minpoly"] = poly;
  doc["interval"] = {to_string(d.lo), to_string(d.hi)};
  return doc.dump();
}

sofic::LinearRepresentation linrep_from_json(const std::string& text) {
  const json doc = parse(text);
  sofic::LinearRepresentation lr;
  for (const auto& r : field(doc, "R")) lr.R.push_back(vector_of(r));
  for (const auto& m : field(doc, "M")) lr.M.push_back(matrix_of(m));
  lr.C = vector_of(field(doc, "C"));
  return lr;
}

std::string linrep_to_json(const sofic::LinearRepresentation& lr) {
  json doc;
  doc["schema"] = kSchema;
  json R = json::array();
  for (const auto& r : lr.R) R.push_back(to_json(r));
  json M = json::array();
  for (const auto& m : lr.M) M.push_back(to_json(m));
  doc["R"] = R;
  doc["M"] = M;
  doc["C"] = to_json(lr.C);
  return doc.dump();
}

sofic::MarkovMeasure markov_from_json(const std::string& text) {
  const json doc = parse(text);
  sofic::MarkovMeasure m;
  m.p = vector_of(field(doc, "p"));
  m.P = matrix_of(field(doc, "P"));
  return m;
}

std::string markov_to_json(const sofic::MarkovMeasure& m) {
  json doc;
  doc["schema"] = kSchema;
  doc["p"] = to_json(m.p);
  doc["P"] = to_json(m.P);
  return doc.dump();
}

automata::LabeledGraph graph_from_json(const std::string& text) {
  const json doc = parse(text);
  std::vector<std::string> states;
  for (const auto& s : field(doc, "states")) states.push_back(s.is_string() ? s.get<std::string>() : s.dump());
  std::vector<std::tuple<std::string, char, std::string>> edges;
  for (const auto& e : field(doc, "edges")) {
    if (!e.is_array() || e.size() != 3) throw Error(ErrorCode::ParseError, "edge must be [from, label, to]");
    auto name = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    const std::string label = name(e[1]);
    if (label.size() != 1) throw Error(ErrorCode::ParseError, "edge labels must be single characters");
    edges.emplace_back(name(e[0]), label[0], name(e[2]));
  }
  std::vector<std::string> initial;
  if (doc.contains("initial")) {
    for (const auto& s : doc.at("initial")) initial.push_back(s.is_string() ? s.get<std::string>() : s.dump());
  }
  return automata::LabeledGraph::build(std::move(states), edges, initial);
}

std::string graph_to_json(const automata::LabeledGraph& g) {
  json doc;
  doc["schema"] = kSchema;
  doc["states"] = g.states();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({g.states()[e.from], std::string(1, e.label), g.states()[e.to]});
  doc["edges"] = edges;
  json initial = json::array();
  for (std::size_t i : g.initial()) initial.push_back(g.states()[i]);
  doc["initial"] = initial;
  return doc.dump();
}

std::string transducer_to_json(const pisot::Transducer& t) {
  json doc;
  doc["schema"] = kSchema;
  doc["window"] = pisot::window_name(t.window);
  json states = json::array();
  json coords = json::array();
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    states.push_back(state_name(i));
    json c;
    c["state"] = state_name(i);
    c["value"] = t.states[i].to_string();
    json coeffs = json::array();
    for (const auto& x : t.states[i].coeffs()) coeffs.push_back(to_string(x));
    c["coeffs"] = coeffs;
    coords.push_back(c);
  }
  doc["states"] = states;
  doc["coordinates"] = coords;
  json edges = json::array();
  for (const auto& e : t.edges) {
    edges.push_back({state_name(e.from), std::to_string(e.input) + "/" + std::to_string(e.output), state_name(e.to)});
  }
  doc["edges"] = edges;
  doc["initial"] = {state_name(0)};
  return doc.dump();
}

std::string transducer_to_dot(const pisot::Transducer& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    os << "  " << state_name(i) << " [label=\"" << t.states[i].to_string() << "\"" << (i == 0 ? ", shape=doublecircle" : "")
       << "];\n";
  }
  for (const auto& e : t.edges) {
    os << "  " << state_name(e.from) << " -> " << state_name(e.to) << " [label=\"" << e.input << "/" << e.output
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string rational_matrix_to_json(const RationalMatrix& m) { return to_json(m).dump(); }

}  // namespace soficonv::io
