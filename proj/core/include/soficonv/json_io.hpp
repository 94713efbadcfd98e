#pragma once

#include <string>

#include "soficonv/algebra.hpp"
#include "soficonv/automata.hpp"
#include "soficonv/pisot.hpp"
#include "soficonv/sofic.hpp"

/// Text (de)serialization of the library's value types. Rationals travel as
/// "p/q" strings so that values stay exact; every document written here
/// carries "schema": "soficonv/1".
namespace soficonv::io {

inline constexpr const char* kSchema = "soficonv/1";

/// {"minpoly": [c0, ..., cn], "interval": ["lo", "hi"]}, constant term first.
FieldDescriptor descriptor_from_json(const std::string& text);
std::string descriptor_to_json(const FieldDescriptor& d);

/// {"R": [[..]], "M": [[[..]]], "C": [..]}.
sofic::LinearRepresentation linrep_from_json(const std::string& text);
std::string linrep_to_json(const sofic::LinearRepresentation& lr);

/// {"p": [..], "P": [[..]]}.
sofic::MarkovMeasure markov_from_json(const std::string& text);
std::string markov_to_json(const sofic::MarkovMeasure& m);

/// {"states": [..], "edges": [[from, label, to]], "initial": [..]}.
automata::LabeledGraph graph_from_json(const std::string& text);
std::string graph_to_json(const automata::LabeledGraph& g);

/// Graph form of a carry transducer: states "q0", "q1", ... with their exact
/// coordinates, edges labelled "w/e".
std::string transducer_to_json(const pisot::Transducer& t);
std::string transducer_to_dot(const pisot::Transducer& t, const std::string& name = "T");

std::string rational_matrix_to_json(const RationalMatrix& m);

}  // namespace soficonv::io
