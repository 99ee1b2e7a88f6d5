#pragma once

#include <json.hpp>
#include <string>

#include "hyperwalk/equivalence.hpp"
#include "hyperwalk/transforms.hpp"
#include "hyperwalk/walks.hpp"

namespace hyperwalk {

using Json = nlohmann::json;

// Complex entries serialize as [re, im]; bare numbers parse as reals.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json vector_to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd vector_from_json(const Json& j);
Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);
Json tessellation_to_json(const Tessellation& t);
Tessellation tessellation_from_json(const Json& j, int covered_set_size);

/// Builds a walk from its JSON description (see the format reference in the
/// README). Operator values are preset names or explicit matrices.
WalkInstance walk_from_json(const Json& j);

/// Structural skeleton of the same document, without realizing operators.
WalkShape shape_from_json(const Json& j);

/// Walk document that walk_from_json can load back. Transform targets use
/// explicit operator payloads (full matrices).
Json walk_to_json(const WalkInstance& w);

/// Initial state: explicit amplitude array, {"amplitudes": [...]}, or a
/// basis label object matching the walk's basis kind.
StateVector state_from_json(const Json& j, const WalkInstance& w);

Json measurement_to_json(const MeasurementMap& m);
MeasurementMap measurement_from_json(const Json& j);

Json transform_result_to_json(const TransformResult& tr);
TransformResult transform_result_from_json(const Json& j);

Json equivalence_report_to_json(const EquivalenceReport& r);
Json suite_report_to_json(const SuiteReport& r);

/// Shortest-round-trip decimal form, for byte-stable CSV output.
std::string format_double(double x);

Json load_json_file(const std::string& path);

}  // namespace hyperwalk
