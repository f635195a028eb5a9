#pragma once

#include <iosfwd>
#include <string>

#include "ipq/instances.hpp"
#include "ipq/matrix.hpp"

namespace ipq {

// Text formats, one record per line, '\n' separators:
//   dense <n> <rho>     then n rows of n integers
//   sparse <n> <rho>    then "<i> <j> <v>" triples, 0-based, unlisted = 0
//   weights <n> <gamma> then n integers, one per line
//   graph <n> <edges>   then "<u> <v>" per edge, 0-based, no self-loops
// Parse failures throw ParseError naming the offending line.

Matrix load_matrix(std::istream& in);
Matrix load_matrix_file(const std::string& path);

WeightVector load_weights(std::istream& in);
WeightVector load_weights_file(const std::string& path);

GraphInstance load_graph(std::istream& in);
GraphInstance load_graph_file(const std::string& path);

std::string serialize_dense(const Matrix& a);
std::string serialize_sparse(const Matrix& a);
std::string serialize_weights(const WeightVector& v);
std::string serialize_graph(const GraphInstance& g);

}  // namespace ipq
