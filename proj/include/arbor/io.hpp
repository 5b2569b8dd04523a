#pragma once

#include "arbor/certificate.hpp"
#include "arbor/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace arbor {

// Graph:       "p <n> <m>" then m lines "e <u> <v>" with 1 <= u < v <= n.
// Certificate: "c <cover|partition> <class> <k>" then "f <i> <u>-<v> ...".
// Colouring:   "col <kind> <c>" then "v <vertex> <colour>" or "e <u>-<v> <colour>".
// All readers throw FormatError on any deviation.

void write_graph(std::ostream &out, const Graph &g);
Graph read_graph(std::istream &in);

void write_certificate(std::ostream &out, const CoverCertificate &cert);
CoverCertificate read_certificate(std::istream &in);

void write_coloring(std::ostream &out, const ColoringCertificate &col);
/// Vertex colourings are sized for `order` vertices.
ColoringCertificate read_coloring(std::istream &in, int order);

/// Sidecar of "role <vertex> <tag>" lines; roles[0] is ignored.
void write_roles(std::ostream &out, const std::vector<std::string> &roles);

std::string graph_to_string(const Graph &g);
Graph graph_from_string(const std::string &text);

Graph load_graph(const std::filesystem::path &path);
CoverCertificate load_certificate(const std::filesystem::path &path);
ColoringCertificate load_coloring(const std::filesystem::path &path, int order);

/// Graphviz text; certificate parts (if any) become edge colours.
std::string to_dot(const Graph &g, const CoverCertificate *cert = nullptr);

} // namespace arbor
