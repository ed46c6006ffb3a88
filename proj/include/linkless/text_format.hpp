#pragma once

// Plain-text file formats. All are line based, UTF-8, with `#` starting a
// comment line and blank lines ignored.
//
//   graph        vertices: L1 L2 ... Ln
//                edge: U V                      (one per edge)
//   certificate  part: V1 V2 ...                (six lines per certificate;
//                                                the first two parts are the
//                                                non-adjacent pair)
//   model        branch X: V1 V2 ...            (one per pattern vertex)
//   coordinates  coord: V x y z                 (integers, one per vertex)

#include <string>
#include <string_view>
#include <vector>

#include "linkless/embedding.hpp"
#include "linkless/graph.hpp"
#include "linkless/minor.hpp"

namespace linkless {

class ParseError : public GraphError {
public:
  ParseError(int line, const std::string& message)
      : GraphError("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

/// Edges are written sorted by (lower index, higher index).
std::string write_graph(const Graph& g);
Graph parse_graph(std::string_view text);

std::string write_certificates(const Graph& g, const std::vector<PartitionCertificate>& certs);
std::vector<PartitionCertificate> parse_certificates(std::string_view text, const Graph& g);

std::string write_model(const Graph& pattern, const Graph& host, const MinorModel& model);
MinorModel parse_model(std::string_view text, const Graph& pattern, const Graph& host);

std::string write_embedding(const Graph& g, const Embedding3& e);
Embedding3 parse_embedding(std::string_view text, const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace linkless
