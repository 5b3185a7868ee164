#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "flowlab/experiments.hpp"
#include "flowlab/gadgets.hpp"
#include "flowlab/netsimplex.hpp"
#include "flowlab/network.hpp"
#include "flowlab/ssp.hpp"

namespace flowlab {

using Json = nlohmann::json;

// Network schema. Rationals travel as canonical strings, so a load/re-emit
// round trip is byte-identical.
Json network_to_json(const Network& net);
Network network_from_json(const Json& j);

// Generator sidecar: roles, watched arcs, initial flow/basis, and the meta
// fields needed to rerun the network.
Json sidecar_to_json(const GadgetNetwork& g);
GadgetNetwork gadget_from_json(const Json& netJson, const Json& sidecarJson);

Json basis_to_json(const TreeBasis& basis);
TreeBasis basis_from_json(const Json& j);

Json flow_to_json(const Flow& flow);
Flow flow_from_json(const Json& j);

// Per-record trace objects (compact, sorted keys).
Json ssp_iteration_to_json(const SspIteration& it);
Json ns_pivot_to_json(const PivotRecord& p);

// Streams a trace file record by record: one JSON object total, with the
// record array written one line per entry so exponential runs never buffer.
class TraceWriter {
 public:
  TraceWriter(std::ostream& out, const std::string& arrayKey);
  void record(const Json& j);
  // footer fields are emitted after the array, in sorted key order
  void finish(const Json& footer);

 private:
  std::ostream& out_;
  bool first_ = true;
  bool finished_ = false;
};

void write_ssp_trace(std::ostream& out, const SspTrace& trace);
void write_ns_trace(std::ostream& out, const NsTrace& trace, const Rational& finalCost);

SspTrace ssp_trace_from_json(const Json& j);

// Canonical file emission: pretty, sorted keys, trailing newline.
std::string dump_canonical(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Sidecar path for a generated network file: "net.json" -> "net.sidecar.json".
std::string sidecar_path(const std::string& networkPath);

}  // namespace flowlab
