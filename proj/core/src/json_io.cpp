#include "flowlab/json_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace flowlab {

namespace {

Json rational_json(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j) {
  if (!j.is_string()) raise(Errc::ParseError, "expected rational string, got " + j.dump());
  return Rational::fromString(j.get<std::string>());
}

Capacity capacity_from(const Json& j) {
  if (!j.is_string()) raise(Errc::ParseError, "expected capacity string, got " + j.dump());
  return Capacity::fromString(j.get<std::string>());
}

Json arc_pair_json(const std::pair<ArcId, Dir>& p) {
  return Json::array({p.first, to_string(p.second)});
}

std::pair<ArcId, Dir> arc_pair_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) raise(Errc::ParseError, "expected [arcId, dir] pair");
  std::string d = j[1].get<std::string>();
  if (d != "F" && d != "B") raise(Errc::ParseError, "bad direction '" + d + "'");
  return {j[0].get<ArcId>(), d == "F" ? Dir::Forward : Dir::Backward};
}

}  // namespace

Json network_to_json(const Network& net) {
  Json j;
  j["nodes"] = Json::array();
  for (const Node& n : net.nodes) {
    Json node{{"id", n.id}, {"balance", rational_json(n.balance)}};
    if (n.label) node["label"] = *n.label;
    j["nodes"].push_back(std::move(node));
  }
  j["arcs"] = Json::array();
  for (const Arc& a : net.arcs) {
    Json arc{{"id", a.id},
             {"tail", a.tail},
             {"head", a.head},
             {"cost", rational_json(a.cost)},
             {"capacity", a.capacity.str()}};
    if (a.label) arc["label"] = *a.label;
    j["arcs"].push_back(std::move(arc));
  }
  if (net.source) j["source"] = *net.source;
  if (net.sink) j["sink"] = *net.sink;
  return j;
}

Network network_from_json(const Json& j) {
  Network net;
  if (!j.is_object() || !j.contains("nodes") || !j.contains("arcs"))
    raise(Errc::ParseError, "network JSON needs 'nodes' and 'arcs'");
  for (const Json& node : j["nodes"]) {
    NodeId id = net.addNode(rational_from(node.at("balance")),
                            node.contains("label")
                                ? std::optional<std::string>(node["label"].get<std::string>())
                                : std::nullopt);
    if (id != node.at("id").get<NodeId>())
      raise(Errc::ParseError, "node ids must be dense and in order");
  }
  for (const Json& arc : j["arcs"]) {
    ArcId id = net.addArc(arc.at("tail").get<NodeId>(), arc.at("head").get<NodeId>(),
                          rational_from(arc.at("cost")), capacity_from(arc.at("capacity")),
                          arc.contains("label")
                              ? std::optional<std::string>(arc["label"].get<std::string>())
                              : std::nullopt);
    if (id != arc.at("id").get<ArcId>())
      raise(Errc::ParseError, "arc ids must be dense and in order");
  }
  if (j.contains("source")) net.source = j["source"].get<NodeId>();
  if (j.contains("sink")) net.sink = j["sink"].get<NodeId>();
  return net;
}

Json basis_to_json(const TreeBasis& basis) {
  return Json{{"root", basis.root},
              {"tree", basis.treeArcs},
              {"atLower", basis.atLower},
              {"atUpper", basis.atUpper}};
}

TreeBasis basis_from_json(const Json& j) {
  TreeBasis b;
  b.root = j.at("root").get<NodeId>();
  b.treeArcs = j.at("tree").get<std::vector<ArcId>>();
  b.atLower = j.at("atLower").get<std::vector<ArcId>>();
  b.atUpper = j.at("atUpper").get<std::vector<ArcId>>();
  return b;
}

Json flow_to_json(const Flow& flow) {
  Json j = Json::array();
  for (const Rational& v : flow.values) j.push_back(rational_json(v));
  return j;
}

Flow flow_from_json(const Json& j) {
  Flow f;
  for (const Json& v : j) f.values.push_back(rational_from(v));
  return f;
}

Json sidecar_to_json(const GadgetNetwork& g) {
  Json j{{"family", to_string(g.meta.family)},
         {"level", g.meta.level},
         {"sign", g.meta.sign},
         {"r", rational_json(g.meta.r)},
         {"epsilon", rational_json(g.meta.epsilon)},
         {"watched", g.watched},
         {"initialFlow", flow_to_json(g.initialFlow)}};
  Json roles = Json::object();
  for (const auto& [label, id] : g.roles) roles[label] = id;
  j["roles"] = std::move(roles);
  if (g.initialBasis) j["initialBasis"] = basis_to_json(*g.initialBasis);
  return j;
}

GadgetNetwork gadget_from_json(const Json& netJson, const Json& sidecarJson) {
  GadgetNetwork g;
  g.net = network_from_json(netJson);
  g.meta.family = gadget_family_from_string(sidecarJson.at("family").get<std::string>());
  g.meta.level = sidecarJson.at("level").get<int>();
  g.meta.sign = sidecarJson.at("sign").get<int>();
  g.meta.r = rational_from(sidecarJson.at("r"));
  g.meta.epsilon = rational_from(sidecarJson.at("epsilon"));
  g.watched = sidecarJson.at("watched").get<std::vector<ArcId>>();
  g.initialFlow = flow_from_json(sidecarJson.at("initialFlow"));
  for (const auto& [label, id] : sidecarJson.at("roles").items())
    g.roles[label] = id.get<NodeId>();
  if (sidecarJson.contains("initialBasis"))
    g.initialBasis = basis_from_json(sidecarJson["initialBasis"]);
  return g;
}

Json ssp_iteration_to_json(const SspIteration& it) {
  Json j{{"j", it.index},
         {"path", it.pathNodes},
         {"cost", rational_json(it.pathCost)},
         {"amount", rational_json(it.amount)}};
  Json arcs = Json::array();
  for (const auto& p : it.pathArcs) arcs.push_back(arc_pair_json(p));
  j["arcs"] = std::move(arcs);
  if (it.flowOnWatched) j["watchedFlow"] = rational_json(*it.flowOnWatched);
  return j;
}

Json ns_pivot_to_json(const PivotRecord& p) {
  Json cycle = Json::array();
  for (const auto& step : p.cycleArcs) cycle.push_back(arc_pair_json(step));
  return Json{{"j", p.index},
              {"entering", arc_pair_json({p.enteringArc, p.enteringDir})},
              {"reducedCost", rational_json(p.reducedCost)},
              {"cycle", std::move(cycle)},
              {"theta", rational_json(p.theta)},
              {"leaving", Json::array({p.leavingArc, to_string(p.leavingBound)})},
              {"basisAfter", p.basisAfter},
              {"watchedInBasis", p.watchedInBasis},
              {"enteringTied", p.enteringTied},
              {"leavingTied", p.leavingTied}};
}

TraceWriter::TraceWriter(std::ostream& out, const std::string& arrayKey) : out_(out) {
  out_ << "{\"" << arrayKey << "\":[";
}

void TraceWriter::record(const Json& j) {
  out_ << (first_ ? "\n" : ",\n") << j.dump();
  first_ = false;
  out_.flush();
}

void TraceWriter::finish(const Json& footer) {
  out_ << "\n]";
  for (const auto& [key, value] : footer.items()) out_ << ",\"" << key << "\":" << value.dump();
  out_ << "}\n";
  out_.flush();
  finished_ = true;
}

void write_ssp_trace(std::ostream& out, const SspTrace& trace) {
  TraceWriter writer(out, "iterations");
  for (const SspIteration& it : trace.iterations) writer.record(ssp_iteration_to_json(it));
  writer.finish(Json{{"iterationCount", trace.iterations.size()},
                     {"totalCost", trace.totalCost.str()}});
}

void write_ns_trace(std::ostream& out, const NsTrace& trace, const Rational& finalCost) {
  TraceWriter writer(out, "pivots");
  for (const PivotRecord& p : trace.pivots) writer.record(ns_pivot_to_json(p));
  writer.finish(Json{{"finalCost", finalCost.str()}, {"pivotCount", trace.pivots.size()}});
}

SspTrace ssp_trace_from_json(const Json& j) {
  SspTrace trace;
  for (const Json& rec : j.at("iterations")) {
    SspIteration it;
    it.index = rec.at("j").get<std::int64_t>();
    it.pathNodes = rec.at("path").get<std::vector<NodeId>>();
    for (const Json& p : rec.at("arcs")) it.pathArcs.push_back(arc_pair_from(p));
    it.pathCost = rational_from(rec.at("cost"));
    it.amount = rational_from(rec.at("amount"));
    if (rec.contains("watchedFlow")) it.flowOnWatched = rational_from(rec["watchedFlow"]);
    trace.iterations.push_back(std::move(it));
  }
  if (j.contains("totalCost")) trace.totalCost = rational_from(j["totalCost"]);
  return trace;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::IoError, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::IoError, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) raise(Errc::IoError, "write to '" + path + "' failed");
}

std::string sidecar_path(const std::string& networkPath) {
  const std::string suffix = ".json";
  if (networkPath.size() > suffix.size() &&
      networkPath.compare(networkPath.size() - suffix.size(), suffix.size(), suffix) == 0)
    return networkPath.substr(0, networkPath.size() - suffix.size()) + ".sidecar.json";
  return networkPath + ".sidecar";
}

}  // namespace flowlab
