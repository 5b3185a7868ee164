#include "flowlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "flowlab/dot.hpp"
#include "flowlab/experiments.hpp"
#include "flowlab/json_io.hpp"

namespace flowlab::cli {

namespace {

std::vector<Rational> parse_instance_list(const std::string& list) {
  std::vector<Rational> values;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) values.push_back(Rational::fromString(item));
  if (values.empty()) raise(Errc::UsageError, "--a needs at least one value");
  return values;
}

std::int64_t default_budget(const std::optional<GadgetNetwork>& gadget) {
  if (gadget && gadget->meta.level + 4 < 62) return std::int64_t{1} << (gadget->meta.level + 4);
  return 1000000;
}

struct LoadedNetwork {
  Network net;
  std::optional<GadgetNetwork> gadget;  // present when a sidecar file exists
};

LoadedNetwork load_network(const std::string& path) {
  LoadedNetwork loaded;
  Json netJson = load_json_file(path);
  std::string sidecar = sidecar_path(path);
  if (std::ifstream probe(sidecar); probe) {
    loaded.gadget = gadget_from_json(netJson, load_json_file(sidecar));
    loaded.net = loaded.gadget->net;
  } else {
    loaded.net = network_from_json(netJson);
  }
  validate_network(loaded.net);
  return loaded;
}

int run_gen(const std::string& kind, const std::string& list, int sign, const std::string& rText,
            int level, bool perturb, const std::string& outPath) {
  PartitionInstance inst = normalize_instance(parse_instance_list(list));
  if (sign != 1 && sign != -1) raise(Errc::UsageError, "--sign must be 1 or -1");
  Rational r = Rational::fromString(rText);
  int effectiveLevel = level < 0 ? inst.size() : level;

  GadgetNetwork g;
  if (kind == "nssp")
    g = build_counting_ssp(inst, sign, effectiveLevel);
  else if (kind == "gssp")
    g = build_gssp(inst);
  else if (kind == "ns-gadget")
    g = build_counting_ns(inst, sign, r, effectiveLevel);
  else if (kind == "ns-harness")
    g = build_ns_harness(inst, sign, r, effectiveLevel);
  else if (kind == "gns")
    g = build_gns(inst, perturb);
  else
    raise(Errc::UsageError, "unknown gadget kind '" + kind + "'");

  write_text_file(outPath, dump_canonical(network_to_json(g.net)));
  write_text_file(sidecar_path(outPath), dump_canonical(sidecar_to_json(g)));
  return 0;
}

int run_run(const std::string& algo, const std::string& path, const std::string& watchLabel,
            const std::string& tracePath, std::int64_t maxIter, std::ostream& out) {
  LoadedNetwork loaded = load_network(path);

  std::optional<ArcId> watched;
  if (!watchLabel.empty()) {
    watched = loaded.net.arcByLabel(watchLabel);
    if (!watched) raise(Errc::UsageError, "no arc labeled '" + watchLabel + "'");
  } else if (loaded.gadget && loaded.gadget->watched.size() == 1) {
    watched = loaded.gadget->watched.front();
  }
  if (maxIter <= 0) maxIter = default_budget(loaded.gadget);

  std::ofstream traceFile;
  if (!tracePath.empty()) {
    traceFile.open(tracePath, std::ios::binary);
    if (!traceFile) raise(Errc::IoError, "cannot open '" + tracePath + "' for writing");
  }

  Json summary;
  if (algo == "ssp") {
    std::optional<TraceWriter> writer;
    if (traceFile.is_open()) writer.emplace(traceFile, "iterations");
    SspTrace trace = ssp_run(loaded.net, watched, maxIter,
                             [&](const SspIteration& it, const Flow&) {
                               if (writer) writer->record(ssp_iteration_to_json(it));
                             });
    if (writer)
      writer->finish(Json{{"iterationCount", trace.iterations.size()},
                          {"totalCost", trace.totalCost.str()}});
    summary["algorithm"] = "ssp";
    summary["iterations"] = trace.iterations.size();
    summary["totalCost"] = trace.totalCost.str();
    if (watched) {
      bool everPositive = false;
      for (const SspIteration& it : trace.iterations)
        if (it.flowOnWatched && it.flowOnWatched->sign() > 0) everPositive = true;
      summary["watchedEverPositive"] = everPositive;
    }
  } else if (algo == "ns") {
    if (!loaded.gadget || !loaded.gadget->initialBasis)
      raise(Errc::UsageError,
            "run ns needs the generator sidecar (initial basis and flow) next to '" + path + "'");
    std::optional<TraceWriter> writer;
    if (traceFile.is_open()) writer.emplace(traceFile, "pivots");
    NsTrace trace = ns_run(loaded.net, *loaded.gadget->initialBasis, loaded.gadget->initialFlow,
                           watched, maxIter, [&](const PivotRecord& p, const Flow&) {
                             if (writer) writer->record(ns_pivot_to_json(p));
                           });
    Rational finalCost = flow_cost(loaded.net, trace.finalFlow);
    if (writer)
      writer->finish(Json{{"finalCost", finalCost.str()}, {"pivotCount", trace.pivots.size()}});
    summary["algorithm"] = "ns";
    summary["pivots"] = trace.pivots.size();
    summary["finalCost"] = finalCost.str();
    if (watched) {
      bool entered = false;
      for (const PivotRecord& p : trace.pivots)
        if (p.enteringArc == *watched || p.watchedInBasis) entered = true;
      summary["watchedEnteredBasis"] = entered;
    }
  } else {
    raise(Errc::UsageError, "unknown algorithm '" + algo + "'");
  }
  out << dump_canonical(summary);
  return 0;
}

int run_decide(const std::string& list, const std::string& algo, bool census, std::ostream& out) {
  PartitionInstance inst = normalize_instance(parse_instance_list(list));
  Json j;
  j["instance"] = Json::array();
  for (const Rational& a : inst.raw) j["instance"].push_back(a.str());
  j["normalized"] = Json::array();
  for (const Rational& a : inst.normalized) j["normalized"].push_back(a.str());
  j["epsilon"] = inst.epsilon.str();
  j["algorithm"] = algo;

  std::optional<std::vector<int>> subset = partition_oracle(inst);
  if (subset) j["oracleSubset"] = *subset;

  if (algo == "oracle") {
    if (census) raise(Errc::UsageError, "--census needs --algo ssp or ns");
    j["answer"] = subset.has_value();
  } else if (algo == "ssp" || algo == "ns") {
    Verdict v = algo == "ssp" ? decide_via_ssp(inst) : decide_via_ns(inst);
    j["answer"] = v.answer;
    j["iterations"] = v.iterations;
    if (v.witness) j["witnessIteration"] = *v.witness;
    if (census) {
      Census c = iteration_census(inst, algo == "ssp" ? Algo::Ssp : Algo::Ns);
      j["census"] = Json{{"count", c.count},
                         {"threshold", c.threshold},
                         {"exceeded", c.thresholdExceeded}};
    }
  } else {
    raise(Errc::UsageError, "unknown algorithm '" + algo + "'");
  }
  out << dump_canonical(j);
  return 0;
}

int run_curve(const std::string& path, const std::string& horizon, std::ostream& out) {
  SspTrace trace = ssp_trace_from_json(load_json_file(path));
  ParametricCurve curve = parametric_curve(trace);
  Json j;
  j["breakpoints"] = Json::array();
  for (const auto& [flowValue, cost] : curve.breakpoints)
    j["breakpoints"].push_back(Json::array({flowValue.str(), cost.str()}));
  j["segments"] = breakpoint_count(curve);
  if (!horizon.empty())
    j["averageArrival"] = average_arrival_time(trace, Rational::fromString(horizon)).str();
  out << dump_canonical(j);
  return 0;
}

int run_export(const std::string& path, const std::string& format, std::ostream& out) {
  LoadedNetwork loaded = load_network(path);
  if (format == "dot") {
    if (loaded.gadget)
      out << export_dot(*loaded.gadget);
    else
      out << export_dot(loaded.net);
  } else if (format == "json") {
    out << dump_canonical(network_to_json(loaded.net));
  } else {
    raise(Errc::UsageError, "unknown format '" + format + "'");
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact min-cost-flow laboratory"};
  app.require_subcommand(1);

  std::string kind, list, rText = "1/3", outPath, algo, path, watchLabel, tracePath, format,
                    horizon;
  int sign = 1, level = -1;
  bool perturb = false, census = false;
  std::int64_t maxIter = 0;

  CLI::App* gen = app.add_subcommand("gen", "generate a gadget network");
  gen->add_option("kind", kind, "nssp|gssp|ns-gadget|ns-harness|gns")->required();
  gen->add_option("--a", list, "comma-separated positive rationals")->required();
  gen->add_option("--sign", sign, "+1 or -1");
  gen->add_option("--r", rText, "simplex gadget parameter");
  gen->add_option("--level", level, "recursion depth (default: instance size)");
  gen->add_flag("--perturb", perturb, "perturb the minus gadget of gns");
  gen->add_option("-o,--output", outPath, "output network file")->required();

  CLI::App* run = app.add_subcommand("run", "run an algorithm with tracing");
  run->add_option("algo", algo, "ssp|ns")->required();
  run->add_option("file", path, "network JSON file")->required();
  run->add_option("--watch", watchLabel, "arc label to watch");
  run->add_option("--trace", tracePath, "trace output file");
  run->add_option("--max-iter", maxIter, "iteration/pivot budget");

  CLI::App* decide = app.add_subcommand("decide", "decide a partition instance");
  decide->add_option("--a", list, "comma-separated positive rationals")->required();
  decide->add_option("--algo", algo, "ssp|ns|oracle")->required();
  decide->add_flag("--census", census, "also report the iteration census");

  CLI::App* curve = app.add_subcommand("curve", "parametric curve of a trace");
  curve->add_option("file", path, "ssp trace file")->required();
  curve->add_option("--arrival-horizon", horizon, "also compute the average arrival time");

  CLI::App* exp = app.add_subcommand("export", "re-emit a network");
  exp->add_option("file", path, "network JSON file")->required();
  exp->add_option("--format", format, "dot|json")->required();

  try {
    std::vector<const char*> argv;
    argv.push_back("flowlab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) return run_gen(kind, list, sign, rText, level, perturb, outPath);
    if (run->parsed()) return run_run(algo, path, watchLabel, tracePath, maxIter, out);
    if (decide->parsed()) return run_decide(list, algo, census, out);
    if (curve->parsed()) return run_curve(path, horizon, out);
    if (exp->parsed()) return run_export(path, format, out);
  } catch (const Error& e) {
    if (e.code() == Errc::UsageError) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace flowlab::cli
