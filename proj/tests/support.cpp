#include "support.hpp"

#include <algorithm>
#include <cassert>

namespace flowlab::testsupport {

std::optional<Rational> brute_force_min_cost(const Network& net, const Rational& value) {
  assert(value.isInteger());
  std::vector<long long> caps;
  for (const Arc& a : net.arcs) {
    assert(!a.capacity.isUnbounded() && a.capacity.value().isInteger());
    caps.push_back(static_cast<long long>(a.capacity.value().num()));
  }
  std::vector<long long> assignment(net.arcs.size(), 0);
  std::optional<Rational> best;

  auto feasible = [&]() {
    std::vector<Rational> netOut(net.nodes.size());
    for (const Arc& a : net.arcs) {
      Rational f(assignment[static_cast<size_t>(a.id)]);
      netOut[static_cast<size_t>(a.tail)] += f;
      netOut[static_cast<size_t>(a.head)] -= f;
    }
    for (const Node& v : net.nodes) {
      Rational expected = v.balance;
      if (net.source && *net.source == v.id) expected += value;
      if (net.sink && *net.sink == v.id) expected -= value;
      if (netOut[static_cast<size_t>(v.id)] != expected) return false;
    }
    return true;
  };

  // odometer over all integral assignments within capacities
  while (true) {
    if (feasible()) {
      Rational cost;
      for (const Arc& a : net.arcs)
        cost += a.cost * Rational(assignment[static_cast<size_t>(a.id)]);
      if (!best || cost < *best) best = cost;
    }
    size_t i = 0;
    for (; i < assignment.size(); ++i) {
      if (assignment[i] < caps[i]) {
        ++assignment[i];
        break;
      }
      assignment[i] = 0;
    }
    if (i == assignment.size()) break;
  }
  return best;
}

Rational arrival_by_integration(const std::vector<Rational>& costs, const Rational& horizon) {
  std::vector<Rational> events = costs;
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  events.push_back(horizon);

  Rational weighted, total;
  const Rational half(1, 2);
  for (size_t k = 0; k + 1 < events.size(); ++k) {
    const Rational& lo = events[k];
    const Rational& hi = events[k + 1];
    long long rate = static_cast<long long>(
        std::count_if(costs.begin(), costs.end(), [&](const Rational& c) { return c <= lo; }));
    weighted += Rational(rate) * half * (hi * hi - lo * lo);
    total += Rational(rate) * (hi - lo);
  }
  if (total.isZero()) return horizon;
  return weighted / total;
}

void InstanceSampler::maybeRescale(std::vector<Rational>& values) {
  if (below(4) == 0) {
    Rational d(static_cast<long long>(2 + below(8)));
    for (Rational& v : values) v = v / d;
  }
}

std::vector<Rational> InstanceSampler::plantedYes(int n) {
  assert(n >= 2);
  int left = n / 2;
  int right = n - left;
  std::vector<long long> parts;
  long long sum = 0;
  for (int i = 0; i < left; ++i) {
    long long v = static_cast<long long>(right) + static_cast<long long>(below(20));
    parts.push_back(v);
    sum += v;
  }
  long long remaining = sum;
  for (int i = 0; i < right - 1; ++i) {
    long long slack = remaining - (right - 1 - i);  // keep every later part positive
    long long v = 1 + static_cast<long long>(below(static_cast<std::uint64_t>(slack)));
    parts.push_back(v);
    remaining -= v;
  }
  parts.push_back(remaining);
  // Fisher-Yates with our own draws
  for (size_t i = parts.size(); i > 1; --i) std::swap(parts[i - 1], parts[below(i)]);
  std::vector<Rational> values;
  for (long long v : parts) values.emplace_back(v);
  maybeRescale(values);
  return values;
}

std::vector<Rational> InstanceSampler::randomNo(int n) {
  while (true) {
    std::vector<Rational> values;
    for (int i = 0; i < n; ++i) values.emplace_back(static_cast<long long>(1 + below(30)));
    if (!partition_oracle(normalize_instance(values))) {
      maybeRescale(values);
      return values;
    }
  }
}

std::vector<Rational> rationals(std::initializer_list<long long> ints) {
  std::vector<Rational> out;
  for (long long v : ints) out.emplace_back(v);
  return out;
}

bool is_gadget_arc(const Network& net, const Arc& arc) {
  auto label = [&](NodeId v) {
    const auto& l = net.nodes[static_cast<size_t>(v)].label;
    return l ? *l : std::string();
  };
  std::string tail = label(arc.tail), head = label(arc.head);
  return tail != "s" && tail != "t" && head != "s" && head != "t";
}

Rational in_gadget_cycle_cost(const Network& net, const PivotRecord& rec) {
  Rational cost;
  for (auto [id, dir] : rec.cycleArcs) {
    const Arc& a = net.arcs[static_cast<size_t>(id)];
    if (!is_gadget_arc(net, a)) continue;
    if (dir == Dir::Forward)
      cost += a.cost;
    else
      cost -= a.cost;
  }
  return cost;
}

}  // namespace flowlab::testsupport
