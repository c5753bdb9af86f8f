#include "netproj/amdahl.hpp"

#include "netproj/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace netproj {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw validation_error(std::string(what) + " must be finite");
}

} // namespace

TaskVolumes::TaskVolumes(double computation, double exchange)
    : total_computation(computation), total_exchange(exchange) {
  require_finite(computation, "computation volume W");
  require_finite(exchange, "exchange volume Q");
  if (computation <= 0) throw validation_error("computation volume W must be positive");
  if (exchange < 0) throw validation_error("exchange volume Q must be non-negative");
}

DelayModel::DelayModel(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  require_finite(alpha, "delay latency alpha");
  require_finite(beta, "delay per-byte cost beta");
  if (alpha < 0 || beta < 0) throw validation_error("delay coefficients must be non-negative");
  if (alpha + beta <= 0) throw validation_error("degenerate delay model: alpha + beta must be positive");
}

BranchLoad per_branch(const TaskVolumes& tv, int branches) {
  if (branches < 1) throw validation_error("branch count p must be at least 1");
  return BranchLoad{branches, tv.total_computation / branches, tv.total_exchange / branches};
}

double achieved_speedup(const TaskVolumes& tv, int branches, double distance,
                        const DelayModel& dm) {
  require_finite(distance, "distance L");
  if (branches < 1) throw validation_error("branch count p must be at least 1");
  if (distance < 1) throw validation_error("distance L must be at least 1");
  if (branches == 1) return 1.0;
  const BranchLoad load = per_branch(tv, branches);
  const double network_delay = distance * dm(load.exchange);  // T_ND(p)
  if (network_delay <= load.computation) return static_cast<double>(branches);
  return std::min(tv.total_computation / network_delay, static_cast<double>(branches));
}

double achieved_efficiency(const TaskVolumes& tv, int branches, double distance,
                           const DelayModel& dm) {
  return achieved_speedup(tv, branches, distance, dm) / branches;
}

namespace {

double admissible_distance(const TaskVolumes& tv, int branches, double denominator_target,
                           const DelayModel& dm) {
  const double delay = dm(tv.total_exchange / branches);
  if (delay <= 0) throw validation_error("delay model evaluates to a non-positive delay");
  const double distance = tv.total_computation / (denominator_target * delay);
  if (distance < 1)
    throw infeasible_error("admissible distance " + std::to_string(distance) +
                           " is below 1: even adjacent processors are too slow");
  return distance;
}

} // namespace

double required_distance_for_speedup(const TaskVolumes& tv, int branches, double speedup_target,
                                     const DelayModel& dm) {
  require_finite(speedup_target, "speedup target");
  if (branches < 2) throw validation_error("distance targets need at least 2 branches");
  if (speedup_target < 1) throw validation_error("speedup target must be at least 1");
  if (speedup_target > branches)
    throw infeasible_error("speedup target " + std::to_string(speedup_target) +
                           " exceeds the branch count " + std::to_string(branches));
  return admissible_distance(tv, branches, speedup_target, dm);
}

double required_distance_for_efficiency(const TaskVolumes& tv, int branches,
                                        double efficiency_target, const DelayModel& dm) {
  require_finite(efficiency_target, "efficiency target");
  if (branches < 2) throw validation_error("distance targets need at least 2 branches");
  if (efficiency_target <= 0 || efficiency_target > 1)
    throw validation_error("efficiency target must lie in (0, 1]");
  return admissible_distance(tv, branches, branches * efficiency_target, dm);
}

int reachability_budget(double distance) {
  require_finite(distance, "distance L");
  if (distance < 1)
    throw infeasible_error("distance " + std::to_string(distance) +
                           " is below the minimum admissible reachability of 1");
  const double floored = std::floor(distance);
  if (floored >= static_cast<double>(std::numeric_limits<int>::max()))
    return std::numeric_limits<int>::max();
  return static_cast<int>(floored);
}

double tech_coefficient(const DelayModel& dm, double exchange, double k_p) {
  require_finite(exchange, "exchange volume q");
  require_finite(k_p, "processor scaling k_p");
  if (exchange < 0) throw validation_error("exchange volume q must be non-negative");
  if (k_p <= 0) throw validation_error("processor scaling k_p must be positive");
  const double scaled_delay = dm(exchange / k_p);
  if (scaled_delay <= 0)
    throw validation_error("delay model evaluates to a non-positive delay at q/k_p");
  return dm(exchange) / (k_p * scaled_delay);
}

ParallelPlan max_feasible_parallelism(const Graph& g, const TaskVolumes& tv, const DelayModel& dm,
                                      const Directive& directive) {
  if (g.vertex_count() == 0) throw validation_error("empty system graph");
  if (directive.kind == DirectiveKind::Speedup && directive.target < 1)
    throw validation_error("speedup target must be at least 1");
  if (directive.kind == DirectiveKind::Efficiency &&
      (directive.target <= 0 || directive.target > 1))
    throw validation_error("efficiency target must lie in (0, 1]");

  ParallelPlan plan;
  plan.directive = directive;
  const int n = g.vertex_count();
  std::map<int, CliqueResult> density_by_delta;
  for (int p = 2; p <= n; ++p) {
    double distance = 0.0;
    try {
      distance = directive.kind == DirectiveKind::Speedup
                     ? required_distance_for_speedup(tv, p, directive.target, dm)
                     : required_distance_for_efficiency(tv, p, directive.target, dm);
    } catch (const infeasible_error&) {
      continue;
    }
    const int budget = reachability_budget(distance);
    // Density saturates once the budget covers the whole graph.
    const int effective = std::min(budget, std::max(1, n - 1));
    auto it = density_by_delta.find(effective);
    if (it == density_by_delta.end())
      it = density_by_delta.emplace(effective, delta_density(g, effective)).first;
    if (it->second.size >= p) {
      plan.feasible = true;
      plan.branches = p;
      plan.distance = distance;
      plan.delta = budget;
      plan.witness = it->second;
      plan.witness.delta = budget;
    }
  }
  return plan;
}

} // namespace netproj
