#pragma once

#include "netproj/clique.hpp"
#include "netproj/graph.hpp"

namespace netproj {

/// A parallel task abstracted to two volumes: W, the computation measured in
/// time units on one processor, and Q, the data exchanged between branches,
/// in bytes. Splitting into p branches divides both uniformly.
struct TaskVolumes {
  double total_computation;  // W > 0
  double total_exchange;     // Q >= 0
  TaskVolumes(double computation, double exchange);
};

/// Per-branch share of a task split into p uniform branches.
struct BranchLoad {
  int branches = 1;     // p
  double computation;   // w = W / p
  double exchange;      // q = Q / p
};

/// Affine single-hop delay t(q) = alpha + beta * q. The family is monotone
/// non-increasing in p for fixed Q and spans latency-bound (beta = 0) to
/// bandwidth-bound (alpha = 0) technologies; alpha + beta must be positive.
class DelayModel {
public:
  DelayModel(double alpha, double beta);
  double operator()(double exchange) const { return alpha_ + beta_ * exchange; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

private:
  double alpha_;
  double beta_;
};

enum class DirectiveKind { Speedup, Efficiency };

/// A target handed to the planner: reach speedup S or efficiency E.
struct Directive {
  DirectiveKind kind = DirectiveKind::Speedup;
  double target = 1.0;
};

/// Planner verdict: the largest branch count the topology admits under the
/// directive, with its admissible distance, reachability budget and a
/// witness clique of the reachability graph.
struct ParallelPlan {
  Directive directive;
  bool feasible = false;
  int branches = 0;       // p, meaningful when feasible
  double distance = 0.0;  // L(p)
  int delta = 0;          // floor(L(p))
  CliqueResult witness;   // canonical maximum delta-clique
};

BranchLoad per_branch(const TaskVolumes& tv, int branches);

/// Speedup reached by p branches when information-adjacent processors sit at
/// distance L: communication overlaps computation, so the per-branch wall
/// time is max(w, L * t(q)) and the result is min(p, W / (L * t(Q/p))).
/// p = 1 yields exactly 1 (no exchange happens).
double achieved_speedup(const TaskVolumes& tv, int branches, double distance,
                        const DelayModel& dm);

/// achieved_speedup / p; in (0, 1].
double achieved_efficiency(const TaskVolumes& tv, int branches, double distance,
                           const DelayModel& dm);

/// Maximum admissible distance L_S(p) = W / (S * t(Q/p)) for a speedup
/// target. Targets above p are unreachable (infeasible_error); results below
/// 1 mean no topology can help (infeasible_error).
double required_distance_for_speedup(const TaskVolumes& tv, int branches, double speedup_target,
                                     const DelayModel& dm);

/// Maximum admissible distance L_E(p) = W / (p * E * t(Q/p)) for an
/// efficiency target in (0, 1].
double required_distance_for_efficiency(const TaskVolumes& tv, int branches,
                                        double efficiency_target, const DelayModel& dm);

/// Reachability: the integer part of an admissible distance. Distances below
/// 1 are infeasible (hops are integers, adjacent processors sit at 1).
int reachability_budget(double distance);

/// Technological coefficient k_NT = t(q) / (k_p * t(q / k_p)): the fraction
/// of a k_p-fold processor increase the network technology converts into
/// delay reduction. 1/k_p for pure latency, 1 for pure bandwidth.
double tech_coefficient(const DelayModel& dm, double exchange, double k_p);

/// Scans p = 2..n, derives L(p) and the budget from the directive, and
/// accepts p when L(p) >= 1 and the delta-density of g reaches p. Feasibility
/// is not monotone in p, so the scan is exhaustive. Returns the largest
/// feasible p or an infeasible verdict.
ParallelPlan max_feasible_parallelism(const Graph& g, const TaskVolumes& tv, const DelayModel& dm,
                                      const Directive& directive);

} // namespace netproj
