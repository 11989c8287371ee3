#pragma once

#include "ridepool/instance.h"

#include <span>

namespace ridepool {

// Concatenable summary of a visit sequence: load profile, time-window
// resources and travel cost. Service durations are folded into the outgoing
// arc times, so the algebra carries no explicit service term.
struct SeqEval {
  // Capacity.
  int q_sum = 0; // net load change
  int q_max = 0; // peak prefix load
  // Time.
  Time tt = 0;           // travel time without waiting
  Time ec = 0;           // earliest completion
  Time ls = kTimeInfinity; // latest start
  bool feasible = true;
  // Cost.
  Cost cost = 0;
  // Boundary nodes used to look up the linking arc.
  NodeId first = kNoNode;
  NodeId last = kNoNode;

  static SeqEval single(const Instance& instance, NodeId node);

  bool capacity_ok(int capacity) const { return q_max <= capacity; }
  bool ok(int capacity) const { return feasible && q_max <= capacity; }

  friend bool operator==(const SeqEval&, const SeqEval&) = default;
};

// Constant-time concatenation with an explicit linking arc last(a) -> first(b).
inline SeqEval concat(const SeqEval& a, const SeqEval& b, Time link_time, Cost link_cost) {
  SeqEval r;
  r.q_sum = a.q_sum + b.q_sum;
  r.q_max = a.q_max > a.q_sum + b.q_max ? a.q_max : a.q_sum + b.q_max;
  r.tt = a.tt + link_time + b.tt;
  const Time arrive = a.ec + link_time;
  const Time through = arrive + b.tt;
  r.ec = through > b.ec ? through : b.ec;
  const Time shifted = b.ls - link_time - a.tt;
  r.ls = a.ls < shifted ? a.ls : shifted;
  r.feasible = a.feasible && b.feasible && arrive <= b.ls;
  r.cost = a.cost + link_cost + b.cost;
  r.first = a.first;
  r.last = b.last;
  return r;
}

inline SeqEval concat(const Instance& instance, const SeqEval& a, const SeqEval& b) {
  return concat(a, b, instance.travel(a.last, b.first), instance.cost(a.last, b.first));
}

// Appends one node.
inline SeqEval extend(const Instance& instance, const SeqEval& a, NodeId node) {
  return concat(instance, a, SeqEval::single(instance, node));
}

// Left fold over a non-empty node sequence.
SeqEval evaluate_sequence(const Instance& instance, std::span<const NodeId> nodes);

// Appends the route end when the instance closes routes at a depot.
SeqEval close_route(const Instance& instance, const SeqEval& seq);

} // namespace ridepool
