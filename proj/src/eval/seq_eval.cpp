#include "ridepool/seq_eval.h"

namespace ridepool {

SeqEval SeqEval::single(const Instance& instance, NodeId node) {
  const Node& n = instance.node(node);
  SeqEval e;
  e.q_sum = n.demand;
  e.q_max = n.demand > 0 ? n.demand : 0;
  e.tt = 0;
  e.ec = n.open;
  e.ls = n.close;
  e.feasible = true;
  e.cost = 0;
  e.first = node;
  e.last = node;
  return e;
}

SeqEval evaluate_sequence(const Instance& instance, std::span<const NodeId> nodes) {
  SeqEval e = SeqEval::single(instance, nodes.front());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    e = extend(instance, e, nodes[i]);
  }
  return e;
}

SeqEval close_route(const Instance& instance, const SeqEval& seq) {
  if (const auto& end = instance.route_end()) {
    return extend(instance, seq, *end);
  }
  return seq;
}

} // namespace ridepool
