#include "ridepool/route_state.h"

#include <algorithm>

namespace ridepool {

RouteState::RouteState(const Instance& instance)
  : instance_(&instance),
    routes_(instance.num_vehicles()),
    route_eval_(instance.num_vehicles()),
    vehicle_of_(instance.num_nodes(), static_cast<VehicleId>(instance.num_vehicles())),
    position_(instance.num_nodes(), -1),
    fw_(instance.num_nodes()),
    bw_(instance.num_nodes()),
    unassigned_pos_(instance.num_requests(), -1),
    in_journal_(instance.num_vehicles(), 0) {
  for (const Vehicle& v : instance.vehicles()) {
    routes_[v.id] = {v.start};
    rebuild(v.id);
  }
  unassigned_.reserve(instance.num_requests());
  for (const Request& r : instance.requests()) {
    mark_unassigned(r.id);
  }
}

RouteState::RouteState(const Instance& instance, const Solution& solution)
  : RouteState(instance) {
  for (const Route& route : solution.routes) {
    set_route(route.vehicle, route.visits);
  }
}

NodeId RouteState::pred(NodeId n) const {
  const VehicleId v = vehicle_of_[n];
  if (v == unassigned_label() || position_[n] <= 0) {
    return kNoNode;
  }
  return routes_[v][position_[n] - 1];
}

NodeId RouteState::succ(NodeId n) const {
  const VehicleId v = vehicle_of_[n];
  if (v == unassigned_label()) {
    return kNoNode;
  }
  const auto next = static_cast<std::size_t>(position_[n]) + 1;
  return next < routes_[v].size() ? routes_[v][next] : kNoNode;
}

std::vector<RequestId> RouteState::assigned_requests() const {
  std::vector<RequestId> out;
  out.reserve(instance_->num_requests() - unassigned_.size());
  for (const Request& r : instance_->requests()) {
    if (is_assigned(r.id)) {
      out.push_back(r.id);
    }
  }
  return out;
}

std::vector<RequestId> RouteState::requests_on(VehicleId v) const {
  std::vector<RequestId> out;
  for (std::size_t i = 1; i < routes_[v].size(); ++i) {
    const NodeId n = routes_[v][i];
    if (instance_->is_pickup(n)) {
      out.push_back(instance_->request_of(n));
    }
  }
  return out;
}

void RouteState::mark_unassigned(RequestId r) {
  if (unassigned_pos_[r] >= 0) {
    return;
  }
  unassigned_pos_[r] = static_cast<int>(unassigned_.size());
  unassigned_.push_back(r);
}

void RouteState::mark_assigned(RequestId r) {
  const int pos = unassigned_pos_[r];
  if (pos < 0) {
    return;
  }
  const RequestId moved = unassigned_.back();
  unassigned_[pos] = moved;
  unassigned_pos_[moved] = pos;
  unassigned_.pop_back();
  unassigned_pos_[r] = -1;
}

void RouteState::begin_journal() {
  commit();
  journaling_ = true;
}

void RouteState::commit() {
  for (VehicleId v : journal_vehicles_) {
    in_journal_[v] = 0;
  }
  journal_vehicles_.clear();
  journal_routes_.clear();
  journaling_ = false;
}

void RouteState::rollback() {
  journaling_ = false;
  for (std::size_t i = journal_vehicles_.size(); i-- > 0;) {
    set_route(journal_vehicles_[i], std::move(journal_routes_[i]));
  }
  commit();
}

void RouteState::set_route(VehicleId v, std::vector<NodeId> visits) {
  const VehicleId none = unassigned_label();
  if (journaling_ && !in_journal_[v]) {
    in_journal_[v] = 1;
    journal_vehicles_.push_back(v);
    journal_routes_.push_back(routes_[v]);
  }
  // Rollback may restore routes in any order, so a node can be claimed by
  // its new route before its old route lets go of it.
  for (std::size_t i = 1; i < routes_[v].size(); ++i) {
    const NodeId n = routes_[v][i];
    if (vehicle_of_[n] == v) {
      vehicle_of_[n] = none;
      position_[n] = -1;
    }
  }
  std::vector<NodeId> old = std::move(routes_[v]);
  routes_[v] = std::move(visits);
  for (std::size_t i = 1; i < routes_[v].size(); ++i) {
    const NodeId n = routes_[v][i];
    vehicle_of_[n] = v;
    if (instance_->is_pickup(n)) {
      mark_assigned(instance_->request_of(n));
    }
  }
  for (std::size_t i = 1; i < old.size(); ++i) {
    const NodeId n = old[i];
    if (vehicle_of_[n] == none && instance_->is_pickup(n)) {
      mark_unassigned(instance_->request_of(n));
    }
  }
  rebuild(v);
}

void RouteState::insert(RequestId r, const Insertion& at) {
  const Request& req = instance_->request(r);
  set_route(at.vehicle, apply_insertion(routes_[at.vehicle], req.pickup, req.delivery,
                                        at.pickup_after, at.delivery_after));
}

void RouteState::remove(std::span<const RequestId> requests) {
  std::vector<char> drop(instance_->num_nodes(), 0);
  std::vector<VehicleId> touched;
  for (RequestId r : requests) {
    const Request& req = instance_->request(r);
    const VehicleId v = vehicle_of_[req.pickup];
    if (v == unassigned_label()) {
      continue;
    }
    drop[req.pickup] = 1;
    drop[req.delivery] = 1;
    touched.push_back(v);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (VehicleId v : touched) {
    std::vector<NodeId> kept;
    kept.reserve(routes_[v].size());
    for (NodeId n : routes_[v]) {
      if (!drop[n]) {
        kept.push_back(n);
      }
    }
    set_route(v, std::move(kept));
  }
}

void RouteState::rebuild(VehicleId v) {
  const Instance& inst = *instance_;
  const auto& route = routes_[v];
  const bool was_used = route_eval_[v].last != route_eval_[v].first &&
                        route_eval_[v].first != kNoNode;
  total_cost_ -= route_eval_[v].cost;

  fw_[route[0]] = SeqEval::single(inst, route[0]);
  position_[route[0]] = 0;
  vehicle_of_[route[0]] = v;
  for (std::size_t i = 1; i < route.size(); ++i) {
    position_[route[i]] = static_cast<int>(i);
    fw_[route[i]] = extend(inst, fw_[route[i - 1]], route[i]);
  }
  if (route.size() == 1) {
    bw_[route[0]] = SeqEval::single(inst, route[0]);
    route_eval_[v] = bw_[route[0]];
  } else {
    const NodeId last = route.back();
    bw_[last] = close_route(inst, SeqEval::single(inst, last));
    for (std::size_t i = route.size() - 1; i-- > 0;) {
      bw_[route[i]] = concat(inst, SeqEval::single(inst, route[i]), bw_[route[i + 1]]);
    }
    route_eval_[v] = close_route(inst, fw_[last]);
  }
  total_cost_ += route_eval_[v].cost;
  const bool now_used = route.size() > 1;
  if (was_used != now_used) {
    used_ = now_used ? used_ + 1 : used_ - 1;
  }
}

Objective RouteState::objective() const {
  Objective o;
  o.unassigned = static_cast<std::int64_t>(unassigned_.size());
  o.cost = total_cost_;
  o.vehicles = static_cast<std::int64_t>(used_);
  return o;
}

Solution RouteState::to_solution() const {
  Solution s;
  s.routes.reserve(routes_.size());
  for (std::size_t v = 0; v < routes_.size(); ++v) {
    s.routes.push_back(Route{static_cast<VehicleId>(v), routes_[v]});
  }
  s.unassigned = unassigned_;
  std::sort(s.unassigned.begin(), s.unassigned.end());
  return s;
}

std::vector<NodeId> apply_insertion(std::span<const NodeId> visits, NodeId pickup,
                                    NodeId delivery, int pickup_after, int delivery_after) {
  std::vector<NodeId> out;
  out.reserve(visits.size() + 2);
  for (int i = 0; i < static_cast<int>(visits.size()); ++i) {
    out.push_back(visits[i]);
    if (i == pickup_after) {
      out.push_back(pickup);
    }
    if (i == delivery_after) {
      out.push_back(delivery);
    }
  }
  return out;
}

namespace {

// Calls visit(pickup_after, delivery_after, eval) for every capacity- and
// time-feasible candidate of route v; skipped candidates are not evaluated.
template <class Visit>
void scan_insertions(const RouteState& state, RequestId r, VehicleId v, const Blink& blink,
                     Visit&& visit) {
  const Instance& inst = state.instance();
  const int capacity = inst.capacity();
  const Request& req = inst.request(r);
  const auto route = state.visits(v);
  const int n = static_cast<int>(route.size()) - 1;
  const SeqEval pickup = SeqEval::single(inst, req.pickup);
  const SeqEval delivery = SeqEval::single(inst, req.delivery);

  for (int i = 0; i <= n; ++i) {
    SeqEval prefix = concat(inst, state.fw(route[i]), pickup);
    if (!prefix.ok(capacity)) {
      continue;
    }
    for (int j = i; j <= n; ++j) {
      if (!blink.skip()) {
        SeqEval cand = concat(inst, prefix, delivery);
        cand = j < n ? concat(inst, cand, state.bw(route[j + 1])) : close_route(inst, cand);
        if (cand.ok(capacity)) {
          visit(i, j, cand);
        }
      }
      if (j < n) {
        prefix = extend(inst, prefix, route[j + 1]);
        if (!prefix.ok(capacity)) {
          break;
        }
      }
    }
  }
}

} // namespace

std::optional<Insertion> best_insertion(const Instance& instance, std::span<const NodeId> visits,
                                        RequestId r, const Blink& blink) {
  const int capacity = instance.capacity();
  const Request& req = instance.request(r);
  const int n = static_cast<int>(visits.size()) - 1;
  std::vector<SeqEval> fw(visits.size());
  std::vector<SeqEval> bw(visits.size());
  fw[0] = SeqEval::single(instance, visits[0]);
  for (int i = 1; i <= n; ++i) {
    fw[i] = extend(instance, fw[i - 1], visits[i]);
  }
  if (n > 0) {
    bw[n] = close_route(instance, SeqEval::single(instance, visits[n]));
    for (int i = n; i-- > 1;) {
      bw[i] = concat(instance, SeqEval::single(instance, visits[i]), bw[i + 1]);
    }
  }
  const Cost base = n == 0 ? 0 : close_route(instance, fw[n]).cost;
  const SeqEval pickup = SeqEval::single(instance, req.pickup);
  const SeqEval delivery = SeqEval::single(instance, req.delivery);
  std::optional<Insertion> best;
  for (int i = 0; i <= n; ++i) {
    SeqEval prefix = concat(instance, fw[i], pickup);
    if (!prefix.ok(capacity)) {
      continue;
    }
    for (int j = i; j <= n; ++j) {
      if (!blink.skip()) {
        SeqEval cand = concat(instance, prefix, delivery);
        cand = j < n ? concat(instance, cand, bw[j + 1]) : close_route(instance, cand);
        if (cand.ok(capacity) && (!best || cand.cost - base < best->delta)) {
          best = Insertion{-1, i, j, cand.cost - base};
        }
      }
      if (j < n) {
        prefix = extend(instance, prefix, visits[j + 1]);
        if (!prefix.ok(capacity)) {
          break;
        }
      }
    }
  }
  return best;
}

std::optional<Insertion> best_insertion(const RouteState& state, RequestId r, VehicleId v,
                                        const Blink& blink) {
  std::optional<Insertion> best;
  const Cost base = state.route_cost(v);
  scan_insertions(state, r, v, blink, [&](int i, int j, const SeqEval& cand) {
    const Cost delta = cand.cost - base;
    if (!best || delta < best->delta) {
      best = Insertion{v, i, j, delta};
    }
  });
  return best;
}

std::vector<Insertion> feasible_insertions(const RouteState& state, RequestId r, VehicleId v) {
  std::vector<Insertion> out;
  const Cost base = state.route_cost(v);
  scan_insertions(state, r, v, Blink{}, [&](int i, int j, const SeqEval& cand) {
    out.push_back(Insertion{v, i, j, cand.cost - base});
  });
  return out;
}

} // namespace ridepool
