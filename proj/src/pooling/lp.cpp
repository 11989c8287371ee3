#include "ridepool/pooling.h"

#include <cmath>
#include <limits>
#include <numeric>

namespace ridepool {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCostTol = 1e-9;
constexpr double kPivotTol = 1e-9;

struct Column {
  std::vector<int> rows;
  double coef = 1.0; // every entry of a column shares this coefficient
  double cost = 0.0;
  double upper = 1.0;
};

enum class Status : std::uint8_t { basic, lower, upper };

// Bounded-variable primal revised simplex with an explicit basis inverse:
// min c x  s.t.  A x = 1,  0 <= x <= u. The first m columns must form an
// identity basis that is feasible at x = 1.
class BoundedSimplex {
public:
  BoundedSimplex(int rows, std::vector<Column> columns)
    : m_(rows), cols_(std::move(columns)), status_(cols_.size(), Status::lower),
      value_(cols_.size(), 0.0), basis_(m_), binv_(static_cast<std::size_t>(m_) * m_, 0.0),
      y_(m_, 0.0) {
    for (int i = 0; i < m_; ++i) {
      basis_[i] = i;
      status_[i] = Status::basic;
      value_[i] = 1.0;
      binv_[idx(i, i)] = 1.0;
    }
  }

  void solve() {
    const std::int64_t limit =
      200 * (static_cast<std::int64_t>(m_) + static_cast<std::int64_t>(cols_.size())) + 1000;
    int degenerate_streak = 0;
    while (true) {
      if (pivots_ > limit) {
        throw InternalError("simplex iteration limit reached");
      }
      compute_duals();
      const bool bland = degenerate_streak > 50;
      const int entering = choose_entering(bland);
      if (entering < 0) {
        break;
      }
      const bool degenerate = step(entering, bland);
      degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
      ++pivots_;
      if (pivots_ % 64 == 0) {
        refactor();
      }
    }
  }

  double value(std::size_t j) const { return value_[j]; }
  const std::vector<double>& duals() const { return y_; }
  std::int64_t pivots() const { return pivots_; }

private:
  std::size_t idx(int i, int k) const { return static_cast<std::size_t>(i) * m_ + k; }

  void compute_duals() {
    std::fill(y_.begin(), y_.end(), 0.0);
    for (int i = 0; i < m_; ++i) {
      const double c = cols_[basis_[i]].cost;
      if (c == 0.0) {
        continue;
      }
      const double* row = &binv_[idx(i, 0)];
      for (int k = 0; k < m_; ++k) {
        y_[k] += c * row[k];
      }
    }
  }

  double reduced_cost(const Column& col) const {
    double d = col.cost;
    for (int r : col.rows) {
      d -= y_[r] * col.coef;
    }
    return d;
  }

  int choose_entering(bool bland) const {
    int best = -1;
    double best_score = 0.0;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (status_[j] == Status::basic) {
        continue;
      }
      const double d = reduced_cost(cols_[j]);
      double score = 0.0;
      if (status_[j] == Status::lower && d < -kCostTol) {
        score = -d;
      } else if (status_[j] == Status::upper && d > kCostTol) {
        score = d;
      } else {
        continue;
      }
      if (bland) {
        return static_cast<int>(j);
      }
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(j);
      }
    }
    return best;
  }

  // Returns true when the step did not move (degenerate).
  bool step(int j, bool bland) {
    const Column& col = cols_[j];
    std::vector<double> alpha(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      double a = 0.0;
      for (int r : col.rows) {
        a += binv_[idx(i, r)] * col.coef;
      }
      alpha[i] = a;
    }
    const double dir = status_[j] == Status::lower ? 1.0 : -1.0;
    double theta = col.upper;
    int leave = -1;
    bool leave_to_upper = false;
    double leave_pivot = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double rate = -dir * alpha[i];
      const Column& bc = cols_[basis_[i]];
      double t = kInf;
      bool to_upper = false;
      if (rate < -kPivotTol) {
        t = std::max(0.0, value_[basis_[i]]) / -rate;
      } else if (rate > kPivotTol && bc.upper < kInf) {
        t = std::max(0.0, bc.upper - value_[basis_[i]]) / rate;
        to_upper = true;
      } else {
        continue;
      }
      bool take = t < theta - 1e-12;
      if (!take && t <= theta + 1e-12 && leave >= 0) {
        take = bland ? basis_[i] < basis_[leave] : std::abs(alpha[i]) > std::abs(leave_pivot);
      }
      if (take) {
        theta = std::min(theta, t);
        leave = i;
        leave_to_upper = to_upper;
        leave_pivot = alpha[i];
      }
    }
    if (theta == kInf) {
      throw InternalError("cover LP is unbounded");
    }
    for (int i = 0; i < m_; ++i) {
      value_[basis_[i]] -= dir * theta * alpha[i];
    }
    const double entering_value = status_[j] == Status::lower ? theta : col.upper - theta;
    if (leave < 0) {
      status_[j] = status_[j] == Status::lower ? Status::upper : Status::lower;
      value_[j] = status_[j] == Status::lower ? 0.0 : col.upper;
      return theta < 1e-12;
    }
    const int out = basis_[leave];
    status_[out] = leave_to_upper ? Status::upper : Status::lower;
    value_[out] = leave_to_upper ? cols_[out].upper : 0.0;
    basis_[leave] = j;
    status_[j] = Status::basic;
    value_[j] = entering_value;

    const double pivot = alpha[leave];
    double* prow = &binv_[idx(leave, 0)];
    for (int k = 0; k < m_; ++k) {
      prow[k] /= pivot;
    }
    for (int i = 0; i < m_; ++i) {
      if (i == leave || alpha[i] == 0.0) {
        continue;
      }
      const double f = alpha[i];
      double* row = &binv_[idx(i, 0)];
      for (int k = 0; k < m_; ++k) {
        row[k] -= f * prow[k];
      }
    }
    return theta < 1e-12;
  }

  // Recomputes the basis inverse and the basic values from scratch.
  void refactor() {
    std::vector<double> b(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      const Column& col = cols_[basis_[i]];
      for (int r : col.rows) {
        b[idx(r, i)] = col.coef;
      }
    }
    std::vector<double> inv(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      inv[idx(i, i)] = 1.0;
    }
    for (int c = 0; c < m_; ++c) {
      int p = c;
      for (int r = c + 1; r < m_; ++r) {
        if (std::abs(b[idx(r, c)]) > std::abs(b[idx(p, c)])) {
          p = r;
        }
      }
      if (std::abs(b[idx(p, c)]) < 1e-12) {
        throw InternalError("singular simplex basis");
      }
      if (p != c) {
        for (int k = 0; k < m_; ++k) {
          std::swap(b[idx(p, k)], b[idx(c, k)]);
          std::swap(inv[idx(p, k)], inv[idx(c, k)]);
        }
      }
      const double d = b[idx(c, c)];
      for (int k = 0; k < m_; ++k) {
        b[idx(c, k)] /= d;
        inv[idx(c, k)] /= d;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == c || b[idx(r, c)] == 0.0) {
          continue;
        }
        const double f = b[idx(r, c)];
        for (int k = 0; k < m_; ++k) {
          b[idx(r, k)] -= f * b[idx(c, k)];
          inv[idx(r, k)] -= f * inv[idx(c, k)];
        }
      }
    }
    binv_ = std::move(inv);
    std::vector<double> rhs(m_, 1.0);
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (status_[j] == Status::upper) {
        for (int r : cols_[j].rows) {
          rhs[r] -= cols_[j].coef * cols_[j].upper;
        }
      }
    }
    for (int i = 0; i < m_; ++i) {
      double v = 0.0;
      for (int k = 0; k < m_; ++k) {
        v += binv_[idx(i, k)] * rhs[k];
      }
      value_[basis_[i]] = v;
    }
  }

  int m_;
  std::vector<Column> cols_;
  std::vector<Status> status_;
  std::vector<double> value_;
  std::vector<int> basis_;
  std::vector<double> binv_;
  std::vector<double> y_;
  std::int64_t pivots_ = 0;
};

int find(std::vector<int>& parent, int a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

} // namespace

LpSolution solve_cover_lp(const Hypergraph& graph, CoverKind kind) {
  const int n_req = static_cast<int>(graph.num_requests());
  for (int r = 0; r < n_req; ++r) {
    const Hyperedge& e = graph.edges[r];
    if (e.requests.size() != 1 || e.requests[0] != r) {
      throw InternalError("cover LP needs a singleton edge per request");
    }
  }
  // Independent components of the request-edge incidence.
  std::vector<int> parent(n_req);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Hyperedge& e : graph.edges) {
    for (std::size_t i = 1; i < e.requests.size(); ++i) {
      const int a = find(parent, e.requests[0]);
      const int b = find(parent, e.requests[i]);
      if (a != b) {
        parent[b] = a;
      }
    }
  }
  std::vector<int> component(n_req);
  std::vector<int> local(n_req);
  std::vector<std::vector<int>> members;
  std::vector<int> comp_of_root(n_req, -1);
  for (int r = 0; r < n_req; ++r) {
    const int root = find(parent, r);
    if (comp_of_root[root] < 0) {
      comp_of_root[root] = static_cast<int>(members.size());
      members.emplace_back();
    }
    component[r] = comp_of_root[root];
    local[r] = static_cast<int>(members[component[r]].size());
    members[component[r]].push_back(r);
  }
  std::vector<std::vector<std::size_t>> pooled(members.size());
  for (std::size_t e = graph.num_singletons(); e < graph.edges.size(); ++e) {
    pooled[component[graph.edges[e].requests[0]]].push_back(e);
  }

  LpSolution out;
  out.x.assign(graph.edges.size(), 0.0);
  out.duals.assign(n_req, 0.0);
  for (std::size_t c = 0; c < members.size(); ++c) {
    const auto& reqs = members[c];
    const int m = static_cast<int>(reqs.size());
    if (pooled[c].empty()) {
      // Only singletons: x = 1 is the unique feasible point of the partition
      // rows and optimal for the cover rows since weights of surplus are 0.
      for (int r : reqs) {
        out.x[r] = 1.0;
        out.duals[r] = -graph.edges[r].weight;
      }
      if (kind == CoverKind::cover) {
        for (int r : reqs) {
          out.duals[r] = std::max(0.0, -graph.edges[r].weight);
        }
      }
      continue;
    }
    std::vector<Column> cols;
    std::vector<std::size_t> edge_of_col;
    for (int r : reqs) {
      cols.push_back(Column{{local[r]}, 1.0, -graph.edges[r].weight, 1.0});
      edge_of_col.push_back(static_cast<std::size_t>(r));
    }
    for (std::size_t e : pooled[c]) {
      Column col;
      for (RequestId r : graph.edges[e].requests) {
        col.rows.push_back(local[r]);
      }
      col.cost = -graph.edges[e].weight;
      cols.push_back(std::move(col));
      edge_of_col.push_back(e);
    }
    if (kind == CoverKind::cover) {
      for (int i = 0; i < m; ++i) {
        cols.push_back(Column{{i}, -1.0, 0.0, kInf});
      }
    }
    BoundedSimplex lp(m, std::move(cols));
    lp.solve();
    out.pivots += lp.pivots();
    for (std::size_t j = 0; j < edge_of_col.size(); ++j) {
      out.x[edge_of_col[j]] = std::clamp(lp.value(j), 0.0, 1.0);
    }
    for (int r : reqs) {
      out.duals[r] = lp.duals()[local[r]];
    }
  }
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    out.objective += graph.edges[e].weight * out.x[e];
  }
  return out;
}

} // namespace ridepool
