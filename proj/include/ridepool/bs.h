#pragma once

#include "ridepool/seq_eval.h"

#include <optional>
#include <span>
#include <vector>

namespace ridepool {

// Position-independent layer graph of the BS(k) neighborhood: permutations
// where u precedes v whenever pos(u) + k <= pos(v). A state after placing i
// visits records which of the positions i-k+1 .. i+k-1 are placed and which
// one was placed last; positions below the window are always placed.
class BsGraph {
public:
  explicit BsGraph(int k);

  struct Transition {
    int offset; // position placed next, relative to i
    int target; // state after the move
  };

  int k() const { return k_; }
  int initial() const { return 0; }
  std::size_t num_states() const { return masks_.size(); }
  unsigned mask(int state) const { return masks_[state]; }
  int last_offset(int state) const { return last_[state]; }
  const std::vector<Transition>& transitions(int state) const { return moves_[state]; }

private:
  int k_;
  std::vector<unsigned> masks_;
  std::vector<int> last_;
  std::vector<std::vector<Transition>> moves_;
};

// Best permutation of the route's visits (visits[0], the start, stays first)
// in the BS(k) neighborhood that satisfies capacity, windows and precedence.
// Labels at a state are pruned by dominance (cost and earliest completion)
// and, when thickness > 0, to the `thickness` cheapest. Returns the route
// only if it is strictly cheaper than the input.
std::optional<std::vector<NodeId>> bs_search(const Instance& instance,
                                             std::span<const NodeId> visits,
                                             const BsGraph& graph, std::size_t thickness);

} // namespace ridepool
