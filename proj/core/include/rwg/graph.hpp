#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rwg/alphabet.hpp"
#include "rwg/reads.hpp"

namespace rwg {

struct Edge {
  std::uint32_t origin = 0;       // node id, 1-based
  std::uint32_t destination = 0;  // node id, 1-based
  Symbol label = 0;

  bool operator==(const Edge&) const = default;
};

struct EdgeLabelledGraph {
  std::uint32_t node_count = 0;
  std::vector<Edge> edges;
};

/// Read i of length l contributes nodes v_0..v_l and edges v_{k-1} -> v_k
/// labelled read[k]. Node ids are assigned read by read: read 0 gets
/// 1..l_0+1, read 1 the next l_1+1 ids, and so on.
EdgeLabelledGraph reads_to_path_graph(const ReadCollection& reads);

/// Node id of v_depth of `read` in reads_to_path_graph's numbering.
std::uint32_t path_node_id(const ReadCollection& reads, ReadId read, std::uint32_t depth);

struct WheelerViolation {
  enum class Kind {
    label_order,   // a < a' but v >= v'
    origin_order,  // a = a', u < u' but v > v'
    source_order,  // an in-degree-0 node ranked after a node with positive in-degree
  };
  Kind kind;
  Edge first{};
  Edge second{};
  std::uint32_t source_node = 0;  // source_order: the offending in-degree-0 node
  std::uint32_t source_rank = 0;

  std::string describe() const;
};

/// Checks the monotonicity conditions under `rank_of_node` (rank_of_node[v-1]
/// is the rank of node v). With `relaxed` false also requires all in-degree-0
/// nodes to precede the others. Returns the first violation found, nullopt if
/// the ordering is valid. Throws std::invalid_argument if the ranks are not a
/// permutation of 1..N.
std::optional<WheelerViolation> verify_wheeler(const EdgeLabelledGraph& graph,
                                               std::span<const std::uint32_t> rank_of_node, bool relaxed);

}  // namespace rwg
