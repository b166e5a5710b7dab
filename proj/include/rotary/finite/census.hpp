#pragma once

#include <cstdint>
#include <stop_token>
#include <string>
#include <vector>

#include "rotary/finite/finite_graph.hpp"

namespace rotary {

struct CensusEntry {
  unsigned n = 0;
  uint64_t code = 0;  // minimal adjacency encoding over all relabelings
  FiniteGraph graph;
  size_t aut_order = 0;
  bool vertex_transitive = false;
  bool connected = false;
  bool bipartite = false;
  bool cf_integral = false;
  RotaryVerdict verdict;
};

struct CensusCounts {
  unsigned n = 0;
  size_t graphs = 0;
  size_t transitive = 0;
  size_t rotarily_transitive = 0;
  size_t unverified = 0;
  bool cancelled = false;  // stopped early; entries and counts are partial
};

struct CensusReport {
  unsigned n_max = 0;
  std::vector<CensusEntry> entries;  // by n, then code
  std::vector<CensusCounts> counts;
  // (a) no graph on n >= 2 vertices is rotarily transitive. Unverified
  // entries are counted separately and do not settle (a) either way.
  bool no_rotary_beyond_one = true;
  // (b) the same restricted to connected bipartite transitive graphs.
  bool no_rotary_bipartite = true;
  // (c) the average fixed-point count of every Aut group is its orbit count.
  bool cf_integral = true;
  // The n = 1 graph is rotarily transitive.
  bool trivial_graph_rotary = false;
  size_t unverified = 0;
  bool cancelled = false;  // stopped early; entries and counts are partial
};

/// All graphs on 1..n_max vertices up to isomorphism. n_max above 6 needs
/// `allow_large` (and stops at 7). A stop request ends the run early with
/// `cancelled` set.
CensusReport census(unsigned n_max, bool allow_large = false, std::stop_token stop = {});

/// Bit of the pair u < v in the adjacency encoding for n vertices.
unsigned edge_bit(unsigned n, unsigned u, unsigned v);
uint64_t encode_graph(const FiniteGraph& g);
FiniteGraph decode_graph(unsigned n, uint64_t code);

}  // namespace rotary
