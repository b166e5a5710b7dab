#include "rotary/finite/census.hpp"

#include <algorithm>
#include <numeric>

#include "rotary/error.hpp"

namespace rotary {

unsigned edge_bit(unsigned n, unsigned u, unsigned v) {
  if (u > v) std::swap(u, v);
  // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

uint64_t encode_graph(const FiniteGraph& g) {
  const unsigned n = static_cast<unsigned>(g.vertex_count());
  uint64_t code = 0;
  for (auto [u, v] : g.edges()) code |= uint64_t{1} << edge_bit(n, u, v);
  return code;
}

FiniteGraph decode_graph(unsigned n, uint64_t code) {
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned v = u + 1; v < n; ++v) {
      if ((code >> edge_bit(n, u, v)) & 1u) edges.emplace_back(u, v);
    }
  }
  return FiniteGraph(n, edges);
}

namespace {

// Minimal codes of the isomorphism classes on n vertices. Scanning codes in
// increasing order, the first unseen code of a class is its minimum; all its
// relabelings are then marked.
std::vector<uint64_t> class_representatives(unsigned n, const std::stop_token& stop) {
  const unsigned pairs = n * (n - 1) / 2;
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  // Bit i of a code moves to bit_map[perm][i] under the relabeling.
  std::vector<std::vector<unsigned>> bit_map;
  for (const auto& q : perms) {
    std::vector<unsigned> m(pairs);
    for (unsigned u = 0; u < n; ++u) {
      for (unsigned v = u + 1; v < n; ++v) m[edge_bit(n, u, v)] = edge_bit(n, q[u], q[v]);
    }
    bit_map.push_back(std::move(m));
  }

  const uint64_t total = uint64_t{1} << pairs;
  std::vector<bool> seen(total, false);
  std::vector<uint64_t> reps;
  for (uint64_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    if (stop.stop_requested()) return {};
    reps.push_back(code);
    for (const auto& m : bit_map) {
      uint64_t image = 0;
      for (unsigned i = 0; i < pairs; ++i) {
        if ((code >> i) & 1u) image |= uint64_t{1} << m[i];
      }
      seen[image] = true;
    }
  }
  return reps;
}

}  // namespace

CensusReport census(unsigned n_max, bool allow_large, std::stop_token stop) {
  if (n_max == 0) throw Error(ErrorCode::kPrecondition, "census needs n_max >= 1");
  if (n_max > 7 || (n_max > 6 && !allow_large)) {
    throw Error(ErrorCode::kBoundExceeded, "census is limited to 6 vertices (7 with the large flag)");
  }
  CensusReport report;
  report.n_max = n_max;
  for (unsigned n = 1; n <= n_max; ++n) {
    CensusCounts counts;
    counts.n = n;
    for (uint64_t code : class_representatives(n, stop)) {
      if (stop.stop_requested()) break;
      CensusEntry e;
      e.n = n;
      e.code = code;
      e.graph = decode_graph(n, code);
      e.connected = e.graph.is_connected();
      e.bipartite = is_bipartite(e.graph).has_value();
      const PermGroup aut = graph_automorphisms(e.graph);
      e.aut_order = aut.order();
      e.vertex_transitive = is_transitive(aut);
      e.cf_integral = cauchy_frobenius(aut) == mpq_class(static_cast<unsigned long>(orbit_count(aut)));
      e.verdict = rotary_verdict(e.graph);

      ++counts.graphs;
      counts.transitive += e.vertex_transitive;
      counts.rotarily_transitive += e.verdict.rotarily_transitive;
      counts.unverified += !e.verdict.verified;
      report.cf_integral = report.cf_integral && e.cf_integral;
      if (n == 1) report.trivial_graph_rotary = e.verdict.rotarily_transitive && e.verdict.verified;
      if (n >= 2 && e.verdict.rotarily_transitive) {
        report.no_rotary_beyond_one = false;
        if (e.vertex_transitive && e.connected && e.bipartite) report.no_rotary_bipartite = false;
      }
      report.entries.push_back(std::move(e));
    }
    if (stop.stop_requested()) {
      report.cancelled = true;
      break;
    }
    report.unverified += counts.unverified;
    report.counts.push_back(counts);
  }
  return report;
}

}  // namespace rotary
