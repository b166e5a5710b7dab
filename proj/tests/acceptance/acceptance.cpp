// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or runs past its time limit.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rotary/algebraic/alg_real.hpp"
#include "rotary/algebraic/expr.hpp"
#include "rotary/finite/census.hpp"
#include "rotary/finite/finite_graph.hpp"
#include "rotary/finite/finite_group.hpp"
#include "rotary/finite/permutation.hpp"
#include "rotary/geometry/elliptic.hpp"
#include "rotary/geometry/graph.hpp"
#include "rotary/geometry/isometry.hpp"
#include "rotary/geometry/sample.hpp"

namespace {

using namespace rotary;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// 1. Cauchy-Frobenius equals the orbit count on random subgroups of S6.
Outcome cauchy_frobenius_exact() {
  std::mt19937_64 rng(20240601);
  const int trials = 120;
  for (int t = 0; t < trials; ++t) {
    std::vector<Permutation> gens;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      std::vector<unsigned> im(6);
      std::iota(im.begin(), im.end(), 0u);
      std::shuffle(im.begin(), im.end(), rng);
      gens.emplace_back(im);
    }
    const PermGroup g(6, gens);
    if (cauchy_frobenius(g) != mpq_class(static_cast<unsigned long>(orbit_count(g)))) {
      return fail("mismatch on trial " + std::to_string(t));
    }
  }
  return {true, std::to_string(trials) + " subgroups"};
}

// 2. Every transitive subgroup of S4 and S5 has a derangement.
Outcome jordan_exhaustive() {
  size_t transitive = 0, subgroups = 0;
  for (size_t n : {4u, 5u}) {
    for (const auto& h : all_subgroups(PermGroup::symmetric(n))) {
      ++subgroups;
      if (!is_transitive(h)) continue;
      ++transitive;
      const Permutation w = jordan_witness(h);
      if (!w.is_derangement() || !h.contains(w)) return fail("bad witness in a subgroup of S" + std::to_string(n));
    }
  }
  return {true, std::to_string(transitive) + " transitive of " + std::to_string(subgroups) + " subgroups"};
}

// 3. Census through 6 vertices: rotarily transitive iff one vertex.
Outcome census_six() {
  const CensusReport r = census(6);
  size_t graphs = 0, flagged_six = 0;
  for (const auto& e : r.entries) {
    ++graphs;
    if (!e.verdict.verified) {
      if (e.n <= 5) return fail("unverified graph on " + std::to_string(e.n) + " vertices");
      const size_t m = e.graph.edges().size();
      if (m != 0 && m != 15) return fail("unverified n = 6 graph other than E6/K6");
      ++flagged_six;
      continue;
    }
    if (e.verdict.rotarily_transitive != (e.n == 1)) {
      return fail("verdict wrong for code " + std::to_string(e.code) + " on " + std::to_string(e.n) + " vertices");
    }
  }
  if (!r.no_rotary_beyond_one || !r.no_rotary_bipartite || !r.cf_integral || !r.trivial_graph_rotary) {
    return fail("a census assertion failed");
  }
  // E6 and K6 have Aut = S6. Certify them from the full lattice of S6:
  // every transitive subgroup contains a derangement.
  size_t transitive = 0;
  for (const auto& h : all_subgroups(PermGroup::symmetric(6), 720)) {
    if (!is_transitive(h)) continue;
    ++transitive;
    if (!jordan_witness(h).is_derangement()) return fail("transitive subgroup of S6 without a derangement");
  }
  return {true, std::to_string(graphs) + " graphs, " + std::to_string(flagged_six) + " flagged at n = 6, " +
                    std::to_string(transitive) + " transitive subgroups of S6 certified"};
}

// 4. Equidistant points on random feasible instances, exact.
Outcome equidistant_exact() {
  std::mt19937_64 rng(404);
  int done = 0, tries = 0;
  while (done < 100) {
    if (++tries > 5000) return fail("too few feasible instances");
    const ProjPoint p = random_rational_point(rng), q = random_rational_point(rng);
    const AlgReal c(random_cos(rng, 1, 39, 40));
    if (!within_two_steps(p, q, c)) continue;
    const ProjPoint o = equidistant_point(p, q, c);
    if (dist_cos(o, p) != c || dist_cos(o, q) != c) return fail("inexact instance " + std::to_string(done));
    ++done;
  }
  return {true, "100 instances (" + std::to_string(tries) + " drawn)"};
}

// 5. Diameters 3 and 4 with certificates and witness paths.
Outcome diameters() {
  const ProjPoint e1 = ProjPoint::basis(0), e2 = ProjPoint::basis(1);
  for (auto [text, k] : {std::pair{"4/5", 3u}, std::pair{"7/8", 4u}}) {
    const GraphSpec spec = GraphSpec::make(parse_expr(text));
    const DiameterResult d = diameter(spec);
    if (d.diameter != k) return fail(std::string("diameter for cos l = ") + text);
    if (d.t_k.sign() > 0 || d.t_k_minus_1.sign() <= 0) return fail(std::string("certificate for cos l = ") + text);
    if (d.t_k != chebyshev_T(k, spec.cos_l) || d.t_k_minus_1 != chebyshev_T(k - 1, spec.cos_l)) {
      return fail("certificate values");
    }
    const Path path = witness_path(spec, e1, e2);
    if (path.length() != k || !is_valid_path(spec, path) || !(path.vertices.front() == e1) || !(path.vertices.back() == e2)) {
      return fail(std::string("witness path for cos l = ") + text);
    }
    if (graph_distance(spec, e1, e2).distance != k) return fail("graph distance e1, e2");
  }
  return {true, "4/5 -> 3, 7/8 -> 4"};
}

// Apex angle found numerically: the rotation about o (at distance l from p)
// by angle a moves p by exactly l.
double simulated_ell_n(double cl, unsigned n) {
  const double sl = std::sqrt(1 - cl * cl);
  const std::array<double, 3> p{1, 0, 0}, o{cl, sl, 0};
  auto rotate = [&](const std::array<double, 3>& v, double a) {
    const double c = std::cos(a), s = std::sin(a);
    const double kv = o[0] * v[0] + o[1] * v[1] + o[2] * v[2];
    const std::array<double, 3> kx{o[1] * v[2] - o[2] * v[1], o[2] * v[0] - o[0] * v[2], o[0] * v[1] - o[1] * v[0]};
    std::array<double, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = v[i] * c + kx[i] * s + o[i] * kv * (1 - c);
    return r;
  };
  auto dot = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };
  double lo = 0, hi = M_PI;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    (dot(p, rotate(p, mid)) > cl ? lo : hi) = mid;
  }
  const double a = (lo + hi) / 2;
  std::array<double, 3> v = p;
  for (unsigned i = 0; i < n; ++i) v = rotate(v, a);
  return std::fabs(dot(p, v));
}

// 6. The l_n ladder for cos l = 4/5, n <= 10.
Outcome ell_n_ladder() {
  const AlgReal c(Rational(4, 5));
  std::vector<AlgReal> values;
  double worst = 0;
  const ProjPoint p = ProjPoint::basis(0);
  for (unsigned n = 1; n <= 10; ++n) {
    const AlgReal v = ell_n_cos(c, n);
    worst = std::max(worst, std::fabs(v.to_double() - simulated_ell_n(0.8, n)));
    const ProjPoint q = ell_n_partner(p, c, n);
    if (dist_cos(p, q) != v) return fail("partner distance at n = " + std::to_string(n));
    const EllNWitness w = construct_ell_n_witness(p, q, c, n);
    if (w.chain.size() != n + 1 || !(w.chain.back() == q) || !verify_ell_n_witness(w.o, w.chain, c)) {
      return fail("witness round trip at n = " + std::to_string(n));
    }
    values.push_back(v);
  }
  if (worst > 1e-9) return fail("simulation differs by " + std::to_string(worst));
  for (size_t i = 0; i < values.size(); ++i) {
    for (size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) return fail("l_" + std::to_string(i + 1) + " = l_" + std::to_string(j + 1));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max float gap %.2e, 10 distinct values", worst);
  return {true, buf};
}

// 7. Exact fixed points of rational rotations and integer matrices.
Outcome fixed_points() {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const LinearMap m = random_rational_orthogonal(seed);
    if (m.determinant() != AlgReal(1)) return fail("sampler produced det != 1");
    const ProjPoint p = fixed_point(m);
    if (!(apply(m, p) == p) || !is_zero(m * p.lift() - p.lift())) return fail("rotation seed " + std::to_string(seed));
  }
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> entry(-4, 4);
  int done = 0;
  while (done < 100) {
    LinearMap::Rows rows;
    for (auto& row : rows) {
      for (auto& v : row) v = AlgReal(entry(rng));
    }
    if (determinant(rows).is_zero()) continue;
    const LinearMap m(rows);
    const ProjPoint p = fixed_point(m);
    if (!(apply(m, p) == p)) return fail("integer matrix " + std::to_string(done));
    ++done;
  }
  return {true, "100 rotations, 100 integer matrices"};
}

// 8. Rational-angle truth table.
Outcome rational_angles() {
  for (const char* s : {"1", "sqrt(3)/2", "sqrt(2)/2", "1/2", "0", "-1/2", "-1"}) {
    if (!is_rational_angle(parse_expr(s))) return fail(std::string(s) + " should be a rational angle");
  }
  for (const char* s : {"1/3", "4/9", "2/5"}) {
    if (is_rational_angle(parse_expr(s))) return fail(std::string(s) + " should not be a rational angle");
  }
  return {true, "7 true, 3 false"};
}

// 9. Orthogonal maps preserve exact-distance-l pairs both ways.
Outcome edge_preservation() {
  std::mt19937_64 rng(909);
  const AlgReal c(Rational(4, 5));
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    const LinearMap m = random_rational_orthogonal(1000 + seed);
    std::vector<PointPair> sample;
    while (sample.size() < 20) {
      const ProjPoint p = random_rational_point(rng), r = random_rational_point(rng);
      if (p == r || compare(dist_cos(p, r), c) > 0) continue;
      const ProjPoint q = geodesic_step(p, r, c);
      if (dist_cos(p, q) != c) return fail("sample pair is not an edge");
      sample.push_back({p, q});
    }
    if (!preserves_edges_on_sample(m, c, sample)) return fail("map " + std::to_string(seed));
    for (const auto& [p, q] : sample) {
      if (dist_cos(apply(m, p), apply(m, q)) != c) return fail("image not an edge");
    }
  }
  return {true, "50 maps x 20 pairs"};
}

// 10. Conjugation-class graphs of small groups.
Outcome conjugation_graphs() {
  const std::vector<std::pair<std::string, FiniteGroup>> groups{
      {"S3", FiniteGroup::from_permutations(PermGroup::symmetric(3))},
      {"S4", FiniteGroup::from_permutations(PermGroup::symmetric(4))},
      {"D4", FiniteGroup::from_permutations(dihedral_group(4))},
      {"Q8", quaternion_group()},
  };
  size_t total = 0;
  for (const auto& [name, grp] : groups) {
    for (unsigned g1 = 0; g1 < grp.order(); ++g1) {
      if (g1 == grp.identity()) continue;
      const auto powers = grp.cyclic_subgroup(g1);
      for (unsigned g3 = 0; g3 < grp.order(); ++g3) {
        if (std::binary_search(powers.begin(), powers.end(), g3)) continue;
        const ConjugationGraph cg = conjugation_graph(grp, g1, g3);
        ++total;
        if (!cg.by_automorphisms || !cg.transitive) return fail(name + ": action not by automorphisms or not transitive");
        if (cg.vertices.size() >= 2 && cg.by_rotations) return fail(name + ": by rotations on a class of size >= 2");
      }
    }
  }
  return {true, std::to_string(total) + " (g1, g3) pairs"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cauchy-frobenius on subgroups of S6", 10, cauchy_frobenius_exact},
      {2, "jordan witnesses over S4 and S5", 60, jordan_exhaustive},
      {3, "census n <= 6: rotary iff one vertex", 300, census_six},
      {4, "equidistant points exact", 60, equidistant_exact},
      {5, "diameters 3 and 4 with witnesses", 30, diameters},
      {6, "l_n ladder for cos l = 4/5", 60, ell_n_ladder},
      {7, "exact fixed points", 120, fixed_points},
      {8, "rational-angle truth table", 10, rational_angles},
      {9, "edge preservation by orthogonal maps", 0, edge_preservation},
      {10, "conjugation graphs of S3, S4, D4, Q8", 30, conjugation_graphs},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && c.limit_s > 0 && secs > c.limit_s) out = fail("over the time limit");
    failures += !out.ok;
    char limit[32] = "none";
    if (c.limit_s > 0) std::snprintf(limit, sizeof limit, "%.0f s", c.limit_s);
    std::printf("[%s] %2d %s: %s (%.2f s, limit %s)\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs,
                limit);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
