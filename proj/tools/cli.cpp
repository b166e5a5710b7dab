#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotary/algebraic/alg_real.hpp"
#include "rotary/algebraic/expr.hpp"
#include "rotary/error.hpp"
#include "rotary/finite/census.hpp"
#include "rotary/finite/finite_graph.hpp"
#include "rotary/finite/finite_group.hpp"
#include "rotary/finite/permutation.hpp"
#include "rotary/geometry/elliptic.hpp"
#include "rotary/geometry/graph.hpp"
#include "rotary/geometry/isometry.hpp"
#include "rotary/geometry/sample.hpp"

namespace rotary::cli {
namespace {

using json = nlohmann::ordered_json;

struct Ctx {
  std::optional<int> approx_bits;
  uint64_t seed = 1;
  std::stop_token stop;
};

// Raised by long-running commands that were interrupted.
struct Interrupted {
  json partial;
};

std::string decimal(const AlgReal& a, int bits) {
  const Rational q = to_float(a, bits);
  const int digits = std::max(1, static_cast<int>(std::ceil(bits * 0.30103)));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational s = q * scale;
  mpz_class n = s.get_num();
  const mpz_class d = s.get_den();
  const bool negative = n < 0;
  if (negative) n = -n;
  const mpz_class r = (2 * n + d) / (2 * d);
  std::string str = r.get_str();
  if (static_cast<int>(str.size()) <= digits) str.insert(0, static_cast<size_t>(digits + 1) - str.size(), '0');
  str.insert(str.size() - static_cast<size_t>(digits), ".");
  return (negative && r != 0 ? "-" : "") + str;
}

void put(json& o, const std::string& key, const AlgReal& a, const Ctx& c) {
  o[key] = format_expr(a);
  if (c.approx_bits) o[key + "_approx"] = decimal(a, *c.approx_bits);
}

json point_json(const ProjPoint& p, const Ctx& c) {
  json o = json::object();
  put(o, "x", p[0], c);
  put(o, "y", p[1], c);
  put(o, "z", p[2], c);
  return o;
}

json points_json(const std::vector<ProjPoint>& ps, const Ctx& c) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(point_json(p, c));
  return a;
}

json matrix_json(const LinearMap& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(format_expr(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json parse_json(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorCode::kParse, "expected an expression string or integer");
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool starts_with(const std::string& s, char c) {
  const auto i = s.find_first_not_of(" \t\n");
  return i != std::string::npos && s[i] == c;
}

ProjPoint parse_point(const std::string& s) {
  std::vector<std::string> parts;
  if (starts_with(s, '{')) {
    const json j = parse_json(s);
    for (const char* k : {"x", "y", "z"}) {
      if (!j.contains(k)) throw Error(ErrorCode::kParse, std::string("point is missing \"") + k + "\"");
      parts.push_back(scalar_text(j[k]));
    }
  } else if (starts_with(s, '[')) {
    for (const auto& v : parse_json(s)) parts.push_back(scalar_text(v));
  } else {
    parts = split_top(s, ',');
  }
  if (parts.size() != 3) throw Error(ErrorCode::kParse, "a point needs three coordinates");
  return make_point(parse_expr(parts[0]), parse_expr(parts[1]), parse_expr(parts[2]));
}

LinearMap parse_matrix(const std::string& s) {
  std::vector<std::vector<std::string>> cells;
  if (starts_with(s, '[')) {
    for (const auto& row : parse_json(s)) {
      cells.emplace_back();
      if (!row.is_array()) throw Error(ErrorCode::kParse, "matrix rows must be arrays");
      for (const auto& v : row) cells.back().push_back(scalar_text(v));
    }
  } else {
    for (const auto& row : split_top(s, ';')) cells.push_back(split_top(row, ','));
  }
  if (cells.size() != 3) throw Error(ErrorCode::kParse, "a matrix needs three rows");
  LinearMap::Rows rows;
  for (int i = 0; i < 3; ++i) {
    if (cells[i].size() != 3) throw Error(ErrorCode::kParse, "a matrix row needs three entries");
    for (int j = 0; j < 3; ++j) rows[i][j] = parse_expr(cells[i][j]);
  }
  return LinearMap(std::move(rows));
}

Integer parse_integer(std::string s) {
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  const size_t digits_from = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == digits_from || s.find_first_not_of("0123456789", digits_from) != std::string::npos) {
    throw Error(ErrorCode::kParse, "expected an integer coefficient, got \"" + s + "\"");
  }
  return Integer(s);
}

IntPoly parse_poly(const std::string& s) {
  std::vector<Integer> c;
  if (starts_with(s, '[')) {
    for (const auto& v : parse_json(s)) c.push_back(parse_integer(scalar_text(v)));
  } else {
    for (const auto& part : split_top(s, ',')) c.push_back(parse_integer(part));
  }
  return IntPoly(std::move(c));
}

struct GroupArgs {
  std::vector<std::string> gens;
  std::string images;
  size_t degree = 0;
  size_t symmetric = 0;
};

void add_group_options(CLI::App* sub, GroupArgs& g) {
  sub->add_option("--group", g.gens, "Generator in cycle notation; repeat or separate with ';'");
  sub->add_option("--images", g.images, "JSON list of image lists");
  sub->add_option("--degree", g.degree, "Number of points (default: inferred)");
  sub->add_option("--symmetric", g.symmetric, "Use the full symmetric group on N points");
}

bool has_group(const GroupArgs& a) { return !a.gens.empty() || !a.images.empty() || a.symmetric > 0; }

PermGroup build_group(const GroupArgs& a) {
  std::vector<Permutation> gens;
  for (const auto& s : a.gens) {
    for (const auto& part : split_top(s, ';')) gens.push_back(Permutation::parse_cycles(part));
  }
  if (!a.images.empty()) {
    for (const auto& im : parse_json(a.images)) {
      if (!im.is_array()) throw Error(ErrorCode::kParse, "images must be a list of lists");
      std::vector<unsigned> v;
      for (const auto& x : im) {
        if (!x.is_number_unsigned()) throw Error(ErrorCode::kParse, "images must be non-negative integers");
        v.push_back(x.get<unsigned>());
      }
      gens.emplace_back(std::move(v));
    }
  }
  size_t degree = std::max(a.degree, a.symmetric);
  for (const auto& g : gens) degree = std::max(degree, g.degree());
  if (a.degree != 0 && degree > a.degree) throw Error(ErrorCode::kPrecondition, "generator exceeds --degree");
  if (degree == 0) throw Error(ErrorCode::kPrecondition, "no group given");
  for (auto& g : gens) g = g.extended(degree);
  if (a.symmetric > 0) {
    const PermGroup sym = PermGroup::symmetric(a.symmetric);
    for (const auto& g : sym.generators()) gens.push_back(g.extended(degree));
  }
  return PermGroup(degree, std::move(gens));
}

json cycles_json(const std::vector<Permutation>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_cycles());
  return a;
}

FiniteGraph parse_graph(const std::string& s) {
  if (starts_with(s, '{')) {
    const json j = parse_json(s);
    if (!j.contains("n") || !j["n"].is_number_unsigned()) throw Error(ErrorCode::kParse, "graph needs a vertex count \"n\"");
    std::vector<std::pair<unsigned, unsigned>> edges;
    if (j.contains("edges")) {
      for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
          throw Error(ErrorCode::kParse, "edges must be pairs of vertex indices");
        }
        edges.emplace_back(e[0].get<unsigned>(), e[1].get<unsigned>());
      }
    }
    return FiniteGraph(j["n"].get<size_t>(), edges);
  }
  // Named families: C<n>, K<n>, P<n>, E<n> (edgeless).
  if (s.size() >= 2 && s.find_first_not_of("0123456789", 1) == std::string::npos) {
    const size_t n = std::stoul(s.substr(1));
    switch (s[0]) {
      case 'C': return FiniteGraph::cycle(n);
      case 'K': return FiniteGraph::complete(n);
      case 'P': return FiniteGraph::path(n);
      case 'E': return FiniteGraph(n, {});
    }
  }
  throw Error(ErrorCode::kParse, "graph must be edge-list JSON or one of C<n>, K<n>, P<n>, E<n>");
}

json graph_json(const FiniteGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.vertex_count()}, {"edges", edges}};
}

FiniteGroup named_group(const std::string& name) {
  if (name == "Q8") return quaternion_group();
  if (name.size() >= 2 && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const unsigned n = static_cast<unsigned>(std::stoul(name.substr(1)));
    if (name[0] == 'S' && n >= 1 && n <= 6) return FiniteGroup::from_permutations(PermGroup::symmetric(n));
    if (name[0] == 'D' && n >= 3 && n <= 12) return FiniteGroup::from_permutations(dihedral_group(n));
  }
  throw Error(ErrorCode::kPrecondition, "unknown group name \"" + name + "\" (S1..S6, D3..D12, Q8)");
}

unsigned find_element(const FiniteGroup& grp, const std::string& s) {
  if (auto i = grp.find(s)) return *i;
  if (!s.empty() && s.front() == '(') {
    if (auto i = grp.find(Permutation::parse_cycles(s).to_cycles())) return *i;
  }
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
    const unsigned long i = std::stoul(s);
    if (i < grp.order()) return static_cast<unsigned>(i);
  }
  throw Error(ErrorCode::kPrecondition, "no group element \"" + s + "\"");
}

std::string compare_name(int c) { return c < 0 ? "Less" : c > 0 ? "Greater" : "Equal"; }

// The l = pi/2 graph is handled by its own helpers; cos_l = 0 selects it.
bool right_angle_spec(const AlgReal& c) { return c.is_zero(); }

}  // namespace

Result run(const std::vector<std::string>& args, std::stop_token stop) {
  Ctx ctx;
  ctx.stop = stop;
  CLI::App app{"Exact queries on the elliptic-plane distance graph and finite group actions", "rotary"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  int approx_bits = 0;
  app.add_flag("--pretty", pretty, "Indent the JSON output");
  app.add_option("--approx", approx_bits, "Add decimal approximations good to BITS bits")->check(CLI::Range(1, 4096));
  app.add_option("--seed", ctx.seed, "Seed for randomized commands");

  std::function<json()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  // field
  CLI::App* field = app.add_subcommand("field", "Real algebraic numbers");
  field->require_subcommand(1);
  field->fallthrough();
  std::string expr_a, expr_b, poly_text;
  {
    auto* s = leaf(field, "eval", "Evaluate an expression exactly");
    s->add_option("--expr", expr_a, "Expression")->required();
    s->callback([&] {
      action = [&] {
        const AlgReal v = parse_expr(expr_a);
        json o;
        put(o, "value", v, ctx);
        json mp = json::array();
        const IntPoly minimal = v.min_poly();
        for (const auto& c : minimal.coeffs()) mp.push_back(c.get_str());
        o["min_poly"] = mp;
        const Interval iv = v.isolating_interval();
        o["isolating_interval"] = {format_rational(iv.lo), format_rational(iv.hi)};
        o["sign"] = v.sign();
        return o;
      };
    });
  }
  {
    auto* s = leaf(field, "compare", "Compare two expressions");
    s->add_option("--a", expr_a, "Left expression")->required();
    s->add_option("--b", expr_b, "Right expression")->required();
    s->callback([&] {
      action = [&] { return json{{"compare", compare_name(compare(parse_expr(expr_a), parse_expr(expr_b)))}}; };
    });
  }
  {
    auto* s = leaf(field, "roots", "Real roots of an integer polynomial");
    s->add_option("--poly", poly_text, "Ascending coefficients, e.g. -2,0,1")->required();
    s->callback([&] {
      action = [&] {
        json roots = json::array();
        for (const auto& r : real_roots(parse_poly(poly_text))) {
          json o;
          put(o, "value", r, ctx);
          roots.push_back(o);
        }
        return json{{"roots", roots}};
      };
    });
  }
  {
    auto* s = leaf(field, "angle-rational", "Whether arccos(c) is a rational multiple of pi");
    s->add_option("--cos", expr_a, "Cosine")->required();
    s->callback([&] {
      action = [&] {
        const auto w = rational_angle_witness(parse_expr(expr_a));
        return json{{"rational_angle", w.has_value()}, {"witness", w ? json(*w) : json(nullptr)}};
      };
    });
  }

  // plane
  CLI::App* plane = app.add_subcommand("plane", "Elliptic-plane geometry");
  plane->require_subcommand(1);
  plane->fallthrough();
  std::string p_text, q_text, cos_l_text;
  unsigned n_steps = 1;
  {
    auto* s = leaf(plane, "dist", "Cosine of the distance between two points");
    s->add_option("--p", p_text, "Point")->required();
    s->add_option("--q", q_text, "Point")->required();
    s->callback([&] {
      action = [&] {
        json o;
        put(o, "dist_cos", dist_cos(parse_point(p_text), parse_point(q_text)), ctx);
        return o;
      };
    });
  }
  {
    auto* s = leaf(plane, "equidistant", "A point at distance l from both p and q");
    s->add_option("--p", p_text, "Point")->required();
    s->add_option("--q", q_text, "Point")->required();
    s->add_option("--cos-l", cos_l_text, "cos l")->required();
    s->callback([&] {
      action = [&] {
        const ProjPoint o = equidistant_point(parse_point(p_text), parse_point(q_text), parse_expr(cos_l_text));
        return json{{"point", point_json(o, ctx)}};
      };
    });
  }
  {
    auto* s = leaf(plane, "step", "Move distance l from p toward q");
    s->add_option("--p", p_text, "Point")->required();
    s->add_option("--q", q_text, "Point")->required();
    s->add_option("--cos-l", cos_l_text, "cos l")->required();
    s->callback([&] {
      action = [&] {
        const ProjPoint p = parse_point(p_text), q = parse_point(q_text);
        const ProjPoint r = geodesic_step(p, q, parse_expr(cos_l_text));
        json o{{"point", point_json(r, ctx)}};
        put(o, "remaining_cos", dist_cos(r, q), ctx);
        return o;
      };
    });
  }
  {
    auto* s = leaf(plane, "ellncos", "cos l_n, the n-th ladder distance");
    s->add_option("--cos-l", cos_l_text, "cos l")->required();
    s->add_option("--n", n_steps, "n")->check(CLI::Range(0u, 10000u));
    s->callback([&] {
      action = [&] {
        const AlgReal c = parse_expr(cos_l_text);
        json o{{"n", n_steps}};
        put(o, "cos_ln", ell_n_cos(c, n_steps), ctx);
        put(o, "cos_apex", apex_angle_cos(c), ctx);
        return o;
      };
    });
  }
  {
    auto* s = leaf(plane, "witness", "Centre and chain certifying a distance l_n");
    s->add_option("--p", p_text, "Point")->required();
    s->add_option("--q", q_text, "Target point (default: the rotation partner of p)");
    s->add_option("--cos-l", cos_l_text, "cos l")->required();
    s->add_option("--n", n_steps, "n")->check(CLI::Range(1u, 1000u));
    s->callback([&] {
      action = [&] {
        const AlgReal c = parse_expr(cos_l_text);
        const ProjPoint p = parse_point(p_text);
        const ProjPoint q = q_text.empty() ? ell_n_partner(p, c, n_steps) : parse_point(q_text);
        const EllNWitness w = construct_ell_n_witness(p, q, c, n_steps);
        return json{{"o", point_json(w.o, ctx)},
                    {"chain", points_json(w.chain, ctx)},
                    {"verified", verify_ell_n_witness(w.o, w.chain, c)}};
      };
    });
  }

  // iso
  CLI::App* iso = app.add_subcommand("iso", "Linear maps of the plane");
  iso->require_subcommand(1);
  iso->fallthrough();
  std::string matrix_text;
  unsigned pair_count = 20;
  {
    auto* s = leaf(iso, "fixed-point", "A point fixed by the map");
    s->add_option("--matrix", matrix_text, "Row-major 3x3 JSON array of expressions, or rows split by ';'")->required();
    s->callback([&] {
      action = [&] {
        const LinearMap m = parse_matrix(matrix_text);
        const ProjPoint p = fixed_point(m);
        return json{{"point", point_json(p, ctx)}, {"fixed", apply(m, p) == p}};
      };
    });
  }
  {
    auto* s = leaf(iso, "check-orthogonal", "Whether M^T M = I exactly");
    s->add_option("--matrix", matrix_text, "Matrix")->required();
    s->callback([&] {
      action = [&] {
        const LinearMap m = parse_matrix(matrix_text);
        json o{{"orthogonal", is_orthogonal(m)}};
        put(o, "determinant", m.determinant(), ctx);
        return o;
      };
    });
  }
  {
    auto* s = leaf(iso, "sample-edges", "Check d = l <=> d(Mx, My) = l on seeded pairs");
    s->add_option("--matrix", matrix_text, "Matrix (default: a seeded rational rotation)");
    s->add_option("--cos-l", cos_l_text, "cos l")->required();
    s->add_option("--pairs", pair_count, "Number of pairs; every other one is an edge")->check(CLI::Range(0u, 10000u));
    s->callback([&] {
      action = [&] {
        const AlgReal c = parse_expr(cos_l_text);
        const LinearMap m = matrix_text.empty() ? random_rational_orthogonal(ctx.seed) : parse_matrix(matrix_text);
        std::mt19937_64 rng(ctx.seed);
        std::vector<PointPair> pairs;
        size_t edges = 0;
        json violations = json::array();
        for (unsigned i = 0; i < pair_count; ++i) {
          const ProjPoint p = random_rational_point(rng);
          ProjPoint q = random_rational_point(rng);
          if (i % 2 == 0) {
            while (q == p || compare(dist_cos(p, q), c) > 0) q = random_rational_point(rng);
            q = geodesic_step(p, q, c);
          }
          edges += dist_cos(p, q) == c;
          if (!preserves_edges_on_sample(m, c, {{p, q}})) violations.push_back(i);
        }
        json o{{"matrix", matrix_json(m)},
               {"orthogonal", is_orthogonal(m)},
               {"pairs", pair_count},
               {"edge_pairs", edges},
               {"preserved", violations.empty()},
               {"violations", violations}};
        return o;
      };
    });
  }

  // graph
  CLI::App* graph = app.add_subcommand("graph", "The distance-l graph on the elliptic plane");
  graph->require_subcommand(1);
  graph->fallthrough();
  unsigned target_k = 3;
  long max_den = 1000000;
  auto pq_options = [&](CLI::App* s) {
    s->add_option("--cos-l", cos_l_text, "cos l (0 selects the right-angle graph)")->required();
    s->add_option("--p", p_text, "Point")->required();
    s->add_option("--q", q_text, "Point")->required();
  };
  {
    auto* s = leaf(graph, "edge", "Whether p and q are adjacent");
    pq_options(s);
    s->callback([&] {
      action = [&] {
        const AlgReal c = parse_expr(cos_l_text);
        const ProjPoint p = parse_point(p_text), q = parse_point(q_text);
        if (right_angle_spec(c)) return json{{"edge", right_angle::is_edge(p, q)}};
        return json{{"edge", is_edge(GraphSpec::make(c), p, q)}};
      };
    });
  }
  {
    auto* s = leaf(graph, "distance", "Graph distance with its certificate");
    pq_options(s);
    s->callback([&] {
      action = [&] {
        const AlgReal c = parse_expr(cos_l_text);
        const ProjPoint p = parse_point(p_text), q = parse_point(q_text);
        json o;
        if (right_angle_spec(c)) {
          o["distance"] = right_angle::distance(p, q);
          put(o, "dist_cos", dist_cos(p, q), ctx);
          return o;
        }
        const DistanceResult r = graph_distance(GraphSpec::make(c), p, q);
        o["distance"] = r.distance;
        put(o, "dist_cos", r.dist_cos, ctx);
        json cert = json::object();
        if (r.lower_bound_cos) put(cert, "lower_bound_cos", *r.lower_bound_cos, ctx);
        if (r.upper_bound_cos) put(cert, "upper_bound_cos", *r.upper_bound_cos, ctx);
        cert["wraps"] = r.wraps;
        o["certificate"] = cert;
        return o;
      };
    });
  }
  {
    auto* s = leaf(graph, "path", "A shortest path from p to q");
    pq_options(s);
    s->callback([&] {
      action = [&] {
        const AlgReal c = parse_expr(cos_l_text);
        const ProjPoint p = parse_point(p_text), q = parse_point(q_text);
        if (right_angle_spec(c)) {
          const Path path = right_angle::witness_path(p, q);
          return json{{"length", path.length()}, {"path", points_json(path.vertices, ctx)}};
        }
        const GraphSpec spec = GraphSpec::make(c);
        const Path path = witness_path(spec, p, q);
        return json{{"length", path.length()},
                    {"path", points_json(path.vertices, ctx)},
                    {"valid", is_valid_path(spec, path)}};
      };
    });
  }
  {
    auto* s = leaf(graph, "diameter", "Exact diameter with its Chebyshev certificate");
    s->add_option("--cos-l", cos_l_text, "cos l")->required();
    s->callback([&] {
      action = [&] {
        const AlgReal c = parse_expr(cos_l_text);
        if (right_angle_spec(c)) return json{{"diameter", 2}, {"certificate", {{"right_angle", true}}}};
        const DiameterResult d = diameter(GraphSpec::make(c));
        json cert{{"strict", d.strict}, {"quarter_turn_steps", d.quarter_turn_steps}};
        put(cert, "t_k", d.t_k, ctx);
        put(cert, "t_k_minus_1", d.t_k_minus_1, ctx);
        return json{{"diameter", d.diameter}, {"certificate", cert}};
      };
    });
  }
  {
    auto* s = leaf(graph, "validate", "Check the strict regime and the apex-angle condition");
    s->add_option("--cos-l", cos_l_text, "cos l")->required();
    s->callback([&] {
      action = [&] {
        const SpecReport r = validate_spec(GraphSpec::make(parse_expr(cos_l_text)));
        json o{{"strict", r.strict}};
        put(o, "cos_alpha", r.cos_alpha, ctx);
        o["alpha_rational"] = r.alpha_rational;
        o["alpha_witness"] = r.alpha_witness ? json(*r.alpha_witness) : json(nullptr);
        o["hypotheses_hold"] = r.hypotheses_hold;
        return o;
      };
    });
  }
  {
    auto* s = leaf(graph, "choose-ell", "A rational cos l giving diameter k");
    s->add_option("--k", target_k, "Target diameter (>= 3)")->required();
    s->add_option("--max-denominator", max_den, "Search bound")->check(CLI::Range(2L, 100000000L));
    s->callback([&] {
      action = [&] {
        const AlgReal c = choose_ell_for_diameter(target_k, ctx.stop, max_den);
        json o{{"k", target_k}};
        put(o, "cos_l", c, ctx);
        o["diameter"] = diameter(GraphSpec::make(c)).diameter;
        return o;
      };
    });
  }

  // finite
  CLI::App* finite = app.add_subcommand("finite", "Finite groups and graphs");
  finite->require_subcommand(1);
  finite->fallthrough();
  GroupArgs group_args;
  std::string graph_text, group_name, table_text, names_text, g1_text, g3_text;
  size_t bound = 200;
  unsigned n_max = 6;
  bool allow_large = false, all_pairs = false, with_graphs = true;
  {
    auto* s = leaf(finite, "cf", "Orbit count and average fixed points");
    add_group_options(s, group_args);
    s->callback([&] {
      action = [&] {
        const PermGroup g = build_group(group_args);
        return json{{"orbit_count", orbit_count(g)}, {"average_fixed_points", format_rational(cauchy_frobenius(g))}};
      };
    });
  }
  {
    auto* s = leaf(finite, "rotary", "Rotary transitivity of a group action or a graph");
    add_group_options(s, group_args);
    s->add_option("--graph", graph_text, "Graph instead of a group");
    s->add_option("--bound", bound, "Subgroup enumeration bound");
    s->callback([&] {
      action = [&] {
        if (!graph_text.empty()) {
          RotaryOptions opts;
          opts.subgroup_bound = bound;
          const RotaryVerdict v = rotary_verdict(parse_graph(graph_text), opts);
          return json{{"rotarily_transitive", v.rotarily_transitive},
                      {"verified", v.verified},
                      {"method", v.method},
                      {"aut_order", v.aut_order},
                      {"vertex_transitive", v.vertex_transitive},
                      {"subgroups_examined", v.subgroups_examined},
                      {"witness_generators", cycles_json(v.witness_generators)}};
        }
        const PermGroup g = build_group(group_args);
        size_t derangements = 0;
        for (const auto& p : g.elements()) derangements += p.is_derangement();
        return json{{"transitive", is_transitive(g)},
                    {"by_rotations", derangements == 0},
                    {"rotarily_transitive", is_rotarily_transitive_action(g)},
                    {"order", g.order()},
                    {"derangements", derangements}};
      };
    });
  }
  {
    auto* s = leaf(finite, "jordan", "A fixed-point-free element of a transitive group");
    add_group_options(s, group_args);
    s->callback([&] { action = [&] { return json{{"witness", jordan_witness(build_group(group_args)).to_cycles()}}; }; });
  }
  {
    auto* s = leaf(finite, "subgroups", "All subgroups");
    add_group_options(s, group_args);
    s->add_option("--bound", bound, "Largest group order accepted");
    s->callback([&] {
      action = [&] {
        const auto subs = all_subgroups(build_group(group_args), bound);
        json list = json::array();
        for (const auto& h : subs) {
          list.push_back({{"order", h.order()}, {"generators", cycles_json(h.generators())}, {"transitive", is_transitive(h)}});
        }
        return json{{"count", subs.size()}, {"subgroups", list}};
      };
    });
  }
  {
    auto* s = leaf(finite, "automorphisms", "Automorphism group of a graph");
    s->add_option("--graph", graph_text, "Edge-list JSON or C<n>, K<n>, P<n>, E<n>")->required();
    s->callback([&] {
      action = [&] {
        const PermGroup aut = graph_automorphisms(parse_graph(graph_text));
        return json{{"order", aut.order()}, {"generators", cycles_json(aut.generators())}, {"transitive", is_transitive(aut)}};
      };
    });
  }
  {
    auto* s = leaf(finite, "bipartite", "A proper 2-colouring, if any");
    s->add_option("--graph", graph_text, "Graph")->required();
    s->callback([&] {
      action = [&] {
        const auto col = is_bipartite(parse_graph(graph_text));
        return json{{"bipartite", col.has_value()}, {"coloring", col ? json(*col) : json(nullptr)}};
      };
    });
  }
  {
    auto* s = leaf(finite, "conjgraph", "Graph on a conjugacy class with the conjugation action");
    add_group_options(s, group_args);
    s->add_option("--group-name", group_name, "S1..S6, D3..D12 or Q8");
    s->add_option("--table", table_text, "Row-major multiplication table JSON");
    s->add_option("--names", names_text, "JSON list of element names for --table");
    s->add_option("--g1", g1_text, "Element name or index");
    s->add_option("--g3", g3_text, "Element name or index");
    s->add_flag("--all", all_pairs, "Summarize every valid (g1, g3)");
    s->callback([&] {
      action = [&] {
        FiniteGroup grp;
        if (!group_name.empty()) {
          grp = named_group(group_name);
        } else if (!table_text.empty()) {
          FiniteGroup::Table t;
          for (const auto& row : parse_json(table_text)) t.push_back(row.get<std::vector<unsigned>>());
          std::vector<std::string> names;
          if (!names_text.empty()) names = parse_json(names_text).get<std::vector<std::string>>();
          grp = FiniteGroup::from_table(std::move(t), std::move(names));
        } else if (has_group(group_args)) {
          grp = FiniteGroup::from_permutations(build_group(group_args));
        } else {
          throw Error(ErrorCode::kPrecondition, "no group given");
        }
        if (all_pairs) {
          size_t pairs = 0, rotary_big = 0;
          bool autos = true, trans = true;
          for (unsigned g1 = 0; g1 < grp.order(); ++g1) {
            if (g1 == grp.identity()) continue;
            const auto powers = grp.cyclic_subgroup(g1);
            for (unsigned g3 = 0; g3 < grp.order(); ++g3) {
              if (std::binary_search(powers.begin(), powers.end(), g3)) continue;
              const ConjugationGraph cg = conjugation_graph(grp, g1, g3);
              ++pairs;
              autos = autos && cg.by_automorphisms;
              trans = trans && cg.transitive;
              rotary_big += cg.vertices.size() >= 2 && cg.by_rotations;
            }
          }
          return json{{"order", grp.order()},
                      {"pairs", pairs},
                      {"by_automorphisms", autos},
                      {"transitive", trans},
                      {"by_rotations_with_class_ge_2", rotary_big}};
        }
        if (g1_text.empty() || g3_text.empty()) throw Error(ErrorCode::kPrecondition, "--g1 and --g3 are required without --all");
        const ConjugationGraph cg = conjugation_graph(grp, find_element(grp, g1_text), find_element(grp, g3_text));
        json cls = json::array(), ffree = json::array();
        for (unsigned v : cg.vertices) cls.push_back(grp.name(v));
        for (unsigned g : cg.fixed_point_free) ffree.push_back(grp.name(g));
        return json{{"g1", grp.name(cg.g1)},
                    {"g2", grp.name(cg.g2)},
                    {"g3", grp.name(cg.g3)},
                    {"class", cls},
                    {"graph", graph_json(cg.graph)},
                    {"action_generators", cycles_json(cg.action.generators())},
                    {"by_automorphisms", cg.by_automorphisms},
                    {"transitive", cg.transitive},
                    {"by_rotations", cg.by_rotations},
                    {"fixed_point_free", ffree}};
      };
    });
  }
  {
    auto* s = leaf(finite, "census", "All graphs up to n_max vertices");
    s->add_option("--n-max", n_max, "Largest vertex count")->check(CLI::Range(1u, 7u));
    s->add_flag("--allow-large", allow_large, "Permit n_max = 7 (slow)");
    s->add_flag("--graphs,!--no-graphs", with_graphs, "Omit the per-graph verdicts");
    s->callback([&] {
      action = [&] {
        const CensusReport r = census(n_max, allow_large, ctx.stop);
        json counts = json::array();
        for (const auto& c : r.counts) {
          counts.push_back({{"n", c.n},
                            {"graphs", c.graphs},
                            {"transitive", c.transitive},
                            {"rotarily_transitive", c.rotarily_transitive},
                            {"unverified", c.unverified}});
        }
        json o{{"n_max", r.n_max},
               {"counts", counts},
               {"assertions",
                {{"no_rotary_beyond_one", r.no_rotary_beyond_one},
                 {"no_rotary_bipartite", r.no_rotary_bipartite},
                 {"cf_integral", r.cf_integral},
                 {"trivial_graph_rotary", r.trivial_graph_rotary}}},
               {"unverified", r.unverified}};
        if (with_graphs) {
          json graphs = json::array();
          for (const auto& e : r.entries) {
            graphs.push_back({{"n", e.n},
                              {"code", e.code},
                              {"edges", graph_json(e.graph)["edges"]},
                              {"aut_order", e.aut_order},
                              {"vertex_transitive", e.vertex_transitive},
                              {"connected", e.connected},
                              {"bipartite", e.bipartite},
                              {"rotarily_transitive", e.verdict.rotarily_transitive},
                              {"verified", e.verdict.verified},
                              {"method", e.verdict.method}});
          }
          o["graphs"] = graphs;
        }
        if (r.cancelled) throw Interrupted{o};
        return o;
      };
    });
  }

  std::vector<std::string> argv_store{"rotary"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  Result result;
  auto dump = [&](const json& j) { return pretty ? j.dump(2) : j.dump(); };
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    const int code = app.exit(e, os, os);
    if (code == 0) return {0, os.str()};
    return {2, dump(json{{"error", "usage"}, {"detail", e.what()}})};
  }
  if (approx_bits > 0) {
    ctx.approx_bits = approx_bits;
  } else if (const char* env = std::getenv("ROTARY_PRECISION_BITS")) {
    const int bits = std::atoi(env);
    if (bits > 0 && bits <= 4096) ctx.approx_bits = bits;
  }
  try {
    const json out = action();
    result = {0, dump(out)};
  } catch (const Interrupted& i) {
    result = {130, dump(json{{"error", "cancelled"}, {"detail", "interrupted"}, {"partial", i.partial}})};
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::kCancelled ? 130 : 1;
    json o{{"error", error_code_name(e.code())}, {"detail", e.what()}};
    if (code == 130) o["partial"] = json::object();
    result = {code, dump(o)};
  } catch (const json::exception& e) {
    result = {1, dump(json{{"error", error_code_name(ErrorCode::kParse)}, {"detail", e.what()}})};
  }
  return result;
}

}  // namespace rotary::cli
