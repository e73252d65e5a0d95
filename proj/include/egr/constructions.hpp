#pragma once

/// Builders for the finite-geometry constructions.  Each returns the graph
/// together with the closed-form claim it is expected to satisfy, and verify()
/// checks the claim against a full girth-cycle census.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "egr/census.hpp"
#include "egr/error.hpp"
#include "egr/field.hpp"
#include "egr/geometry.hpp"
#include "egr/graph.hpp"
#include "egr/graph_io.hpp"
#include "json.hpp"

namespace egr {

enum class ClaimKind { egr, agr, structural };

inline const char* to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::egr: return "egr";
    case ClaimKind::agr: return "agr";
    case ClaimKind::structural: return "structural";
  }
  return "structural";
}

struct ConstructionClaim {
  std::string construction;
  std::vector<std::pair<std::string, std::uint64_t>> params;  // echo of the build parameters
  std::uint64_t order = 0;
  std::uint32_t degree = 0;
  std::uint32_t girth = 0;
  ClaimKind kind = ClaimKind::structural;
  std::optional<std::uint64_t> lambda;  // egr
  SignatureMultiplicities signature;    // agr, ascending by value
  bool not_agr = false;                 // structural claims that also rule out agr
  std::string citation;
};

struct Construction {
  Graph graph;
  ConstructionClaim claim;
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline Field make_field(std::uint64_t q) {
  const auto [p, r] = prime_power(q);
  return Field(p, r);
}

/// egr claim, or agr claim with two values; equal values collapse to egr.
inline void set_signature(ConstructionClaim& c, std::uint64_t a, std::uint32_t ma, std::uint64_t b,
                          std::uint32_t mb) {
  if (a == b) {
    c.kind = ClaimKind::egr;
    c.lambda = a;
    return;
  }
  c.kind = ClaimKind::agr;
  c.signature = a < b ? SignatureMultiplicities{{a, ma}, {b, mb}} : SignatureMultiplicities{{b, mb}, {a, ma}};
}

inline ConstructionClaim egr_claim(std::string name, std::uint64_t n, std::uint32_t k, std::uint32_t g,
                                   std::uint64_t lambda, std::string citation) {
  ConstructionClaim c;
  c.construction = std::move(name);
  c.order = n;
  c.degree = k;
  c.girth = g;
  c.kind = ClaimKind::egr;
  c.lambda = lambda;
  c.citation = std::move(citation);
  return c;
}

/// Incidence graph of a structure (points first, then lines) plus extra
/// same-type edges given in structure indices.
inline Graph amalgam(const IncidenceStructure& s, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& point_pairs,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& line_pairs) {
  const Graph base = incidence_graph(s);
  const auto np = static_cast<Vertex>(s.num_points());
  GraphBuilder b(base.order(), {base.kinds().begin(), base.kinds().end()});
  for (const auto& e : base.edges()) b.add_edge(e.u, e.v);
  for (auto [x, y] : point_pairs) b.add_edge(x, y);
  for (auto [x, y] : line_pairs) b.add_edge(np + x, np + y);
  return std::move(b).build();
}

inline void require_element(const Field& f, Field::Code c, const char* name) {
  if (c >= f.order())
    throw precondition_error(std::string(name) + " = " + std::to_string(c) + " is not an element of GF(" +
                             std::to_string(f.order()) + ")");
}

inline bool is_generator(const Field& f, Field::Code c) { return c != 0 && f.multiplicative_order(c) == f.order() - 1; }

/// Index helpers for the biaffine coordinatizations.
inline std::uint32_t type1_index(const Field& f, Field::Code a, Field::Code b) { return a * f.order() + b; }
inline std::uint32_t type2_index(const Field& f, Field::Code a, Field::Code b) { return a * f.order() + b - 1; }

/// (a, b) scaled so that the first nonzero entry is 1.
inline std::pair<Field::Code, Field::Code> normalized(const Field& f, Field::Code a, Field::Code b) {
  const Field::Code s = f.inv(a != 0 ? a : b);
  return {f.mul(a, s), f.mul(b, s)};
}

}  // namespace detail

/// PG(2,q^2) minus a Baer subplane.
inline Construction baer_construction(std::uint32_t q) {
  const auto [p, r] = prime_power(q);
  const Field big(p, 2 * r);
  const auto plane = build_pg2(big);
  Graph g = delete_and_graph(plane, baer_deletion_set(plane, big));
  const std::uint64_t Q = q;
  auto c = detail::egr_claim("baer", 2 * (Q * Q * Q * Q - Q), q * q, 6,
                             (Q * Q - 1) * (Q * Q * Q * Q - 3 * Q * Q + Q + 2),
                             "PG(2,q^2) with a Baer subplane deleted; extremal bipartite egr-graph");
  c.params = {{"q", q}};
  return {std::move(g), std::move(c)};
}

/// PG(2,q) minus the 2-good structure of two points, their line and a second
/// line through the first point.
inline Construction flag_construction(std::uint32_t q) {
  if (q <= 3) throw precondition_error("flag construction requires q > 3");
  const Field f = detail::make_field(q);
  const auto plane = build_pg2(f);
  Graph g = delete_and_graph(plane, flag_deletion_set(plane, f));
  const std::uint64_t Q = q;
  auto c = detail::egr_claim("flag", 2 * (Q * Q - Q), q - 1, 6, (Q - 2) * (Q - 3) * (Q - 3),
                             "PG(2,q) with a 2-good structure (two points and two lines) deleted");
  c.params = {{"q", q}};
  return {std::move(g), std::move(c)};
}

/// PG(2,q) minus the 3-good structure of a triangle.
inline Construction triangle_construction(std::uint32_t q) {
  if (q <= 4) throw precondition_error("triangle construction requires q > 4");
  const Field f = detail::make_field(q);
  const auto plane = build_pg2(f);
  Graph g = delete_and_graph(plane, triangle_deletion_set(plane, f));
  const std::uint64_t Q = q;
  auto c = detail::egr_claim("triangle", 2 * (Q - 1) * (Q - 1), q - 2, 6, (Q - 3) * (Q * Q - 9 * Q + 21),
                             "PG(2,q) with the points and lines of a triangle deleted (3-good structure)");
  c.params = {{"q", q}};
  return {std::move(g), std::move(c)};
}

/// PG(2,q^2) minus a Hermitian curve and its tangents.
inline Construction hermitian_construction(std::uint32_t q) {
  if (q < 3) throw precondition_error("hermitian construction requires q >= 3");
  const auto [p, r] = prime_power(q);
  const Field big(p, 2 * r);
  const auto plane = build_pg2(big);
  Graph g = delete_and_graph(plane, hermitian_deletion_set(plane, big));
  const std::uint64_t Q = q;
  auto c = detail::egr_claim("hermitian", 2 * (Q * Q * Q * Q - Q * Q * Q + Q * Q), q * q - q, 6,
                             (Q * Q - Q - 1) * (Q * Q * Q * Q - 3 * Q * Q * Q - Q * Q + 5 * Q + 3),
                             "PG(2,q^2) with a Hermitian unital and its tangent lines deleted");
  c.params = {{"q", q}};
  return {std::move(g), std::move(c)};
}

/// Point-hyperplane incidence graph of PG(n,q).
inline Construction pg_incidence_construction(std::uint32_t n, std::uint32_t q) {
  if (n < 3) throw precondition_error("pg-incidence requires n >= 3");
  const Field f = detail::make_field(q);
  Graph g = incidence_graph(build_pg_hyperplanes(f, n));
  const std::uint64_t Q = q;
  using detail::ipow;
  const std::uint64_t lambda =
      (ipow(Q, 2 * n - 1) - ipow(Q, n + 1) - ipow(Q, n) + Q * Q) / ((Q - 1) * (Q - 1));
  auto c = detail::egr_claim("pg-incidence", 2 * (ipow(Q, n + 1) - 1) / (Q - 1),
                             static_cast<std::uint32_t>((ipow(Q, n) - 1) / (Q - 1)), 4, lambda,
                             "point-hyperplane incidence graph of PG(n,q)");
  c.params = {{"n", n}, {"q", q}};
  return {std::move(g), std::move(c)};
}

/// Default epsilon for amalgam1: 2 in characteristic 5, otherwise the first
/// code avoiding {0, 1, -1}, and also {2, -2, 1/2, -1/2} when p > 5 and q >= 11.
inline Field::Code amalgam1_default_epsilon(const Field& f) {
  const std::uint32_t p = f.characteristic();
  if (p == 5) return 2;
  const bool strict = p > 5 && f.order() >= 11;
  const Field::Code two = f.from_integer(2), half = f.inv(two);
  for (Field::Code e = 2; e < f.order(); ++e) {
    if (e == f.neg(1)) continue;
    if (strict && (e == two || e == f.neg(two) || e == half || e == f.neg(half))) continue;
    return e;
  }
  throw precondition_error("no admissible epsilon in GF(" + std::to_string(f.order()) + ")");
}

/// Type 1 biaffine plane with a p-cycle on every vertical line of points
/// ((x,y) ~ (x,y+1)) and on every parallel class of lines (b ~ b+epsilon).
inline Construction amalgam1_construction(std::uint32_t q, std::optional<Field::Code> epsilon = std::nullopt) {
  const Field f = detail::make_field(q);
  const std::uint32_t p = f.characteristic();
  if (p <= 3) throw precondition_error("amalgam1 requires characteristic p > 3");
  const Field::Code e = epsilon ? *epsilon : amalgam1_default_epsilon(f);
  detail::require_element(f, e, "epsilon");
  if (e == 0 || e == 1 || e == f.neg(1)) throw precondition_error("amalgam1 requires epsilon not in {0, 1, -1}");

  const auto plane = build_biaffine(f, 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pts, lns;
  for (Field::Code a = 0; a < q; ++a)
    for (Field::Code b = 0; b < q; ++b) {
      pts.emplace_back(detail::type1_index(f, a, b), detail::type1_index(f, a, f.add(b, 1)));
      lns.emplace_back(detail::type1_index(f, a, b), detail::type1_index(f, a, f.add(b, e)));
    }
  Graph g = detail::amalgam(plane, pts, lns);

  ConstructionClaim c;
  c.construction = "amalgam1";
  c.params = {{"q", q}, {"epsilon", e}};
  c.order = 2ull * q * q;
  c.degree = q + 2;
  c.girth = 5;
  const std::uint64_t Q = q;
  const Field::Code two = f.from_integer(2), half = f.inv(two);
  const bool generic = e != two && e != f.neg(two) && e != half && e != f.neg(half);
  if (p > 5 && q >= 11 && generic) {
    detail::set_signature(c, 8 * (Q - 1), q, Q * Q - Q, 2);
    c.citation = "type 1 biaffine amalgam with p-cycles, p > 5, q >= 11, epsilon not in {0, 1, +-2, +-1/2}";
  } else if (p == 5 && e == two) {
    detail::set_signature(c, 8 * Q - 4, q, (Q + 1) * (Q + 1), 2);
    c.citation = "type 1 biaffine amalgam with 5-cycles, epsilon = 2";
  } else {
    c.kind = ClaimKind::structural;
    c.not_agr = q == 7 && e == two;
    c.citation = c.not_agr ? "type 1 biaffine amalgam at q = 7, epsilon = 2: a (9,5)-graph of order 98, not agr"
                           : "type 1 biaffine amalgam: a (q+2,5)-graph of order 2q^2";
  }
  return {std::move(g), std::move(c)};
}

/// amalgam1(5, 2) minus the points on X = 0 and the horizontal lines.
inline Construction cage65_construction() {
  auto base = amalgam1_construction(5, 2);
  const Graph& h = base.graph;
  std::vector<bool> keep(h.order(), true);
  for (Field::Code y = 0; y < 5; ++y) keep[y] = false;           // point (0, y)
  for (Field::Code b = 0; b < 5; ++b) keep[25 + b] = false;      // line m = 0
  Graph g = h.induced_subgraph(keep);
  auto c = detail::egr_claim("cage65", 40, 6, 5, 22,
                             "Hoffman-Singleton amalgam minus a 1-good structure: the (6,5)-cage, extremal egr");
  return {std::move(g), std::move(c)};
}

/// Whether (epsilon, eta) is admissible for amalgam2 at this field order.
/// q >= 11: distinct generators with epsilon not in {eta^+-1, eta^+-2} and
/// eta not in {epsilon^+-2}.  Smaller q: distinct generators whose product
/// is not 1.
inline bool amalgam2_admissible(const Field& f, Field::Code e, Field::Code h) {
  if (!detail::is_generator(f, e) || !detail::is_generator(f, h) || e == h) return false;
  if (f.mul(e, h) == 1) return false;
  if (f.order() < 11) return true;
  const Field::Code h2 = f.mul(h, h), e2 = f.mul(e, e);
  return e != f.inv(h2) && e != h2 && h != e2 && h != f.inv(e2);
}

inline std::pair<Field::Code, Field::Code> amalgam2_default_pair(const Field& f) {
  const auto gens = f.generators();
  for (auto e : gens)
    for (auto h : gens)
      if (amalgam2_admissible(f, e, h)) return {e, h};
  throw precondition_error("no admissible generator pair for amalgam2 in GF(" + std::to_string(f.order()) + ")");
}

/// Type 2 biaffine plane with a (q-1)-cycle P ~ epsilon P on the points of
/// every line through the origin and e ~ eta e on every parallel class.
inline Construction amalgam2_construction(std::uint32_t q, std::optional<Field::Code> epsilon = std::nullopt,
                                          std::optional<Field::Code> eta = std::nullopt) {
  const Field f = detail::make_field(q);
  Field::Code e = 0, h = 0;
  if (epsilon && eta) {
    e = *epsilon;
    h = *eta;
  } else {
    std::tie(e, h) = amalgam2_default_pair(f);
    if (epsilon || eta) {
      // One of the two was given: take the first partner that works.
      bool found = false;
      for (auto x : f.generators()) {
        const Field::Code ce = epsilon ? *epsilon : x, ch = eta ? *eta : x;
        if (ce < f.order() && ch < f.order() && amalgam2_admissible(f, ce, ch)) {
          e = ce;
          h = ch;
          found = true;
          break;
        }
      }
      if (!found) throw precondition_error("no admissible partner for the given generator");
    }
  }
  detail::require_element(f, e, "epsilon");
  detail::require_element(f, h, "eta");
  if (!detail::is_generator(f, e) || !detail::is_generator(f, h))
    throw precondition_error("amalgam2 requires epsilon and eta to generate the multiplicative group");
  if (!amalgam2_admissible(f, e, h))
    throw precondition_error(q >= 11 ? "amalgam2 requires epsilon not in {eta^+-1, eta^+-2} and eta not in {epsilon^+-2}"
                                     : "amalgam2 requires distinct generators whose product is not 1");

  const auto plane = build_biaffine(f, 2);
  // Lines are stored as AX + BY + 1 = 0, so AX + BY + eta = 0 is (A/eta, B/eta).
  const Field::Code h_inv = f.inv(h);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pts, lns;
  for (Field::Code a = 0; a < q; ++a)
    for (Field::Code b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      pts.emplace_back(detail::type2_index(f, a, b), detail::type2_index(f, f.mul(a, e), f.mul(b, e)));
      lns.emplace_back(detail::type2_index(f, a, b), detail::type2_index(f, f.mul(a, h_inv), f.mul(b, h_inv)));
    }
  Graph g = detail::amalgam(plane, pts, lns);

  ConstructionClaim c;
  c.construction = "amalgam2";
  c.params = {{"q", q}, {"epsilon", e}, {"eta", h}};
  c.order = 2ull * (q * q - 1ull);
  c.degree = q + 2;
  c.girth = 5;
  const std::uint64_t Q = q;
  if (q >= 11) {
    detail::set_signature(c, 8 * (Q - 1), q, Q * Q - Q, 2);
    c.citation = "type 2 biaffine amalgam with (q-1)-cycles from generators epsilon, eta";
  } else {
    c.kind = ClaimKind::structural;
    c.not_agr = q == 8;
    c.citation = c.not_agr ? "type 2 biaffine cycle amalgam at q = 8: a (10,5)-graph of order 126, not agr"
                           : "type 2 biaffine cycle amalgam: a (q+2,5)-graph of order 2q^2-2";
  }
  return {std::move(g), std::move(c)};
}

/// Type 1 biaffine plane with the matchings (x,y) ~ (x,y+1) and b ~ b+epsilon
/// in characteristic 2.
inline Construction match_even_construction(std::uint32_t q, std::optional<Field::Code> epsilon = std::nullopt) {
  const Field f = detail::make_field(q);
  if (f.characteristic() != 2) throw precondition_error("match-even requires even q");
  if (q <= 2) throw precondition_error("match-even requires q > 2");
  const Field::Code e = epsilon.value_or(2);
  detail::require_element(f, e, "epsilon");
  if (e == 0 || e == 1) throw precondition_error("match-even requires epsilon not in {0, 1}");

  const auto plane = build_biaffine(f, 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pts, lns;
  for (Field::Code a = 0; a < q; ++a)
    for (Field::Code b = 0; b < q; ++b) {
      pts.emplace_back(detail::type1_index(f, a, b), detail::type1_index(f, a, f.add(b, 1)));
      lns.emplace_back(detail::type1_index(f, a, b), detail::type1_index(f, a, f.add(b, e)));
    }
  Graph g = detail::amalgam(plane, pts, lns);

  ConstructionClaim c;
  c.construction = "match-even";
  c.params = {{"q", q}, {"epsilon", e}};
  c.order = 2ull * q * q;
  c.degree = q + 1;
  c.girth = 5;
  const std::uint64_t Q = q;
  detail::set_signature(c, 4 * (Q - 1), q, Q * Q - Q, 1);
  c.citation = "type 1 biaffine amalgam with perfect matchings, q even";
  return {std::move(g), std::move(c)};
}

inline bool match_odd_admissible(const Field& f, Field::Code e, Field::Code h) {
  return detail::is_generator(f, e) && detail::is_generator(f, h) && e != h && f.mul(e, h) != 1;
}

/// Type 2 biaffine plane with perfect matchings: on each line through the
/// origin with normalized direction P, epsilon^j P ~ epsilon^(j+1) P for even
/// j; in each parallel class with normalized (A,B), the lines
/// AX + BY + eta^j = 0 and AX + BY + eta^(j+1) = 0 for even j.
inline Construction match_odd_construction(std::uint32_t q, std::optional<Field::Code> epsilon = std::nullopt,
                                           std::optional<Field::Code> eta = std::nullopt) {
  const Field f = detail::make_field(q);
  if (f.characteristic() == 2) throw precondition_error("match-odd requires odd q");
  if (q <= 5) throw precondition_error("match-odd requires q > 5");
  Field::Code e = 0, h = 0;
  bool found = false;
  const auto gens = f.generators();
  for (auto x : gens) {
    for (auto y : gens) {
      const Field::Code ce = epsilon.value_or(x), ch = eta.value_or(y);
      if (ce < q && ch < q && match_odd_admissible(f, ce, ch)) {
        e = ce;
        h = ch;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) {
    if (epsilon) detail::require_element(f, *epsilon, "epsilon");
    if (eta) detail::require_element(f, *eta, "eta");
    throw precondition_error("no admissible generator pair (epsilon not in {eta, 1/eta}) in GF(" +
                             std::to_string(q) + ")");
  }

  const auto plane = build_biaffine(f, 2);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pts, lns;
  const Field::Code h_inv = f.inv(h);
  for (Field::Code a = 0; a < q; ++a)
    for (Field::Code b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      if (detail::normalized(f, a, b) != std::pair{a, b}) continue;
      Field::Code px = a, py = b, lx = a, ly = b;  // j = 0
      for (std::uint32_t j = 0; j + 1 < q - 1; j += 2) {
        const Field::Code nx = f.mul(px, e), ny = f.mul(py, e);
        pts.emplace_back(detail::type2_index(f, px, py), detail::type2_index(f, nx, ny));
        const Field::Code mx = f.mul(lx, h_inv), my = f.mul(ly, h_inv);
        lns.emplace_back(detail::type2_index(f, lx, ly), detail::type2_index(f, mx, my));
        px = f.mul(nx, e);
        py = f.mul(ny, e);
        lx = f.mul(mx, h_inv);
        ly = f.mul(my, h_inv);
      }
    }
  Graph g = detail::amalgam(plane, pts, lns);

  ConstructionClaim c;
  c.construction = "match-odd";
  c.params = {{"q", q}, {"epsilon", e}, {"eta", h}};
  c.order = 2ull * (q * q - 1ull);
  c.degree = q + 1;
  c.girth = 5;
  const std::uint64_t Q = q;
  detail::set_signature(c, 4 * (Q - 1), q, Q * Q - Q, 1);
  c.citation = "type 2 biaffine amalgam with perfect matchings from generators epsilon, eta, q odd";
  return {std::move(g), std::move(c)};
}

// ---------------------------------------------------------------------------
// Registry

struct BuildParams {
  std::optional<std::uint32_t> q;
  std::optional<std::uint32_t> n;
  std::optional<Field::Code> epsilon;
  std::optional<Field::Code> eta;
};

inline const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{"baer",     "flag",     "triangle",   "hermitian", "pg-incidence",
                                              "amalgam1", "cage65",   "amalgam2",   "match-even", "match-odd"};
  return names;
}

inline Construction build_construction(std::string_view name, const BuildParams& bp) {
  auto need_q = [&]() -> std::uint32_t {
    if (!bp.q) throw precondition_error(std::string(name) + " requires --q");
    return *bp.q;
  };
  if (name == "baer") return baer_construction(need_q());
  if (name == "flag") return flag_construction(need_q());
  if (name == "triangle") return triangle_construction(need_q());
  if (name == "hermitian") return hermitian_construction(need_q());
  if (name == "pg-incidence") {
    if (!bp.n) throw precondition_error("pg-incidence requires --n");
    return pg_incidence_construction(*bp.n, need_q());
  }
  if (name == "amalgam1") return amalgam1_construction(need_q(), bp.epsilon);
  if (name == "cage65") return cage65_construction();
  if (name == "amalgam2") return amalgam2_construction(need_q(), bp.epsilon, bp.eta);
  if (name == "match-even") return match_even_construction(need_q(), bp.epsilon);
  if (name == "match-odd") return match_odd_construction(need_q(), bp.epsilon, bp.eta);
  throw precondition_error("unknown construction '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Claim serialization

inline nlohmann::ordered_json claim_json(const ConstructionClaim& c) {
  nlohmann::ordered_json j;
  j["construction"] = c.construction;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  j["params"] = params;
  j["n"] = c.order;
  j["k"] = c.degree;
  j["girth"] = c.girth;
  j["kind"] = to_string(c.kind);
  if (c.lambda) j["lambda"] = *c.lambda;
  if (!c.signature.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [v, m] : c.signature) arr.push_back({v, m});
    j["signature_multiplicities"] = arr;
  }
  if (c.not_agr) j["not_agr"] = true;
  j["citation"] = c.citation;
  return j;
}

inline ConstructionClaim claim_from_json(const nlohmann::ordered_json& j) {
  ConstructionClaim c;
  try {
    c.construction = j.value("construction", std::string{});
    if (j.contains("params"))
      for (const auto& [k, v] : j.at("params").items()) c.params.emplace_back(k, v.get<std::uint64_t>());
    c.order = j.at("n").get<std::uint64_t>();
    c.degree = j.at("k").get<std::uint32_t>();
    c.girth = j.at("girth").get<std::uint32_t>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "egr")
      c.kind = ClaimKind::egr;
    else if (kind == "agr")
      c.kind = ClaimKind::agr;
    else if (kind == "structural")
      c.kind = ClaimKind::structural;
    else
      throw precondition_error("unknown claim kind '" + kind + "'");
    if (j.contains("lambda")) c.lambda = j.at("lambda").get<std::uint64_t>();
    if (j.contains("signature_multiplicities"))
      for (const auto& pair : j.at("signature_multiplicities"))
        c.signature.emplace_back(pair.at(0).get<std::uint64_t>(), pair.at(1).get<std::uint32_t>());
    c.not_agr = j.value("not_agr", false);
    c.citation = j.value("citation", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw precondition_error(std::string("malformed claim: ") + e.what());
  }
  if (c.kind == ClaimKind::egr && !c.lambda) throw precondition_error("egr claim without lambda");
  if (c.kind == ClaimKind::agr && c.signature.empty()) throw precondition_error("agr claim without signature");
  return c;
}

// ---------------------------------------------------------------------------
// Verification

struct FieldCheck {
  std::string field;
  std::string expected;
  std::string measured;
  bool ok = false;
};

struct VerificationReport {
  ConstructionClaim claim;
  std::optional<GirthProfile> profile;  // absent when the census could not run
  std::vector<FieldCheck> checks;
  bool oracle_run = false;
  bool passed = false;
};

struct VerifyOptions {
  unsigned workers = 0;
  std::size_t oracle_cap = default_oracle_cap;
};

inline std::string describe_signature(const SignatureMultiplicities& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i].first) + "x" + std::to_string(s[i].second);
  }
  return out + "]";
}

inline VerificationReport verify(const Graph& g, const ConstructionClaim& claim, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.claim = claim;
  auto check = [&](std::string field, std::string expected, std::string measured, bool ok) {
    rep.checks.push_back({std::move(field), std::move(expected), std::move(measured), ok});
  };
  auto num = [](auto v) { return std::to_string(v); };

  check("n", num(claim.order), num(g.order()), g.order() == claim.order);
  const auto k = g.regular_degree();
  check("k", num(claim.degree), k ? num(*k) : "irregular", k && *k == claim.degree);
  check("connected", "true", g.is_connected() ? "true" : "false", g.is_connected());
  if (!k) {
    rep.passed = false;
    return rep;
  }

  GirthProfile prof;
  try {
    prof = girth_profile(g, opt.workers);
  } catch (const precondition_error& e) {
    check("girth", num(claim.girth), e.what(), false);
    return rep;
  }
  check("girth", num(claim.girth), num(prof.girth), prof.girth == claim.girth);

  const std::string measured_class = to_string(prof.classification);
  switch (claim.kind) {
    case ClaimKind::egr:
      check("classification", "egr", measured_class, prof.classification == Classification::egr);
      check("lambda", num(*claim.lambda), prof.lambda ? num(*prof.lambda) : "-", prof.lambda == claim.lambda);
      break;
    case ClaimKind::agr: {
      check("classification", "agr", measured_class, prof.classification == Classification::agr);
      const auto measured = prof.signature ? multiplicities(*prof.signature) : SignatureMultiplicities{};
      check("signature", describe_signature(claim.signature), prof.signature ? describe_signature(measured) : "-",
            prof.signature && measured == claim.signature);
      break;
    }
    case ClaimKind::structural:
      if (claim.not_agr)
        check("classification", "not agr", measured_class, prof.classification != Classification::agr);
      break;
  }

  if (g.order() <= opt.oracle_cap) {
    const auto oracle = census_oracle(g, prof.girth, opt.oracle_cap, opt.workers);
    rep.oracle_run = true;
    const bool same = oracle.edge_counts == prof.edge_counts && oracle.total_cycles == prof.total_girth_cycles;
    check("oracle", "per-edge counts match", same ? "match" : "mismatch", same);
  }
  rep.profile = std::move(prof);
  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(), [](const auto& c) { return c.ok; });
  return rep;
}

inline VerificationReport verify(const Construction& c, const VerifyOptions& opt = {}) {
  return verify(c.graph, c.claim, opt);
}

inline nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["construction"] = r.claim.construction;
  j["claim"] = claim_json(r.claim);
  if (r.profile)
    j["measured"] = profile_json(*r.profile);
  else
    j["measured"] = nullptr;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"field", c.field}, {"expected", c.expected}, {"measured", c.measured}, {"ok", c.ok}});
  j["checks"] = checks;
  j["oracle_run"] = r.oracle_run;
  j["pass"] = r.passed;
  return j;
}

}  // namespace egr
