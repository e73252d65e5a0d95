#pragma once

/// Lower bounds on the order of (edge-)girth-regular graphs, all in exact
/// integer arithmetic.  A bound that does not apply, or whose evaluation would
/// overflow 64 bits, is returned without a value and with a reason.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egr/error.hpp"
#include "json.hpp"

namespace egr {

using BigInt = std::int64_t;

struct BoundValue {
  std::string name;
  std::optional<BigInt> value;
  std::string reason;  // why the bound is inapplicable
  std::string note;    // extra information for applicable bounds

  bool applicable() const noexcept { return value.has_value(); }
};

namespace detail {

struct Overflow {};

inline BigInt mul(BigInt a, BigInt b) {
  BigInt r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt add(BigInt a, BigInt b) {
  BigInt r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt sub(BigInt a, BigInt b) {
  BigInt r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt power(BigInt b, BigInt e) {
  BigInt r = 1;
  for (BigInt i = 0; i < e; ++i) r = mul(r, b);
  return r;
}

/// Ceiling of a/b for b > 0.
inline BigInt ceil_div(BigInt a, BigInt b) { return a / b + ((a % b != 0) && (a > 0) ? 1 : 0); }

template <typename Fn>
BoundValue guarded(std::string name, Fn&& fn) {
  BoundValue b{std::move(name), std::nullopt, {}, {}};
  try {
    fn(b);
  } catch (const Overflow&) {
    b.value.reset();
    b.reason = "64-bit overflow";
  }
  return b;
}

inline void require_kg(BigInt k, BigInt g) {
  if (k < 3) throw precondition_error("degree k must be at least 3");
  if (g < 3) throw precondition_error("girth g must be at least 3");
}

}  // namespace detail

/// Moore bound n0(k,g).
inline BigInt moore(BigInt k, BigInt g) {
  detail::require_kg(k, g);
  using namespace detail;
  if (g % 2 == 1) return (sub(mul(k, power(k - 1, (g - 1) / 2)), 2)) / (k - 2);
  return sub(mul(2, power(k - 1, g / 2)), 2) / (k - 2);
}

/// Largest admissible lambda for the distance-counting bound:
/// (k-1)^((g-1)/2) for odd g, (k-1)^(g/2) for even g.
inline BigInt lambda_max(BigInt k, BigInt g) {
  detail::require_kg(k, g);
  return detail::power(k - 1, g / 2);
}

/// Distance-counting bound on egr graphs (bipartite variant for even g).
inline BoundValue dfjr(BigInt k, BigInt g, BigInt lambda, bool bipartite) {
  detail::require_kg(k, g);
  return detail::guarded("dfjr", [&](BoundValue& b) {
    using namespace detail;
    if (g % 2 == 1 && bipartite) {
      b.reason = "bipartite graphs have even girth";
      return;
    }
    const BigInt top = lambda_max(k, g);
    if (lambda < 0 || lambda > top) {
      b.reason = "lambda outside [0, " + std::to_string(top) + "]";
      return;
    }
    const BigInt n0 = moore(k, g);
    if (g % 2 == 1)
      b.value = add(n0, top - lambda);
    else if (bipartite)
      b.value = add(n0, mul(2, ceil_div(top - lambda, k)));
    else
      b.value = add(n0, ceil_div(mul(2, top - lambda), k));
  });
}

/// c(l,k): closed walks of length l from the root of the infinite k-regular
/// tree, by dynamic programming over depth.
inline BigInt tree_walks(BigInt l, BigInt k) {
  if (l < 2 || l % 2 != 0) throw precondition_error("walk length must be even and at least 2");
  if (k < 1) throw precondition_error("degree must be positive");
  using namespace detail;
  std::vector<BigInt> at(static_cast<std::size_t>(l / 2 + 2), 0);
  at[0] = 1;
  for (BigInt step = 0; step < l; ++step) {
    std::vector<BigInt> next(at.size(), 0);
    for (std::size_t d = 0; d + 1 < at.size(); ++d) {
      if (at[d] == 0) continue;
      const BigInt out = d == 0 ? k : k - 1;
      next[d + 1] = add(next[d + 1], mul(at[d], out));
      if (d > 0) next[d - 1] = add(next[d - 1], at[d]);
    }
    at = std::move(next);
  }
  return at[0];
}

/// c(l,k) by building the depth-l/2 truncated k-regular tree explicitly and
/// counting closed walks at its root.
inline BigInt enumerate_tree_walks(BigInt l, BigInt k) {
  if (l < 2 || l % 2 != 0) throw precondition_error("walk length must be even and at least 2");
  if (k < 1) throw precondition_error("degree must be positive");
  const BigInt depth = l / 2;
  std::vector<std::vector<std::size_t>> adj(1);
  std::vector<std::size_t> frontier{0};
  for (BigInt d = 0; d < depth; ++d) {
    std::vector<std::size_t> next;
    for (auto v : frontier) {
      const BigInt children = d == 0 ? k : k - 1;
      for (BigInt c = 0; c < children; ++c) {
        const std::size_t w = adj.size();
        adj.emplace_back();
        adj[v].push_back(w);
        adj[w].push_back(v);
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  std::vector<BigInt> walks(adj.size(), 0);
  walks[0] = 1;
  for (BigInt step = 0; step < l; ++step) {
    std::vector<BigInt> next(adj.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (walks[v] != 0)
        for (auto w : adj[v]) next[w] = detail::add(next[w], walks[v]);
    walks = std::move(next);
  }
  return walks[0];
}

/// Eigenvalue bound for even girth, with s = k*lambda for egr graphs or the
/// signature sum for girth-regular graphs.
inline BoundValue spectral_bound(BigInt k, BigInt g, BigInt s, bool bipartite) {
  detail::require_kg(k, g);
  return detail::guarded("spectral", [&](BoundValue& b) {
    using namespace detail;
    if (g % 2 == 1) {
      b.reason = "odd girth";
      return;
    }
    const BigInt cg = tree_walks(g, k);
    BigInt num = 0, den = 0;
    if (g % 4 == 0) {
      const BigInt ch = tree_walks(g / 2, k);
      num = sub(add(add(cg, s), power(k, g)), mul(2, mul(ch, power(k, g / 2))));
      den = add(sub(cg, mul(ch, ch)), s);
      if (bipartite) num = mul(2, num);
    } else {
      den = add(cg, s);
      num = bipartite ? mul(2, power(k, g)) : add(den, power(k, g));
    }
    if (den <= 0) {
      b.reason = "nonpositive denominator";
      return;
    }
    b.value = ceil_div(num, den);
  });
}

/// Signature form of the distance-counting bound for even girth, evaluated
/// exactly as printed:
///   2((k-1)^h - 2)/(k-2) + ceil(((k-1)^h - 2 a1)/k),  a1 = min entry,
/// with the ceiling of the first term.
inline BoundValue sgr_even_bound(BigInt k, BigInt g, std::span<const BigInt> a) {
  detail::require_kg(k, g);
  if (g % 2 != 0) throw precondition_error("sgr_even_bound needs even girth");
  if (static_cast<BigInt>(a.size()) != k) throw precondition_error("signature length must equal k");
  return detail::guarded("sgr_even", [&](BoundValue& b) {
    using namespace detail;
    const BigInt top = power(k - 1, g / 2);
    const BigInt a1 = *std::min_element(a.begin(), a.end());
    b.value = add(ceil_div(mul(2, top - 2), k - 2), ceil_div(sub(top, mul(2, a1)), k));
    if (std::all_of(a.begin(), a.end(), [&](BigInt x) { return x == a1; })) {
      const auto ref = dfjr(k, g, a1, false);
      if (ref.value && *b.value < *ref.value)
        b.note = "below dfjr (" + std::to_string(*ref.value) + ") for the same lambda";
    }
  });
}

/// Signature form of the distance-counting bound for odd girth g = 2h+1.
inline BoundValue sgr_odd_bound(BigInt k, BigInt g, std::span<const BigInt> a) {
  detail::require_kg(k, g);
  if (g % 2 != 1) throw precondition_error("sgr_odd_bound needs odd girth");
  if (static_cast<BigInt>(a.size()) != k) throw precondition_error("signature length must equal k");
  return detail::guarded("sgr_odd", [&](BoundValue& b) {
    using namespace detail;
    const BigInt kt = mul(k, power(k - 1, (g - 1) / 2));
    BigInt sum = 0;
    for (auto x : a) sum = add(sum, x);
    b.value = add(ceil_div(kt - 2, k - 2), ceil_div(sub(kt, sum), k));
  });
}

enum class CycleBoundVariant {
  proof,      // 2 * max(0, ceil(a^2 / (2 (k-1)^(h-1)) - a/2)) in the denominator
  statement,  // max(0, ceil(a / (2 (k-1)^(h-1)) - a/2)) in the denominator
};

/// Cycle-counting bound for even girth g = 2h:
///   2((k-1)^h - 1)/(k-2) + max_i ceil(((k-1)^h - a_i)^2 / D_i),
///   D_i = sum(a) - 3 a_i + (k-1)^h - correction(a_i).
/// Terms with a zero numerator contribute 0; other terms with D_i <= 0 are
/// skipped.
inline BoundValue sgr_cycle_bound(BigInt k, BigInt g, std::span<const BigInt> a,
                                  CycleBoundVariant variant = CycleBoundVariant::proof) {
  detail::require_kg(k, g);
  if (g % 2 != 0) throw precondition_error("sgr_cycle_bound needs even girth");
  if (static_cast<BigInt>(a.size()) != k) throw precondition_error("signature length must equal k");
  return detail::guarded("cycle", [&](BoundValue& b) {
    using namespace detail;
    const BigInt h = g / 2;
    const BigInt top = power(k - 1, h);
    const BigInt low = power(k - 1, h - 1);
    BigInt sum = 0;
    for (auto x : a) sum = add(sum, x);
    std::optional<BigInt> best;
    for (auto ai : a) {
      const BigInt diff = top - ai;
      const BigInt num = mul(diff, diff);
      BigInt term = 0;
      if (num != 0) {
        BigInt corr = 0;
        if (variant == CycleBoundVariant::proof)
          corr = mul(2, std::max<BigInt>(0, ceil_div(sub(mul(ai, ai), mul(ai, low)), mul(2, low))));
        else
          corr = std::max<BigInt>(0, ceil_div(sub(ai, mul(ai, low)), mul(2, low)));
        const BigInt den = sub(add(sub(sum, mul(3, ai)), top), corr);
        if (den <= 0) continue;
        term = ceil_div(num, den);
      }
      best = best ? std::max(*best, term) : term;
    }
    if (!best) {
      b.reason = "all denominators nonpositive";
      return;
    }
    b.value = add(mul(2, top - 1) / (k - 2), *best);
  });
}

/// Cycle-counting bound for an egr graph (constant signature).
inline BoundValue egr_cycle_bound(BigInt k, BigInt g, BigInt lambda,
                                  CycleBoundVariant variant = CycleBoundVariant::proof) {
  const std::vector<BigInt> sig(static_cast<std::size_t>(std::max<BigInt>(k, 0)), lambda);
  return sgr_cycle_bound(k, g, sig, variant);
}

// ---------------------------------------------------------------------------
// Reports and sweeps

struct BoundQuery {
  BigInt k = 0;
  BigInt g = 0;
  std::optional<BigInt> lambda;
  std::vector<BigInt> signature;  // empty when lambda is given
  bool bipartite = false;
};

struct BoundReport {
  BoundQuery query;
  std::vector<BoundValue> bounds;

  const BoundValue* find(std::string_view name) const {
    for (const auto& b : bounds)
      if (b.name == name) return &b;
    return nullptr;
  }
};

/// Every bound for the query, in the order moore, dfjr, spectral, sgr_even,
/// sgr_odd, cycle.  The signature is expanded from lambda when only lambda is
/// given.
inline BoundReport evaluate_bounds(BoundQuery q) {
  detail::require_kg(q.k, q.g);
  if (q.lambda && q.lambda < 0) throw precondition_error("lambda must be nonnegative");
  if (!q.signature.empty()) {
    if (static_cast<BigInt>(q.signature.size()) != q.k) throw precondition_error("signature length must equal k");
    if (std::any_of(q.signature.begin(), q.signature.end(), [](BigInt x) { return x < 0; }))
      throw precondition_error("signature entries must be nonnegative");
    std::sort(q.signature.begin(), q.signature.end());
  }
  if (!q.lambda && q.signature.empty()) throw precondition_error("a lambda or a signature is required");
  if (q.lambda && !q.signature.empty()) throw precondition_error("give either lambda or a signature, not both");

  std::vector<BigInt> sig = q.signature;
  if (sig.empty()) sig.assign(static_cast<std::size_t>(q.k), *q.lambda);
  const bool constant = std::all_of(sig.begin(), sig.end(), [&](BigInt x) { return x == sig.front(); });
  BigInt sum = 0;
  bool sum_overflow = false;
  try {
    for (auto x : sig) sum = detail::add(sum, x);
  } catch (const detail::Overflow&) {
    sum_overflow = true;
  }

  BoundReport rep{q, {}};
  rep.bounds.push_back(detail::guarded("moore", [&](BoundValue& b) { b.value = moore(q.k, q.g); }));
  if (constant) {
    rep.bounds.push_back(dfjr(q.k, q.g, sig.front(), q.bipartite));
  } else {
    rep.bounds.push_back({"dfjr", std::nullopt, "requires a constant signature", {}});
  }
  auto inapplicable = [](std::string name, std::string reason) {
    return BoundValue{std::move(name), std::nullopt, std::move(reason), {}};
  };
  if (sum_overflow)
    rep.bounds.push_back(inapplicable("spectral", "64-bit overflow"));
  else
    rep.bounds.push_back(spectral_bound(q.k, q.g, sum, q.bipartite));
  if (q.g % 2 == 0) {
    rep.bounds.push_back(sgr_even_bound(q.k, q.g, sig));
    rep.bounds.push_back(inapplicable("sgr_odd", "even girth"));
    rep.bounds.push_back(sgr_cycle_bound(q.k, q.g, sig));
  } else {
    rep.bounds.push_back(inapplicable("sgr_even", "odd girth"));
    rep.bounds.push_back(sgr_odd_bound(q.k, q.g, sig));
    rep.bounds.push_back(inapplicable("cycle", "odd girth"));
  }
  return rep;
}

inline nlohmann::ordered_json bound_report_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["k"] = r.query.k;
  j["g"] = r.query.g;
  if (r.query.lambda) j["lambda"] = *r.query.lambda;
  if (!r.query.signature.empty()) j["signature"] = r.query.signature;
  j["bipartite"] = r.query.bipartite;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& b : r.bounds) {
    nlohmann::ordered_json e;
    e["name"] = b.name;
    e["applicable"] = b.applicable();
    if (b.value)
      e["value"] = *b.value;
    else
      e["reason"] = b.reason;
    if (!b.note.empty()) e["note"] = b.note;
    arr.push_back(e);
  }
  j["bounds"] = arr;
  return j;
}

struct SweepRow {
  BigInt lambda = 0;
  BoundValue moore, dfjr, spectral, cycle;
};

/// egr bounds for each lambda in [lo, hi], in increasing lambda order.
inline std::vector<SweepRow> sweep(BigInt k, BigInt g, BigInt lo, BigInt hi, bool bipartite = false) {
  detail::require_kg(k, g);
  if (g % 2 != 0) throw precondition_error("sweep needs even girth");
  if (lo < 0 || hi < lo) throw precondition_error("empty lambda range");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (BigInt l = lo; l <= hi; ++l) {
    SweepRow r;
    r.lambda = l;
    r.moore = detail::guarded("moore", [&](BoundValue& b) { b.value = moore(k, g); });
    r.dfjr = dfjr(k, g, l, bipartite);
    BigInt s = 0;
    try {
      s = detail::mul(k, l);
      r.spectral = spectral_bound(k, g, s, bipartite);
    } catch (const detail::Overflow&) {
      r.spectral = {"spectral", std::nullopt, "64-bit overflow", {}};
    }
    r.cycle = egr_cycle_bound(k, g, l);
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  auto cell = [](const BoundValue& b) { return b.value ? std::to_string(*b.value) : std::string{}; };
  std::string out = "lambda,moore,dfjr,spectral,cycle\n";
  for (const auto& r : rows)
    out += std::to_string(r.lambda) + "," + cell(r.moore) + "," + cell(r.dfjr) + "," + cell(r.spectral) + "," +
           cell(r.cycle) + "\n";
  return out;
}

}  // namespace egr
