#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <map>

#include "egr/bounds.hpp"

using egr::BigInt;

namespace {

// Closed walks at the root of the k-regular tree by recursion on (steps, depth).
BigInt walks_oracle(int l, BigInt k) {
  std::map<std::pair<int, int>, BigInt> memo;
  std::function<BigInt(int, int)> f = [&](int s, int d) -> BigInt {
    if (s == 0) return d == 0 ? 1 : 0;
    if (d > s) return 0;
    const auto key = std::make_pair(s, d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const BigInt r = d == 0 ? k * f(s - 1, 1) : (k - 1) * f(s - 1, d + 1) + f(s - 1, d - 1);
    return memo[key] = r;
  };
  return f(l, 0);
}

// ceil(a/b) for b > 0 through floating floor, checked exact for small inputs.
long long ceil_frac(long long a, long long b) {
  long long q = static_cast<long long>(std::floor(static_cast<long double>(a) / b));
  while (q * b < a) ++q;
  while ((q - 1) * b >= a) --q;
  return q;
}

BigInt ipow(BigInt b, int e) {
  BigInt r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::optional<long long> cycle_oracle(long long k, long long g, const std::vector<long long>& a, bool proof) {
  const int h = static_cast<int>(g / 2);
  const long long top = ipow(k - 1, h), low = ipow(k - 1, h - 1);
  long long sum = 0;
  for (auto x : a) sum += x;
  std::optional<long long> best;
  for (auto ai : a) {
    const long long num = (top - ai) * (top - ai);
    long long term = 0;
    if (num > 0) {
      const long long corr = proof ? 2 * std::max(0LL, ceil_frac(ai * ai - ai * low, 2 * low))
                                   : std::max(0LL, ceil_frac(ai - ai * low, 2 * low));
      const long long den = sum - 3 * ai + top - corr;
      if (den <= 0) continue;
      term = ceil_frac(num, den);
    }
    if (!best || term > *best) best = term;
  }
  if (!best) return std::nullopt;
  return 2 * (top - 1) / (k - 2) + *best;
}

std::optional<long long> spectral_oracle(long long k, long long g, long long s, bool bip) {
  const long long cg = walks_oracle(static_cast<int>(g), k);
  long long num = 0, den = 0;
  if (g % 4 == 0) {
    const long long ch = walks_oracle(static_cast<int>(g / 2), k);
    num = cg + s + ipow(k, static_cast<int>(g)) - 2 * ch * ipow(k, static_cast<int>(g / 2));
    den = cg - ch * ch + s;
    if (bip) num *= 2;
  } else {
    den = cg + s;
    num = bip ? 2 * ipow(k, static_cast<int>(g)) : den + ipow(k, static_cast<int>(g));
  }
  if (den <= 0) return std::nullopt;
  return ceil_frac(num, den);
}

}  // namespace

TEST(Moore, KnownValues) {
  EXPECT_EQ(egr::moore(3, 5), 10);
  EXPECT_EQ(egr::moore(7, 5), 50);
  EXPECT_EQ(egr::moore(6, 5), 37);
  EXPECT_EQ(egr::moore(3, 6), 14);
  EXPECT_EQ(egr::moore(4, 6), 26);
  EXPECT_EQ(egr::moore(3, 4), 6);
  EXPECT_THROW(egr::moore(2, 5), egr::precondition_error);
  EXPECT_THROW(egr::moore(3, 2), egr::precondition_error);
}

TEST(Moore, MatchesTreeCount) {
  for (BigInt k = 3; k <= 8; ++k)
    for (BigInt g = 3; g <= 9; ++g) {
      // Vertices within distance (g-1)/2 of a vertex, or of an edge for even g.
      BigInt n = g % 2 ? 1 : 2, layer = g % 2 ? k : 2 * (k - 1);
      for (BigInt d = 1; d <= (g - 1) / 2; ++d) {
        n += layer;
        layer *= k - 1;
      }
      EXPECT_EQ(egr::moore(k, g), n) << k << "," << g;
    }
}

TEST(Dfjr, KnownValues) {
  EXPECT_EQ(egr::dfjr(6, 5, 22, false).value, 40);
  EXPECT_EQ(egr::dfjr(4, 6, 24, true).value, 28);
  EXPECT_EQ(egr::dfjr(9, 6, 472, true).value, 156);
  EXPECT_EQ(egr::dfjr(3, 5, 4, false).value, 10);
  EXPECT_EQ(egr::dfjr(7, 5, 36, false).value, 50);
}

TEST(Dfjr, InapplicableCases) {
  EXPECT_FALSE(egr::dfjr(3, 5, 5, false).applicable());
  EXPECT_FALSE(egr::dfjr(3, 5, 1, true).applicable());
  EXPECT_FALSE(egr::dfjr(3, 6, -1, false).applicable());
  const auto big = egr::dfjr(1000, 40, 1, false);
  EXPECT_FALSE(big.applicable());
  EXPECT_EQ(big.reason, "64-bit overflow");
}

TEST(Dfjr, EqualsMooreAtMaximalLambda) {
  for (BigInt k = 3; k <= 10; ++k)
    for (BigInt g = 4; g <= 8; ++g) {
      EXPECT_EQ(egr::dfjr(k, g, egr::lambda_max(k, g), false).value, egr::moore(k, g));
      if (g % 2 == 0) {
        EXPECT_EQ(egr::dfjr(k, g, egr::lambda_max(k, g), true).value, egr::moore(k, g));
      }
    }
}

TEST(TreeWalks, KnownValues) {
  for (BigInt k = 1; k <= 12; ++k) {
    EXPECT_EQ(egr::tree_walks(2, k), k);
    EXPECT_EQ(egr::tree_walks(4, k), 2 * k * k - k);
  }
  EXPECT_EQ(egr::tree_walks(6, 3), 87);
  EXPECT_EQ(egr::tree_walks(4, 7), 91);
  EXPECT_EQ(egr::tree_walks(6, 10), 4420);
  EXPECT_THROW(egr::tree_walks(3, 3), egr::precondition_error);
  EXPECT_THROW(egr::tree_walks(0, 3), egr::precondition_error);
}

TEST(TreeWalks, DpMatchesEnumerationAndOracle) {
  for (BigInt l = 2; l <= 8; l += 2)
    for (BigInt k = 1; k <= 6; ++k) {
      EXPECT_EQ(egr::tree_walks(l, k), egr::enumerate_tree_walks(l, k)) << l << "," << k;
      EXPECT_EQ(egr::tree_walks(l, k), walks_oracle(static_cast<int>(l), k));
    }
  for (BigInt l = 10; l <= 20; l += 2) EXPECT_EQ(egr::tree_walks(l, 9), walks_oracle(static_cast<int>(l), 9));
}

TEST(TreeWalks, PolynomialOfDegreeHalfLength) {
  // c(l, k) is a polynomial in k of degree l/2: the (l/2+1)-th differences vanish.
  for (BigInt l = 2; l <= 10; l += 2) {
    std::vector<BigInt> v;
    for (BigInt k = 1; k <= l / 2 + 4; ++k) v.push_back(egr::tree_walks(l, k));
    for (BigInt d = 0; d <= l / 2; ++d) {
      for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
      v.pop_back();
    }
    for (auto x : v) EXPECT_EQ(x, 0) << "l = " << l;
  }
}

TEST(Spectral, KnownValues) {
  EXPECT_EQ(egr::spectral_bound(3, 6, 24, true).value, 14);
  EXPECT_FALSE(egr::spectral_bound(3, 5, 12, false).applicable());
  EXPECT_EQ(egr::spectral_bound(3, 5, 12, false).reason, "odd girth");
}

TEST(Spectral, MatchesOracleOnGrid) {
  for (BigInt k = 3; k <= 6; ++k)
    for (BigInt g : {4, 6, 8})
      for (BigInt s = 0; s <= 3 * k * egr::lambda_max(k, g); s += k)
        for (bool bip : {false, true}) {
          const auto got = egr::spectral_bound(k, g, s, bip);
          EXPECT_EQ(got.value, spectral_oracle(k, g, s, bip)) << k << "," << g << "," << s << "," << bip;
        }
}

TEST(SgrEven, KnownValues) {
  const std::vector<BigInt> twos{2, 2, 2}, heawood{8, 8, 8}, k4(4, 24);
  EXPECT_EQ(egr::sgr_even_bound(3, 6, twos).value, 14);
  EXPECT_EQ(egr::sgr_even_bound(4, 6, k4).value, 20);
  const auto h = egr::sgr_even_bound(3, 6, heawood);
  EXPECT_EQ(h.value, 10);
  EXPECT_FALSE(h.note.empty());
  EXPECT_THROW(egr::sgr_even_bound(3, 5, twos), egr::precondition_error);
  EXPECT_THROW(egr::sgr_even_bound(4, 6, twos), egr::precondition_error);
}

TEST(SgrOdd, KnownValues) {
  std::vector<BigInt> a(13, 1100 / 13);
  for (int i = 0; i < 1100 % 13; ++i) ++a[static_cast<std::size_t>(i)];
  EXPECT_EQ(egr::sgr_odd_bound(13, 5, a).value, 230);
  const std::vector<BigInt> pet{4, 4, 4}, hs(7, 36);
  EXPECT_EQ(egr::sgr_odd_bound(3, 5, pet).value, 10);
  EXPECT_EQ(egr::sgr_odd_bound(7, 5, hs).value, 50);
}

TEST(SgrCycle, KnownValues) {
  const std::vector<BigInt> heawood{8, 8, 8}, twos{2, 2, 2};
  EXPECT_EQ(egr::sgr_cycle_bound(3, 6, heawood).value, 14);
  EXPECT_EQ(egr::sgr_cycle_bound(3, 6, twos).value, 19);
  EXPECT_EQ(egr::egr_cycle_bound(3, 6, 2).value, 19);
}

TEST(SgrCycle, MatchesOracleOnGrid) {
  for (BigInt k = 3; k <= 5; ++k)
    for (BigInt g : {4, 6, 8}) {
      const BigInt top = egr::lambda_max(k, g);
      const BigInt step = std::max<BigInt>(1, top / 7);
      std::vector<BigInt> a(static_cast<std::size_t>(k), 0);
      std::function<void(std::size_t, BigInt)> rec = [&](std::size_t i, BigInt from) {
        if (i == a.size()) {
          const std::vector<long long> ll(a.begin(), a.end());
          for (bool proof : {true, false}) {
            const auto variant = proof ? egr::CycleBoundVariant::proof : egr::CycleBoundVariant::statement;
            const auto got = egr::sgr_cycle_bound(k, g, a, variant);
            const auto want = cycle_oracle(k, g, ll, proof);
            ASSERT_EQ(got.value, want) << k << "," << g << " proof=" << proof;
            if (!want) {
              EXPECT_EQ(got.reason, "all denominators nonpositive");
            }
          }
          return;
        }
        for (BigInt x = from; x <= top; x += step) {
          a[i] = x;
          rec(i + 1, x);
        }
      };
      rec(0, 0);
    }
}

TEST(SgrCycle, MaximumOverTerms) {
  // (3,4): top 4, low 2, base 6.  Signature (0,0,2): a_i = 0 gives ceil(16/6) = 3;
  // a_i = 2 has denominator 2 - 6 + 4 = 0 and is skipped.
  const std::vector<BigInt> a{0, 0, 2};
  EXPECT_EQ(egr::sgr_cycle_bound(3, 4, a).value, 6 + 3);
  const std::vector<BigInt> b{0, 2, 2};
  EXPECT_EQ(egr::sgr_cycle_bound(3, 4, b).value, cycle_oracle(3, 4, {0, 2, 2}, true));
}

TEST(Evaluate, OrderAndApplicability) {
  egr::BoundQuery q;
  q.k = 3;
  q.g = 6;
  q.lambda = 8;
  q.bipartite = true;
  const auto r = egr::evaluate_bounds(q);
  ASSERT_EQ(r.bounds.size(), 6u);
  const char* names[] = {"moore", "dfjr", "spectral", "sgr_even", "sgr_odd", "cycle"};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(r.bounds[i].name, names[i]);
  EXPECT_EQ(r.find("moore")->value, 14);
  EXPECT_EQ(r.find("dfjr")->value, 14);
  EXPECT_EQ(r.find("spectral")->value, 14);
  EXPECT_FALSE(r.find("sgr_odd")->applicable());

  egr::BoundQuery s;
  s.k = 3;
  s.g = 5;
  s.signature = {4, 2, 3};
  const auto rs = egr::evaluate_bounds(s);
  EXPECT_FALSE(rs.find("dfjr")->applicable());
  EXPECT_FALSE(rs.find("spectral")->applicable());
  EXPECT_TRUE(rs.find("sgr_odd")->applicable());
  EXPECT_FALSE(rs.find("cycle")->applicable());
  const auto j = egr::bound_report_json(rs);
  EXPECT_EQ(j["signature"], (std::vector<BigInt>{2, 3, 4}));

  egr::BoundQuery bad;
  bad.k = 3;
  bad.g = 6;
  EXPECT_THROW(egr::evaluate_bounds(bad), egr::precondition_error);
  bad.signature = {1, 1};
  EXPECT_THROW(egr::evaluate_bounds(bad), egr::precondition_error);
  bad.signature = {1, 1, 1};
  bad.lambda = 1;
  EXPECT_THROW(egr::evaluate_bounds(bad), egr::precondition_error);
}

TEST(Sweep, RowsAndCsv) {
  const auto rows = egr::sweep(10, 6, 1, egr::lambda_max(10, 6));
  EXPECT_EQ(rows.size(), 729u);
  EXPECT_EQ(rows.front().lambda, 1);
  EXPECT_EQ(rows.back().dfjr.value, egr::moore(10, 6));
  const auto csv = egr::sweep_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "lambda,moore,dfjr,spectral,cycle");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 730);

  const auto over = egr::sweep(3, 6, 8, 9);
  EXPECT_FALSE(over[1].dfjr.applicable());
  const auto last = egr::sweep_csv(over).substr(egr::sweep_csv(over).rfind("\n9,") + 1);
  const auto spectral = spectral_oracle(3, 6, 27, false);
  const auto cyc = cycle_oracle(3, 6, {9, 9, 9}, true);
  EXPECT_EQ(last, "9,14,," + (spectral ? std::to_string(*spectral) : "") + "," + (cyc ? std::to_string(*cyc) : "") + "\n");
  EXPECT_THROW(egr::sweep(3, 5, 1, 2), egr::precondition_error);
  EXPECT_THROW(egr::sweep(3, 6, 3, 2), egr::precondition_error);
}
