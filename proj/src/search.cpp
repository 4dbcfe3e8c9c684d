#include "isoball/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

namespace isoball {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// fixed 256-bit set, wide enough for any layer adjacent to a slice with
// C(n,r) <= 20 members (worst case C(20,2) = 190)
struct Words {
  std::array<std::uint64_t, 4> w{};

  void set(unsigned i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void clear() { w = {}; }
  void orw(const Words& o) {
    w[0] |= o.w[0];
    w[1] |= o.w[1];
    w[2] |= o.w[2];
    w[3] |= o.w[3];
  }
  unsigned count() const {
    return static_cast<unsigned>(std::popcount(w[0]) + std::popcount(w[1]) +
                                 std::popcount(w[2]) + std::popcount(w[3]));
  }
};

struct SliceEnv {
  unsigned n = 0, r = 0, s = 0;
  std::vector<VertexSet> members;  // colex = numeric ascending
  std::vector<Words> lower_mask, upper_mask;
  std::size_t lower_size = 0, upper_size = 0;
};

std::vector<VertexSet> layer_masks(unsigned n, unsigned r) {
  std::vector<VertexSet> out;
  bits::for_each_combination(n, r, [&](std::uint64_t v) {
    out.push_back(static_cast<VertexSet>(v));
  });
  return out;
}

unsigned index_of(const std::vector<VertexSet>& sorted, VertexSet x) {
  return static_cast<unsigned>(
      std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

SliceEnv build_slice_env(unsigned n, unsigned r) {
  if (r < 1 || n < 2 || r > n - 1)
    throw std::invalid_argument("exhaustive slice verify: 1 <= r <= n-1 required");
  // gate on the exact count before enumerating anything; C(n,r) <= 20 with
  // 1 <= r <= n-1 also forces n <= 20
  if (binom(n, r) > kMaxExhaustiveSliceSize)
    throw std::invalid_argument("slice too large: C(n,r) must be <= " +
                                std::to_string(kMaxExhaustiveSliceSize));
  SliceEnv env;
  env.n = n;
  env.r = r;
  env.s = n - r;
  env.members = layer_masks(n, r);
  const auto lower = layer_masks(n, r - 1);
  const auto upper = layer_masks(n, r + 1);
  env.lower_size = lower.size();
  env.upper_size = upper.size();
  if (lower.size() > 256 || upper.size() > 256)
    throw std::logic_error("adjacent layer exceeds fixed bitset width");
  env.lower_mask.resize(env.members.size());
  env.upper_mask.resize(env.members.size());
  for (std::size_t i = 0; i < env.members.size(); ++i) {
    const VertexSet x = env.members[i];
    VertexSet in = x;
    while (in) {
      const VertexSet bit = in & (~in + 1);
      env.lower_mask[i].set(index_of(lower, x ^ bit));
      in ^= bit;
    }
    VertexSet out_bits = ((n == 32) ? ~VertexSet(0) : ((VertexSet(1) << n) - 1)) & ~x;
    while (out_bits) {
      const VertexSet bit = out_bits & (~out_bits + 1);
      env.upper_mask[i].set(index_of(upper, x | bit));
      out_bits ^= bit;
    }
  }
  return env;
}

ExplicitFamily family_from_mask(const SliceEnv& env, std::uint32_t mask) {
  std::vector<VertexSet> members;
  std::uint32_t m = mask;
  while (m) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(m));
    members.push_back(env.members[i]);
    m &= m - 1;
  }
  return ExplicitFamily(env.n, std::move(members), env.r);
}

struct RangeStats {
  std::uint64_t violations = 0;
  std::uint64_t first_violation = ~std::uint64_t(0);
  double min_slack = 0;
  std::uint64_t argmin = ~std::uint64_t(0);
  double min_nontrivial_slack = 0;
  std::uint64_t argmin_nontrivial = ~std::uint64_t(0);
};

template <typename Eval>
RangeStats scan_masks(const SliceEnv& env, std::uint64_t lo, std::uint64_t hi, Eval&& eval) {
  RangeStats st;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    Words lower, upper;
    std::uint64_t m = mask;
    while (m) {
      const unsigned i = static_cast<unsigned>(std::countr_zero(m));
      lower.orw(env.lower_mask[i]);
      upper.orw(env.upper_mask[i]);
      m &= m - 1;
    }
    eval(st, mask, static_cast<unsigned>(std::popcount(mask)), lower.count(), upper.count());
  }
  return st;
}

template <typename Eval>
RangeStats parallel_scan(const SliceEnv& env, unsigned workers, Eval&& eval) {
  const std::uint64_t total = std::uint64_t(1) << env.members.size();
  workers = std::max(1u, std::min<unsigned>(workers, 64));
  if (workers == 1 || total < 1024) return scan_masks(env, 0, total, eval);

  std::vector<RangeStats> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
    const std::uint64_t hi =
        total / workers * (w + 1) + std::min<std::uint64_t>(w + 1, total % workers);
    pool.emplace_back([&, w, lo, hi] { parts[w] = scan_masks(env, lo, hi, eval); });
  }
  for (auto& t : pool) t.join();

  RangeStats merged;
  bool have_min = false, have_nontrivial = false;
  for (const auto& st : parts) {
    merged.violations += st.violations;
    merged.first_violation = std::min(merged.first_violation, st.first_violation);
    if (st.argmin != ~std::uint64_t(0)) {
      if (!have_min || st.min_slack < merged.min_slack ||
          (st.min_slack == merged.min_slack && st.argmin < merged.argmin)) {
        merged.min_slack = st.min_slack;
        merged.argmin = st.argmin;
        have_min = true;
      }
    }
    if (st.argmin_nontrivial != ~std::uint64_t(0)) {
      if (!have_nontrivial || st.min_nontrivial_slack < merged.min_nontrivial_slack ||
          (st.min_nontrivial_slack == merged.min_nontrivial_slack &&
           st.argmin_nontrivial < merged.argmin_nontrivial)) {
        merged.min_nontrivial_slack = st.min_nontrivial_slack;
        merged.argmin_nontrivial = st.argmin_nontrivial;
        have_nontrivial = true;
      }
    }
  }
  return merged;
}

void update_min(RangeStats& st, std::uint64_t mask, unsigned a, unsigned total_members,
                double slack) {
  if (st.argmin == ~std::uint64_t(0) || slack < st.min_slack ||
      (slack == st.min_slack && mask < st.argmin)) {
    st.min_slack = slack;
    st.argmin = mask;
  }
  if (a > 0 && a < total_members) {
    if (st.argmin_nontrivial == ~std::uint64_t(0) || slack < st.min_nontrivial_slack ||
        (slack == st.min_nontrivial_slack && mask < st.argmin_nontrivial)) {
      st.min_nontrivial_slack = slack;
      st.argmin_nontrivial = mask;
    }
  }
}

}  // namespace

SearchReport exhaustive_verify_local_expansion(unsigned n, unsigned r, unsigned workers) {
  const auto start = Clock::now();
  const SliceEnv env = build_slice_env(n, r);
  const unsigned N = static_cast<unsigned>(env.members.size());
  const unsigned max_boundary = static_cast<unsigned>(env.lower_size + env.upper_size);

  // exact verdict and float slack per (|A|, |boundary|), computed once
  std::vector<std::vector<std::uint8_t>> ok(N + 1,
                                            std::vector<std::uint8_t>(max_boundary + 1, 0));
  std::vector<std::vector<double>> slack(N + 1, std::vector<double>(max_boundary + 1, 0));
  for (unsigned a = 0; a <= N; ++a)
    for (unsigned b = 0; b <= max_boundary; ++b) {
      const auto verdict = local_expansion_check(n, r, Natural(a), Natural(b));
      ok[a][b] = verdict.holds ? 1 : 0;
      slack[a][b] = verdict.slack;
    }

  RangeStats st = parallel_scan(
      env, workers,
      [&](RangeStats& acc, std::uint64_t mask, unsigned a, unsigned lb, unsigned ub) {
        const unsigned b = lb + ub;
        if (!ok[a][b]) {
          ++acc.violations;
          acc.first_violation = std::min(acc.first_violation, mask);
        }
        update_min(acc, mask, a, N, slack[a][b]);
      });

  SearchReport rep;
  rep.kind = "exhaustive-local-expansion";
  rep.params = {{"n", std::to_string(n)}, {"r", std::to_string(r)}};
  rep.families_examined = pow2(N);
  rep.counters["violations"] = Natural(st.violations);
  rep.min_stat = st.min_slack;
  rep.counters["min_nontrivial_slack_times_1e9"] =
      Natural(static_cast<long>(st.min_nontrivial_slack * 1e9));
  rep.counters["argmin_nontrivial_mask"] = Natural(st.argmin_nontrivial);
  // the witness attains the reported minimum slack
  rep.witness_explicit = family_from_mask(
      env, static_cast<std::uint32_t>(st.violations ? st.first_violation : st.argmin));
  rep.ok = st.violations == 0;
  rep.wall_seconds = seconds_since(start);
  return rep;
}

SearchReport exhaustive_verify_nm(unsigned n, unsigned r, unsigned workers) {
  const auto start = Clock::now();
  const SliceEnv env = build_slice_env(n, r);
  const unsigned N = static_cast<unsigned>(env.members.size());
  const unsigned s = n - r;

  RangeStats st = parallel_scan(
      env, workers,
      [&](RangeStats& acc, std::uint64_t mask, unsigned a, unsigned lb, unsigned ub) {
        // lower >= r a/(s+1), upper >= s a/(r+1); integer cross-multiplied
        const bool lower_ok = static_cast<std::uint64_t>(lb) * (s + 1) >=
                              static_cast<std::uint64_t>(r) * a;
        const bool upper_ok = static_cast<std::uint64_t>(ub) * (r + 1) >=
                              static_cast<std::uint64_t>(s) * a;
        if (!lower_ok || !upper_ok) {
          ++acc.violations;
          acc.first_violation = std::min(acc.first_violation, mask);
        }
        const double slack =
            std::min(lb - static_cast<double>(r) * a / (s + 1),
                     ub - static_cast<double>(s) * a / (r + 1));
        update_min(acc, mask, a, N, slack);
      });

  SearchReport rep;
  rep.kind = "exhaustive-normalized-matching";
  rep.params = {{"n", std::to_string(n)}, {"r", std::to_string(r)}};
  rep.families_examined = pow2(N);
  rep.counters["violations"] = Natural(st.violations);
  rep.min_stat = st.min_slack;
  rep.witness_explicit = family_from_mask(
      env, static_cast<std::uint32_t>(st.violations ? st.first_violation : st.argmin));
  rep.ok = st.violations == 0;
  rep.wall_seconds = seconds_since(start);
  return rep;
}

namespace {

// colex unranking via the combinatorial number system; counts fit u64 for
// a universe of at most 32 vertices
std::uint64_t binom_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  Natural b = binom(n, k);
  return b.get_ui();
}

std::uint64_t unrank_colex(std::uint64_t rank, unsigned k, unsigned width) {
  std::uint64_t mask = 0;
  for (unsigned j = k; j >= 1; --j) {
    unsigned c = j - 1;
    while (c + 1 < width && binom_u64(c + 1, j) <= rank) ++c;
    mask |= std::uint64_t(1) << c;
    rank -= binom_u64(c, j);
    width = c;  // positions above c are settled
  }
  return mask;
}

struct MinBoundaryPart {
  unsigned best = ~0u;
  std::uint64_t best_rank = ~std::uint64_t(0);
  std::uint64_t best_mask = 0;
};

}  // namespace

SearchReport exhaustive_min_boundary(unsigned n, std::size_t size, Ambient ambient,
                                     unsigned R, const Natural& budget, unsigned workers) {
  const auto start = Clock::now();
  if (n > 5)
    throw std::invalid_argument("exhaustive_min_boundary: n <= 5 required");
  if (ambient == Ambient::Cube) R = n;
  if (R > n) throw std::invalid_argument("exhaustive_min_boundary: R <= n required");

  std::vector<VertexSet> universe;
  const VertexSet top = (VertexSet(1) << n) - 1;
  for (VertexSet v = 0;; ++v) {
    if (popcount(v) <= R) universe.push_back(v);
    if (v == top) break;
  }
  const unsigned U = static_cast<unsigned>(universe.size());
  if (size > U)
    throw std::invalid_argument("exhaustive_min_boundary: size exceeds ambient vertex count");

  const Natural total = binom(U, static_cast<unsigned>(size));
  if (total > budget)
    throw BudgetExceeded("exhaustive_min_boundary: " + total.get_str() +
                         " candidate sets exceed budget " + budget.get_str());
  const std::uint64_t count = total.get_ui();

  std::vector<std::uint64_t> nb(U, 0);
  for (unsigned i = 0; i < U; ++i)
    for (unsigned bit = 0; bit < n; ++bit) {
      const VertexSet w = universe[i] ^ (VertexSet(1) << bit);
      if (popcount(w) > R) continue;
      nb[i] |= std::uint64_t(1) << index_of(universe, w);
    }

  auto scan = [&](std::uint64_t rank0, std::uint64_t cnt) {
    MinBoundaryPart part;
    std::uint64_t mask = unrank_colex(rank0, static_cast<unsigned>(size), U);
    for (std::uint64_t i = 0; i < cnt; ++i) {
      std::uint64_t reach = 0, m = mask;
      while (m) {
        reach |= nb[static_cast<unsigned>(std::countr_zero(m))];
        m &= m - 1;
      }
      const unsigned b = static_cast<unsigned>(std::popcount(reach & ~mask));
      if (b < part.best || (b == part.best && rank0 + i < part.best_rank)) {
        part.best = b;
        part.best_rank = rank0 + i;
        part.best_mask = mask;
      }
      mask = bits::next_combination(mask);
    }
    return part;
  };

  workers = std::max(1u, std::min(workers, 64u));
  MinBoundaryPart best;
  if (workers == 1 || count < 1024) {
    best = scan(0, count);
  } else {
    std::vector<MinBoundaryPart> parts(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = count / workers * w + std::min<std::uint64_t>(w, count % workers);
      const std::uint64_t hi =
          count / workers * (w + 1) + std::min<std::uint64_t>(w + 1, count % workers);
      pool.emplace_back([&, w, lo, hi] { parts[w] = scan(lo, hi - lo); });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : parts)
      if (p.best < best.best || (p.best == best.best && p.best_rank < best.best_rank))
        best = p;
  }

  std::vector<VertexSet> witness;
  std::uint64_t m = best.best_mask;
  while (m) {
    witness.push_back(universe[static_cast<unsigned>(std::countr_zero(m))]);
    m &= m - 1;
  }

  SearchReport rep;
  rep.kind = "exhaustive-min-boundary";
  rep.params = {{"n", std::to_string(n)},
                {"size", std::to_string(size)},
                {"ambient", ambient == Ambient::Cube ? "cube" : "ball"},
                {"R", std::to_string(R)}};
  rep.families_examined = total;
  rep.min_stat = static_cast<double>(best.best);
  rep.counters["min_boundary"] = Natural(best.best);
  rep.witness_explicit = ExplicitFamily(n, std::move(witness));
  rep.ok = true;
  rep.wall_seconds = seconds_since(start);
  return rep;
}

namespace {

ProfileFamily random_ball_profile(unsigned n, unsigned R, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  const unsigned m = n / 2;
  ProfileFamily p(n, m);
  for (unsigned a = 0; a <= m; ++a)
    for (unsigned b = 0; b <= n - m; ++b)
      if (a + b <= R && (rng() & 1)) p.set(a, b);
  return p;
}

struct BoundOutcome {
  bool checked = false;
  bool violation = false;
  bool exploratory = false;
  double ratio = 0;
};

BoundOutcome check_bound(const SampleConfig& cfg, const Natural& size,
                         const Natural& boundary, bool boundary_exact) {
  BoundOutcome out;
  if (cfg.bound == BoundKind::Thm1) {
    Thm1Options opts;
    opts.enforce_size_window = false;
    opts.assume_n0 = cfg.assume_n0;
    const auto v = thm1_bound_check(cfg.n, cfg.R, cfg.rho, size, boundary, opts);
    if (!v.size_window_ok) return out;
    out.checked = true;
    out.exploratory = v.exploratory;
    // a failed check against an upper bound is still a definite violation;
    // a passed check with only an upper bound is recorded but weaker
    out.violation = !v.holds;
    const double coeff = std::pow(mpq_get_d(cfg.rho.get_mpq_t()), 1.5) /
                         (18.0 * std::sqrt(static_cast<double>(cfg.n)));
    const double bound = coeff * mpz_get_d(v.min_side.get_mpz_t());
    out.ratio = bound > 0 ? mpz_get_d(boundary.get_mpz_t()) / bound : 0;
    (void)boundary_exact;
    return out;
  }
  // Lemma7-style bound
  if (sgn(size) <= 0) return out;
  const auto params = lemma7_params(cfg.n, cfg.R, size);
  const SqrtQuantity bound = lemma7_bound(params, cfg.n, size);
  const bool pre = lemma7_preconditions(cfg.n, cfg.R, params);
  out.checked = true;
  out.exploratory = !pre;
  out.violation = pre && compare(bound, Rational(boundary)) > 0;
  const double bnd = mpq_get_d(bound.coeff.get_mpq_t()) *
                     std::sqrt(static_cast<double>(bound.radicand));
  out.ratio = bnd > 0 ? mpz_get_d(boundary.get_mpz_t()) / bnd : 0;
  return out;
}

}  // namespace

SearchReport sampled_verify(const SampleConfig& cfg, std::vector<SampleRow>* rows) {
  const auto start = Clock::now();
  SearchReport rep;
  rep.kind = "sampled-verify";
  rep.params = {{"generator",
                 cfg.generator == SampleGenerator::RandomProfile    ? "random-profile"
                 : cfg.generator == SampleGenerator::RandomExplicit ? "random-explicit"
                                                                    : "construction"},
                {"bound", cfg.bound == BoundKind::Thm1 ? "thm1" : "lemma7"},
                {"n", std::to_string(cfg.n)},
                {"R", std::to_string(cfg.R)},
                {"samples", std::to_string(cfg.samples)},
                {"seed", std::to_string(cfg.seed)}};
  if (cfg.bound == BoundKind::Thm1) rep.params["rho"] = cfg.rho.get_str();
  rep.families_examined = 0;
  rep.counters["checked"] = 0;
  rep.counters["skipped_window"] = 0;
  rep.counters["violations"] = 0;
  rep.counters["exploratory"] = 0;
  rep.ok = true;

  Natural window_lo(0), window_hi(0);
  const Natural ball = ball_size(cfg.n, cfg.R);
  if (cfg.bound == BoundKind::Thm1) {
    auto [lo, hi] = thm1_size_window(cfg.n, cfg.R, cfg.rho);
    window_lo = lo;
    window_hi = hi;
  } else {
    window_lo = 1;
    window_hi = ball;
  }

  double min_ratio = 0, max_ratio = 0;
  bool have_ratio = false;

  auto account = [&](std::uint64_t index, const Natural& size, const Natural& boundary,
                     bool exact, const std::optional<ProfileFamily>& witness) {
    rep.families_examined += 1;
    const auto outcome = check_bound(cfg, size, boundary, exact);
    SampleRow row;
    row.index = index;
    row.size = size.get_str();
    row.boundary = boundary.get_str();
    row.boundary_is_upper_bound = !exact;
    row.checked = outcome.checked;
    row.violation = outcome.violation;
    row.ratio = outcome.ratio;
    if (rows) rows->push_back(row);
    if (!outcome.checked) {
      rep.counters["skipped_window"] += 1;
      return;
    }
    rep.counters["checked"] += 1;
    if (outcome.exploratory) rep.counters["exploratory"] += 1;
    if (!exact) rep.counters["upper_bound_instances"] += 1;
    if (outcome.violation) {
      rep.counters["violations"] += 1;
      rep.ok = false;
      if (!rep.witness_profile && witness) rep.witness_profile = witness;
    }
    if (!have_ratio || outcome.ratio < min_ratio) min_ratio = outcome.ratio;
    if (!have_ratio || outcome.ratio > max_ratio) max_ratio = outcome.ratio;
    have_ratio = true;
  };

  switch (cfg.generator) {
    case SampleGenerator::RandomProfile: {
      for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        ProfileFamily p = random_ball_profile(cfg.n, cfg.R, cfg.seed ^ (i * 0x9E3779B97F4A7C15ULL));
        const Natural size = p.size();
        if (size < window_lo || size > window_hi) {
          rep.families_examined += 1;
          rep.counters["skipped_window"] += 1;
          if (rows)
            rows->push_back(SampleRow{i, size.get_str(), "", false, false, false, 0});
          continue;
        }
        const Natural boundary = profile_ball_boundary(p, cfg.R).size();
        account(i, size, boundary, true, p);
      }
      break;
    }
    case SampleGenerator::RandomExplicit: {
      if (cfg.n > 20)
        throw std::invalid_argument("sampled_verify: explicit sampling capped at n <= 20");
      ExplicitFamily all = ExplicitFamily::full_ball(cfg.n, cfg.R);
      std::vector<VertexSet> perm = all.members();
      std::mt19937_64 rng(splitmix64(cfg.seed));
      const std::uint64_t lo = window_lo.get_ui();
      const std::uint64_t hi = window_hi.get_ui();
      for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        const std::uint64_t size = lo + (hi > lo ? rng() % (hi - lo + 1) : 0);
        for (std::uint64_t j = 0; j < size; ++j) {
          const std::uint64_t k = j + rng() % (perm.size() - j);
          std::swap(perm[j], perm[k]);
        }
        ExplicitFamily f(cfg.n, std::vector<VertexSet>(perm.begin(), perm.begin() + size));
        const Natural boundary = family_size(ball_boundary(f, cfg.R));
        account(i, family_size(f), boundary, true, std::nullopt);
      }
      break;
    }
    case SampleGenerator::Construction: {
      for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        Natural target;
        if (cfg.samples == 1) {
          target = (window_lo + window_hi) / 2;
        } else {
          target = window_lo + (window_hi - window_lo) * i / (cfg.samples - 1);
        }
        PaddedProfileFamily fam = sized_ball_halfspace(cfg.n, cfg.R, target);
        const auto bound = padded_ball_boundary_upper_bound(fam, cfg.R);
        const bool exact = !fam.cut_cell().has_value();
        account(i, fam.size(), bound.upper_bound, exact, fam.base());
      }
      break;
    }
  }

  if (have_ratio) {
    rep.min_stat = min_ratio;
    rep.max_stat = max_ratio;
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

SharpnessRatioPoint sharpness_ratio_point(unsigned n) {
  SharpnessRatioPoint out;
  out.n = n;
  const unsigned R = n / 2;
  const Natural ball = ball_size(n, R);
  const Natural target = ball / 2;
  PaddedProfileFamily fam = sized_ball_halfspace(n, R, target);
  const auto bound = padded_ball_boundary_upper_bound(fam, R);
  out.boundary_upper = bound.upper_bound;
  out.boundary_exact = !fam.cut_cell().has_value();
  const Natural other = ball - target;
  out.min_side = target < other ? target : other;
  out.ratio_sqrt_n = mpz_get_d(out.boundary_upper.get_mpz_t()) *
                     std::sqrt(static_cast<double>(n)) /
                     mpz_get_d(out.min_side.get_mpz_t());
  return out;
}

bool ratio_le(const SharpnessRatioPoint& a, const SharpnessRatioPoint& b, const Rational& scale) {
  // a.ub sqrt(n_a)/a.min <= scale * b.ub sqrt(n_b)/b.min, squared
  const Natural lhs = a.boundary_upper * a.boundary_upper * a.n * b.min_side * b.min_side *
                      scale.get_den() * scale.get_den();
  const Natural rhs = b.boundary_upper * b.boundary_upper * b.n * a.min_side * a.min_side *
                      scale.get_num() * scale.get_num();
  return lhs <= rhs;
}

SearchReport local_search_minimizer(unsigned n, unsigned R, std::size_t size,
                                    std::uint64_t seed, std::uint64_t steps) {
  const auto start = Clock::now();
  if (n > 20) throw std::invalid_argument("local_search_minimizer: n <= 20 required");
  if (R > n) throw std::invalid_argument("local_search_minimizer: R <= n required");

  std::vector<VertexSet> universe;
  const VertexSet top = (n == 32) ? ~VertexSet(0) : ((VertexSet(1) << n) - 1);
  for (VertexSet v = 0;; ++v) {
    if (popcount(v) <= R) universe.push_back(v);
    if (v == top) break;
  }
  const std::size_t U = universe.size();
  if (size > U) throw std::invalid_argument("local_search_minimizer: size exceeds |B_n(R)|");

  std::vector<std::uint8_t> in_family(std::size_t(1) << n, 0);
  std::vector<std::uint8_t> visited(std::size_t(1) << n, 0);
  std::vector<VertexSet> scratch;

  auto boundary_of = [&](const std::vector<VertexSet>& fam) {
    unsigned count = 0;
    for (VertexSet x : fam)
      for (unsigned bit = 0; bit < n; ++bit) {
        const VertexSet w = x ^ (VertexSet(1) << bit);
        if (popcount(w) > R || in_family[w] || visited[w]) continue;
        visited[w] = 1;
        scratch.push_back(w);
        ++count;
      }
    for (VertexSet w : scratch) visited[w] = 0;
    scratch.clear();
    return count;
  };

  std::mt19937_64 rng(splitmix64(seed));
  std::vector<VertexSet> perm = universe;
  auto random_family = [&]() {
    for (std::size_t j = 0; j < size; ++j) {
      const std::size_t k = j + rng() % (perm.size() - j);
      std::swap(perm[j], perm[k]);
    }
    std::vector<VertexSet> fam(perm.begin(), perm.begin() + size);
    std::sort(fam.begin(), fam.end());
    return fam;
  };

  std::vector<VertexSet> fam = random_family();
  for (VertexSet x : fam) in_family[x] = 1;
  unsigned cur = boundary_of(fam);
  std::uint64_t evaluations = 1, restarts = 0, improvements = 0;

  unsigned best = cur;
  std::vector<VertexSet> best_fam = fam;

  std::uint64_t remaining = steps;
  while (remaining > 0) {
    bool improved = false;
    for (std::size_t oi = 0; oi < fam.size() && !improved; ++oi) {
      for (std::size_t ii = 0; ii < U && !improved; ++ii) {
        const VertexSet in_v = universe[ii];
        if (in_family[in_v]) continue;
        const VertexSet out_v = fam[oi];
        in_family[out_v] = 0;
        in_family[in_v] = 1;
        std::vector<VertexSet> cand = fam;
        cand[oi] = in_v;
        std::sort(cand.begin(), cand.end());
        const unsigned b = boundary_of(cand);
        ++evaluations;
        if (b < cur) {
          fam = std::move(cand);
          cur = b;
          improved = true;
          ++improvements;
        } else {
          in_family[out_v] = 1;
          in_family[in_v] = 0;
        }
      }
    }
    if (improved) {
      if (cur < best) {
        best = cur;
        best_fam = fam;
      }
      --remaining;
      continue;
    }
    // local optimum: restart if budget remains
    if (cur < best) {
      best = cur;
      best_fam = fam;
    }
    --remaining;
    ++restarts;
    if (remaining == 0) break;
    for (VertexSet x : fam) in_family[x] = 0;
    fam = random_family();
    for (VertexSet x : fam) in_family[x] = 1;
    cur = boundary_of(fam);
    ++evaluations;
  }
  if (cur < best) {
    best = cur;
    best_fam = fam;
  }

  SearchReport rep;
  rep.kind = "local-search-min-boundary";
  rep.params = {{"n", std::to_string(n)},
                {"R", std::to_string(R)},
                {"size", std::to_string(size)},
                {"seed", std::to_string(seed)},
                {"steps", std::to_string(steps)}};
  rep.families_examined = Natural(evaluations);
  rep.min_stat = static_cast<double>(best);
  rep.counters["min_boundary"] = Natural(best);
  rep.counters["restarts"] = Natural(restarts);
  rep.counters["improvements"] = Natural(improvements);
  rep.witness_explicit = ExplicitFamily(n, std::move(best_fam));
  rep.ok = true;
  rep.wall_seconds = seconds_since(start);
  return rep;
}

}  // namespace isoball
