#ifndef ISOBALL_SEARCH_HPP
#define ISOBALL_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "isoball/boundary.hpp"
#include "isoball/bounds.hpp"
#include "isoball/constructions.hpp"
#include "isoball/families.hpp"

namespace isoball {

// Common result shape for searches and sweeps. Exhaustive runs are
// bit-for-bit reproducible; sampled runs are reproducible given the seed.
// `wall_seconds` is the only nondeterministic field.
struct SearchReport {
  std::string kind;
  std::map<std::string, std::string> params;
  Natural families_examined;
  std::optional<double> min_stat;
  std::optional<double> max_stat;
  std::optional<ExplicitFamily> witness_explicit;
  std::optional<ProfileFamily> witness_profile;
  std::map<std::string, Natural> counters;
  double wall_seconds = 0;
  bool ok = false;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Slices admit full enumeration only while 2^C(n,r) is walkable.
constexpr unsigned kMaxExhaustiveSliceSize = 20;

// Every subfamily of S_n(r) against the local-expansion bound. Zero
// violations expected; the minimum slack and a family attaining it are
// reported, both over all subfamilies and over the nontrivial ones
// (0 < |A| < C(n,r)). pre: C(n,r) <= 20.
SearchReport exhaustive_verify_local_expansion(unsigned n, unsigned r, unsigned workers = 1);

// Every subfamily against both normalized-matching shadow bounds.
SearchReport exhaustive_verify_nm(unsigned n, unsigned r, unsigned workers = 1);

enum class Ambient { Cube, Ball };

// Exact minimum vertex boundary over all size-`size` subsets of the ambient
// graph, with the first witness in colex enumeration order. The number of
// candidate sets must stay within `budget`. pre: n <= 5.
SearchReport exhaustive_min_boundary(unsigned n, std::size_t size, Ambient ambient,
                                     unsigned R, const Natural& budget,
                                     unsigned workers = 1);

enum class SampleGenerator { RandomProfile, RandomExplicit, Construction };
enum class BoundKind { Thm1, Lemma7 };

struct SampleConfig {
  SampleGenerator generator = SampleGenerator::RandomProfile;
  BoundKind bound = BoundKind::Thm1;
  unsigned n = 0;
  unsigned R = 0;
  Rational rho;  // Thm1 only
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool assume_n0 = false;
};

// One CSV row per instance for sweep output.
struct SampleRow {
  std::uint64_t index = 0;
  std::string size;
  std::string boundary;
  bool boundary_is_upper_bound = false;
  bool checked = false;  // false when the size window excluded the instance
  bool violation = false;
  double ratio = 0;  // boundary / bound when checked
};

// Seeded verification sweep of a ball isoperimetric bound over generated
// families. RandomProfile and RandomExplicit draw families and skip those
// outside the admissible window; Construction sweeps the sized half-space
// family across `samples` evenly spaced targets, flagging a violation only
// when even the conservative boundary upper bound drops below the bound.
SearchReport sampled_verify(const SampleConfig& cfg, std::vector<SampleRow>* rows = nullptr);

// Half-space construction at half density: R = floor(n/2), target =
// floor(|B_n(R)|/2). Carries the exact ingredients of the sharpness ratio
// |bd M| sqrt(n) / min(|M|, |B \ M|), so trend comparisons across n can be
// done in integers.
struct SharpnessRatioPoint {
  unsigned n = 0;
  Natural boundary_upper;
  Natural min_side;
  bool boundary_exact = false;
  double ratio_sqrt_n = 0;
};

SharpnessRatioPoint sharpness_ratio_point(unsigned n);

// ratio(a) <= scale * ratio(b), compared exactly in squared form
bool ratio_le(const SharpnessRatioPoint& a, const SharpnessRatioPoint& b, const Rational& scale);

// Seeded first-improvement descent on |bd_{B_n(R)}| over size-preserving
// single-element swaps, restarting from a fresh random family at local
// optima until the step budget runs out. The result is an upper bound on
// the true minimum. pre: n <= 20.
SearchReport local_search_minimizer(unsigned n, unsigned R, std::size_t size,
                                    std::uint64_t seed, std::uint64_t steps);

}  // namespace isoball

#endif
