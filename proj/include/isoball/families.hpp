#ifndef ISOBALL_FAMILIES_HPP
#define ISOBALL_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isoball/exactmath.hpp"

namespace isoball {

// A vertex of the hypercube Q_n as a bit vector: bit i holds element i+1.
using VertexSet = std::uint32_t;

unsigned popcount(VertexSet x);

// Ground-truth representation: every member stored explicitly. Capped at
// n <= 24 so the 2^n universe stays enumerable; large n goes through
// ProfileFamily. Members are kept sorted and deduplicated, so equality is
// structural. An optional layer tag r marks an r-uniform family; shadow
// operations require it.
class ExplicitFamily {
 public:
  static constexpr unsigned kMaxN = 24;

  ExplicitFamily(unsigned n, std::vector<VertexSet> members,
                 std::optional<unsigned> layer = std::nullopt);

  static ExplicitFamily empty(unsigned n);
  static ExplicitFamily full_slice(unsigned n, unsigned r);
  static ExplicitFamily full_ball(unsigned n, unsigned R);

  unsigned n() const { return n_; }
  std::optional<unsigned> layer() const { return layer_; }
  const std::vector<VertexSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(VertexSet x) const;
  VertexSet full_mask() const { return (n_ == 32) ? ~VertexSet(0) : ((VertexSet(1) << n_) - 1); }

  // returns a copy tagged with layer r; throws if some member is not r-sized
  ExplicitFamily with_layer(unsigned r) const;
  // tags automatically when all members share one size; no-op otherwise
  ExplicitFamily with_detected_layer() const;

  // same set family: ambient and members; the layer tag is advisory metadata
  bool operator==(const ExplicitFamily& other) const {
    return n_ == other.n_ && members_ == other.members_;
  }

 private:
  unsigned n_ = 0;
  std::optional<unsigned> layer_;
  std::vector<VertexSet> members_;
};

// A family symmetric under all permutations preserving the bipartition
// Y = {1..m} vs its complement: membership depends only on the cell
// (a, b) = (|X cap Y|, |X minus Y|). Cell (a,b) is feasible for
// 0 <= a <= m, 0 <= b <= n-m; an on-cell contributes C(m,a)*C(n-m,b)
// members. Exact counting works for n in the hundreds.
class ProfileFamily {
 public:
  using Cell = std::pair<unsigned, unsigned>;

  ProfileFamily(unsigned n, unsigned m);

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  bool is_on(unsigned a, unsigned b) const;
  void set(unsigned a, unsigned b, bool on = true);
  std::vector<Cell> cells() const;  // sorted lexicographically
  Natural cell_capacity(unsigned a, unsigned b) const;
  Natural size() const;
  bool empty() const;
  // largest a+b over on-cells; nullopt when empty
  std::optional<unsigned> max_weight() const;
  // all on-cells share a+b = r (slice profiles); nullopt otherwise
  std::optional<unsigned> uniform_weight() const;

  bool operator==(const ProfileFamily& other) const = default;

 private:
  unsigned index(unsigned a, unsigned b) const;

  unsigned n_ = 0, m_ = 0;
  std::vector<std::uint8_t> on_;
};

// A profile family plus a partial "cut" cell holding `taken` of its members.
// Exactly interpolates between the profile and the profile-plus-cell sizes;
// which members of the cut cell are taken is not recorded, so boundary
// counts on this type are conservative upper bounds.
class PaddedProfileFamily {
 public:
  PaddedProfileFamily(ProfileFamily base,
                      std::optional<ProfileFamily::Cell> cut_cell = std::nullopt,
                      Natural taken = Natural(0));

  const ProfileFamily& base() const { return base_; }
  const std::optional<ProfileFamily::Cell>& cut_cell() const { return cut_; }
  const Natural& taken() const { return taken_; }
  Natural size() const;

  bool operator==(const PaddedProfileFamily& other) const = default;

 private:
  ProfileFamily base_;
  std::optional<ProfileFamily::Cell> cut_;
  Natural taken_;
};

struct NotProfileSymmetric : std::runtime_error {
  NotProfileSymmetric(unsigned a, unsigned b, Natural present, Natural capacity);
  unsigned a = 0, b = 0;
  Natural present, capacity;
};

Natural family_size(const ExplicitFamily& f);
Natural family_size(const ProfileFamily& f);
Natural family_size(const PaddedProfileFamily& f);

// Explicit view of a profile family; pre n <= 24. Slice profiles come back
// layer-tagged.
ExplicitFamily expand_profile(const ProfileFamily& p);

// Explicit view of a padded family, taking the numerically smallest members
// of the cut cell. Test bridge for small n; pre n <= 24.
ExplicitFamily expand_padded(const PaddedProfileFamily& p);

// The unique profile family over split m with the same members; throws
// NotProfileSymmetric when some cell is only partially occupied.
ProfileFamily profile_of(const ExplicitFamily& f, unsigned m);

namespace bits {

// next k-subset mask in increasing numeric (= colex) order; Gosper's hack
std::uint64_t next_combination(std::uint64_t v);

// enumerate k-subsets of [0,width) in colex order
template <typename Fn>
void for_each_combination(unsigned width, unsigned k, Fn&& fn) {
  if (width > 64) throw std::invalid_argument("for_each_combination: width > 64");
  if (k > width) return;
  if (k == 0) {
    fn(std::uint64_t(0));
    return;
  }
  const std::uint64_t limit = (width == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << width);
  std::uint64_t v = (std::uint64_t(1) << k) - 1;
  while (v < limit) {
    fn(v);
    if (v == 0) break;
    v = next_combination(v);
  }
}

}  // namespace bits

}  // namespace isoball

#endif
