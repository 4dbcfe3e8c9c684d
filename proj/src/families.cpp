#include "isoball/families.hpp"

#include <algorithm>
#include <bit>

namespace isoball {

unsigned popcount(VertexSet x) { return static_cast<unsigned>(std::popcount(x)); }

ExplicitFamily::ExplicitFamily(unsigned n, std::vector<VertexSet> members,
                               std::optional<unsigned> layer)
    : n_(n), layer_(layer), members_(std::move(members)) {
  if (n > kMaxN)
    throw std::invalid_argument("ExplicitFamily: ambient n exceeds explicit cap " +
                                std::to_string(kMaxN));
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const VertexSet mask = full_mask();
  for (VertexSet x : members_) {
    if ((x & ~mask) != 0)
      throw std::invalid_argument("ExplicitFamily: member outside ground set [n]");
    if (layer_ && popcount(x) != *layer_)
      throw std::invalid_argument("ExplicitFamily: member violates layer tag");
  }
  if (layer_ && *layer_ > n_)
    throw std::invalid_argument("ExplicitFamily: layer tag exceeds n");
}

ExplicitFamily ExplicitFamily::empty(unsigned n) { return ExplicitFamily(n, {}); }

ExplicitFamily ExplicitFamily::full_slice(unsigned n, unsigned r) {
  if (n > kMaxN) throw std::invalid_argument("full_slice: n too large");
  if (r > n) throw std::invalid_argument("full_slice: r > n");
  std::vector<VertexSet> out;
  bits::for_each_combination(n, r, [&](std::uint64_t v) {
    out.push_back(static_cast<VertexSet>(v));
  });
  return ExplicitFamily(n, std::move(out), r);
}

ExplicitFamily ExplicitFamily::full_ball(unsigned n, unsigned R) {
  if (n > kMaxN) throw std::invalid_argument("full_ball: n too large");
  std::vector<VertexSet> out;
  const VertexSet top = (n == 32) ? ~VertexSet(0) : ((VertexSet(1) << n) - 1);
  for (VertexSet x = 0;; ++x) {
    if (popcount(x) <= R) out.push_back(x);
    if (x == top) break;
  }
  return ExplicitFamily(n, std::move(out));
}

bool ExplicitFamily::contains(VertexSet x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

ExplicitFamily ExplicitFamily::with_layer(unsigned r) const {
  return ExplicitFamily(n_, members_, r);
}

ExplicitFamily ExplicitFamily::with_detected_layer() const {
  if (members_.empty()) return *this;
  const unsigned r = popcount(members_.front());
  for (VertexSet x : members_)
    if (popcount(x) != r) return *this;
  return with_layer(r);
}

ProfileFamily::ProfileFamily(unsigned n, unsigned m) : n_(n), m_(m) {
  if (m > n) throw std::invalid_argument("ProfileFamily: split m > n");
  on_.assign(static_cast<std::size_t>(m_ + 1) * (n_ - m_ + 1), 0);
}

unsigned ProfileFamily::index(unsigned a, unsigned b) const {
  if (a > m_ || b > n_ - m_)
    throw std::invalid_argument("ProfileFamily: cell outside feasible grid");
  return a * (n_ - m_ + 1) + b;
}

bool ProfileFamily::is_on(unsigned a, unsigned b) const { return on_[index(a, b)] != 0; }

void ProfileFamily::set(unsigned a, unsigned b, bool on) { on_[index(a, b)] = on ? 1 : 0; }

std::vector<ProfileFamily::Cell> ProfileFamily::cells() const {
  std::vector<Cell> out;
  for (unsigned a = 0; a <= m_; ++a)
    for (unsigned b = 0; b <= n_ - m_; ++b)
      if (on_[a * (n_ - m_ + 1) + b]) out.emplace_back(a, b);
  return out;
}

Natural ProfileFamily::cell_capacity(unsigned a, unsigned b) const {
  index(a, b);  // bounds check
  return binom(m_, a) * binom(n_ - m_, b);
}

Natural ProfileFamily::size() const {
  Natural total = 0;
  const auto& rowY = binom_row(m_);
  const auto& rowZ = binom_row(n_ - m_);
  for (unsigned a = 0; a <= m_; ++a)
    for (unsigned b = 0; b <= n_ - m_; ++b)
      if (on_[a * (n_ - m_ + 1) + b]) total += rowY[a] * rowZ[b];
  return total;
}

bool ProfileFamily::empty() const {
  for (auto v : on_)
    if (v) return false;
  return true;
}

std::optional<unsigned> ProfileFamily::max_weight() const {
  std::optional<unsigned> best;
  for (unsigned a = 0; a <= m_; ++a)
    for (unsigned b = 0; b <= n_ - m_; ++b)
      if (on_[a * (n_ - m_ + 1) + b] && (!best || a + b > *best)) best = a + b;
  return best;
}

std::optional<unsigned> ProfileFamily::uniform_weight() const {
  std::optional<unsigned> w;
  for (unsigned a = 0; a <= m_; ++a)
    for (unsigned b = 0; b <= n_ - m_; ++b)
      if (on_[a * (n_ - m_ + 1) + b]) {
        if (!w)
          w = a + b;
        else if (*w != a + b)
          return std::nullopt;
      }
  return w;
}

PaddedProfileFamily::PaddedProfileFamily(ProfileFamily base,
                                         std::optional<ProfileFamily::Cell> cut_cell,
                                         Natural taken)
    : base_(std::move(base)), cut_(cut_cell), taken_(std::move(taken)) {
  if (sgn(taken_) == 0) cut_ = std::nullopt;
  if (!cut_) {
    taken_ = 0;
    return;
  }
  const auto [a, b] = *cut_;
  if (base_.is_on(a, b))
    throw std::invalid_argument("PaddedProfileFamily: cut cell already in base");
  if (sgn(taken_) < 0 || taken_ > base_.cell_capacity(a, b))
    throw std::invalid_argument("PaddedProfileFamily: taken outside [0, cell capacity]");
}

Natural PaddedProfileFamily::size() const { return base_.size() + taken_; }

NotProfileSymmetric::NotProfileSymmetric(unsigned a_, unsigned b_, Natural present_,
                                         Natural capacity_)
    : std::runtime_error("family is not profile-symmetric: cell (" + std::to_string(a_) +
                         "," + std::to_string(b_) + ") holds " + present_.get_str() +
                         " of " + capacity_.get_str() + " members"),
      a(a_), b(b_), present(std::move(present_)), capacity(std::move(capacity_)) {}

Natural family_size(const ExplicitFamily& f) { return Natural(static_cast<unsigned long>(f.size())); }
Natural family_size(const ProfileFamily& f) { return f.size(); }
Natural family_size(const PaddedProfileFamily& f) { return f.size(); }

namespace {

// members of cell (a,b) in increasing numeric order: low m bits choose from Y,
// high n-m bits from the complement
void emit_cell_members(unsigned n, unsigned m, unsigned a, unsigned b,
                       std::vector<VertexSet>& out) {
  (void)n;
  bits::for_each_combination(m, a, [&](std::uint64_t lo) {
    bits::for_each_combination(n - m, b, [&](std::uint64_t hi) {
      out.push_back(static_cast<VertexSet>(lo | (hi << m)));
    });
  });
}

}  // namespace

ExplicitFamily expand_profile(const ProfileFamily& p) {
  if (p.n() > ExplicitFamily::kMaxN)
    throw std::invalid_argument("expand_profile: ambient too large for explicit form");
  std::vector<VertexSet> out;
  for (auto [a, b] : p.cells()) emit_cell_members(p.n(), p.m(), a, b, out);
  ExplicitFamily f(p.n(), std::move(out));
  if (auto w = p.uniform_weight()) return f.with_layer(*w);
  return f;
}

ExplicitFamily expand_padded(const PaddedProfileFamily& p) {
  ExplicitFamily base = expand_profile(p.base());
  if (!p.cut_cell()) return base;
  const auto [a, b] = *p.cut_cell();
  if (!p.taken().fits_ulong_p())
    throw std::invalid_argument("expand_padded: cut count too large for explicit form");
  std::vector<VertexSet> members = base.members();
  std::vector<VertexSet> cell;
  emit_cell_members(p.base().n(), p.base().m(), a, b, cell);
  std::sort(cell.begin(), cell.end());
  const unsigned long take = p.taken().get_ui();
  members.insert(members.end(), cell.begin(), cell.begin() + take);
  return ExplicitFamily(p.base().n(), std::move(members));
}

ProfileFamily profile_of(const ExplicitFamily& f, unsigned m) {
  if (m > f.n()) throw std::invalid_argument("profile_of: split m > n");
  const unsigned n = f.n();
  const VertexSet ymask = (m == 32) ? ~VertexSet(0) : ((VertexSet(1) << m) - 1);
  std::vector<Natural> counts(static_cast<std::size_t>(m + 1) * (n - m + 1));
  for (VertexSet x : f.members()) {
    const unsigned a = popcount(x & ymask);
    const unsigned b = popcount(x) - a;
    counts[a * (n - m + 1) + b] += 1;
  }
  ProfileFamily p(n, m);
  for (unsigned a = 0; a <= m; ++a)
    for (unsigned b = 0; b <= n - m; ++b) {
      const Natural& have = counts[a * (n - m + 1) + b];
      if (sgn(have) == 0) continue;
      Natural cap = p.cell_capacity(a, b);
      if (have != cap) throw NotProfileSymmetric(a, b, have, cap);
      p.set(a, b);
    }
  return p;
}

namespace bits {

std::uint64_t next_combination(std::uint64_t v) {
  const std::uint64_t u = v & (~v + 1);
  const std::uint64_t w = v + u;
  if (w == 0) return ~std::uint64_t(0);  // overflow: caller's limit check stops
  return w | (((v ^ w) / u) >> 2);
}

}  // namespace bits

}  // namespace isoball
