#include "coarsekit/groups.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coarse {

FiniteSubset make_subset(std::vector<GroupElement> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

namespace detail {

class GroupModel {
 public:
  virtual ~GroupModel() = default;
  virtual GroupKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement invert(const GroupElement& a) const = 0;
  virtual bool is_canonical(const GroupElement& a) const = 0;
  virtual std::string format(const GroupElement& a) const = 0;
  virtual GroupElement parse(std::string_view text) const = 0;

  std::vector<GroupElement> generators;
};

}  // namespace detail

namespace {

using detail::GroupModel;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("group arithmetic overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw std::overflow_error("group arithmetic overflow");
  return -a;
}

std::int64_t checked_shl(std::int64_t a, std::int64_t k) {
  if (a == 0) return 0;
  if (k >= 62) throw std::overflow_error("group arithmetic overflow");
  std::int64_t r;
  if (__builtin_mul_overflow(a, std::int64_t{1} << k, &r)) {
    throw std::overflow_error("group arithmetic overflow");
  }
  return r;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) {
    throw PreconditionError("cannot parse integer '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

class ZnModel final : public GroupModel {
 public:
  explicit ZnModel(std::size_t rank) : rank_(rank) {
    for (std::size_t i = 0; i < rank; ++i) {
      GroupElement e{std::vector<std::int64_t>(rank, 0)};
      e.payload[i] = 1;
      generators.push_back(e);
    }
  }
  GroupKind kind() const override { return GroupKind::Zn; }
  std::string name() const override { return "Z^" + std::to_string(rank_); }
  GroupElement identity() const override { return {std::vector<std::int64_t>(rank_, 0)}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    GroupElement out{a.payload};
    for (std::size_t i = 0; i < rank_; ++i) out.payload[i] = checked_add(a.payload[i], b.payload[i]);
    return out;
  }
  GroupElement invert(const GroupElement& a) const override {
    GroupElement out{a.payload};
    for (auto& v : out.payload) v = checked_neg(v);
    return out;
  }
  bool is_canonical(const GroupElement& a) const override { return a.payload.size() == rank_; }
  std::string format(const GroupElement& a) const override {
    std::string out;
    for (std::size_t i = 0; i < a.payload.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(a.payload[i]);
    }
    return out;
  }
  GroupElement parse(std::string_view text) const override {
    GroupElement out;
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      out.payload.push_back(parse_int(trim(text.substr(start, comma - start))));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!is_canonical(out)) throw PreconditionError("Z^n element has wrong rank: " + std::string(text));
    return out;
  }

 private:
  std::size_t rank_;
};

// Letters are +-(i+1) for generator i; the payload is a freely reduced word.
class FreeModel final : public GroupModel {
 public:
  explicit FreeModel(std::size_t rank) : rank_(rank) {
    if (rank == 0 || rank > 26) throw PreconditionError("free group rank must be in 1..26");
    for (std::size_t i = 0; i < rank; ++i) {
      generators.push_back({{static_cast<std::int64_t>(i + 1)}});
    }
  }
  GroupKind kind() const override { return GroupKind::Free; }
  std::string name() const override { return "F" + std::to_string(rank_); }
  GroupElement identity() const override { return {}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    GroupElement out{a.payload};
    for (auto letter : b.payload) {
      if (!out.payload.empty() && out.payload.back() == -letter) {
        out.payload.pop_back();
      } else {
        out.payload.push_back(letter);
      }
    }
    return out;
  }
  GroupElement invert(const GroupElement& a) const override {
    GroupElement out;
    for (auto it = a.payload.rbegin(); it != a.payload.rend(); ++it) out.payload.push_back(-*it);
    return out;
  }
  bool is_canonical(const GroupElement& a) const override {
    const auto r = static_cast<std::int64_t>(rank_);
    for (std::size_t i = 0; i < a.payload.size(); ++i) {
      const auto l = a.payload[i];
      if (l == 0 || l > r || l < -r) return false;
      if (i > 0 && a.payload[i - 1] == -l) return false;
    }
    return true;
  }
  std::string format(const GroupElement& a) const override {
    if (a.payload.empty()) return "1";
    std::string out;
    for (auto l : a.payload) {
      out += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
    }
    return out;
  }
  GroupElement parse(std::string_view text) const override {
    text = trim(text);
    GroupElement out;
    if (text == "1" || text.empty()) return out;
    for (char c : text) {
      std::int64_t l = 0;
      if (c >= 'a' && c <= 'z') l = c - 'a' + 1;
      else if (c >= 'A' && c <= 'Z') l = -(c - 'A' + 1);
      if (l == 0 || l > static_cast<std::int64_t>(rank_) || -l > static_cast<std::int64_t>(rank_)) {
        throw PreconditionError("invalid free group letter in '" + std::string(text) + "'");
      }
      out = multiply(out, GroupElement{{l}});
    }
    return out;
  }

 private:
  std::size_t rank_;
};

// Payload [m, j, n]: the element (m / 2^j, n) with m odd whenever j > 0, and j = 0 when m = 0.
class BS12Model final : public GroupModel {
 public:
  BS12Model() {
    generators.push_back({{1, 0, 0}});  // a
    generators.push_back({{0, 0, 1}});  // t
  }
  GroupKind kind() const override { return GroupKind::BS12; }
  std::string name() const override { return "BS(1,2)"; }
  GroupElement identity() const override { return {{0, 0, 0}}; }

  static GroupElement normalize(std::int64_t m, std::int64_t j, std::int64_t n) {
    if (m == 0) return {{0, 0, n}};
    while (j > 0 && (m % 2 == 0)) {
      m /= 2;
      --j;
    }
    return {{m, j, n}};
  }
  // value * 2^k as (numerator, exponent), unnormalized.
  static std::pair<std::int64_t, std::int64_t> scale(std::int64_t m, std::int64_t j, std::int64_t k) {
    if (k >= 0) {
      if (j >= k) return {m, j - k};
      return {checked_shl(m, k - j), 0};
    }
    return {m, checked_add(j, -k)};
  }
  static std::pair<std::int64_t, std::int64_t> add(std::int64_t m1, std::int64_t j1, std::int64_t m2,
                                                   std::int64_t j2) {
    const auto j = std::max(j1, j2);
    return {checked_add(checked_shl(m1, j - j1), checked_shl(m2, j - j2)), j};
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    const auto [m2, j2] = scale(b.payload[0], b.payload[1], a.payload[2]);
    const auto [m, j] = add(a.payload[0], a.payload[1], m2, j2);
    return normalize(m, j, checked_add(a.payload[2], b.payload[2]));
  }
  GroupElement invert(const GroupElement& a) const override {
    // (q, n)^-1 = (-2^-n q, -n)
    const auto [m, j] = scale(checked_neg(a.payload[0]), a.payload[1], checked_neg(a.payload[2]));
    return normalize(m, j, checked_neg(a.payload[2]));
  }
  bool is_canonical(const GroupElement& a) const override {
    if (a.payload.size() != 3) return false;
    const auto m = a.payload[0];
    const auto j = a.payload[1];
    if (j < 0) return false;
    if (m == 0) return j == 0;
    return j == 0 || (m % 2 != 0);
  }
  std::string format(const GroupElement& a) const override {
    std::string out = std::to_string(a.payload[0]);
    if (a.payload[1] != 0) out += "/2^" + std::to_string(a.payload[1]);
    return out + "|" + std::to_string(a.payload[2]);
  }
  GroupElement parse(std::string_view text) const override {
    text = trim(text);
    const auto bar = text.find('|');
    if (bar == std::string_view::npos) {
      throw PreconditionError("BS(1,2) element must look like m/2^j|n: '" + std::string(text) + "'");
    }
    auto q = trim(text.substr(0, bar));
    const auto n = parse_int(trim(text.substr(bar + 1)));
    std::int64_t m = 0;
    std::int64_t j = 0;
    const auto slash = q.find('/');
    if (slash == std::string_view::npos) {
      m = parse_int(q);
    } else {
      m = parse_int(trim(q.substr(0, slash)));
      auto den = trim(q.substr(slash + 1));
      if (den.substr(0, 2) != "2^") throw PreconditionError("BS(1,2) denominator must be 2^j");
      j = parse_int(den.substr(2));
      if (j < 0) throw PreconditionError("BS(1,2) exponent must be nonnegative");
    }
    return normalize(m, j, n);
  }
};

class TableModel final : public GroupModel {
 public:
  TableModel(std::vector<std::vector<std::size_t>> mul, std::optional<std::vector<std::size_t>> gens)
      : mul_(std::move(mul)) {
    const auto k = mul_.size();
    if (k == 0) throw PreconditionError("group table must be nonempty");
    for (const auto& row : mul_) {
      if (row.size() != k) throw PreconditionError("group table must be square");
      for (auto v : row) {
        if (v >= k) throw PreconditionError("group table entry out of range");
      }
    }
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < k && !e; ++i) {
      bool ok = true;
      for (std::size_t x = 0; x < k && ok; ++x) ok = mul_[i][x] == x && mul_[x][i] == x;
      if (ok) e = i;
    }
    if (!e) throw PreconditionError("group table has no identity");
    identity_ = *e;
    inverse_.assign(k, k);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        if (mul_[x][y] == identity_ && mul_[y][x] == identity_) inverse_[x] = y;
      }
      if (inverse_[x] == k) throw PreconditionError("group table element without inverse");
    }
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        for (std::size_t z = 0; z < k; ++z) {
          if (mul_[mul_[x][y]][z] != mul_[x][mul_[y][z]]) {
            throw PreconditionError("group table is not associative");
          }
        }
      }
    }
    if (gens) {
      for (auto g : *gens) {
        if (g >= k) throw PreconditionError("table generator out of range");
        if (g == identity_) throw PreconditionError("generators must exclude the identity");
        generators.push_back({{static_cast<std::int64_t>(g)}});
      }
    } else {
      for (std::size_t x = 0; x < k; ++x) {
        if (x != identity_) generators.push_back({{static_cast<std::int64_t>(x)}});
      }
    }
  }
  GroupKind kind() const override { return GroupKind::Table; }
  std::string name() const override { return "table(" + std::to_string(mul_.size()) + ")"; }
  GroupElement identity() const override { return {{static_cast<std::int64_t>(identity_)}}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    return {{static_cast<std::int64_t>(mul_[index(a)][index(b)])}};
  }
  GroupElement invert(const GroupElement& a) const override {
    return {{static_cast<std::int64_t>(inverse_[index(a)])}};
  }
  bool is_canonical(const GroupElement& a) const override {
    return a.payload.size() == 1 && a.payload[0] >= 0 &&
           static_cast<std::size_t>(a.payload[0]) < mul_.size();
  }
  std::string format(const GroupElement& a) const override { return std::to_string(a.payload[0]); }
  GroupElement parse(std::string_view text) const override {
    GroupElement out{{parse_int(trim(text))}};
    if (!is_canonical(out)) throw PreconditionError("table element out of range");
    return out;
  }

 private:
  std::size_t index(const GroupElement& a) const {
    if (!is_canonical(a)) throw PreconditionError("not an element of this table group");
    return static_cast<std::size_t>(a.payload[0]);
  }
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

}  // namespace

GroupOracle::GroupOracle(std::shared_ptr<const detail::GroupModel> model) : model_(std::move(model)) {}

GroupOracle GroupOracle::zn(std::size_t rank) {
  if (rank == 0) throw PreconditionError("Z^n requires n >= 1");
  return GroupOracle(std::make_shared<ZnModel>(rank));
}
GroupOracle GroupOracle::free_group(std::size_t rank) {
  return GroupOracle(std::make_shared<FreeModel>(rank));
}
GroupOracle GroupOracle::bs12() { return GroupOracle(std::make_shared<BS12Model>()); }
GroupOracle GroupOracle::table(std::vector<std::vector<std::size_t>> mul,
                               std::optional<std::vector<std::size_t>> generators) {
  return GroupOracle(std::make_shared<TableModel>(std::move(mul), std::move(generators)));
}

GroupKind GroupOracle::kind() const { return model_->kind(); }
std::string GroupOracle::name() const { return model_->name(); }
GroupElement GroupOracle::identity() const { return model_->identity(); }
GroupElement GroupOracle::multiply(const GroupElement& a, const GroupElement& b) const {
  return model_->multiply(a, b);
}
GroupElement GroupOracle::invert(const GroupElement& a) const { return model_->invert(a); }
const std::vector<GroupElement>& GroupOracle::generators() const { return model_->generators; }
bool GroupOracle::is_canonical(const GroupElement& a) const { return model_->is_canonical(a); }
std::string GroupOracle::format(const GroupElement& a) const { return model_->format(a); }
GroupElement GroupOracle::parse(std::string_view text) const { return model_->parse(text); }

GroupElement GroupOracle::multiply_all(std::initializer_list<GroupElement> factors) const {
  GroupElement out = identity();
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

GroupElement GroupOracle::power(const GroupElement& a, std::int64_t k) const {
  GroupElement base = k < 0 ? invert(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  GroupElement out = identity();
  while (e > 0) {
    if (e & 1U) out = multiply(out, base);
    e >>= 1U;
    if (e > 0) base = multiply(base, base);
  }
  return out;
}

// Set arithmetic

FiniteSubset left_translate(const GroupOracle& g, const GroupElement& x, const FiniteSubset& f) {
  std::vector<GroupElement> out;
  out.reserve(f.size());
  for (const auto& e : f) out.push_back(g.multiply(x, e));
  return make_subset(std::move(out));
}

FiniteSubset right_translate(const GroupOracle& g, const FiniteSubset& f, const GroupElement& x) {
  std::vector<GroupElement> out;
  out.reserve(f.size());
  for (const auto& e : f) out.push_back(g.multiply(e, x));
  return make_subset(std::move(out));
}

FiniteSubset inverse_set(const GroupOracle& g, const FiniteSubset& f) {
  std::vector<GroupElement> out;
  for (const auto& e : f) out.push_back(g.invert(e));
  return make_subset(std::move(out));
}

FiniteSubset product_set(const GroupOracle& g, const FiniteSubset& a, const FiniteSubset& b) {
  std::vector<GroupElement> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(g.multiply(x, y));
  }
  return make_subset(std::move(out));
}

FiniteSubset symmetrize(const GroupOracle& g, const FiniteSubset& f) {
  auto out = f;
  const auto inv = inverse_set(g, f);
  out.insert(out.end(), inv.begin(), inv.end());
  return make_subset(std::move(out));
}

FiniteSubset word_ball(const GroupOracle& g, std::size_t radius) {
  std::vector<GroupElement> steps;
  for (const auto& s : g.generators()) {
    steps.push_back(s);
    steps.push_back(g.invert(s));
  }
  std::set<GroupElement> seen{g.identity()};
  std::vector<GroupElement> frontier{g.identity()};
  for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& s : steps) {
        auto y = g.multiply(x, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Shift structures

std::vector<FiniteSubset> left_shift_family(const GroupOracle& g, const FiniteSubset& f,
                                            const std::vector<GroupElement>& basepoints) {
  std::vector<FiniteSubset> out;
  out.reserve(basepoints.size());
  for (const auto& x : basepoints) out.push_back(left_translate(g, x, f));
  return out;
}

std::vector<FiniteSubset> right_shift_family(const GroupOracle& g, const FiniteSubset& f,
                                             const std::vector<GroupElement>& basepoints) {
  std::vector<FiniteSubset> out;
  out.reserve(basepoints.size());
  for (const auto& x : basepoints) out.push_back(right_translate(g, f, x));
  return out;
}

FiniteSubset left_witness(const GroupOracle& g, const std::vector<FiniteSubset>& members) {
  std::vector<GroupElement> out;
  for (const auto& b : members) {
    if (b.empty()) throw PreconditionError("left_witness: members must be nonempty");
    const auto least = *std::min_element(b.begin(), b.end());
    const auto shifted = left_translate(g, g.invert(least), b);
    out.insert(out.end(), shifted.begin(), shifted.end());
  }
  return make_subset(std::move(out));
}

CoverCertificate cover_certificate(const GroupOracle& g, const GroupElement& x,
                                   const FiniteSubset& e, const FiniteSubset& f) {
  CoverCertificate cert{x, {}, {}};
  const auto f_inv = inverse_set(g, f);
  bool first = true;
  for (const auto& ei : e) {
    auto candidates = right_translate(g, f_inv, g.multiply(x, ei));
    if (first) {
      cert.intersection = candidates;
      first = false;
    } else {
      FiniteSubset kept;
      std::set_intersection(cert.intersection.begin(), cert.intersection.end(), candidates.begin(),
                            candidates.end(), std::back_inserter(kept));
      cert.intersection = std::move(kept);
    }
    cert.candidates_per_e.emplace_back(ei, std::move(candidates));
  }
  return cert;
}

std::optional<GroupElement> shift_cover_search(const GroupOracle& g, const GroupElement& x,
                                               const FiniteSubset& e, const FiniteSubset& f) {
  if (e.empty() || f.empty()) throw PreconditionError("shift_cover_search: E and F must be nonempty");
  auto cert = cover_certificate(g, x, e, f);
  if (cert.intersection.empty()) return std::nullopt;
  return cert.intersection.front();
}

std::optional<GroupElement> divergence_search(const GroupOracle& g, const FiniteSubset& e,
                                              const FiniteSubset& f,
                                              const std::vector<GroupElement>& search_space) {
  for (const auto& x : search_space) {
    if (!shift_cover_search(g, x, e, f)) return x;
  }
  return std::nullopt;
}

std::vector<GroupElement> bs12_box(std::int64_t max_numerator, std::int64_t max_exponent,
                                   std::int64_t max_t) {
  std::vector<GroupElement> out;
  for (std::int64_t m = -max_numerator; m <= max_numerator; ++m) {
    for (std::int64_t j = 0; j <= max_exponent; ++j) {
      if (j > 0 && m % 2 == 0) continue;
      if (m == 0 && j > 0) continue;
      for (std::int64_t n = -max_t; n <= max_t; ++n) out.push_back({{m, j, n}});
    }
  }
  return make_subset(std::move(out));
}

std::vector<GroupElement> zn_box(std::size_t rank, std::int64_t radius) {
  std::vector<GroupElement> out;
  std::vector<std::int64_t> coords(rank, -radius);
  if (rank == 0) return out;
  while (true) {
    out.push_back({coords});
    std::size_t axis = rank;
    while (axis > 0) {
      --axis;
      if (coords[axis] < radius) {
        ++coords[axis];
        break;
      }
      coords[axis] = -radius;
      if (axis == 0) return make_subset(std::move(out));
    }
  }
}

GroupAxiomReport self_test(const GroupOracle& g, std::size_t trials, std::uint64_t seed,
                           std::size_t word_length) {
  std::mt19937_64 rng(seed);
  std::vector<GroupElement> steps;
  for (const auto& s : g.generators()) {
    steps.push_back(s);
    steps.push_back(g.invert(s));
  }
  auto random_element = [&] {
    GroupElement x = g.identity();
    if (steps.empty()) return x;
    const auto len = rng() % (word_length + 1);
    for (std::size_t i = 0; i < len; ++i) x = g.multiply(x, steps[rng() % steps.size()]);
    return x;
  };
  GroupAxiomReport report;
  const auto e = g.identity();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = random_element();
    const auto b = random_element();
    const auto c = random_element();
    ++report.trials;
    const auto ab = g.multiply(a, b);
    if (!g.is_canonical(a) || !g.is_canonical(ab)) ++report.canonical_failures;
    if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c))) ++report.associativity_failures;
    if (g.multiply(a, e) != a || g.multiply(e, a) != a) ++report.identity_failures;
    const auto ai = g.invert(a);
    if (g.multiply(a, ai) != e || g.multiply(ai, a) != e) ++report.inverse_failures;
  }
  return report;
}

// Actions

ActionOracle translation_action(const std::vector<std::size_t>& extents,
                                const std::vector<std::int64_t>& lower_corner) {
  if (extents.empty() || extents.size() != lower_corner.size()) {
    throw PreconditionError("translation_action: extents and corner must have equal nonzero rank");
  }
  const auto rank = extents.size();
  std::size_t n = 1;
  for (auto e : extents) n *= e;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (PointIndex p = 0; p < n; ++p) {
    std::vector<std::int64_t> c(rank);
    auto rest = p;
    for (std::size_t axis = rank; axis-- > 0;) {
      c[axis] = static_cast<std::int64_t>(rest % extents[axis]) + lower_corner[axis];
      rest /= extents[axis];
    }
    std::string label;
    for (std::size_t i = 0; i < rank; ++i) label += (i ? "," : "") + std::to_string(c[i]);
    labels.push_back(std::move(label));
  }
  const auto grid = grid_l1_metric(extents);
  ExtMetric space = ExtMetric::from_kernel(make_universe(std::move(labels)),
                                           [grid](PointIndex x, PointIndex y) { return grid(x, y); });
  auto act = [extents, rank](const GroupElement& g, PointIndex p) -> std::optional<PointIndex> {
    if (g.payload.size() != rank) return std::nullopt;
    std::vector<std::int64_t> c(rank);
    auto rest = p;
    for (std::size_t axis = rank; axis-- > 0;) {
      c[axis] = static_cast<std::int64_t>(rest % extents[axis]);
      rest /= extents[axis];
    }
    PointIndex out = 0;
    for (std::size_t axis = 0; axis < rank; ++axis) {
      const auto moved = c[axis] + g.payload[axis];
      if (moved < 0 || moved >= static_cast<std::int64_t>(extents[axis])) return std::nullopt;
      out = out * extents[axis] + static_cast<PointIndex>(moved);
    }
    return out;
  };
  return ActionOracle{GroupOracle::zn(rank), std::move(space), std::move(act)};
}

ActionOracle trivial_action(const GroupOracle& g, const ExtMetric& space) {
  return ActionOracle{g, space,
                      [](const GroupElement&, PointIndex p) -> std::optional<PointIndex> { return p; }};
}

std::vector<OrbitPoint> orbit_map(const ActionOracle& a, PointIndex x0,
                                  const std::vector<GroupElement>& elements) {
  if (x0 >= a.space.size()) throw PreconditionError("orbit_map: basepoint outside window");
  std::vector<OrbitPoint> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back({g, a.act(g, x0)});
  return out;
}

SvarcMilnorReport svarc_milnor_finiteness_check(const ActionOracle& a, PointIndex x0, double radius,
                                                const std::vector<GroupElement>& candidates) {
  if (x0 >= a.space.size()) throw PreconditionError("svarc_milnor_finiteness_check: basepoint outside window");
  SvarcMilnorReport report{PointSet(a.space.universe()), {}, false};
  report.orbit_ball.insert(x0);
  for (const auto& g : candidates) {
    const auto p = a.act(g, x0);
    if (!p) {
      report.boundary_truncated = true;
      continue;
    }
    if (a.space(*p, x0) <= radius) report.orbit_ball.insert(*p);
  }
  const auto u = report.orbit_ball.members();
  for (const auto& g : candidates) {
    bool hit = false;
    for (auto p : u) {
      const auto q = a.act(g, p);
      if (!q) {
        report.boundary_truncated = true;
        continue;
      }
      if (report.orbit_ball.contains(*q)) hit = true;
    }
    if (hit) report.hits.push_back(g);
  }
  return report;
}

Family pullback_family(const Universe& domain, const std::vector<PointIndex>& f,
                       const Family& family) {
  if (f.size() != domain->size()) {
    throw PreconditionError("pullback_family: map must be defined on every domain point");
  }
  const auto codomain_size = family.universe()->size();
  for (auto y : f) {
    if (y >= codomain_size) throw PreconditionError("pullback_family: map value outside codomain");
  }
  Family out(domain);
  for (const auto& c : family) {
    PointSet pre(domain);
    for (PointIndex x = 0; x < f.size(); ++x) {
      if (c.contains(f[x])) pre.insert(x);
    }
    out.push_back(std::move(pre));
  }
  return out;
}

}  // namespace coarse
