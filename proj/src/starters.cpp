#include "irrdom/starters.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "irrdom/errors.hpp"

namespace irrdom {

Starter Starter::normalized() const {
  Starter out{n, pairs};
  for (auto& [x, y] : out.pairs)
    if (x < y) std::swap(x, y);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::string_view to_string(StarterClass c) {
  switch (c) {
    case StarterClass::invalid: return "invalid";
    case StarterClass::starter: return "starter";
    case StarterClass::strong: return "strong";
    case StarterClass::skew: return "skew";
  }
  return "?";
}

std::optional<StarterClass> starter_class_from_string(std::string_view s) {
  for (auto c : {StarterClass::invalid, StarterClass::starter, StarterClass::strong, StarterClass::skew})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

namespace {

void require_odd(std::uint32_t n) {
  if (n % 2 == 0) throw ParameterError("starters are defined for odd n, got " + std::to_string(n));
}

// {d, -d} is identified by min(d, n - d).
std::uint32_t signed_class(std::uint64_t value, std::uint32_t n) {
  auto v = static_cast<std::uint32_t>(value % n);
  return std::min(v, n - v);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * m) >> 64);
}

}  // namespace

StarterClass classify(const Starter& s) {
  require_odd(s.n);
  const std::uint32_t n = s.n;
  if (n < 3 || s.pairs.size() != (n - 1) / 2) return StarterClass::invalid;
  std::vector<char> seen(n, 0), diff(n, 0), sum(n, 0), sum_class(n, 0);
  bool strong = true, skew = true;
  for (auto [x, y] : s.pairs) {
    if (x == 0 || y == 0 || x >= n || y >= n || x == y || seen[x] || seen[y]) return StarterClass::invalid;
    seen[x] = seen[y] = 1;
    auto d = signed_class(std::uint64_t{x} + n - y, n);
    if (diff[d]) return StarterClass::invalid;
    diff[d] = 1;
    auto total = (std::uint64_t{x} + y) % n;
    if (total == 0 || sum[total]) strong = false;
    if (total != 0) sum[total] = 1;
    auto sc = signed_class(total, n);
    if (sc == 0 || sum_class[sc]) skew = false;
    sum_class[sc] = 1;
  }
  if (!strong) return StarterClass::starter;
  return skew ? StarterClass::skew : StarterClass::strong;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool generator = std::all_of(factors.begin(), factors.end(),
                                 [&](std::uint64_t q) { return mod_pow(g, (p - 1) / q, p) != 1; });
    if (generator) return g;
  }
  throw std::logic_error("no primitive root found");
}

Starter mullin_nemeth(std::uint32_t p) {
  if (!is_prime(p)) throw ParameterError("mullin_nemeth: " + std::to_string(p) + " is not prime");
  if (p == 2) throw ParameterError("mullin_nemeth: p must be odd");
  std::uint32_t two_power = 1, t = p - 1;
  while (t % 2 == 0) {
    t /= 2;
    two_power *= 2;
  }
  if (t <= 1)
    throw ParameterError("mullin_nemeth: p - 1 = 2^k t needs odd t > 1, but " + std::to_string(p) +
                         " = 2^k + 1");
  const std::uint64_t g = smallest_primitive_root(p);
  const std::uint32_t half = two_power / 2;
  const std::uint64_t w = mod_pow(g, half, p);
  Starter s{p, {}};
  std::uint64_t a = 1;
  for (std::uint32_t j = 0; j + 1 < p; ++j, a = a * g % p)
    if (j % two_power < half) s.pairs.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a * w % p));
  if (classify(s) < StarterClass::strong)
    throw std::logic_error("mullin_nemeth: construction for p = " + std::to_string(p) + " failed validation");
  return s;
}

namespace {

// Partial starter with O(1) conflict lookup. Pairs are slots indexed by the
// stored element `a`; owners hold a+1 so that 0 means free.
class ClimbState {
 public:
  ClimbState(std::uint32_t n, bool skew) : n_(n), skew_(skew) { clear(); }

  void clear() {
    partner_.assign(n_, 0);
    diff_owner_.assign(n_, 0);
    sum_owner_.assign(n_, 0);
    free_elems_.clear();
    elem_pos_.assign(n_, 0);
    for (std::uint32_t x = 1; x < n_; ++x) {
      elem_pos_[x] = free_elems_.size();
      free_elems_.push_back(x);
    }
    free_diffs_.clear();
    diff_pos_.assign(n_, 0);
    free_sums_.clear();
    sum_pos_.assign(n_, 0);
    for (std::uint32_t d = 1; d <= (n_ - 1) / 2; ++d) {
      diff_pos_[d] = free_diffs_.size();
      free_diffs_.push_back(d);
      sum_pos_[d] = free_sums_.size();
      free_sums_.push_back(d);
    }
    size_ = 0;
  }

  std::size_t size() const { return size_; }
  bool complete() const { return size_ == (n_ - 1) / 2; }

  // One attempted move; returns false if rejected.
  bool step(std::mt19937_64& rng) {
    if (skew_ && bounded(rng, 2)) return step_by_sum(rng);
    const std::uint32_t x = free_elems_[bounded(rng, free_elems_.size())];
    const std::uint32_t d = free_diffs_[bounded(rng, free_diffs_.size())];
    const std::uint32_t up = (x + d) % n_, down = (x + n_ - d) % n_;
    std::uint32_t y = bounded(rng, 2) ? up : down;
    if (y == 0) y = up == 0 ? down : up;
    const std::uint32_t total = (x + y) % n_;
    if (total == 0) return false;
    const std::uint32_t key = sum_key(total);

    const std::uint32_t pair_of_y = partner_[y] ? owner_of(y) : 0;
    const std::uint32_t sum_pair = sum_owner_[key];
    if (pair_of_y && sum_pair && pair_of_y != sum_pair) return false;
    if (pair_of_y) remove(pair_of_y - 1);
    if (sum_pair && sum_pair != pair_of_y) remove(sum_pair - 1);
    add(x, y);
    return true;
  }

  // Skew sums are a perfect system like the differences: pick a free
  // difference class and a free sum class and solve for the pair.
  bool step_by_sum(std::mt19937_64& rng) {
    const std::uint32_t d = free_diffs_[bounded(rng, free_diffs_.size())];
    const std::uint32_t c = free_sums_[bounded(rng, free_sums_.size())];
    const std::uint64_t half = (n_ + 1) / 2;  // inverse of 2
    const std::uint64_t sd = bounded(rng, 2) ? d : n_ - d;
    const std::uint64_t sc = bounded(rng, 2) ? c : n_ - c;
    const auto x = static_cast<std::uint32_t>((sc + sd) % n_ * half % n_);
    const auto y = static_cast<std::uint32_t>((sc + n_ - sd) % n_ * half % n_);
    if (x == 0 || y == 0) return false;
    const std::uint32_t px = partner_[x] ? owner_of(x) : 0;
    const std::uint32_t py = partner_[y] ? owner_of(y) : 0;
    if (px && py && px != py) return false;
    if (px) remove(px - 1);
    if (py && py != px) remove(py - 1);
    add(x, y);
    return true;
  }

  Starter to_starter() const {
    Starter s{n_, {}};
    for (std::uint32_t a = 1; a < n_; ++a)
      if (partner_[a] && a < partner_[a]) s.pairs.emplace_back(a, partner_[a]);
    return s;
  }

 private:
  std::uint32_t sum_key(std::uint32_t total) const { return skew_ ? signed_class(total, n_) : total; }
  // Slot id of the pair containing x: its smaller element.
  std::uint32_t owner_of(std::uint32_t x) const { return std::min(x, partner_[x]) + 1; }

  void take(std::vector<std::uint32_t>& pool, std::vector<std::size_t>& pos, std::uint32_t v) {
    std::size_t i = pos[v];
    pool[i] = pool.back();
    pos[pool[i]] = i;
    pool.pop_back();
  }
  void give(std::vector<std::uint32_t>& pool, std::vector<std::size_t>& pos, std::uint32_t v) {
    pos[v] = pool.size();
    pool.push_back(v);
  }

  void add(std::uint32_t x, std::uint32_t y) {
    const std::uint32_t a = std::min(x, y);
    partner_[x] = y;
    partner_[y] = x;
    take(free_elems_, elem_pos_, x);
    take(free_elems_, elem_pos_, y);
    const std::uint32_t d = signed_class(std::uint64_t{x} + n_ - y, n_);
    diff_owner_[d] = a + 1;
    take(free_diffs_, diff_pos_, d);
    const std::uint32_t key = sum_key((x + y) % n_);
    sum_owner_[key] = a + 1;
    if (skew_) take(free_sums_, sum_pos_, key);
    ++size_;
  }

  void remove(std::uint32_t a) {
    const std::uint32_t b = partner_[a];
    partner_[a] = partner_[b] = 0;
    give(free_elems_, elem_pos_, a);
    give(free_elems_, elem_pos_, b);
    const std::uint32_t d = signed_class(std::uint64_t{a} + n_ - b, n_);
    diff_owner_[d] = 0;
    give(free_diffs_, diff_pos_, d);
    const std::uint32_t key = sum_key((a + b) % n_);
    sum_owner_[key] = 0;
    if (skew_) give(free_sums_, sum_pos_, key);
    --size_;
  }

  std::uint32_t n_;
  bool skew_;
  std::vector<std::uint32_t> partner_;
  std::vector<std::uint32_t> diff_owner_;
  std::vector<std::uint32_t> sum_owner_;
  std::vector<std::uint32_t> free_elems_;
  std::vector<std::size_t> elem_pos_;
  std::vector<std::uint32_t> free_diffs_;
  std::vector<std::size_t> diff_pos_;
  std::vector<std::uint32_t> free_sums_;  // skew only
  std::vector<std::size_t> sum_pos_;
  std::size_t size_ = 0;
};

}  // namespace

std::optional<Starter> hill_climb(std::uint32_t n, StarterClass target, std::uint64_t seed, std::uint64_t budget) {
  require_odd(n);
  if (n < 3) throw ParameterError("hill_climb: n must be at least 3");
  if (target < StarterClass::strong)
    throw ParameterError("hill_climb: target must be strong or skew");
  std::mt19937_64 rng(seed);
  ClimbState state(n, target == StarterClass::skew);
  // Restart when the best size has not improved for this many moves.
  const std::uint64_t stall_limit = (target == StarterClass::skew ? 1ull : 20ull) * n * n;
  std::size_t best = 0;
  std::uint64_t since_best = 0;
  for (std::uint64_t it = 0; it < budget; ++it) {
    state.step(rng);
    if (state.complete()) {
      Starter s = state.to_starter();
      if (classify(s) >= target) return s;
      throw std::logic_error("hill_climb produced an unvalidated starter");
    }
    if (state.size() > best) {
      best = state.size();
      since_best = 0;
    } else if (++since_best > stall_limit) {
      state.clear();
      best = 0;
      since_best = 0;
    }
  }
  return std::nullopt;
}

std::optional<Starter> hill_climb_race(std::uint32_t n, StarterClass target, std::span<const std::uint64_t> seeds,
                                       std::uint64_t budget, unsigned workers) {
  require_odd(n);
  std::vector<std::optional<Starter>> found(seeds.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{seeds.size()};
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < seeds.size(); i = next.fetch_add(1)) {
      if (i > best.load()) break;
      found[i] = hill_climb(n, target, seeds[i], budget);
      if (found[i]) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < std::max(1u, workers); ++w) pool.emplace_back(run);
    run();
  }
  if (best.load() < seeds.size()) return found[best.load()];
  return std::nullopt;
}

namespace {

class PairingSearch {
 public:
  PairingSearch(std::uint32_t n, StarterClass target)
      : n_(n), target_(target), partner_(n, 0), diff_(n, 0), sum_(n, 0) {}

  std::optional<Starter> run() {
    if (dfs()) {
      Starter s{n_, {}};
      for (std::uint32_t a = 1; a < n_; ++a)
        if (a < partner_[a]) s.pairs.emplace_back(a, partner_[a]);
      return s;
    }
    return std::nullopt;
  }

 private:
  bool dfs() {
    std::uint32_t x = 1;
    while (x < n_ && partner_[x]) ++x;
    if (x == n_) return true;
    for (std::uint32_t y = x + 1; y < n_; ++y) {
      if (partner_[y]) continue;
      const std::uint32_t d = signed_class(std::uint64_t{y} + n_ - x, n_);
      if (diff_[d]) continue;
      const std::uint32_t total = (x + y) % n_;
      std::uint32_t key = 0;
      if (target_ >= StarterClass::strong) {
        if (total == 0) continue;
        key = target_ == StarterClass::skew ? signed_class(total, n_) : total;
        if (sum_[key]) continue;
        sum_[key] = 1;
      }
      partner_[x] = y;
      partner_[y] = x;
      diff_[d] = 1;
      if (dfs()) return true;
      partner_[x] = partner_[y] = 0;
      diff_[d] = 0;
      if (target_ >= StarterClass::strong) sum_[key] = 0;
    }
    return false;
  }

  std::uint32_t n_;
  StarterClass target_;
  std::vector<std::uint32_t> partner_;
  std::vector<char> diff_;
  std::vector<char> sum_;
};

}  // namespace

std::optional<Starter> exhaustive_starter_search(std::uint32_t n, StarterClass target) {
  require_odd(n);
  if (n < 3 || n > kExhaustiveStarterMax)
    throw ParameterError("exhaustive_starter_search: n must lie in [3, " + std::to_string(kExhaustiveStarterMax) +
                         "], got " + std::to_string(n));
  if (target == StarterClass::invalid) throw ParameterError("exhaustive_starter_search: invalid target");
  auto s = PairingSearch(n, target).run();
  if (s && classify(*s) < target) throw std::logic_error("exhaustive_starter_search: witness failed validation");
  return s;
}

std::string format_starter(const Starter& s) {
  std::string out = "n=" + std::to_string(s.n) + ":";
  for (auto [x, y] : s.pairs) out += " {" + std::to_string(x) + "," + std::to_string(y) + "}";
  return out;
}

Starter parse_starter(std::string_view text) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("starter '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&]() -> std::uint32_t {
    skip_ws();
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw fail("expected a non-negative integer at offset " + std::to_string(i));
    i = static_cast<std::size_t>(ptr - text.data());
    return v;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) throw fail(std::string("expected '") + c + "'");
    ++i;
  };
  skip_ws();
  if (text.substr(i, 2) != "n=") throw fail("expected 'n=' prefix");
  i += 2;
  Starter s{read_uint(), {}};
  expect(':');
  for (skip_ws(); i < text.size(); skip_ws()) {
    expect('{');
    std::uint32_t x = read_uint();
    expect(',');
    std::uint32_t y = read_uint();
    expect('}');
    s.pairs.emplace_back(x, y);
  }
  return s;
}

}  // namespace irrdom
