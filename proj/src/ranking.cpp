#include "swfcheck/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "swfcheck/errors.hpp"

namespace swf {

std::string candidate_name(int index) { return "c" + std::to_string(index + 1); }

int parse_candidate(std::string_view name, int k) {
  if (name.size() < 2 || name[0] != 'c')
    throw parse_error("bad candidate name '" + std::string(name) + "'");
  int value = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    char c = name[i];
    if (c < '0' || c > '9') throw parse_error("bad candidate name '" + std::string(name) + "'");
    value = value * 10 + (c - '0');
    if (value > 1000) throw parse_error("candidate index out of range: '" + std::string(name) + "'");
  }
  if (value < 1 || value > k)
    throw parse_error("candidate '" + std::string(name) + "' out of range for k=" + std::to_string(k));
  return value - 1;
}

namespace {

void require_bijection(const std::vector<int>& values, const char* what) {
  int k = int(values.size());
  std::vector<char> seen(k, 0);
  for (int v : values) {
    if (v < 0 || v >= k || seen[v]) throw std::invalid_argument(std::string(what) + " is not a bijection");
    seen[v] = 1;
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Ranking::Ranking(std::vector<int> rank_of) : rank_of_(std::move(rank_of)) {
  if (rank_of_.empty()) throw std::invalid_argument("empty ranking");
  require_bijection(rank_of_, "ranking");
}

Ranking Ranking::from_top_order(const std::vector<int>& top_down) {
  int k = int(top_down.size());
  require_bijection(top_down, "candidate list");
  std::vector<int> rank_of(k, 0);
  for (int pos = 0; pos < k; ++pos) rank_of[top_down[pos]] = k - 1 - pos;
  return Ranking(std::move(rank_of));
}

Ranking Ranking::parse(std::string_view text) {
  auto parts = split(text, '>');
  int k = int(parts.size());
  if (k < 1) throw parse_error("empty ranking string");
  std::vector<int> top_down;
  top_down.reserve(k);
  for (auto part : parts) top_down.push_back(parse_candidate(part, k));
  std::vector<char> seen(k, 0);
  for (int c : top_down) {
    if (seen[c]) throw parse_error("candidate repeated in ranking '" + std::string(text) + "'");
    seen[c] = 1;
  }
  return from_top_order(top_down);
}

int Ranking::gap(int i, int j) const {
  if (i == j) throw std::invalid_argument("gap requires two distinct candidates");
  return rank_of_[i] - rank_of_[j];
}

std::vector<int> Ranking::top_order() const {
  int n = k();
  std::vector<int> order(n);
  for (int c = 0; c < n; ++c) order[n - 1 - rank_of_[c]] = c;
  return order;
}

std::string Ranking::str() const {
  std::string out;
  auto order = top_order();
  for (size_t i = 0; i < order.size(); ++i) {
    if (i) out.push_back('>');
    out += candidate_name(order[i]);
  }
  return out;
}

WeakOrder::WeakOrder(std::vector<int> tier_of) : tier_of_(std::move(tier_of)) {
  if (tier_of_.empty()) throw std::invalid_argument("empty weak order");
  int t = *std::max_element(tier_of_.begin(), tier_of_.end()) + 1;
  std::vector<int> count(t, 0);
  for (int tier : tier_of_) {
    if (tier < 0) throw std::invalid_argument("negative tier index");
    ++count[tier];
  }
  for (int c : count)
    if (c == 0) throw std::invalid_argument("weak order with an empty tier");
  tiers_ = t;
}

WeakOrder WeakOrder::from_tiers(const std::vector<std::vector<int>>& tiers, int k) {
  std::vector<int> tier_of(k, -1);
  for (size_t t = 0; t < tiers.size(); ++t) {
    if (tiers[t].empty()) throw std::invalid_argument("empty tier");
    for (int c : tiers[t]) {
      if (c < 0 || c >= k || tier_of[c] != -1)
        throw std::invalid_argument("tiers do not partition the candidates");
      tier_of[c] = int(t);
    }
  }
  for (int t : tier_of)
    if (t == -1) throw std::invalid_argument("tiers do not cover all candidates");
  return WeakOrder(std::move(tier_of));
}

WeakOrder WeakOrder::single_tier(int k) { return WeakOrder(std::vector<int>(k, 0)); }

WeakOrder WeakOrder::parse(std::string_view text) {
  auto tier_parts = split(text, '>');
  int k = 0;
  for (auto part : tier_parts) k += int(split(part, '=').size());
  std::vector<std::vector<int>> tiers;
  for (auto part : tier_parts) {
    std::vector<int> tier;
    for (auto name : split(part, '=')) tier.push_back(parse_candidate(name, k));
    tiers.push_back(std::move(tier));
  }
  try {
    return from_tiers(tiers, k);
  } catch (const std::invalid_argument& e) {
    throw parse_error("bad weak order '" + std::string(text) + "': " + e.what());
  }
}

std::vector<std::vector<int>> WeakOrder::tiers() const {
  std::vector<std::vector<int>> out(tiers_);
  for (int c = 0; c < k(); ++c) out[tier_of_[c]].push_back(c);
  return out;
}

RelOutcome WeakOrder::rel(int i, int j) const {
  if (i == j) throw std::invalid_argument("rel requires two distinct candidates");
  if (tier_of_[i] < tier_of_[j]) return RelOutcome::W;
  if (tier_of_[i] > tier_of_[j]) return RelOutcome::L;
  return RelOutcome::T;
}

std::string WeakOrder::str() const {
  std::string out;
  auto ts = tiers();
  for (size_t t = 0; t < ts.size(); ++t) {
    if (t) out.push_back('>');
    for (size_t i = 0; i < ts[t].size(); ++i) {
      if (i) out.push_back('=');
      out += candidate_name(ts[t][i]);
    }
  }
  return out;
}

bool promotes(const Ranking& r2, const Ranking& r1, int j, int i) {
  if (i == j) throw std::invalid_argument("promotion requires two distinct candidates");
  if (r1.k() != r2.k()) throw std::invalid_argument("promotion across different candidate counts");
  int k = r1.k();
  // (iii) cj already above ci must stay above.
  if (r1.rank_of(j) > r1.rank_of(i) && !(r2.rank_of(j) > r2.rank_of(i))) return false;
  for (int c = 0; c < k; ++c) {
    if (c == i || c == j) continue;
    // (i) anyone above ci must stay above ci.
    if (r1.rank_of(c) > r1.rank_of(i) && !(r2.rank_of(c) > r2.rank_of(i))) return false;
    // (ii) anyone below cj must stay below cj.
    if (r1.rank_of(j) > r1.rank_of(c) && !(r2.rank_of(j) > r2.rank_of(c))) return false;
    // (iv) everyone else keeps their relative order.
    for (int d = 0; d < k; ++d) {
      if (d == i || d == j || d == c) continue;
      if ((r1.rank_of(c) > r1.rank_of(d)) != (r2.rank_of(c) > r2.rank_of(d))) return false;
    }
  }
  return true;
}

std::vector<Ranking> all_rankings(int k) {
  if (k < 2 || k > 8) throw guard_error("all_rankings supports 2 <= k <= 8, got " + std::to_string(k));
  std::vector<int> top(k);
  std::iota(top.begin(), top.end(), 0);
  std::vector<Ranking> out;
  do {
    out.push_back(Ranking::from_top_order(top));
  } while (std::next_permutation(top.begin(), top.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void weak_orders_rec(int k, unsigned remaining, std::vector<std::vector<int>>& tiers,
                     std::vector<WeakOrder>& out) {
  if (remaining == 0) {
    out.push_back(WeakOrder::from_tiers(tiers, k));
    return;
  }
  // Enumerate nonempty subsets of the remaining candidates as the next tier.
  for (unsigned sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
    std::vector<int> tier;
    for (int c = 0; c < k; ++c)
      if (sub & (1u << c)) tier.push_back(c);
    tiers.push_back(std::move(tier));
    weak_orders_rec(k, remaining & ~sub, tiers, out);
    tiers.pop_back();
  }
}

}  // namespace

std::vector<WeakOrder> all_weak_orders(int k) {
  if (k < 1 || k > 6) throw guard_error("all_weak_orders supports 1 <= k <= 6, got " + std::to_string(k));
  std::vector<std::vector<int>> tiers;
  std::vector<WeakOrder> out;
  weak_orders_rec(k, (1u << k) - 1, tiers, out);
  std::sort(out.begin(), out.end(), [](const WeakOrder& a, const WeakOrder& b) {
    return a.str() < b.str();
  });
  return out;
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Ranking apply_permutation(const std::vector<int>& rho, const Ranking& r) {
  int k = r.k();
  if (int(rho.size()) != k) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> rank_of(k);
  for (int c = 0; c < k; ++c) rank_of[rho[c]] = r.rank_of(c);
  return Ranking(std::move(rank_of));
}

WeakOrder apply_permutation(const std::vector<int>& rho, const WeakOrder& w) {
  int k = w.k();
  if (int(rho.size()) != k) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> tier_of(k);
  for (int c = 0; c < k; ++c) tier_of[rho[c]] = w.tier_of(c);
  return WeakOrder(std::move(tier_of));
}

}  // namespace swf
