#include "swfcheck/profile.hpp"

#include <stdexcept>

#include "swfcheck/errors.hpp"

namespace swf {

FiniteElection::FiniteElection(std::vector<Ranking> votes) : votes_(std::move(votes)) {
  if (votes_.empty()) throw std::invalid_argument("an election needs at least one voter");
  int k = votes_.front().k();
  for (const auto& r : votes_)
    if (r.k() != k) throw std::invalid_argument("election mixes candidate counts");
}

AnonymousProfile::AnonymousProfile(int k, std::map<Ranking, Rat> weights) : k_(k) {
  for (auto& [r, w] : weights) {
    if (r.k() != k_) throw std::invalid_argument("profile mixes candidate counts");
    if (w.sign() < 0) throw std::invalid_argument("negative profile weight");
    if (w.sign() > 0) weights_.emplace(r, w);
  }
}

Rat AnonymousProfile::weight(const Ranking& r) const {
  auto it = weights_.find(r);
  return it == weights_.end() ? Rat(0) : it->second;
}

Rat AnonymousProfile::total() const {
  Rat t;
  for (const auto& [r, w] : weights_) t += w;
  return t;
}

void AnonymousProfile::add(const Ranking& r, const Rat& w) {
  if (r.k() != k_) throw std::invalid_argument("profile mixes candidate counts");
  if (w.sign() < 0) throw std::invalid_argument("negative profile weight");
  if (w.is_zero()) return;
  auto [it, inserted] = weights_.emplace(r, w);
  if (!inserted) it->second += w;
}

RelativeProfile::RelativeProfile(int k) : k_(k), weight_(2 * k - 1) {
  if (k < 2) throw std::invalid_argument("relative profile needs k >= 2");
}

RelativeProfile RelativeProfile::from_alpha3(const std::vector<Rat>& coords) {
  if (coords.size() != 4) throw std::invalid_argument("expected 4 coordinates (a2, a1, a-1, a-2)");
  RelativeProfile a(3);
  a.set(2, coords[0]);
  a.set(1, coords[1]);
  a.set(-1, coords[2]);
  a.set(-2, coords[3]);
  return a;
}

int RelativeProfile::index(int gap) const {
  if (gap == 0 || gap <= -k_ || gap >= k_)
    throw std::invalid_argument("gap " + std::to_string(gap) + " out of range for k=" + std::to_string(k_));
  return gap + k_ - 1;
}

Rat RelativeProfile::weight(int gap) const { return weight_[index(gap)]; }

void RelativeProfile::set(int gap, const Rat& w) {
  if (w.sign() < 0) throw std::invalid_argument("negative relative weight");
  weight_[index(gap)] = w;
}

void RelativeProfile::add(int gap, const Rat& w) {
  if (w.sign() < 0) throw std::invalid_argument("negative relative weight");
  weight_[index(gap)] += w;
}

Rat RelativeProfile::total() const {
  Rat t;
  for (const auto& w : weight_) t += w;
  return t;
}

std::vector<Rat> RelativeProfile::coords() const {
  std::vector<Rat> out;
  for (int gap : gap_values()) out.push_back(weight(gap));
  return out;
}

std::vector<int> RelativeProfile::gap_values() const {
  std::vector<int> out;
  for (int gap = k_ - 1; gap >= 1 - k_; --gap)
    if (gap != 0) out.push_back(gap);
  return out;
}

AnonymousProfile tau(const FiniteElection& e) {
  AnonymousProfile p(e.k());
  for (const auto& r : e.votes()) p.add(r, Rat(1));
  return p;
}

AnonymousProfile normalize(const AnonymousProfile& p) {
  Rat t = p.total();
  if (t.sign() <= 0) throw std::invalid_argument("cannot normalize a zero-total profile");
  AnonymousProfile out(p.k());
  for (const auto& [r, w] : p.weights()) out.add(r, w / t);
  return out;
}

RelativeProfile normalize(const RelativeProfile& a) {
  Rat t = a.total();
  if (t.sign() <= 0) throw std::invalid_argument("cannot normalize a zero-total profile");
  RelativeProfile out(a.k());
  for (int gap : a.gap_values()) out.set(gap, a.weight(gap) / t);
  return out;
}

RelativeProfile project(const AnonymousProfile& p, int i, int j) {
  if (i == j) throw std::invalid_argument("projection requires distinct candidates");
  RelativeProfile a(p.k());
  for (const auto& [r, w] : p.weights()) a.add(r.gap(i, j), w);
  return a;
}

RelativeProfile rho(const RelativeProfile& a) {
  RelativeProfile out(a.k());
  for (int gap : a.gap_values()) out.set(-gap, a.weight(gap));
  return out;
}

bool majorizes(const RelativeProfile& a, const RelativeProfile& b) {
  if (a.k() != b.k()) throw std::invalid_argument("majorization across different k");
  if (a.total() != b.total())
    throw std::invalid_argument("majorization requires equal totals");
  Rat sum_a, sum_b;
  for (int gap : a.gap_values()) {
    sum_a += a.weight(gap);
    sum_b += b.weight(gap);
    if (sum_a < sum_b) return false;
  }
  return true;
}

bool promotes_elections(const FiniteElection& e2, const FiniteElection& e1, int j, int i) {
  if (e1.n() != e2.n()) throw std::invalid_argument("elections differ in voter count");
  for (int v = 0; v < e1.n(); ++v)
    if (!promotes(e2.vote(v), e1.vote(v), j, i)) return false;
  return true;
}

}  // namespace swf
