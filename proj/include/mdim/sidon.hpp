#pragma once

// Sidon sets of binary strings: all coordinatewise integer sums over
// unordered pairs of members are distinct. Digits are added as plain
// integers (0,1 -> 0,1,2), never with carries.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdim/bounds.hpp"
#include "mdim/rng.hpp"

namespace mdim {

struct SidonSet {
  int k = 0;
  std::vector<std::string> members;  // sorted, distinct, length-k over {0,1}
};

inline std::string digit_sum(const std::string& a, const std::string& b) {
  std::string s(a.size(), '0');
  for (std::size_t i = 0; i < a.size(); ++i)
    s[i] = static_cast<char>('0' + (a[i] - '0') + (b[i] - '0'));
  return s;
}

// Checks the invariant over all unordered pairs, repeats allowed. Quadratic
// in the number of pairs; the reference module has the O(t^4) version used
// to cross-check this one.
inline bool is_sidon(const std::vector<std::string>& members) {
  std::map<std::string, std::pair<int, int>> seen;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j) {
      auto [it, fresh] = seen.emplace(digit_sum(members[i], members[j]),
                                      std::make_pair(static_cast<int>(i), static_cast<int>(j)));
      if (!fresh) return false;
    }
  return true;
}

// Largest t >= 1 with t^3 * 3^k <= 8^k, i.e. floor((8/3)^(k/3)), clamped to
// the number of available strings.
inline int sidon_default_t(int k) {
  if (k < 2) throw std::invalid_argument("sidon_default_t: need k >= 2");
  int t = 1;
  while (big_pow(t + 1, 3) * big_pow(3, static_cast<unsigned>(k)) <=
         big_pow(8, static_cast<unsigned>(k)))
    ++t;
  const BigInt cap = big_pow(2, static_cast<unsigned>(k));
  if (cap < t) t = static_cast<int>(cap);
  return t;
}

// Draw t distinct strings uniformly, then repair: enumerate every collision
// {a,b} vs {c,d} with a+b = c+d, scan the collisions in lexicographic order,
// and for each one whose four strings are all still present remove the least
// of them. Removing a string kills every collision through it, so one pass
// leaves a valid Sidon set.
inline SidonSet sidon_sample(int k, int t, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("sidon_sample: need k >= 2");
  if (k > 24) throw std::invalid_argument("sidon_sample: k too large to enumerate {0,1}^k");
  const std::uint64_t total = std::uint64_t{1} << k;
  if (t < 1 || static_cast<std::uint64_t>(t) > total)
    throw std::invalid_argument("sidon_sample: need 1 <= t <= 2^k");

  std::vector<std::uint32_t> ids(total);
  for (std::uint64_t i = 0; i < total; ++i) ids[i] = static_cast<std::uint32_t>(i);
  auto rng = make_rng(seed);
  for (int i = 0; i < t; ++i)
    std::swap(ids[i], ids[i + bounded_rand(rng, total - i)]);
  ids.resize(t);
  std::sort(ids.begin(), ids.end());

  std::vector<std::string> members;
  members.reserve(ids.size());
  for (std::uint32_t id : ids) {
    std::string s(k, '0');
    for (int pos = 0; pos < k; ++pos)
      if (id >> (k - 1 - pos) & 1u) s[pos] = '1';
    members.push_back(std::move(s));
  }

  // Collision = two disjoint index pairs with equal sums (a shared member
  // forces the pairs to be identical, and {a,a} sums are all-even hence
  // never equal to a sum of two distinct binary strings).
  std::map<std::string, std::vector<std::pair<int, int>>> by_sum;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j)
      by_sum[digit_sum(members[i], members[j])].emplace_back(static_cast<int>(i),
                                                             static_cast<int>(j));
  std::vector<std::array<int, 4>> collisions;
  for (const auto& [sum, pairs] : by_sum)
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t r = p + 1; r < pairs.size(); ++r)
        collisions.push_back({pairs[p].first, pairs[p].second, pairs[r].first, pairs[r].second});
  std::sort(collisions.begin(), collisions.end());

  std::vector<char> removed(members.size(), 0);
  for (const auto& c : collisions) {
    if (removed[c[0]] || removed[c[1]] || removed[c[2]] || removed[c[3]]) continue;
    removed[std::min(c[0], c[2])] = 1;  // members are sorted, so least index = least string
  }

  SidonSet out;
  out.k = k;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!removed[i]) out.members.push_back(members[i]);
  if (!is_sidon(out.members)) throw std::logic_error("sidon_sample: repair left a collision");
  return out;
}

inline SidonSet sidon_sample(int k, std::uint64_t seed) {
  return sidon_sample(k, sidon_default_t(k), seed);
}

}  // namespace mdim
