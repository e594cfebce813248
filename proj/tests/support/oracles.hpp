#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "braid3/braid_word.hpp"

namespace oracle {

using braid3::BraidWord;
using braid3::Generator;
using braid3::Letter;

// Positive word over {1, 2} times Delta^-k, computed without any matrix
// arithmetic: inverse letters are replaced via s^-1 = (other s) Delta^-1
// shifted, and Delta is pushed right flipping letters.
struct PositiveDelta {
  std::string word;  // characters '1' / '2'
  long delta_power = 0;
};

inline char flip(char c) { return c == '1' ? '2' : '1'; }

inline PositiveDelta to_positive_delta(const BraidWord& w) {
  // Delta^-1 collected on the right: w = P * Delta^k with k <= 0.
  // Processing left to right, a prefix P Delta^k followed by letter s:
  //   positive s: P Delta^k s = P flip^k(s) Delta^k
  //   s^-1 = t s Delta^-1 where {s,t} = {1,2} (since s t s = Delta)
  PositiveDelta out;
  for (const Letter& l : braid3::expand_to_standard(w)) {
    char s = l.gen == Generator::A ? '1' : '2';
    const bool flipped = (out.delta_power % 2) != 0;
    if (flipped) s = flip(s);
    if (l.sign > 0) {
      out.word += s;
    } else {
      out.word += flip(s);
      out.word += s;
      --out.delta_power;
    }
  }
  return out;
}

// All positive words equal to `p` in the positive monoid, via 121 <-> 212.
inline std::set<std::string> positive_class(const std::string& p) {
  std::set<std::string> seen{p};
  std::queue<std::string> q;
  q.push(p);
  while (!q.empty()) {
    std::string cur = q.front();
    q.pop();
    for (std::size_t i = 0; i + 3 <= cur.size(); ++i) {
      if (cur[i] == cur[i + 2] && cur[i] != cur[i + 1]) {
        std::string nxt = cur;
        nxt[i] = nxt[i + 2] = cur[i + 1];
        nxt[i + 1] = cur[i];
        if (seen.insert(nxt).second) q.push(nxt);
      }
    }
  }
  return seen;
}

// Equality in B3 by multiplying both sides into the positive monoid.
inline bool equal_by_rewriting(const BraidWord& u, const BraidWord& v) {
  PositiveDelta pu = to_positive_delta(u);
  PositiveDelta pv = to_positive_delta(v);
  // P_u Delta^{ku} = P_v Delta^{kv}  <=>  P_u Delta^{ku-m} = P_v Delta^{kv-m}
  const long m = std::min(pu.delta_power, pv.delta_power);
  auto append_delta = [](std::string& s, long k) {
    for (long i = 0; i < k; ++i) s += "121";
  };
  append_delta(pu.word, pu.delta_power - m);
  append_delta(pv.word, pv.delta_power - m);
  if (pu.word.size() != pv.word.size()) return false;
  return positive_class(pu.word).count(pv.word) > 0;
}

// All words over {a, b, A, B} of length exactly n.
inline std::vector<BraidWord> all_standard_words(std::size_t n) {
  std::vector<BraidWord> out{BraidWord{}};
  const Letter letters[4] = {{Generator::A, 1}, {Generator::A, -1}, {Generator::B, 1}, {Generator::B, -1}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<BraidWord> next;
    for (const BraidWord& w : out) {
      for (Letter l : letters) {
        BraidWord c = w;
        c.push_back(l);
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
