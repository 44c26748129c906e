#include "suffix_array.hpp"

#include <algorithm>

namespace sadic::detail {

std::vector<std::size_t> suffix_array(std::span<const Symbol> text, std::size_t sigma) {
  const std::size_t n = text.size();
  std::vector<std::size_t> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;

  std::vector<std::size_t> count(std::max(sigma, n) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++count[text[i]];
  for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
  for (std::size_t i = n; i-- > 0;) sa[--count[text[i]]] = i;

  rank[sa[0]] = 0;
  for (std::size_t r = 1; r < n; ++r)
    rank[sa[r]] = rank[sa[r - 1]] + (text[sa[r]] != text[sa[r - 1]] ? 1 : 0);

  for (std::size_t k = 1; rank[sa[n - 1]] + 1 < n; k <<= 1) {
    // Order by the second key: suffixes without a k-shifted partner first.
    std::size_t p = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) tmp[p++] = i;
    for (std::size_t r = 0; r < n; ++r)
      if (sa[r] >= k) tmp[p++] = sa[r] - k;

    // Stable counting sort on the first key.
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
    for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
    for (std::size_t r = n; r-- > 0;) sa[--count[rank[tmp[r]]]] = tmp[r];

    auto second = [&](std::size_t i) { return i + k < n ? rank[i + k] + 1 : 0; };
    tmp[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
      const std::size_t a = sa[r - 1], b = sa[r];
      const bool differ = rank[a] != rank[b] || second(a) != second(b);
      tmp[b] = tmp[a] + (differ ? 1 : 0);
    }
    rank.swap(tmp);
  }
  return sa;
}

std::vector<std::size_t> lcp_array(std::span<const Symbol> text,
                                   std::span<const std::size_t> sa) {
  const std::size_t n = text.size();
  std::vector<std::size_t> rank(n), lcp(n, 0);
  for (std::size_t r = 0; r < n; ++r) rank[sa[r]] = r;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

std::vector<std::size_t> factor_classes(std::span<const std::size_t> sa,
                                        std::span<const std::size_t> lcp,
                                        std::size_t text_size, std::size_t length) {
  std::vector<std::size_t> cls(text_size, npos);
  std::size_t current = npos;
  for (std::size_t r = 0; r < sa.size(); ++r) {
    const std::size_t i = sa[r];
    if (text_size - i < length) continue;
    if (current == npos || lcp[r] < length) ++current;
    cls[i] = current;
  }
  return cls;
}

}  // namespace sadic::detail
