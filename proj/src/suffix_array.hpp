#pragma once

// Suffix array and LCP construction used to accelerate the factor-counting
// and gap-profile scans. Internal to the library.

#include <cstddef>
#include <span>
#include <vector>

#include "sadic/words.hpp"

namespace sadic::detail {

/// Prefix-doubling construction with counting sorts, O(n log n).
/// `sigma` bounds the symbol values.
std::vector<std::size_t> suffix_array(std::span<const Symbol> text, std::size_t sigma);

/// Kasai et al.: lcp[r] = lcp(suffix sa[r-1], suffix sa[r]), lcp[0] = 0.
std::vector<std::size_t> lcp_array(std::span<const Symbol> text,
                                   std::span<const std::size_t> sa);

/// Text-ordered identifiers of the length-`length` factors: positions i and j
/// get the same id iff text[i, i+length) == text[j, j+length). Positions too
/// close to the end get `npos`.
std::vector<std::size_t> factor_classes(std::span<const std::size_t> sa,
                                        std::span<const std::size_t> lcp,
                                        std::size_t text_size, std::size_t length);

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace sadic::detail
