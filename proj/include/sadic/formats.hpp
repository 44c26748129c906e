#pragma once

// Text formats for sequences, windows, morphisms and directives.
//
//   sequence   one or more lines of symbols, concatenated; tokens separated
//              by spaces when any line contains a space, otherwise one
//              character per symbol. Lines starting with '#' are comments.
//   window     a sequence with a header line "origin: <int>".
//   morphism   lines "letter -> image", optional "domain: a b c" and
//              "codomain: a b c" headers.
//   directive  "seed: a", then "use FILE" lines (relative to the directive
//              file) or a single "pattern: <name> [params]" line.

#include <filesystem>
#include <string>
#include <string_view>

#include "sadic/directive.hpp"
#include "sadic/morphisms.hpp"
#include "sadic/words.hpp"

namespace sadic {

std::string read_file(const std::filesystem::path& path);

/// With a null alphabet the alphabet is inferred by first appearance.
Word parse_sequence(std::string_view text, const AlphabetPtr& alphabet = nullptr);
Word read_sequence(const std::filesystem::path& path, const AlphabetPtr& alphabet = nullptr);

/// A missing origin header means origin 0.
TwoSidedWindow parse_window(std::string_view text);
TwoSidedWindow read_window(const std::filesystem::path& path);

Morphism parse_morphism(std::string_view text);
Morphism read_morphism(const std::filesystem::path& path);

DirectiveSequence parse_directive(std::string_view text, const std::filesystem::path& base_dir = ".");
DirectiveSequence read_directive(const std::filesystem::path& path);

/// Named directives: counterexample, golden, sturmian-linear,
/// sturmian:<a_0,a_1,...> (continued fraction, last quotient repeating) and
/// sturmian-finite:<a_0,a_1,...>.
DirectiveSequence builtin_directive(std::string_view name);

}  // namespace sadic
