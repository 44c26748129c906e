#include "sadic/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <vector>

#include "sadic/builtin.hpp"
#include "sadic/error.hpp"

namespace sadic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-blank, non-comment lines, trimmed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::parse, "line " + std::to_string(line) + ": " + what);
}

// "key: value" when the line starts with key followed by a colon.
bool header(std::string_view line, std::string_view key, std::string_view& value) {
  if (line.size() <= key.size() || line.substr(0, key.size()) != key || line[key.size()] != ':')
    return false;
  value = trim(line.substr(key.size() + 1));
  return true;
}

std::vector<std::string> split_spaces(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::vector<std::size_t> parse_list(std::string_view s) {
  std::vector<std::size_t> out;
  while (true) {
    const std::size_t comma = s.find(',');
    const std::string_view item = trim(s.substr(0, comma));
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      fail(ErrorCode::parse, "malformed integer list '" + std::string(s) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

Word join_sequence(const std::vector<Line>& lines, const AlphabetPtr& alphabet) {
  const bool spaced = std::any_of(lines.begin(), lines.end(), [](const Line& l) {
    return std::any_of(l.text.begin(), l.text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  });
  std::string joined;
  for (const auto& l : lines) {
    if (spaced && !joined.empty()) joined.push_back(' ');
    joined += l.text;
  }
  if (joined.empty()) {
    if (alphabet) return Word::empty(alphabet);
    fail(ErrorCode::parse, "empty sequence");
  }
  return alphabet ? Word::parse(alphabet, joined) : Word::from_text(joined);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Word parse_sequence(std::string_view text, const AlphabetPtr& alphabet) {
  return join_sequence(content_lines(text), alphabet);
}

Word read_sequence(const std::filesystem::path& path, const AlphabetPtr& alphabet) {
  return parse_sequence(read_file(path), alphabet);
}

TwoSidedWindow parse_window(std::string_view text) {
  std::vector<Line> lines = content_lines(text);
  std::size_t origin = 0;
  std::vector<Line> body;
  bool seen = false;
  for (const auto& l : lines) {
    std::string_view value;
    if (header(l.text, "origin", value)) {
      if (seen) parse_error(l.number, "duplicate origin header");
      long long v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc{} || ptr != value.data() + value.size() || v < 0)
        parse_error(l.number, "origin must be a non-negative integer");
      origin = static_cast<std::size_t>(v);
      seen = true;
    } else {
      body.push_back(l);
    }
  }
  return TwoSidedWindow(join_sequence(body, nullptr), origin);
}

TwoSidedWindow read_window(const std::filesystem::path& path) { return parse_window(read_file(path)); }

Morphism parse_morphism(std::string_view text) {
  std::optional<std::vector<std::string>> domain_header, codomain_header;
  std::vector<std::pair<std::string, std::string>> rules;
  for (const auto& l : content_lines(text)) {
    std::string_view value;
    if (header(l.text, "domain", value)) {
      domain_header = split_spaces(value);
      continue;
    }
    if (header(l.text, "codomain", value)) {
      codomain_header = split_spaces(value);
      continue;
    }
    const std::size_t arrow = l.text.find("->");
    if (arrow == std::string_view::npos) parse_error(l.number, "expected 'letter -> image'");
    const std::string letter(trim(l.text.substr(0, arrow)));
    const std::string image(trim(l.text.substr(arrow + 2)));
    if (letter.empty() || std::any_of(letter.begin(), letter.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      parse_error(l.number, "letter must be a single token");
    if (image.empty()) parse_error(l.number, "image of '" + letter + "' is empty");
    for (const auto& r : rules)
      if (r.first == letter) parse_error(l.number, "letter '" + letter + "' has two images");
    rules.emplace_back(letter, image);
  }
  if (rules.empty()) fail(ErrorCode::parse, "morphism file has no rules");

  std::vector<std::string> domain_tokens;
  for (const auto& r : rules) domain_tokens.push_back(r.first);
  if (domain_header) {
    if (std::set<std::string>(domain_header->begin(), domain_header->end()) !=
            std::set<std::string>(domain_tokens.begin(), domain_tokens.end()) ||
        domain_header->size() != domain_tokens.size())
      fail(ErrorCode::parse, "domain header does not match the letters with images");
    domain_tokens = *domain_header;
  }
  const AlphabetPtr domain = Alphabet::make(domain_tokens);

  AlphabetPtr codomain;
  if (codomain_header) {
    codomain = Alphabet::make(*codomain_header);
  } else {
    std::vector<std::string> seen;
    for (const auto& letter : domain_tokens) {
      const auto& image = std::find_if(rules.begin(), rules.end(), [&](const auto& r) { return r.first == letter; })->second;
      const AlphabetPtr letters = Word::from_text(image).alphabet();
      for (const auto& t : letters->tokens())
        if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(t);
    }
    // Endomorphisms keep the domain order.
    if (std::all_of(seen.begin(), seen.end(), [&](const std::string& t) {
          return std::find(domain_tokens.begin(), domain_tokens.end(), t) != domain_tokens.end();
        }))
      seen = domain_tokens;
    codomain = Alphabet::make(seen);
  }

  std::vector<Word> images;
  for (Symbol s = 0; s < domain->size(); ++s) {
    const auto& image = std::find_if(rules.begin(), rules.end(), [&](const auto& r) { return r.first == domain->token(s); })->second;
    images.push_back(Word::parse(codomain, image));
  }
  return Morphism(domain, codomain, std::move(images));
}

Morphism read_morphism(const std::filesystem::path& path) { return parse_morphism(read_file(path)); }

DirectiveSequence builtin_directive(std::string_view name) {
  using namespace builtin;
  if (name == "counterexample") return counterexample_directive();
  if (name == "golden") return sturmian_directive(SturmianSpec::golden());
  if (name == "sturmian-linear") return sturmian_directive(SturmianSpec::linear());
  if (name.starts_with("sturmian:"))
    return sturmian_directive(SturmianSpec::from_continued_fraction(parse_list(name.substr(9))));
  if (name.starts_with("sturmian-finite:"))
    return sturmian_directive(SturmianSpec::from_continued_fraction(parse_list(name.substr(16)), false));
  fail(ErrorCode::invalid_argument, "unknown builtin directive '" + std::string(name) + "'");
}

DirectiveSequence parse_directive(std::string_view text, const std::filesystem::path& base_dir) {
  std::optional<std::string> seed;
  std::optional<std::string> pattern;
  bool periodic = false;
  std::vector<Morphism> list;
  for (const auto& l : content_lines(text)) {
    std::string_view value;
    if (header(l.text, "seed", value)) {
      if (value.empty() || split_spaces(value).size() != 1) parse_error(l.number, "seed must be one letter");
      seed = std::string(value);
    } else if (header(l.text, "pattern", value)) {
      if (pattern || periodic) parse_error(l.number, "only one pattern line is allowed");
      const auto words = split_spaces(value);
      if (words.empty()) parse_error(l.number, "pattern needs a name");
      if (words[0] == "periodic") {
        periodic = true;
      } else if (words[0] == "sturmian") {
        if (words.size() != 2) parse_error(l.number, "pattern sturmian needs a continued fraction a_0,a_1,...");
        pattern = "sturmian:" + words[1];
      } else {
        if (words.size() != 1) parse_error(l.number, "pattern " + words[0] + " takes no parameters");
        pattern = words[0];
      }
    } else if (l.text.starts_with("use ") || l.text.starts_with("use\t")) {
      const std::filesystem::path file(std::string(trim(l.text.substr(3))));
      list.push_back(read_morphism(file.is_absolute() ? file : base_dir / file));
    } else {
      parse_error(l.number, "expected 'seed:', 'use FILE' or 'pattern:'");
    }
  }
  if (pattern) {
    if (!list.empty()) fail(ErrorCode::parse, "a directive is either a pattern or a list of 'use' lines");
    DirectiveSequence d = builtin_directive(*pattern);
    if (seed && *seed != d.seed())
      return DirectiveSequence([d](std::size_t n) { return d.at(n); }, d.length(), *seed, d.description(),
                               d.primitivity_constant());
    return d;
  }
  if (list.empty()) fail(ErrorCode::parse, "directive has no morphisms");
  if (!seed) fail(ErrorCode::parse, "directive needs a 'seed:' line");
  return periodic ? DirectiveSequence::periodic(std::move(list), *seed, "periodic")
                  : DirectiveSequence::finite(std::move(list), *seed, "finite");
}

DirectiveSequence read_directive(const std::filesystem::path& path) {
  return parse_directive(read_file(path), path.parent_path().empty() ? "." : path.parent_path());
}

}  // namespace sadic
