#include "hydra/words.hpp"

#include <charconv>
#include <limits>

namespace hydra {

namespace {

template <class T>
T parse_number(std::string_view text, std::string_view token) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (first == last || ec != std::errc() || ptr != last) {
    throw ParseError("malformed term '" + std::string(token) + "'");
  }
  return value;
}

Term parse_term(std::string_view token) {
  Term term;
  term.symbol = token.front();
  std::string_view rest = token.substr(1);
  std::string_view exponent;
  if (auto caret = rest.find('^'); caret != std::string_view::npos) {
    exponent = rest.substr(caret + 1);
    rest = rest.substr(0, caret);
    if (exponent.empty()) throw ParseError("missing exponent in '" + std::string(token) + "'");
    term.exponent = parse_number<std::int64_t>(exponent, token);
  }
  switch (term.symbol) {
    case 't':
      if (!rest.empty()) throw ParseError("t takes no index: '" + std::string(token) + "'");
      break;
    case 'a':
    case 'x':
      if (rest.empty() || rest.front() == '+' || rest.front() == '-') {
        throw ParseError("missing index in '" + std::string(token) + "'");
      }
      term.index = parse_number<int>(rest, token);
      if (term.index < 1) throw ParseError("index must be >= 1 in '" + std::string(token) + "'");
      break;
    default:
      throw ParseError("unknown symbol in '" + std::string(token) + "'");
  }
  return term;
}

void check_symbols(const std::vector<Term>& terms, std::string_view allowed, const char* kind) {
  std::uint64_t total = 0;
  for (const Term& t : terms) {
    if (allowed.find(t.symbol) == std::string_view::npos) {
      throw ParseError(std::string("symbol '") + t.symbol + "' is not allowed in " + kind);
    }
    std::uint64_t n = t.exponent < 0 ? -static_cast<std::uint64_t>(t.exponent) : t.exponent;
    total += n;
    if (n > kMaxParsedLetters || total > kMaxParsedLetters) {
      throw ParseError(std::string(kind) + " is too long to expand");
    }
  }
}

template <class A>
Word<A> expand(const std::vector<Term>& terms) {
  Word<A> w;
  for (const Term& t : terms) w.append(Word<A>::power(t.index, t.exponent));
  return w;
}

void append_run(std::string& out, const std::string& base, int sign, std::uint64_t n) {
  auto piece = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  if (n >= 3) {
    piece(base + "^" + (sign < 0 ? "-" : "") + std::to_string(n));
    return;
  }
  for (std::uint64_t i = 0; i < n; ++i) piece(sign < 0 ? base + "^-1" : base);
}

}  // namespace

std::vector<Term> parse_terms(std::string_view text) {
  std::vector<Term> terms;
  bool any = false;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) {
      std::string_view token = text.substr(i, j - i);
      any = true;
      if (token != "e") terms.push_back(parse_term(token));
    }
    i = j;
  }
  if (!any) throw ParseError("empty word text (use e for the empty word)");
  return terms;
}

FreeWord parse_free_word(std::string_view text) {
  auto terms = parse_terms(text);
  check_symbols(terms, "a", "a free word");
  return expand<AAlphabet>(terms);
}

HWord parse_hword(std::string_view text) {
  auto terms = parse_terms(text);
  check_symbols(terms, "x", "an H-word");
  return expand<XAlphabet>(terms);
}

GWord parse_gword(std::string_view text) {
  auto terms = parse_terms(text);
  check_symbols(terms, "at", "a G-word");
  GWord w;
  for (const Term& t : terms) {
    GLetter l{t.symbol == 't' ? 0 : t.index, t.exponent < 0 ? -1 : 1};
    std::uint64_t n = t.exponent < 0 ? -static_cast<std::uint64_t>(t.exponent) : t.exponent;
    for (std::uint64_t k = 0; k < n; ++k) w.push_back(l);
  }
  return w;
}

std::string format_word(std::span<const Letter> letters, char symbol) {
  if (letters.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    append_run(out, std::string(1, symbol) + std::to_string(letters[i].index()), letters[i].sign(),
               j - i);
    i = j;
  }
  return out;
}

std::string format(const GWord& w) {
  if (w.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::string base = w[i].is_t() ? "t" : "a" + std::to_string(w[i].index);
    append_run(out, base, w[i].sign, j - i);
    i = j;
  }
  return out;
}

GWord GWord::from_free(const FreeWord& w) {
  GWord out;
  for (Letter l : w) out.push_back(GLetter{l.index(), l.sign()});
  return out;
}

GWord GWord::t_power(std::int64_t exponent) {
  GWord out;
  std::uint64_t n = exponent < 0 ? -static_cast<std::uint64_t>(exponent) : exponent;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(GLetter{0, exponent < 0 ? -1 : 1});
  return out;
}

GWord GWord::inverse() const {
  GWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return out;
}

}  // namespace hydra
