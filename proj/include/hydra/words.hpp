#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hydra {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A generator or its inverse, packed as +index / -index.
struct Letter {
  std::int32_t code = 1;

  static constexpr Letter make(int index, int sign) { return Letter{sign < 0 ? -index : index}; }
  constexpr int index() const { return code < 0 ? -code : code; }
  constexpr int sign() const { return code < 0 ? -1 : 1; }
  constexpr Letter inverse() const { return Letter{-code}; }
  constexpr bool cancels(Letter other) const { return code == -other.code; }

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

struct AAlphabet {
  static constexpr char symbol = 'a';
};
struct XAlphabet {
  static constexpr char symbol = 'x';
};

template <class Alphabet>
class Word {
 public:
  using alphabet = Alphabet;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // g_index^exponent as a flat word.
  static Word power(int index, std::int64_t exponent) {
    Word w;
    Letter l = Letter::make(index, exponent < 0 ? -1 : 1);
    std::uint64_t n = exponent < 0 ? -static_cast<std::uint64_t>(exponent) : exponent;
    w.letters_.assign(n, l);
    return w;
  }
  static Word letter(int index, int sign = 1) { return Word{Letter::make(index, sign)}; }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  std::vector<Letter>& mutable_letters() { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  Word& append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }
  Word slice(std::size_t from, std::size_t to) const {
    return Word(std::vector<Letter>(letters_.begin() + from, letters_.begin() + to));
  }

  Word inverse() const {
    Word out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
    return out;
  }

  bool is_positive() const {
    for (Letter l : letters_)
      if (l.sign() < 0) return false;
    return true;
  }

  bool is_reduced() const {
    for (std::size_t i = 1; i < letters_.size(); ++i)
      if (letters_[i].cancels(letters_[i - 1])) return false;
    return true;
  }

  friend Word operator*(Word lhs, const Word& rhs) { return std::move(lhs.append(rhs)); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

using FreeWord = Word<AAlphabet>;
using HWord = Word<XAlphabet>;

// Appends `tail` to the freely reduced `head`, cancelling at the seam.
template <class A>
void append_reduced(Word<A>& head, std::span<const Letter> tail) {
  for (Letter l : tail) {
    if (!head.empty() && head.back().cancels(l)) {
      head.pop_back();
    } else {
      head.push_back(l);
    }
  }
}

template <class A>
Word<A> reduce(const Word<A>& w) {
  Word<A> out;
  out.reserve(w.size());
  append_reduced(out, w.letters());
  return out;
}

template <class A>
Word<A> reduced_product(const Word<A>& a, const Word<A>& b) {
  Word<A> out = reduce(a);
  append_reduced(out, b.letters());
  return out;
}

// A letter of G: index 0 stands for t, otherwise a_index.
struct GLetter {
  std::int32_t index = 0;
  std::int32_t sign = 1;

  bool is_t() const { return index == 0; }
  GLetter inverse() const { return GLetter{index, -sign}; }
  friend bool operator==(GLetter, GLetter) = default;
};

class GWord {
 public:
  GWord() = default;
  GWord(std::initializer_list<GLetter> letters) : letters_(letters) {}
  explicit GWord(std::vector<GLetter> letters) : letters_(std::move(letters)) {}

  static GWord from_free(const FreeWord& w);
  static GWord t_power(std::int64_t exponent);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  GLetter operator[](std::size_t i) const { return letters_[i]; }
  void push_back(GLetter l) { letters_.push_back(l); }
  GWord& append(const GWord& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }
  GWord inverse() const;

  friend GWord operator*(GWord lhs, const GWord& rhs) { return std::move(lhs.append(rhs)); }
  friend bool operator==(const GWord&, const GWord&) = default;

 private:
  std::vector<GLetter> letters_;
};

// One parsed term of the word grammar: symbol 'a', 'x' or 't', index, exponent.
struct Term {
  char symbol = 'a';
  int index = 0;
  std::int64_t exponent = 1;
};

inline constexpr std::size_t kMaxParsedLetters = std::size_t{1} << 26;

std::vector<Term> parse_terms(std::string_view text);
FreeWord parse_free_word(std::string_view text);
HWord parse_hword(std::string_view text);
GWord parse_gword(std::string_view text);

// Runs of three or more equal letters print as g^n; shorter runs are spelled out.
std::string format_word(std::span<const Letter> letters, char symbol);
template <class A>
std::string format(const Word<A>& w) {
  return format_word(w.letters(), A::symbol);
}
std::string format(const GWord& w);

struct WordHash {
  template <class A>
  std::size_t operator()(const Word<A>& w) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Letter l : w) h = (h ^ static_cast<std::uint32_t>(l.code)) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace hydra
