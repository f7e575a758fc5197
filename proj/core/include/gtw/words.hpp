#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gtw {

/// A ranked free alphabet. Generator i (1 <= i <= rank) is written as a
/// lowercase letter in text form, its inverse as the uppercase letter.
struct Alphabet {
  int rank;

  explicit Alphabet(int r);
  bool operator==(const Alphabet&) const = default;
};

/// A signed generator index: +i for generator i, -i for its inverse.
using Letter = int;

inline Letter inverse(Letter x) { return -x; }

/// Total order on letters used everywhere: a < A < b < B < ...
/// Encodes letter x as 2*(|x|-1) + (x < 0).
inline int letter_key(Letter x) {
  int i = x > 0 ? x : -x;
  return 2 * (i - 1) + (x < 0 ? 1 : 0);
}

/// Inverse of letter_key.
inline Letter letter_from_key(int k) {
  int i = k / 2 + 1;
  return (k % 2) ? -i : i;
}

/// A freely reduced word over a ranked alphabet. Immutable; reduction is
/// eager in every constructor.
class Word {
 public:
  /// The identity element.
  explicit Word(Alphabet a) : alphabet_(a) {}

  /// Reduces the raw letter sequence. Throws std::out_of_range on an index
  /// outside the alphabet rank.
  Word(Alphabet a, std::span<const Letter> raw);
  Word(Alphabet a, std::initializer_list<Letter> raw);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const Word&) const = default;

  /// Shortlex: by length, then letter_key lexicographically.
  std::strong_ordering operator<=>(const Word& other) const;

  std::string str() const;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// u * v with free reduction. Throws std::invalid_argument on alphabet
/// mismatch.
Word concat(const Word& u, const Word& v);

Word invert(const Word& w);

/// w = conjugator * core * conjugator^-1, with core cyclically reduced.
struct CyclicForm {
  Word core;
  Word conjugator;
};
CyclicForm cyclic_reduce(const Word& w);

/// Signed number of occurrences of generator i in w.
int exponent_sum(const Word& w, int generator);

/// All freely reduced words of length <= max_length, each exactly once, in
/// shortlex order.
std::vector<Word> enumerate_words(Alphabet a, int max_length);

/// Number of freely reduced words of length <= max_length (closed form).
std::uint64_t count_words(Alphabet a, int max_length);

/// Text grammar: whitespace-separated or contiguous letters, lowercase =
/// generator, uppercase = inverse; "g7"/"G7" for generators beyond z.
/// Empty input is the identity. Throws std::invalid_argument with a
/// position on bad syntax.
Word parse_word(Alphabet a, const std::string& text);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace gtw
