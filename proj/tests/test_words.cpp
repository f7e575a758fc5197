#include <random>
#include <stdexcept>

#include "doctest.h"
#include "gtw/words.hpp"

using namespace gtw;

TEST_CASE("reduction and group laws, exhaustively at small length") {
  Alphabet a(2);
  auto words = enumerate_words(a, 3);
  for (const Word& u : words) {
    CHECK(concat(u, invert(u)).empty());
    CHECK(invert(invert(u)) == u);
    for (const Word& v : words) {
      Word uv = concat(u, v);
      CHECK(invert(uv) == concat(invert(v), invert(u)));
      for (const Word& w : words)
        CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    }
  }
}

TEST_CASE("enumerate_words agrees with the closed-form count") {
  for (int rank = 1; rank <= 3; ++rank)
    for (int len = 0; len <= 5; ++len) {
      Alphabet a(rank);
      auto words = enumerate_words(a, len);
      CHECK(words.size() == count_words(a, len));
      for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
    }
}

TEST_CASE("parse and print round-trip") {
  Alphabet a(3);
  CHECK(parse_word(a, "a b C").str() == "a b C");
  CHECK(parse_word(a, "abC") == parse_word(a, "a b C"));
  CHECK(parse_word(a, "a A b B").empty());
  CHECK(parse_word(a, "").empty());
  CHECK_THROWS_AS(parse_word(a, "a d"), std::invalid_argument);
  for (const Word& w : enumerate_words(a, 3)) CHECK(parse_word(a, w.str()) == w);
}

TEST_CASE("cyclic reduction decomposes the word") {
  Alphabet a(2);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw;
    for (int i = 0; i < 10; ++i) raw.push_back(letter_from_key(letter(rng)));
    Word w(a, raw);
    CyclicForm cf = cyclic_reduce(w);
    CHECK(concat(concat(cf.conjugator, cf.core), invert(cf.conjugator)) == w);
    if (!cf.core.empty())
      CHECK(cf.core.letters().front() != inverse(cf.core.letters().back()));
  }
}

TEST_CASE("exponent sums are additive") {
  Alphabet a(2);
  Word u = parse_word(a, "a b a B a");
  CHECK(exponent_sum(u, 1) == 3);
  CHECK(exponent_sum(u, 2) == 0);
  Word v = parse_word(a, "A A b");
  CHECK(exponent_sum(concat(u, v), 1) == exponent_sum(u, 1) + exponent_sum(v, 1));
  CHECK(exponent_sum(invert(u), 1) == -3);
}
