#include "gtw/words.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace gtw {

Alphabet::Alphabet(int r) : rank(r) {
  if (r < 1) throw std::invalid_argument("alphabet rank must be >= 1");
}

static std::vector<Letter> reduce_raw(int rank, std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    int i = std::abs(x);
    if (i < 1 || i > rank) throw std::out_of_range("generator index out of range");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word::Word(Alphabet a, std::span<const Letter> raw)
    : alphabet_(a), letters_(reduce_raw(a.rank, raw)) {}

Word::Word(Alphabet a, std::initializer_list<Letter> raw)
    : alphabet_(a), letters_(reduce_raw(a.rank, {raw.begin(), raw.size()})) {}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (letters_.size() != other.letters_.size())
    return letters_.size() <=> other.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    int a = letter_key(letters_[i]), b = letter_key(other.letters_[i]);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::string Word::str() const {
  std::string out;
  for (Letter x : letters_) {
    if (!out.empty()) out += ' ';
    int i = std::abs(x);
    if (i <= 26) {
      char c = static_cast<char>('a' + i - 1);
      out += x > 0 ? c : static_cast<char>(std::toupper(c));
    } else {
      out += (x > 0 ? "g" : "G") + std::to_string(i);
    }
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  if (u.alphabet().rank != v.alphabet().rank)
    throw std::invalid_argument("alphabet mismatch");
  std::vector<Letter> raw = u.letters();
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), raw);
}

Word invert(const Word& w) {
  std::vector<Letter> raw(w.letters().rbegin(), w.letters().rend());
  for (Letter& x : raw) x = -x;
  return Word(w.alphabet(), raw);
}

CyclicForm cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i] == -l[j - 1]) {
    ++i;
    --j;
  }
  std::vector<Letter> core(l.begin() + i, l.begin() + j);
  std::vector<Letter> conj(l.begin(), l.begin() + i);
  return {Word(w.alphabet(), core), Word(w.alphabet(), conj)};
}

int exponent_sum(const Word& w, int generator) {
  if (generator < 1 || generator > w.alphabet().rank)
    throw std::out_of_range("generator index out of range");
  int s = 0;
  for (Letter x : w.letters()) {
    if (x == generator) ++s;
    if (x == -generator) --s;
  }
  return s;
}

std::vector<Word> enumerate_words(Alphabet a, int max_length) {
  if (max_length < 0) throw std::invalid_argument("max_length must be >= 0");
  std::vector<Word> out;
  out.push_back(Word(a));
  // Words of length k extend words of length k-1 in letter_key order;
  // lexicographic order of prefixes is preserved.
  std::vector<std::vector<Letter>> prev = {{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> cur;
    cur.reserve(prev.size() * 2 * a.rank);
    for (const auto& p : prev) {
      for (int k = 0; k < 2 * a.rank; ++k) {
        Letter x = letter_from_key(k);
        if (!p.empty() && p.back() == -x) continue;
        std::vector<Letter> q = p;
        q.push_back(x);
        cur.push_back(std::move(q));
      }
    }
    for (const auto& q : cur) out.push_back(Word(a, q));
    prev = std::move(cur);
  }
  return out;
}

std::uint64_t count_words(Alphabet a, int max_length) {
  std::uint64_t total = 1, level = 1;
  for (int len = 1; len <= max_length; ++len) {
    level *= (len == 1) ? 2 * a.rank : 2 * a.rank - 1;
    total += level;
  }
  return total;
}

Word parse_word(Alphabet a, const std::string& text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'g' || c == 'G') {
      // Lookahead for a multi-digit generator index; bare g/G is letter 7.
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i + 1) {
        int idx = std::stoi(text.substr(i + 1, j - i - 1));
        if (idx < 1 || idx > a.rank)
          throw std::invalid_argument("generator index out of range at position " +
                                      std::to_string(i));
        raw.push_back(c == 'g' ? idx : -idx);
        i = j;
        continue;
      }
    }
    if (std::islower(static_cast<unsigned char>(c)))
      raw.push_back(c - 'a' + 1);
    else if (std::isupper(static_cast<unsigned char>(c)))
      raw.push_back(-(c - 'A' + 1));
    else
      throw std::invalid_argument("unexpected character at position " + std::to_string(i));
    if (std::abs(raw.back()) > a.rank)
      throw std::invalid_argument("generator index out of range at position " +
                                  std::to_string(i));
    ++i;
  }
  return Word(a, raw);
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (Letter x : w.letters()) {
    h ^= static_cast<std::size_t>(letter_key(x)) + 1;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gtw
