#include <algorithm>
#include <random>

#include "doctest.h"
#include "gtw/stallings.hpp"

using namespace gtw;

namespace {

Word w(const std::string& s, int rank = 2) { return parse_word(Alphabet(rank), s); }

std::vector<Word> random_words(std::mt19937& rng, int count, int len, int rank = 2) {
  std::uniform_int_distribution<int> letter(0, 2 * rank - 1);
  std::vector<Word> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Letter> raw;
    for (int i = 0; i < len; ++i) raw.push_back(letter_from_key(letter(rng)));
    Word cand(Alphabet(rank), raw);
    if (!cand.empty()) out.push_back(cand);
  }
  return out;
}

}  // namespace

TEST_CASE("folding is independent of generator order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = random_words(rng, 4, 6);
    CoreGraph base = CoreGraph::from_generators(Alphabet(2), gens);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CoreGraph again = CoreGraph::from_generators(Alphabet(2), shuffled);
    CHECK(base.canonical_form() == again.canonical_form());
    CHECK(base.rank() == again.rank());
  }
}

TEST_CASE("membership matches the exponent-sum oracle for an index-2 subgroup") {
  // Words with even a-count form the subgroup <a^2, b, a b A>.
  Alphabet a(2);
  CoreGraph h = CoreGraph::from_generators(a, {w("aa"), w("b"), w("abA")});
  CHECK(h.index() == 2);
  CHECK(h.rank() == 3);
  for (const Word& u : enumerate_words(a, 6))
    CHECK(h.contains(u) == (exponent_sum(u, 1) % 2 == 0));
}

TEST_CASE("generators() regenerate the same subgroup") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    CoreGraph h = CoreGraph::from_generators(Alphabet(2), random_words(rng, 3, 5));
    auto basis = h.generators();
    CHECK(static_cast<int>(basis.size()) == h.rank());
    CHECK(CoreGraph::from_generators(Alphabet(2), basis) == h);
  }
}

TEST_CASE("whole group, trivial group, index") {
  Alphabet a(2);
  CHECK(CoreGraph::whole_group(a).rank() == 2);
  CHECK(CoreGraph::whole_group(a).index() == 1);
  CHECK(CoreGraph::trivial(a).rank() == 0);
  CHECK(!CoreGraph::from_generators(a, {w("a")}).index().has_value());
}

TEST_CASE("intersection agrees between pullback graph and rank-only count") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    CoreGraph h = CoreGraph::from_generators(Alphabet(2), random_words(rng, 3, 5));
    CoreGraph k = CoreGraph::from_generators(Alphabet(2), random_words(rng, 3, 5));
    CoreGraph meet = intersect(h, k);
    CHECK(meet.rank() == intersection_rank(h, k));
    for (const Word& g : meet.generators()) {
      CHECK(h.contains(g));
      CHECK(k.contains(g));
    }
    CHECK(hanna_neumann_holds(h, k));
  }
}

TEST_CASE("intersection membership against the two factors") {
  Alphabet a(2);
  CoreGraph h = CoreGraph::from_generators(a, {w("aa"), w("b"), w("abA")});
  CoreGraph k = CoreGraph::from_generators(a, {w("a"), w("bb"), w("bab")});
  CoreGraph meet = intersect(h, k);
  for (const Word& u : enumerate_words(a, 5))
    CHECK(meet.contains(u) == (h.contains(u) && k.contains(u)));
}

TEST_CASE("join contains both inputs") {
  Alphabet a(2);
  CoreGraph h = CoreGraph::from_generators(a, {w("aa")});
  CoreGraph k = CoreGraph::from_generators(a, {w("bb")});
  CoreGraph j = join(h, k);
  CHECK(j.contains(w("aa")));
  CHECK(j.contains(w("bb")));
  CHECK(j.rank() == 2);
}

TEST_CASE("probes pass on subgroups they should pass on") {
  Alphabet a(2);
  CHECK(probe_inert(CoreGraph::whole_group(a), {2, 3}).passed);
  // A free factor is inert and compressed.
  CoreGraph fac = CoreGraph::from_generators(a, {w("a")});
  CHECK(probe_inert(fac, {2, 3}).passed);
  CHECK(probe_compressed(fac, {2, 3}).passed);
}
