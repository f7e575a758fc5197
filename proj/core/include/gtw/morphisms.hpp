#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtw/stallings.hpp"
#include "gtw/words.hpp"

namespace gtw {

/// A homomorphism between free groups, given by generator images.
class FreeHom {
 public:
  FreeHom(Alphabet domain, std::vector<Word> images);

  static FreeHom identity(Alphabet a);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& target() const { return images_.front().alphabet(); }
  const std::vector<Word>& images() const { return images_; }
  bool is_identity() const;

  Word apply(const Word& w) const;

  /// Dedup key: the tuple of generator images determines the map.
  std::string key() const;

  bool operator==(const FreeHom&) const = default;

 private:
  Alphabet domain_;
  std::vector<Word> images_;
};

/// An endomorphism: domain and target alphabets coincide.
using FreeEndo = FreeHom;

/// (f ∘ g)(x) = f(g(x)). Requires g.target() == f.domain().
FreeHom compose(const FreeHom& f, const FreeHom& g);

/// Folded graph of φ(F) = ⟨images⟩.
CoreGraph image_subgroup(const FreeEndo& phi);

/// Result of the minimal-image composition-monoid search.
struct MinimalImageResult {
  FreeEndo endo;
  int image_rank;
  std::vector<int> composition;  // indices into the family, outermost first
};

/// Enumerates compositions of <= depth family members (identity included),
/// deduplicated by image tuple; returns one of minimal image rank,
/// tie-broken by shortest then lexicographically least composition word.
MinimalImageResult minimal_image_search(const std::vector<FreeEndo>& family, int depth);

/// All reduced words of length <= max_length fixed by every family member
/// (exhaustive enumeration; intended for desk-scale lengths).
std::vector<Word> fixed_words(const std::vector<FreeEndo>& family, int max_length);

/// Fixed words found by a bounded-state search: tracks the reduced
/// discrepancies φ(prefix)^-1 · prefix and prunes states longer than
/// state_bound. Sound from below: every word returned is fixed; complete
/// whenever the discrepancy of a fixed word stays within the bound.
std::vector<Word> fixed_words_bounded(const std::vector<FreeEndo>& family, int max_length,
                                      int state_bound = 0);

struct FixApproximation {
  CoreGraph graph;
  int length_bound;
  bool stabilized;  // equal ranks at L-2, L-1, L
};

/// Folds the fixed words of length <= max_length; a subgroup of Fix from
/// below. Every generator of the graph is verified fixed.
FixApproximation fix_subgroup_approx(const std::vector<FreeEndo>& family, int max_length);

/// Words of length <= max_length on which all homomorphisms agree.
std::vector<Word> equalizer_words(const std::vector<FreeHom>& maps, int max_length);

/// Bergman sections check: verifies pi ∘ s = id on generators for every
/// section s, folds their equalizer words, checks rk <= rk(target of pi).
ProbeReport sections_equalizer_check(const FreeHom& pi, const std::vector<FreeHom>& sections,
                                     int max_length);

struct MainFreeReport {
  bool hypothesis_holds = true;   // fixed words in β0(K)-approx lie in K
  bool conclusion_holds = true;   // rk(K ∩ FixApprox) <= rk(K)
  int k_rank = 0;
  int intersection_rank = 0;
  std::vector<std::string> hypothesis_violations;
};

/// Desk-scale check of the minimal-image fixed-subgroup inequality for a
/// given K: hypothesis and conclusion are both evaluated at length bound L.
MainFreeReport verify_main_free(const std::vector<FreeEndo>& family, const FreeEndo& beta0,
                                const CoreGraph& k, int max_length);

struct CatalogueEntry {
  std::string name;
  FreeEndo endo;
};

/// rk(fix approximation) <= rk(F) for every entry; approximations are from
/// below, so a violation indicates an implementation bug.
ProbeReport bh_catalogue_check(const std::vector<CatalogueEntry>& catalogue, int max_length);

/// Parses lines of the form "a -> a b" into an endomorphism.
FreeEndo parse_endo(Alphabet a, const std::string& text);

}  // namespace gtw
