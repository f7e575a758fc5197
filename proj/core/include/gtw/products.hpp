#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtw/morphisms.hpp"
#include "gtw/presentations.hpp"
#include "gtw/words.hpp"

namespace gtw {

/// One direct factor: a free group or a closed-surface group.
struct Factor {
  enum class Kind { Free, Orientable, NonOrientable };
  Kind kind;
  int param;  // rank r, genus g, or crosscap count k (all >= 1)

  int rank() const;
  Alphabet alphabet() const { return Alphabet(rank()); }
  bool abelian() const;
  bool nontrivial_center() const;
  /// Word-problem context (exact where possible, sound partial otherwise).
  GroupContext context() const;
  Presentation presentation() const;
  /// Display name: F2, S3, NS3; Free(1) renders as Z, NonOrientable(1) as C2.
  std::string name() const;

  bool operator==(const Factor&) const = default;
  auto operator<=>(const Factor&) const = default;
};

struct ProductGroup {
  std::vector<Factor> factors;

  int rank() const;
  std::string name() const;  // consecutive equal factors grouped as G^n

  enum class Type { Euclidean, Hyperbolic, Mixed };
  Type classify_type() const;
};

/// "F2 x NS3", "NS2^2 x C2", "Z".
ProductGroup parse_product(const std::string& text);

/// One component word per factor.
struct ProductElement {
  std::vector<Word> components;

  bool operator==(const ProductElement&) const = default;
};

ProductElement identity_element(const ProductGroup& g);
ProductElement multiply(const ProductElement& x, const ProductElement& y);
ProductElement invert(const ProductElement& x);

/// Componentwise comparison through the factor oracles: NotEqual dominates,
/// then Unknown, else Equal.
Verdict element_equal(const ProductGroup& g, const ProductElement& x, const ProductElement& y);
Verdict element_trivial(const ProductGroup& g, const ProductElement& x);

/// "(a b A ; c)"; components split on ';', empty component = identity.
ProductElement parse_product_element(const ProductGroup& g, const std::string& text);
std::string element_str(const ProductElement& x);

/// Endomorphism given by a ProductElement image for every standard
/// generator of every factor. Construction verifies that each factor
/// relator maps to a certified-trivial element; an Unknown verdict is
/// rejected as unverifiable.
class ProductEndo {
 public:
  ProductEndo(ProductGroup g, std::vector<std::vector<ProductElement>> images);

  const ProductGroup& group() const { return group_; }
  /// Image of generator gen (1-based) of factor f.
  const ProductElement& image(int factor, int gen) const { return images_[factor][gen - 1]; }

  ProductElement apply(const ProductElement& x) const;

 private:
  ProductGroup group_;
  std::vector<std::vector<ProductElement>> images_;
};

struct ProductFixBuckets {
  std::vector<ProductElement> certified;  // oracle-equal under phi
  std::vector<ProductElement> uncertain;  // oracle Unknown
};

/// Enumerates component tuples of total length <= max_length and buckets
/// them by the verdict on phi(x) = x; NotEqual elements are dropped.
ProductFixBuckets fix_words_product(const ProductEndo& phi, int max_length);

/// Center / centralizer descriptions (factor-wise).
struct SubgroupDescription {
  std::string text;        // e.g. "Z x 1 x Z/2"
  int free_rank = 0;
  std::vector<int> torsion_orders;
  bool whole = false;      // the whole group

  int rank() const { return free_rank + static_cast<int>(torsion_orders.size()); }
};

SubgroupDescription center(const ProductGroup& g);

/// Throws std::invalid_argument when a component's triviality is
/// undecidable for its factor oracle.
SubgroupDescription centralizer(const ProductGroup& g, const ProductElement& x);

/// Hyperbolic-type classification only; throws on other types.
bool isomorphic(const ProductGroup& g, const ProductGroup& h);

/// Coordinate-permuting form of an endomorphism: each factor's generators
/// map into a single target factor.
struct RectangularDecomposition {
  std::vector<int> target;                  // factor i -> coordinate target[i]
  std::vector<std::vector<Word>> maps;      // maps[i][g-1] in factor target[i]'s alphabet
};

struct RectangularResult {
  std::optional<RectangularDecomposition> decomposition;
  /// (factor, generator) whose image touches >= 2 coordinates.
  std::optional<std::pair<int, int>> witness;
};

/// Requires a hyperbolic-type group; throws otherwise.
RectangularResult rectangular_decompose(const ProductEndo& phi);

/// Rebuilds the endomorphism from a decomposition and compares generator
/// images exactly.
bool recomposition_matches(const ProductEndo& phi, const RectangularDecomposition& dec);

/// Fixed subgroup of a cyclic coordinate shift twisted by phi_1..phi_n on a
/// common free factor: a twisted diagonal over Fix(phi_n ... phi_1).
struct CycleFixReport {
  FreeEndo composite;
  FixApproximation fix;
  int rank = 0;
};

CycleFixReport fix_of_cycle(const std::vector<FreeEndo>& phis, int max_length);

}  // namespace gtw
