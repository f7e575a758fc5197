#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtw/snf.hpp"
#include "gtw/words.hpp"

namespace gtw {

/// A finite presentation; relators are kept cyclically reduced.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  Presentation(Alphabet a, std::vector<Word> rels);

  /// ⟨a1,b1,...,ag,bg | [a1,b1]...[ag,bg]⟩.
  static Presentation orientable_surface(int genus);
  /// ⟨a1,...,ak | a1^2...ak^2⟩.
  static Presentation nonorientable_surface(int crosscaps);
  /// No relators.
  static Presentation free_group(int rank);
};

/// "a b c" on the first line, one relator word per following line.
Presentation parse_presentation(const std::string& text);

/// Complete coset table (cosets are 1-based rows) or an overflow marker.
class CosetTable {
 public:
  enum class Status { Complete, Overflow };

  Status status() const { return status_; }
  bool complete() const { return status_ == Status::Complete; }
  int index() const;

  /// Action of a signed generator on a coset (both 1-based); tables are
  /// complete, so this is total.
  int act(int coset, Letter x) const;

 private:
  friend CosetTable todd_coxeter(const Presentation&, const std::vector<Word>&, int);
  Status status_ = Status::Overflow;
  int rank_ = 0;
  std::vector<std::vector<int>> table_;  // [coset-1][letter_key] -> coset
};

/// HLT coset enumeration with a hard coset cap and deterministic new-coset
/// numbering. Overflow is reported in the status, never as an exception.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        int max_cosets = 10000);

/// Subgroup presentation on Schreier generators for a complete table.
/// Throws std::invalid_argument on an incomplete table.
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& table);

/// Smith normal form of the relator exponent matrix.
AbelianInvariants abelianization(const Presentation& p);

/// Closed-surface bookkeeping: χ and ranks of finite-index subgroups.
struct SurfaceDescriptor {
  enum class Kind { Orientable, NonOrientable };
  Kind kind;
  int parameter;  // genus g >= 0 or crosscap count k >= 1

  int euler_characteristic() const {
    return kind == Kind::Orientable ? 2 - 2 * parameter : 2 - parameter;
  }
  int rank() const { return kind == Kind::Orientable ? 2 * parameter : parameter; }
  bool abelian() const {
    return (kind == Kind::Orientable && parameter <= 1) ||
           (kind == Kind::NonOrientable && parameter <= 1);
  }
};

/// Rank of an index-n subgroup of a surface group with χ < 0: 2 - n·χ.
int cover_rank(const SurfaceDescriptor& desc, int index);

struct PieceReport {
  int relator_length = 0;
  int max_piece_length = 0;
  bool satisfies_c6 = false;  // every piece shorter than |r|/6
};

/// Piece statistics over cyclic shifts of r and r^-1 (one-relator input).
PieceReport piece_check(const Presentation& p);

/// Dehn's algorithm; valid for C'(1/6) one-relator presentations and
/// rejected otherwise. Replaces subwords longer than half a relator cyclic
/// shift by the shorter complement, longest-first, leftmost.
bool dehn_is_trivial(const Presentation& p, const Word& w);

/// Greedy sound reducer: repeatedly deletes subwords that are full cyclic
/// shifts of a relator or its inverse, freely reducing in between. True
/// means w = 1 in the presented group; false is inconclusive.
bool relator_deletion_trivial(const Presentation& p, const Word& w, int max_steps = 64);

/// Normal form a^m b^n in ⟨a,b | aba^-1 b⟩.
struct KleinNormalForm {
  long long a_exp = 0;
  long long b_exp = 0;
  bool operator==(const KleinNormalForm&) const = default;
};

KleinNormalForm klein_normal_form(const Word& w);

/// (m1,n1)·(m2,n2) in the Klein bottle group.
KleinNormalForm klein_multiply(KleinNormalForm x, KleinNormalForm y);
KleinNormalForm klein_invert(KleinNormalForm x);

/// Fixed subgroup shape of an endomorphism of the Klein bottle group.
enum class KleinFixClass { Whole, ZxZ, Z, Trivial };

struct KleinFixReport {
  KleinFixClass cls;
  std::vector<KleinNormalForm> generators;
};

/// Classifies Fix of the endomorphism a -> image_a, b -> image_b by
/// enumerating fixed normal forms with |m|,|n| <= box. Throws
/// std::invalid_argument when the images do not kill the relator.
KleinFixReport ns2_fix_classify(KleinNormalForm image_a, KleinNormalForm image_b, int box);

/// Three-valued equality verdict; Equal/NotEqual are always sound.
enum class Verdict { Equal, NotEqual, Unknown };

/// Word-problem context for one group.
class GroupContext {
 public:
  static GroupContext free_group(int rank);
  /// orders[i] = 0 for a Z component, else the finite order.
  static GroupContext abelian(std::vector<int> orders);
  static GroupContext klein_bottle();
  /// Requires piece_check to pass; throws otherwise.
  static GroupContext small_cancellation(Presentation p);
  /// Sound partial oracle: free reduction / abelianization only.
  static GroupContext presented(Presentation p);

  Verdict equal(const Word& u, const Word& v) const;
  Verdict is_identity(const Word& u) const { return equal(u, identity_word()); }
  bool decides() const { return kind_ != Kind::Presented; }
  int rank() const;

 private:
  enum class Kind { Free, Abelian, Klein, SmallCancellation, Presented };
  GroupContext(Kind k, int rank) : kind_(k), rank_(rank) {}
  Word identity_word() const;

  Kind kind_;
  int rank_;
  std::vector<int> orders_;
  std::optional<Presentation> pres_;
};

}  // namespace gtw
