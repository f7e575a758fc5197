#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtw/products.hpp"

namespace gtw {

/// Twist a generator of a centerless factor by a central element of
/// another factor: a1 -> t a1 (free / orientable target), or a1 -> t a1,
/// a2 -> t^-1 a2 (nonorientable target). Throws when the source factor has
/// trivial center or the kinds do not match the recipe.
ProductEndo central_twist(const ProductGroup& g, int source_factor, int target_factor);

struct GrowthTable {
  std::vector<std::pair<int, int>> entries;  // (length bound, rank)

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (entries[i].second <= entries[i - 1].second) return false;
    return entries.size() >= 2;
  }
};

struct CentralTwistReport {
  std::string case_id;
  std::string group_name;
  int group_rank = 0;
  /// Exact fixed-subgroup rank, when a coset-table argument applies.
  std::optional<int> fix_rank_exact;
  /// Approximation ranks otherwise (evidence of unbounded growth).
  GrowthTable growth;
  bool exceeds_group_rank = false;
};

/// (Z/2) x F2 twist: exact fixed rank 4 via index-2 kernel.
CentralTwistReport central_twist_z2_f2();
/// Z x F2 twist: approximation ranks over the given length bounds.
CentralTwistReport central_twist_z_f2(const std::vector<int>& lengths);
/// (Z/2) x NS3 twist: exact fixed rank via coset enumeration + rewriting.
CentralTwistReport central_twist_z2_ns3();

struct RankCertificate {
  int lower = 0;  // abelianization of the claimed structure
  int upper = 0;  // generator count
  bool exact() const { return lower == upper; }
};

struct NonCompressedReport {
  std::string case_id;
  std::string group_name;
  int group_rank = 0;
  bool generators_fixed = false;  // each listed Fix generator is oracle-fixed
  bool contained_in_k = false;    // each Fix generator rewritten in K, oracle-equal
  RankCertificate fix_rank;
  RankCertificate k_rank;
  bool strict = false;  // k_rank.upper < fix_rank.lower
  bool ok() const { return generators_fixed && contained_in_k && strict; }
};

/// case_id in {euc-l2q1, euc-l1p1q2, hyp-FF, hyp-SS, hyp-NN, hyp-mixed}.
NonCompressedReport non_compressed_witness(const std::string& case_id);

std::vector<std::string> non_compressed_case_ids();

struct NonInertReport {
  std::string case_id;
  std::string group_name;
  /// rank of the folded first-factor shadow of certified fixed elements of
  /// <K> at each length bound; strict growth = evidence of infinite
  /// generation of Fix intersect <K>.
  GrowthTable growth;
  bool fix_compressed_probe = false;        // F2 x Z final case only
  bool intersection_trivial_certified = false;  // NS3 cases: Fix phi2 meets <c> trivially
};

/// case_id in {Fr-NS3, Sg-NS3, NSk-NS3, F2-Z-final}.
NonInertReport non_inert_witness(const std::string& case_id, const std::vector<int>& lengths);

std::vector<std::string> non_inert_case_ids();

struct ProductBhEntry {
  std::string endo_key;
  int rank_lower_bound = 0;  // abelianized image of the certified bucket
};

struct ProductBhReport {
  bool passed = true;
  int group_rank = 0;
  std::vector<ProductBhEntry> entries;
};

/// Euclidean/hyperbolic: every catalogued endomorphism's certified-fix
/// abelianized rank stays <= rank(G). Mixed groups are rejected here; use
/// the central-twist reports for the expected violations.
ProductBhReport bh_products_check(const ProductGroup& g, const std::vector<ProductEndo>& catalogue,
                                  int max_length);

}  // namespace gtw
