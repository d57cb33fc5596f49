#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foxhom/abelian_group.hpp"
#include "foxhom/covers.hpp"
#include "foxhom/presentation.hpp"

namespace foxhom {

enum class Family {
  BaumslagSolitar,   // < a,t | t a^m t^-1 a^-n >
  BaumslagStrebel,   // < a,t | t^k a^m t^-k a^-n >
  BaumslagGersten,   // < a,t | t a t^-1 a^m t a^-1 t^-1 a^-n >
  Meskin,            // < s_1,...,s_n | s_1^k1 ... s_n^kn >
};

const char* to_string(Family f);

struct FamilyInstance {
  Family family = Family::BaumslagSolitar;
  std::int64_t m = 0, n = 0;
  std::int64_t k = 1;                    // BaumslagStrebel only
  std::vector<std::int64_t> exponents;   // Meskin only

  friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;
};

std::string to_string(const FamilyInstance& f);

// Throws DegenerateParameters when m or n is 0, k < 1, or a Meskin instance
// has fewer than two generators or an exponent < 1.
Presentation build(const FamilyInstance& f);

// Z + Z_{|m-n|} for |m-n| >= 2, Z for |m-n| = 1, Z^2 for m = n.
AbelianGroup bs_h1_closed_form(std::int64_t m, std::int64_t n);

// H1 from the gcd d of the relator's exponent sums:
// Z^(n-1) + Z_d when d >= 2, Z^(n-1) when d = 1, Z^n when all sums vanish.
AbelianGroup one_relator_h1(const Presentation& p);

// Whether the group itself fails to avoid Z_2: |m-n| = 2 (mod 4) for the
// two-generator families, gcd(k_1,...,k_n) = 2 (mod 4) for Meskin. Agrees
// with is_two_avoiding(one_relator_h1(build(f))) negated by construction of
// the abelianization.
bool is_non_avoidable(const FamilyInstance& f);

// The index-2 representation chosen per case for non-avoidable instances:
// two-generator families with both parameters odd and k odd take
// (a -> id, t -> swap); the other Baumslag-Solitar/Strebel cases take
// (a -> swap, t -> id); Baumslag-Gersten maps both generators to the swap;
// Meskin maps every generator to the swap. Throws PreconditionFailed when
// the instance is already 2-avoiding.
PermRep paper_theta(const FamilyInstance& f);

// H1 of the kernel as reported in the literature, where a value is stated
// for this exact parameter shape (positive parameters; the mirrored
// Baumslag-Gersten orientation has no stated value).
std::optional<AbelianGroup> paper_claim(const FamilyInstance& f);

enum class MatchesPaper { Yes, AvoidabilityOnly, NotStated };
const char* to_string(MatchesPaper m);

struct KernelReport {
  std::string theta_text;
  bool theta_is_paper_choice = false;
  AbelianGroup h1_fox, h1_rs, h1_chain;
  bool methods_agree = false;
  bool two_avoiding = false;
};

struct ScanRow {
  FamilyInstance instance;
  AbelianGroup h1;
  bool two_avoiding = false;
  // gcd(m*n, k) != 1 for Baumslag-Strebel, or a proper-power relator.
  bool hypothesis_violation = false;
  std::optional<KernelReport> kernel;
  std::optional<AbelianGroup> claim;
  MatchesPaper matches_paper = MatchesPaper::NotStated;
};

// One row per instance, in input order. Non-avoidable instances use
// paper_theta; the rest take the first two-avoiding kernel found.
std::vector<ScanRow> scan_family(const std::vector<FamilyInstance>& instances);

struct ParamRange {
  std::int64_t lo = 0, hi = -1;  // inclusive; empty when lo > hi
};

// Lexicographic instance grids backing the CLI scan flags. For Meskin, all
// exponent tuples over `values` with length in `n`.
std::vector<FamilyInstance> instance_grid(Family family, ParamRange m, ParamRange n,
                                          ParamRange k);
std::vector<FamilyInstance> meskin_grid(ParamRange n, const std::vector<std::int64_t>& values);

}  // namespace foxhom
