#include "doctest.h"

#include "foxhom/families.hpp"

using namespace foxhom;

namespace {

const Permutation kSwap = Permutation::transposition(2, 0, 1);

std::vector<ScanRow> scan_one(const FamilyInstance& f) { return scan_family({f}); }

}  // namespace

TEST_CASE("family constructors") {
  CHECK(to_string(build({Family::BaumslagSolitar, 2, 4, 1, {}})) ==
        "< a, t | t a^2 t^-1 a^-4 >");
  CHECK(to_string(build({Family::BaumslagStrebel, 2, 4, 3, {}})) ==
        "< a, t | t^3 a^2 t^-3 a^-4 >");
  CHECK(to_string(build({Family::BaumslagGersten, 5, 3, 1, {}})) ==
        "< a, t | t a t^-1 a^5 t a^-1 t^-1 a^-3 >");
  CHECK(to_string(build({Family::Meskin, 0, 0, 1, {2, 2}})) == "< s1, s2 | s1^2 s2^2 >");

  CHECK_THROWS_AS((void)build({Family::BaumslagSolitar, 0, 4, 1, {}}), Error);
  CHECK_THROWS_AS((void)build({Family::BaumslagStrebel, 2, 4, 0, {}}), Error);
  CHECK_THROWS_AS((void)build({Family::Meskin, 0, 0, 1, {2}}), Error);
  CHECK_THROWS_AS((void)build({Family::Meskin, 0, 0, 1, {2, 0}}), Error);
}

TEST_CASE("closed-form abelianization") {
  CHECK(bs_h1_closed_form(2, 4) == AbelianGroup(1, {2}));
  CHECK(bs_h1_closed_form(3, 3) == AbelianGroup::free(2));
  CHECK(bs_h1_closed_form(5, 4) == AbelianGroup(1, {}));
  CHECK(bs_h1_closed_form(-3, -5) == AbelianGroup(1, {2}));
}

TEST_CASE("one_relator_h1") {
  CHECK(one_relator_h1(build({Family::BaumslagGersten, 4, 2, 1, {}})) == AbelianGroup(1, {2}));
  CHECK(one_relator_h1(parse_presentation("< s1, s2, s3 | s1^2 s2^4 s3^6 >")) ==
        AbelianGroup(2, {2}));
  // relator in the commutator subgroup: full free rank survives
  CHECK(one_relator_h1(parse_presentation("< a, t | a t a^-1 t^-1 >")) == AbelianGroup::free(2));
  CHECK_THROWS_AS((void)one_relator_h1(parse_presentation("< a, t | >")), Error);
}

TEST_CASE("one_relator_h1 agrees with the generic cokernel route") {
  for (std::int64_t m = -4; m <= 4; ++m) {
    for (std::int64_t n = -4; n <= 4; ++n) {
      if (m == 0 || n == 0) continue;
      for (Family fam : {Family::BaumslagSolitar, Family::BaumslagGersten}) {
        Presentation p = build({fam, m, n, 1, {}});
        CHECK(one_relator_h1(p) ==
              abelian_group_from_presentation_matrix(abelianized_relator_matrix(p)));
        CHECK(one_relator_h1(p) == bs_h1_closed_form(m, n));
      }
    }
  }
}

TEST_CASE("non-avoidability classification") {
  CHECK(is_non_avoidable({Family::BaumslagSolitar, 4, 6, 1, {}}));
  CHECK(!is_non_avoidable({Family::BaumslagStrebel, 3, 7, 2, {}}));  // Z_4 avoids
  CHECK(is_non_avoidable({Family::BaumslagSolitar, 1, 7, 1, {}}));   // Z_6 does not
  CHECK(is_non_avoidable({Family::Meskin, 0, 0, 1, {4, 6}}));
  CHECK(!is_non_avoidable({Family::Meskin, 0, 0, 1, {4, 8}}));  // gcd 4

  // classification matches the computed abelianization, including negatives
  for (std::int64_t m = -5; m <= 5; ++m) {
    for (std::int64_t n = -5; n <= 5; ++n) {
      if (m == 0 || n == 0) continue;
      for (std::int64_t k : {1, 2}) {
        FamilyInstance f{Family::BaumslagStrebel, m, n, k, {}};
        CHECK(is_non_avoidable(f) == !is_two_avoiding(one_relator_h1(build(f))));
      }
    }
  }
}

TEST_CASE("paper_theta dispatch") {
  // both parameters even: a -> swap, t -> id
  PermRep even = paper_theta({Family::BaumslagSolitar, 4, 6, 1, {}});
  CHECK(even.image(0) == kSwap);
  CHECK(even.image(1) == Permutation(2));
  // both odd, k odd: a -> id, t -> swap
  PermRep odd = paper_theta({Family::BaumslagSolitar, 3, 5, 1, {}});
  CHECK(odd.image(0) == Permutation(2));
  CHECK(odd.image(1) == kSwap);
  // odd parameters but even k fall back to a -> swap, t -> id
  PermRep case3 = paper_theta({Family::BaumslagStrebel, 3, 5, 2, {}});
  CHECK(case3.image(0) == kSwap);
  CHECK(case3.image(1) == Permutation(2));

  PermRep bg = paper_theta({Family::BaumslagGersten, 5, 3, 1, {}});
  CHECK(bg.image(0) == kSwap);
  CHECK(bg.image(1) == kSwap);

  PermRep meskin = paper_theta({Family::Meskin, 0, 0, 1, {2, 2}});
  CHECK(meskin.image(0) == kSwap);
  CHECK(meskin.image(1) == kSwap);

  CHECK_THROWS_AS((void)paper_theta({Family::BaumslagSolitar, 2, 5, 1, {}}), Error);
}

TEST_CASE("paper_theta is valid and its kernel avoids Z_2 on the non-avoidable corpus") {
  std::vector<FamilyInstance> corpus;
  for (std::int64_t n = 1; n <= 8; ++n) {
    corpus.push_back({Family::BaumslagSolitar, n + 2, n, 1, {}});
    corpus.push_back({Family::BaumslagSolitar, n, n + 2, 1, {}});
    corpus.push_back({Family::BaumslagGersten, n + 2, n, 1, {}});
    corpus.push_back({Family::BaumslagGersten, n, n + 2, 1, {}});
    for (std::int64_t k = 1; k <= 4; ++k) {
      corpus.push_back({Family::BaumslagStrebel, n, n + 2, k, {}});
    }
  }
  corpus.push_back({Family::Meskin, 0, 0, 1, {2, 4}});
  corpus.push_back({Family::Meskin, 0, 0, 1, {2, 4, 6}});
  // negative parameters are allowed
  corpus.push_back({Family::BaumslagSolitar, -4, -6, 1, {}});
  corpus.push_back({Family::BaumslagSolitar, -3, -1, 1, {}});
  // the rest of the non-avoidable locus, |m - n| = 2 (mod 4)
  corpus.push_back({Family::BaumslagSolitar, 1, 7, 1, {}});
  corpus.push_back({Family::BaumslagSolitar, 4, 10, 1, {}});
  corpus.push_back({Family::BaumslagStrebel, 1, 7, 2, {}});
  corpus.push_back({Family::BaumslagGersten, 1, 7, 1, {}});
  corpus.push_back({Family::Meskin, 0, 0, 1, {6, 12}});
  for (const FamilyInstance& f : corpus) {
    REQUIRE(is_non_avoidable(f));
    Presentation p = build(f);
    PermRep rep = paper_theta(f);  // validation happens inside
    AbelianGroup kernel = subgroup_h1_fox(p, rep);
    CAPTURE(to_string(f));
    CHECK(is_two_avoiding(kernel));
  }
}

TEST_CASE("scan rows carry the documented fields") {
  // the stated odd-case value: kernel Z + Z_{8p} at n = 2p-1, k odd
  for (std::int64_t p : {1, 2, 4}) {
    FamilyInstance f{Family::BaumslagStrebel, 2 * p + 1, 2 * p - 1, 3, {}};
    ScanRow row = scan_one(f)[0];
    REQUIRE(row.kernel.has_value());
    CHECK(row.kernel->theta_is_paper_choice);
    CHECK(row.kernel->methods_agree);
    CHECK(row.kernel->h1_fox == AbelianGroup(1, {8 * p}));
    CHECK(row.matches_paper == MatchesPaper::Yes);
    CHECK(row.hypothesis_violation);  // gcd(mn, k) = 3 != 1
  }

  // even case: computed Z^2 vs stated Z
  ScanRow even = scan_one({Family::BaumslagSolitar, 4, 6, 1, {}})[0];
  REQUIRE(even.kernel.has_value());
  CHECK(even.kernel->h1_fox == AbelianGroup::free(2));
  CHECK(even.claim == AbelianGroup(1, {}));
  CHECK(even.matches_paper == MatchesPaper::AvoidabilityOnly);
  CHECK(!even.hypothesis_violation);

  // avoidable instance: no claim, kernel from the search when one exists
  ScanRow avoidable = scan_one({Family::BaumslagSolitar, 2, 5, 1, {}})[0];
  CHECK(avoidable.two_avoiding);
  CHECK(avoidable.matches_paper == MatchesPaper::NotStated);
  REQUIRE(avoidable.kernel.has_value());
  CHECK(!avoidable.kernel->theta_is_paper_choice);

  CHECK(scan_family({}).empty());
}

TEST_CASE("k = 1 rows reproduce the base family rows") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (auto [m, nn] : {std::pair{n + 2, n}, std::pair{n, n + 2}}) {
      ScanRow bs = scan_one({Family::BaumslagSolitar, m, nn, 1, {}})[0];
      ScanRow strebel = scan_one({Family::BaumslagStrebel, m, nn, 1, {}})[0];
      CHECK(bs.h1 == strebel.h1);
      CHECK(bs.two_avoiding == strebel.two_avoiding);
      CHECK(bs.hypothesis_violation == strebel.hypothesis_violation);
      CHECK(bs.claim == strebel.claim);
      CHECK(bs.matches_paper == strebel.matches_paper);
      REQUIRE(bs.kernel.has_value());
      REQUIRE(strebel.kernel.has_value());
      CHECK(bs.kernel->theta_text == strebel.kernel->theta_text);
      CHECK(bs.kernel->h1_fox == strebel.kernel->h1_fox);
      CHECK(bs.kernel->h1_rs == strebel.kernel->h1_rs);
      CHECK(bs.kernel->h1_chain == strebel.kernel->h1_chain);
      CHECK(bs.kernel->two_avoiding == strebel.kernel->two_avoiding);
    }
  }
}

TEST_CASE("instance grids") {
  std::vector<FamilyInstance> grid =
      instance_grid(Family::BaumslagSolitar, {-1, 1}, {2, 3}, {});
  REQUIRE(grid.size() == 4);  // m = -1, 1 (0 skipped) x n = 2, 3
  CHECK(grid[0].m == -1);
  CHECK(grid[0].n == 2);
  CHECK(grid[3].m == 1);
  CHECK(grid[3].n == 3);

  std::vector<FamilyInstance> meskin = meskin_grid({2, 3}, {2, 4});
  REQUIRE(meskin.size() == 4 + 8);
  CHECK(meskin[0].exponents == std::vector<std::int64_t>{2, 2});
  CHECK(meskin[1].exponents == std::vector<std::int64_t>{2, 4});
  CHECK(meskin.back().exponents == std::vector<std::int64_t>{4, 4, 4});

  CHECK(instance_grid(Family::BaumslagSolitar, {1, 0}, {2, 3}, {}).empty());
}
