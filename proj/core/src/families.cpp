#include "foxhom/families.hpp"

#include <sstream>

namespace foxhom {

const char* to_string(Family f) {
  switch (f) {
    case Family::BaumslagSolitar: return "bs";
    case Family::BaumslagStrebel: return "bstrebel";
    case Family::BaumslagGersten: return "bgersten";
    case Family::Meskin: return "meskin";
  }
  return "?";
}

const char* to_string(MatchesPaper m) {
  switch (m) {
    case MatchesPaper::Yes: return "yes";
    case MatchesPaper::AvoidabilityOnly: return "no-but-avoidability-agrees";
    case MatchesPaper::NotStated: return "not-stated";
  }
  return "?";
}

std::string to_string(const FamilyInstance& f) {
  std::ostringstream os;
  os << to_string(f.family) << '(';
  if (f.family == Family::Meskin) {
    for (std::size_t i = 0; i < f.exponents.size(); ++i) {
      if (i) os << ',';
      os << f.exponents[i];
    }
  } else {
    os << f.m << ',' << f.n;
    if (f.family == Family::BaumslagStrebel) os << ",k=" << f.k;
  }
  os << ')';
  return os.str();
}

Presentation build(const FamilyInstance& f) {
  Presentation p;
  switch (f.family) {
    case Family::BaumslagSolitar:
    case Family::BaumslagStrebel: {
      if (f.m == 0 || f.n == 0) {
        throw Error(ErrorKind::DegenerateParameters, "m and n must be nonzero");
      }
      std::int64_t k = f.family == Family::BaumslagSolitar ? 1 : f.k;
      if (k < 1) throw Error(ErrorKind::DegenerateParameters, "k must be at least 1");
      p.generators = {"a", "t"};
      p.relators = {Word::from_syllables({{1, k}, {0, f.m}, {1, -k}, {0, -f.n}})};
      break;
    }
    case Family::BaumslagGersten: {
      if (f.m == 0 || f.n == 0) {
        throw Error(ErrorKind::DegenerateParameters, "m and n must be nonzero");
      }
      p.generators = {"a", "t"};
      p.relators = {Word::from_syllables(
          {{1, 1}, {0, 1}, {1, -1}, {0, f.m}, {1, 1}, {0, -1}, {1, -1}, {0, -f.n}})};
      break;
    }
    case Family::Meskin: {
      if (f.exponents.size() < 2) {
        throw Error(ErrorKind::DegenerateParameters, "meskin needs at least two generators");
      }
      std::vector<Syllable> rel;
      for (std::size_t i = 0; i < f.exponents.size(); ++i) {
        if (f.exponents[i] < 1) {
          throw Error(ErrorKind::DegenerateParameters, "meskin exponents must be at least 1");
        }
        p.generators.push_back("s" + std::to_string(i + 1));
        rel.push_back({static_cast<int>(i), f.exponents[i]});
      }
      p.relators = {Word::from_syllables(std::move(rel))};
      break;
    }
  }
  validate(p);
  return p;
}

AbelianGroup bs_h1_closed_form(std::int64_t m, std::int64_t n) {
  if (m == 0 || n == 0) {
    throw Error(ErrorKind::DegenerateParameters, "m and n must be nonzero");
  }
  BigInt diff = big_abs(BigInt(m) - BigInt(n));
  if (diff == 0) return AbelianGroup(2, {});
  if (diff == 1) return AbelianGroup(1, {});
  return AbelianGroup(1, {diff});
}

AbelianGroup one_relator_h1(const Presentation& p) {
  if (p.relators.size() != 1) {
    throw Error(ErrorKind::NotOneRelator,
                "expected exactly one relator, got " + std::to_string(p.relators.size()));
  }
  const std::size_t n = p.generators.size();
  BigInt d = 0;
  for (std::size_t g = 0; g < n; ++g) {
    d = big_gcd(d, BigInt(p.relators[0].exponent_sum(static_cast<int>(g))));
  }
  if (d == 0) return AbelianGroup(n, {});
  if (d == 1) return AbelianGroup(n - 1, {});
  return AbelianGroup(n - 1, {d});
}

namespace {

BigInt meskin_gcd(const FamilyInstance& f) {
  BigInt d = 0;
  for (std::int64_t k : f.exponents) d = big_gcd(d, BigInt(k));
  return d;
}

bool odd(std::int64_t v) { return v % 2 != 0; }

}  // namespace

bool is_non_avoidable(const FamilyInstance& f) {
  // Z_d has a Z_2 summand iff d = 2 (mod 4), so the boundary is a mod-4
  // condition, not d = 2: Z_6 = Z_2 x Z_3 already fails to avoid.
  BigInt d = f.family == Family::Meskin ? meskin_gcd(f) : big_abs(BigInt(f.m) - BigInt(f.n));
  return d % 4 == 2;
}

PermRep paper_theta(const FamilyInstance& f) {
  if (!is_non_avoidable(f)) {
    throw Error(ErrorKind::PreconditionFailed,
                to_string(f) + " is already 2-avoiding; no representation is selected");
  }
  Presentation p = build(f);
  const Permutation swap = Permutation::transposition(2, 0, 1);
  const Permutation id(2);
  switch (f.family) {
    case Family::BaumslagSolitar:
    case Family::BaumslagStrebel: {
      std::int64_t k = f.family == Family::BaumslagSolitar ? 1 : f.k;
      // |m-n| = 2 forces m and n to share parity
      if (odd(f.n) && odd(k)) return PermRep::validate(p, {id, swap});
      return PermRep::validate(p, {swap, id});
    }
    case Family::BaumslagGersten:
      return PermRep::validate(p, {swap, swap});
    case Family::Meskin:
      return PermRep::validate(p, std::vector<Permutation>(f.exponents.size(), swap));
  }
  throw Error(ErrorKind::PreconditionFailed, "unreachable family tag");
}

std::optional<AbelianGroup> paper_claim(const FamilyInstance& f) {
  switch (f.family) {
    case Family::BaumslagSolitar:
    case Family::BaumslagStrebel: {
      if (f.m < 1 || f.n < 1 || big_abs(BigInt(f.m) - BigInt(f.n)) != 2) return std::nullopt;
      std::int64_t s = std::min(f.m, f.n);
      std::int64_t k = f.family == Family::BaumslagSolitar ? 1 : f.k;
      if (odd(s) && odd(k)) return AbelianGroup(1, {BigInt(4) * (s + 1)});
      return AbelianGroup(1, {});
    }
    case Family::BaumslagGersten: {
      // only the m = n + 2 orientation is worked out in the write-up
      if (f.n < 1 || f.m != f.n + 2) return std::nullopt;
      if (odd(f.n)) return AbelianGroup(1, {4});
      return AbelianGroup(1, {});
    }
    case Family::Meskin: {
      if (meskin_gcd(f) != 2) return std::nullopt;
      return AbelianGroup(2, {});
    }
  }
  return std::nullopt;
}

std::vector<ScanRow> scan_family(const std::vector<FamilyInstance>& instances) {
  std::vector<ScanRow> rows;
  rows.reserve(instances.size());
  for (const FamilyInstance& f : instances) {
    ScanRow row;
    row.instance = f;
    Presentation p = build(f);
    row.h1 = one_relator_h1(p);
    row.two_avoiding = is_two_avoiding(row.h1);

    bool proper_power = p.relators[0].cyclically_reduce().core.proper_power_root().has_value();
    bool gcd_violation =
        f.family == Family::BaumslagStrebel &&
        big_gcd(BigInt(f.m) * BigInt(f.n), BigInt(f.k)) != 1;
    row.hypothesis_violation = proper_power || gcd_violation;

    std::optional<PermRep> rep;
    bool paper_choice = false;
    if (is_non_avoidable(f)) {
      rep = paper_theta(f);
      paper_choice = true;
    } else if (auto found = find_two_avoiding_index2(p)) {
      rep = found->rep;
    }
    if (rep) {
      KernelReport kr;
      kr.theta_text = to_string(*rep, p);
      kr.theta_is_paper_choice = paper_choice;
      kr.h1_fox = subgroup_h1_fox(p, *rep);
      kr.h1_rs = subgroup_h1_rs(p, *rep);
      kr.h1_chain = cover_chain_h1(p, *rep);
      kr.methods_agree = kr.h1_fox == kr.h1_rs && kr.h1_rs == kr.h1_chain;
      kr.two_avoiding = is_two_avoiding(kr.h1_fox);
      row.kernel = std::move(kr);
    }

    row.claim = paper_claim(f);
    if (!row.claim || !row.kernel) {
      row.matches_paper = MatchesPaper::NotStated;
    } else if (*row.claim == row.kernel->h1_fox) {
      row.matches_paper = MatchesPaper::Yes;
    } else {
      row.matches_paper = MatchesPaper::AvoidabilityOnly;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<FamilyInstance> instance_grid(Family family, ParamRange m, ParamRange n,
                                          ParamRange k) {
  if (family == Family::Meskin) {
    throw Error(ErrorKind::PreconditionFailed, "use meskin_grid for meskin scans");
  }
  std::vector<FamilyInstance> out;
  for (std::int64_t mv = m.lo; mv <= m.hi; ++mv) {
    if (mv == 0) continue;
    for (std::int64_t nv = n.lo; nv <= n.hi; ++nv) {
      if (nv == 0) continue;
      if (family == Family::BaumslagStrebel) {
        for (std::int64_t kv = std::max<std::int64_t>(k.lo, 1); kv <= k.hi; ++kv) {
          out.push_back({family, mv, nv, kv, {}});
        }
      } else {
        out.push_back({family, mv, nv, 1, {}});
      }
    }
  }
  return out;
}

std::vector<FamilyInstance> meskin_grid(ParamRange n, const std::vector<std::int64_t>& values) {
  std::vector<FamilyInstance> out;
  if (values.empty()) return out;
  for (std::int64_t len = std::max<std::int64_t>(n.lo, 2); len <= n.hi; ++len) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
    while (true) {
      FamilyInstance f;
      f.family = Family::Meskin;
      for (std::size_t i : idx) f.exponents.push_back(values[i]);
      out.push_back(std::move(f));
      std::size_t pos = idx.size();
      while (pos > 0 && idx[pos - 1] + 1 == values.size()) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
  }
  return out;
}

}  // namespace foxhom
