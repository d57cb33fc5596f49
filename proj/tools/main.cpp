// foxhom CLI: subgroup homology of finitely presented groups via Fox
// calculus, Reidemeister-Schreier rewriting and integer Smith normal form.
//
// Results are printed as a JSON envelope on stdout; warnings are mirrored on
// stderr. Exit codes: 0 ok, 1 domain error, 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "foxhom/covers.hpp"
#include "foxhom/families.hpp"
#include "foxhom/group_ring.hpp"
#include "foxhom/smith.hpp"

using json = nlohmann::ordered_json;
using namespace foxhom;

namespace {

json big_to_json(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return v.str();
}

json group_to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const BigInt& n : g.torsion()) torsion.push_back(big_to_json(n));
  return json{{"free_rank", g.free_rank()}, {"torsion", torsion}};
}

std::vector<std::string> relator_warnings(const Presentation& p) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    Word core = p.relators[j].cyclically_reduce().core;
    if (auto root = core.proper_power_root()) {
      out.push_back("relator " + std::to_string(j + 1) + " is a proper power (" +
                    to_string(p, root->root) + ")^" + std::to_string(root->exponent) +
                    "; the group has torsion and 2-dimensionality hypotheses fail");
    }
  }
  return out;
}

int emit(const std::string& command, const json& result,
         const std::vector<std::string>& warnings) {
  json envelope;
  envelope["command"] = command;
  envelope["result"] = result;
  envelope["warnings"] = warnings;
  envelope["status"] = 0;
  std::cout << envelope.dump(2) << "\n";
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  return 0;
}

int emit_error(const std::string& command, const Error& e) {
  int status = is_parse_kind(e.kind()) ? 2 : 1;
  json detail{{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    detail["line"] = pe->line();
    detail["column"] = pe->column();
  }
  json envelope;
  envelope["command"] = command;
  envelope["error"] = detail;
  envelope["warnings"] = json::array();
  envelope["status"] = status;
  std::cout << envelope.dump(2) << "\n";
  std::cerr << "error: " << e.what() << "\n";
  return status;
}

ParamRange parse_range(const std::string& text) {
  auto fail = [&]() -> void {
    throw ParseError(ErrorKind::SyntaxError, "bad range '" + text + "': expected N or LO..HI", 1,
                     1);
  };
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    try {
      std::size_t used = 0;
      std::int64_t v = std::stoll(s, &used);
      if (used != s.size()) fail();
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail();
    }
    return 0;
  };
  std::size_t dots = text.find("..");
  ParamRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) fail();
  return r;
}

std::vector<std::int64_t> parse_value_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.find("..") != std::string::npos && text.find(',') == std::string::npos) {
    ParamRange r = parse_range(text);
    for (std::int64_t v = r.lo; v <= r.hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    std::string cell =
        text.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
    ParamRange r = parse_range(cell);
    for (std::int64_t v = r.lo; v <= r.hi; ++v) out.push_back(v);
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return out;
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::BaumslagSolitar, Family::BaumslagStrebel, Family::BaumslagGersten,
                   Family::Meskin}) {
    if (name == to_string(f)) return f;
  }
  throw ParseError(ErrorKind::SyntaxError,
                   "unknown family '" + name + "' (expected bs, bstrebel, bgersten, meskin)", 1,
                   1);
}

json row_to_json(const ScanRow& row) {
  json r;
  r["family"] = to_string(row.instance.family);
  if (row.instance.family == Family::Meskin) {
    r["exponents"] = row.instance.exponents;
  } else {
    r["m"] = row.instance.m;
    r["n"] = row.instance.n;
    if (row.instance.family == Family::BaumslagStrebel) r["k"] = row.instance.k;
  }
  r["h1"] = group_to_json(row.h1);
  r["two_avoiding"] = row.two_avoiding;
  r["hypothesis_violation"] = row.hypothesis_violation;
  if (row.kernel) {
    r["theta"] = row.kernel->theta_text;
    r["theta_is_paper_choice"] = row.kernel->theta_is_paper_choice;
    r["kernel_h1_fox"] = group_to_json(row.kernel->h1_fox);
    r["kernel_h1_rs"] = group_to_json(row.kernel->h1_rs);
    r["kernel_h1_chain"] = group_to_json(row.kernel->h1_chain);
    r["methods_agree"] = row.kernel->methods_agree;
    r["kernel_two_avoiding"] = row.kernel->two_avoiding;
  } else {
    r["theta"] = nullptr;
  }
  r["paper_claim"] = row.claim ? json(row.claim->to_string()) : json(nullptr);
  r["matches_paper"] = to_string(row.matches_paper);
  return r;
}

std::string row_to_tsv(const ScanRow& row) {
  std::ostringstream os;
  os << to_string(row.instance.family) << '\t';
  if (row.instance.family == Family::Meskin) {
    os << "-\t-\t-\t";
    for (std::size_t i = 0; i < row.instance.exponents.size(); ++i) {
      if (i) os << ',';
      os << row.instance.exponents[i];
    }
  } else {
    os << row.instance.m << '\t' << row.instance.n << '\t';
    if (row.instance.family == Family::BaumslagStrebel) {
      os << row.instance.k;
    } else {
      os << '-';
    }
    os << "\t-";
  }
  os << '\t' << row.h1.to_string() << '\t' << (row.two_avoiding ? "yes" : "no") << '\t'
     << (row.hypothesis_violation ? "yes" : "no") << '\t';
  if (row.kernel) {
    os << row.kernel->theta_text << '\t' << row.kernel->h1_fox.to_string() << '\t'
       << row.kernel->h1_rs.to_string() << '\t' << row.kernel->h1_chain.to_string() << '\t'
       << (row.kernel->methods_agree ? "yes" : "no") << '\t'
       << (row.kernel->two_avoiding ? "yes" : "no") << '\t';
  } else {
    os << "-\t-\t-\t-\t-\t-\t";
  }
  os << (row.claim ? row.claim->to_string() : "-") << '\t' << to_string(row.matches_paper);
  return os.str();
}

constexpr const char* kTsvHeader =
    "family\tm\tn\tk\texponents\th1\ttwo_avoiding\thypothesis_violation\ttheta\t"
    "kernel_h1_fox\tkernel_h1_rs\tkernel_h1_chain\tmethods_agree\tkernel_two_avoiding\t"
    "paper_claim\tmatches_paper";

struct ScanArgs {
  std::string family;
  std::string m, n, k = "1..1";
  std::string exponents;
  std::string format = "json";
  std::int64_t max_exponent = 10'000;
};

int run_scan(const ScanArgs& args) {
  Family family = parse_family(args.family);
  std::vector<FamilyInstance> instances;
  if (family == Family::Meskin) {
    if (args.exponents.empty()) {
      throw ParseError(ErrorKind::SyntaxError, "meskin scans need --exponents", 1, 1);
    }
    std::vector<std::int64_t> values = parse_value_list(args.exponents);
    for (std::int64_t v : values) {
      if (v > args.max_exponent) {
        throw Error(ErrorKind::TooLarge,
                    "exponent " + std::to_string(v) + " exceeds --max-exponent " +
                        std::to_string(args.max_exponent));
      }
    }
    if (args.n.empty()) {
      // no length range: the list is one exact tuple
      FamilyInstance f;
      f.family = family;
      f.exponents = values;
      instances.push_back(std::move(f));
    } else {
      instances = meskin_grid(parse_range(args.n), values);
    }
  } else {
    if (args.m.empty() || args.n.empty()) {
      throw ParseError(ErrorKind::SyntaxError, "scan needs --m and --n", 1, 1);
    }
    ParamRange m = parse_range(args.m), n = parse_range(args.n), k = parse_range(args.k);
    for (std::int64_t v : {m.lo, m.hi, n.lo, n.hi, k.hi}) {
      if (std::llabs(v) > args.max_exponent) {
        throw Error(ErrorKind::TooLarge, "parameter " + std::to_string(v) +
                                             " exceeds --max-exponent " +
                                             std::to_string(args.max_exponent));
      }
    }
    instances = instance_grid(family, m, n, k);
  }

  std::vector<ScanRow> rows = scan_family(instances);

  std::vector<std::string> warnings;
  std::size_t disagreements = 0, violations = 0;
  for (const ScanRow& row : rows) {
    if (row.matches_paper == MatchesPaper::AvoidabilityOnly) ++disagreements;
    if (row.hypothesis_violation) ++violations;
  }
  if (disagreements) {
    warnings.push_back(std::to_string(disagreements) +
                       " row(s) differ from the previously reported kernel H1; the "
                       "2-avoidability verdicts agree (see matches_paper column)");
  }
  if (violations) {
    warnings.push_back(std::to_string(violations) +
                       " row(s) violate a standing hypothesis (proper-power relator or "
                       "gcd(m*n,k) != 1)");
  }

  if (args.format == "tsv") {
    std::cout << kTsvHeader << "\n";
    for (const ScanRow& row : rows) std::cout << row_to_tsv(row) << "\n";
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    return 0;
  }
  json result;
  result["count"] = rows.size();
  json jrows = json::array();
  for (const ScanRow& row : rows) jrows.push_back(row_to_json(row));
  result["rows"] = jrows;
  return emit("scan", result, warnings);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first homology of finite-index subgroups of finitely presented groups"};
  app.require_subcommand(1);

  std::string pres_text, rep_text, matrix_text, method = "all", generator_name;
  std::size_t relator_index = 0;
  bool witnesses = false;
  ScanArgs scan_args;

  auto* h1 = app.add_subcommand("h1", "abelianization and the Z_2-summand verdict");
  h1->add_option("presentation", pres_text, "presentation text, e.g. \"< a,t | t a^2 t^-1 a^-4 >\"")
      ->required();

  auto* fox = app.add_subcommand("fox", "free-ring derivative of a relator");
  fox->add_option("presentation", pres_text)->required();
  fox->add_option("--relator", relator_index, "0-based relator index")->capture_default_str();
  fox->add_option("--generator", generator_name, "generator to differentiate by")->required();

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", matrix_text, "rows ';'-separated, entries ','-separated")->required();
  snf->add_flag("--witnesses", witnesses, "include the unimodular P and Q");

  auto* cover = app.add_subcommand("cover", "subgroup H1 for a permutation representation");
  cover->add_option("presentation", pres_text)->required();
  cover->add_option("--rep", rep_text, "e.g. \"a:(1 2), t:id\"")->required();
  cover->add_option("--method", method, "fox | rs | chain | all")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "all index-2 representations and kernels");
  enumerate->add_option("presentation", pres_text)->required();

  auto* avoid = app.add_subcommand("avoid", "first index-2 kernel with no Z_2 summand");
  avoid->add_option("presentation", pres_text)->required();

  auto* scan = app.add_subcommand("scan", "family sweep report");
  scan->add_option("--family", scan_args.family, "bs | bstrebel | bgersten | meskin")->required();
  scan->add_option("--m", scan_args.m, "value or range LO..HI");
  scan->add_option("--n", scan_args.n, "value or range LO..HI");
  scan->add_option("--k", scan_args.k, "value or range LO..HI (bstrebel)");
  scan->add_option("--exponents", scan_args.exponents, "meskin exponent values, e.g. 2,4,6");
  scan->add_option("--format", scan_args.format, "json | tsv")->capture_default_str();
  scan->add_option("--max-exponent", scan_args.max_exponent, "parameter size cap")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (h1->parsed()) {
      Presentation p = parse_presentation(pres_text);
      AbelianGroup g = p.relators.size() == 1
                           ? one_relator_h1(p)
                           : abelian_group_from_presentation_matrix(abelianized_relator_matrix(p));
      json result = group_to_json(g);
      result["two_avoiding"] = is_two_avoiding(g);
      return emit(command, result, relator_warnings(p));
    }

    if (fox->parsed()) {
      Presentation p = parse_presentation(pres_text);
      if (relator_index >= p.relators.size()) {
        throw Error(ErrorKind::PreconditionFailed,
                    "relator index " + std::to_string(relator_index) + " out of range");
      }
      int gen = p.generator_index(generator_name);
      if (gen < 0) {
        throw ParseError(ErrorKind::UnknownGenerator,
                         "unknown generator '" + generator_name + "'", 1, 1);
      }
      GroupRingElement d = fox_derivative(p.relators[relator_index], gen);
      json result{{"relator", relator_index},
                  {"generator", generator_name},
                  {"derivative", to_string(d, p)},
                  {"augmentation", big_to_json(d.augmentation())}};
      return emit(command, result, relator_warnings(p));
    }

    if (snf->parsed()) {
      IntMatrix a = parse_matrix(matrix_text);
      SmithDecomposition s = smith_normal_form(a);
      json diag = json::array();
      for (const BigInt& n : s.diagonal) diag.push_back(big_to_json(n));
      json result{{"rows", s.rows}, {"cols", s.cols}, {"rank", s.rank()}, {"diagonal", diag}};
      if (witnesses) {
        result["P"] = to_literal(s.p);
        result["Q"] = to_literal(s.q);
      }
      return emit(command, result, {});
    }

    if (cover->parsed()) {
      Presentation p = parse_presentation(pres_text);
      PermRep rep = parse_perm_rep(p, rep_text);
      if (method != "fox" && method != "rs" && method != "chain" && method != "all") {
        throw ParseError(ErrorKind::SyntaxError, "--method must be fox, rs, chain or all", 1, 1);
      }
      json result;
      result["rep"] = to_string(rep, p);
      result["degree"] = rep.degree();
      std::vector<AbelianGroup> computed;
      if (method == "fox" || method == "all") {
        computed.push_back(subgroup_h1_fox(p, rep));
        result["fox"] = group_to_json(computed.back());
      }
      if (method == "rs" || method == "all") {
        computed.push_back(subgroup_h1_rs(p, rep));
        result["rs"] = group_to_json(computed.back());
      }
      if (method == "chain" || method == "all") {
        computed.push_back(cover_chain_h1(p, rep));
        result["chain"] = group_to_json(computed.back());
      }
      bool agree = true;
      for (const AbelianGroup& g : computed) agree = agree && g == computed.front();
      result["agree"] = agree;
      result["two_avoiding"] = is_two_avoiding(computed.front());
      return emit(command, result, relator_warnings(p));
    }

    if (enumerate->parsed()) {
      Presentation p = parse_presentation(pres_text);
      json reps = json::array();
      for (const PermRep& rep : enumerate_index2_reps(p)) {
        AbelianGroup g = subgroup_h1_fox(p, rep);
        reps.push_back(json{{"rep", to_string(rep, p)},
                            {"h1", group_to_json(g)},
                            {"two_avoiding", is_two_avoiding(g)}});
      }
      json result{{"count", reps.size()}, {"reps", reps}};
      return emit(command, result, relator_warnings(p));
    }

    if (avoid->parsed()) {
      Presentation p = parse_presentation(pres_text);
      json result;
      if (auto found = find_two_avoiding_index2(p)) {
        result["found"] = true;
        result["rep"] = to_string(found->rep, p);
        result["h1"] = group_to_json(found->h1);
      } else {
        result["found"] = false;
      }
      return emit(command, result, relator_warnings(p));
    }

    if (scan->parsed()) {
      return run_scan(scan_args);
    }
  } catch (const Error& e) {
    return emit_error(command, e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
