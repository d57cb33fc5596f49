#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(FOXHOM_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), got);
  }
  int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

json result_of(const std::string& args) {
  CliResult r = run_cli(args);
  REQUIRE(r.status == 0);
  json envelope = json::parse(r.out);
  CHECK(envelope["status"] == 0);
  return envelope["result"];
}

}  // namespace

TEST_CASE("h1 subcommand") {
  json r = result_of("h1 '< a,t | t a^2 t^-1 a^-4 >'");
  CHECK(r["free_rank"] == 1);
  CHECK(r["torsion"] == json::array({2}));
  CHECK(r["two_avoiding"] == false);

  json free2 = result_of("h1 '< a,b | >'");
  CHECK(free2["free_rank"] == 2);
  CHECK(free2["torsion"].empty());
  CHECK(free2["two_avoiding"] == true);

  CliResult power = run_cli("h1 '< a | a^6 >'");
  CHECK(power.status == 0);
  json envelope = json::parse(power.out);
  CHECK(envelope["result"]["torsion"] == json::array({6}));
  CHECK(envelope["result"]["two_avoiding"] == false);
  REQUIRE(envelope["warnings"].size() == 1);  // proper-power relator

  // multi-relator input takes the generic route
  json multi = result_of("h1 '< a, b | a^2, b^3 >'");
  CHECK(multi["free_rank"] == 0);
  CHECK(multi["torsion"] == json::array({6}));
}

TEST_CASE("cover subcommand") {
  json r = result_of("cover '< a,t | t a^3 t^-1 a^-5 >' --rep 'a:id, t:(1 2)' --method all");
  for (const char* method : {"fox", "rs", "chain"}) {
    CHECK(r[method]["free_rank"] == 1);
    CHECK(r[method]["torsion"] == json::array({16}));
  }
  CHECK(r["agree"] == true);

  json single = result_of("cover '< a,t | t a^3 t^-1 a^-5 >' --rep 'a:id, t:(1 2)' --method rs");
  CHECK(single.contains("rs"));
  CHECK(!single.contains("fox"));
}

TEST_CASE("avoid and enumerate subcommands") {
  json avoid = result_of("avoid '< a,t | t a^4 t^-1 a^-6 >'");
  CHECK(avoid["found"] == true);
  CHECK(avoid["rep"] == "a:(1 2), t:id");

  json enumerate = result_of("enumerate '< s,u | s^2 u^2 >'");
  REQUIRE(enumerate["count"] == 3);
  json last = enumerate["reps"][2];
  CHECK(last["rep"] == "s:(1 2), u:(1 2)");
  CHECK(last["h1"]["free_rank"] == 2);
  CHECK(last["two_avoiding"] == true);
}

TEST_CASE("snf and fox subcommands") {
  json snf = result_of("snf '0,0;0,0;3,-5;-5,3' --witnesses");
  CHECK(snf["diagonal"] == json::array({1, 16}));
  CHECK(snf.contains("P"));
  CHECK(snf.contains("Q"));

  json fox = result_of("fox '< a | a^4 >' --generator a");
  CHECK(fox["derivative"] == "1 + a + a^2 + a^3");
}

TEST_CASE("scan subcommand emits stable json and tsv") {
  std::string args = "scan --family bs --m 2..4 --n 4..6";
  CliResult first = run_cli(args);
  CliResult second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);  // byte-identical across runs

  json rows = json::parse(first.out)["result"]["rows"];
  REQUIRE(rows.size() == 9);
  for (const json& row : rows) {
    if (row["m"] == 4 && row["n"] == 6) {
      CHECK(row["kernel_two_avoiding"] == true);
      CHECK(row["matches_paper"] == "no-but-avoidability-agrees");
    }
    if (row["m"] == 3 && row["n"] == 5) {
      CHECK(row["kernel_h1_fox"]["torsion"] == json::array({16}));
      CHECK(row["matches_paper"] == "yes");
    }
  }

  CliResult tsv = run_cli(args + " --format tsv");
  CHECK(tsv.status == 0);
  CHECK(tsv.out.rfind("family\t", 0) == 0);
  // header + 9 rows
  CHECK(std::count(tsv.out.begin(), tsv.out.end(), '\n') == 10);
}

TEST_CASE("exit codes distinguish parse and domain errors") {
  CHECK(run_cli("h1 '< a, | >'").status == 2);          // syntax
  CHECK(run_cli("h1 '< a | b >'").status == 2);         // unknown generator
  CHECK(run_cli("h1 '< a | a^0 >'").status == 2);       // malformed exponent
  CHECK(run_cli("nonsense").status == 2);               // usage
  CHECK(run_cli("fox '< a | a^2 >' --generator a --relator 5").status == 1);  // domain
  // representation that does not kill the relator: domain error
  CHECK(run_cli("cover '< a | a^3 >' --rep 'a:(1 2)'").status == 1);

  json err = json::parse(run_cli("h1 '< a | a^0 >'").out);
  CHECK(err["status"] == 2);
  CHECK(err["error"]["kind"] == "MalformedExponent");
  CHECK(err["error"].contains("line"));
  CHECK(err["error"].contains("column"));
}

TEST_CASE("scan parameter cap") {
  CHECK(run_cli("scan --family bs --m 20000 --n 20002").status == 1);
  CHECK(run_cli("scan --family bs --m 20000 --n 20002 --max-exponent 30000").status == 0);
}
