#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "json.hpp"

#include "helpers.hpp"
#include "qdi/qdi.hpp"

using namespace qdi;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string fixture_json(const std::string& name) { return to_json_text(build_fixture(name)); }

struct synth_run {
  std::string netlist_json;
  std::string report;
  int exit_code = 0;
};

synth_run run_synth(const std::string& table, synth_method method,
                    report_format format = report_format::text) {
  std::istringstream in(table);
  std::ostringstream netlist_out, report_out;
  cli::synth_request req;
  req.method = method;
  req.format = format;
  const int code = cli::cmd_synth(in, req, netlist_out, report_out);
  return synth_run{netlist_out.str(), report_out.str(), code};
}

constexpr const char* and3_table = "n=3\n00000001\n";

}  // namespace

TEST_CASE("synth command emits the netlist and a cost summary") {
  const synth_run run = run_synth(and3_table, synth_method::dims);
  CHECK(run.exit_code == 0);
  CHECK(netlist_from_json_text(run.netlist_json) == build_fixture("fig3"));
  CHECK_THAT(run.report, ContainsSubstring("product terms: 8"));
  CHECK_THAT(run.report, ContainsSubstring("literals: 24"));
  CHECK_THAT(run.report, ContainsSubstring("c-elements: 8"));
  CHECK_THAT(run.report, ContainsSubstring("gate histogram: C3 x8, OR7 x1"));
}

TEST_CASE("synth command reports the flattering factored term count") {
  const synth_run run = run_synth(and3_table, synth_method::fdims);
  CHECK_THAT(run.report,
             ContainsSubstring("top-level terms: 4 (underestimates the real cost:"));
  CHECK_THAT(run.report, ContainsSubstring("literals: 15"));
  CHECK_THAT(run.report, ContainsSubstring("c-elements: 4"));

  const synth_run safe = run_synth(and3_table, synth_method::safe);
  CHECK_THAT(safe.report, ContainsSubstring("c-elements: 11"));
  CHECK_THAT(safe.report, ContainsSubstring("gate histogram: C2 x9, C3 x2, OR7 x1"));
}

TEST_CASE("synth command rejects constant functions") {
  std::istringstream in("n=3\n00000000\n");
  std::ostringstream nl_out, report_out;
  CHECK_THROWS_WITH(cli::cmd_synth(in, cli::synth_request{}, nl_out, report_out),
                    ContainsSubstring("constant function"));
}

TEST_CASE("analyze command lints gate orphans via its exit code") {
  cli::analyze_request req;

  std::istringstream dirty(fixture_json("fig4"));
  std::ostringstream dirty_out;
  CHECK(cli::cmd_analyze(dirty, req, dirty_out) == 1);
  CHECK_THAT(dirty_out.str(), ContainsSubstring("orphan rows: 4 of 8\n"));
  CHECK_THAT(dirty_out.str(), ContainsSubstring("OR1^"));
  CHECK_THAT(dirty_out.str(), ContainsSubstring("OR1v"));

  std::istringstream clean(fixture_json("fig3"));
  std::ostringstream clean_out;
  CHECK(cli::cmd_analyze(clean, req, clean_out) == 0);
  CHECK_THAT(clean_out.str(), ContainsSubstring("orphan rows: 0 of 8\n"));
}

TEST_CASE("analyze command classifies indication without linting") {
  cli::analyze_request req;
  req.mode = cli::analyze_mode::indication;
  std::istringstream in(fixture_json("fig4"));
  std::ostringstream out;
  CHECK(cli::cmd_analyze(in, req, out) == 0);  // orphans are not scanned in this mode
  CHECK(out.str() == "indication: strong\n");
}

TEST_CASE("analyze command mode all stacks every report") {
  cli::analyze_request req;
  req.mode = cli::analyze_mode::all;
  std::istringstream in(fixture_json("fig4"));
  std::ostringstream out;
  CHECK(cli::cmd_analyze(in, req, out) == 1);
  CHECK_THAT(out.str(), ContainsSubstring("orphan rows: 4 of 8\n"));
  CHECK_THAT(out.str(), ContainsSubstring("indication: strong\n"));
  CHECK_THAT(out.str(), ContainsSubstring("gate histogram:"));
}

TEST_CASE("analyze command honors the enumeration cap") {
  cli::analyze_request req;
  req.enumeration_cap = 2;
  std::istringstream in(fixture_json("fig3"));
  std::ostringstream out;
  CHECK_THROWS_WITH(cli::cmd_analyze(in, req, out), ContainsSubstring("2^3"));
}

TEST_CASE("analyze command json reports orphan freedom as data") {
  cli::analyze_request req;
  req.format = report_format::json;

  std::istringstream dirty(fixture_json("fig4"));
  std::ostringstream dirty_out;
  cli::cmd_analyze(dirty, req, dirty_out);
  const auto dirty_doc = nlohmann::json::parse(dirty_out.str());
  CHECK(dirty_doc.at("format") == "qdi-orphan-summary");
  CHECK(dirty_doc.at("orphan_rows") == 4);
  CHECK(dirty_doc.at("orphan_free") == false);
  CHECK(dirty_doc.at("rows").size() == 8);
  CHECK(dirty_doc.at("rows")[1].at("orphans")[0].at("gate") == "OR1");

  std::istringstream clean(fixture_json("fig3"));
  std::ostringstream clean_out;
  cli::cmd_analyze(clean, req, clean_out);
  CHECK(nlohmann::json::parse(clean_out.str()).at("orphan_free") == true);
}

TEST_CASE("the comparison table prints the published set-phase behavior") {
  const std::string golden =
      R"(phase: set
X31  X30  X21  X20  X11  X10  fig3    fig4                          fig5
0    1    0    1    0    1    C2-OR1  OR1-OR2-C2-OR3                C2-C6-OR1
0    1    0    1    1    0    C3-OR1  OR2-C3-OR3 (orphans: OR1^)    C2-C7-OR1
0    1    1    0    0    1    C4-OR1  OR1-OR2-C2-OR3                C3-C8-OR1
0    1    1    0    1    0    C5-OR1  C4-OR3 (orphans: OR1^, OR2^)  C3-C9-OR1
1    0    0    1    0    1    C6-OR1  OR1-OR2-C2-OR3                C4-C10-OR1
1    0    0    1    1    0    C7-OR1  OR2-C3-OR3 (orphans: OR1^)    C4-C11-OR1
1    0    1    0    0    1    C8-OR1  OR1-OR2-C2-OR3                C5-OR1
1    0    1    0    1    0    C1      C1 (orphans: OR1^, OR2^)      C1
)";
  std::ostringstream out;
  CHECK(cli::cmd_table1(cli::comparison_request{}, out) == 0);
  CHECK(out.str() == golden);
}

TEST_CASE("the comparison table mirrors orphans as falls on reset") {
  cli::comparison_request req;
  req.phase = phase_kind::reset;
  std::ostringstream out;
  cli::cmd_table1(req, out);
  CHECK_THAT(out.str(), ContainsSubstring("phase: reset\n"));
  CHECK_THAT(out.str(), ContainsSubstring("(orphans: OR1v)"));
  CHECK_THAT(out.str(), ContainsSubstring("(orphans: OR1v, OR2v)"));
}

TEST_CASE("the comparison json matches the orphan reports") {
  cli::comparison_request req;
  req.format = report_format::json;
  std::ostringstream out;
  cli::cmd_table1(req, out);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc.at("format") == "qdi-comparison");
  CHECK(doc.at("circuits") == std::vector<std::string>{"fig3", "fig4", "fig5"});
  REQUIRE(doc.at("rows").size() == 8);

  const auto rows = orphan_summary(build_fixture("fig4"));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& cell = doc.at("rows")[r].at("paths").at("fig4");
    std::vector<std::string> path;
    for (const auto& id : cell.at("path")) path.push_back(id.get<std::string>());
    CHECK(path == qdi::testing::acknowledged_gates(rows[r], phase_kind::set));
    std::vector<std::string> orphan_gates;
    for (const auto& tr : cell.at("orphans")) orphan_gates.push_back(tr.at("gate").get<std::string>());
    std::vector<std::string> expected;
    for (const auto& tr : rows[r].phase_orphans(phase_kind::set)) expected.push_back(tr.gate_id);
    CHECK(orphan_gates == expected);
  }
}

TEST_CASE("repeated comparison runs are byte-identical") {
  for (const auto format : {report_format::text, report_format::json}) {
    cli::comparison_request req;
    req.format = format;
    std::ostringstream first, second;
    cli::cmd_table1(req, first);
    cli::cmd_table1(req, second);
    CHECK(first.str() == second.str());
  }
}

TEST_CASE("simulate command dumps both phases of a transaction") {
  std::istringstream in(fixture_json("fig4"));
  std::ostringstream out;
  CHECK(cli::cmd_simulate(in, "110", "", out) == 0);
  CHECK_THAT(out.str(), ContainsSubstring("OR3 rise set\n"));
  CHECK_THAT(out.str(), ContainsSubstring("OR3 fall reset\n"));
  CHECK_THAT(out.str(), ContainsSubstring("t=0 X10 rise set\n"));
}

TEST_CASE("simulate command accepts a rail list in place of an assignment") {
  std::istringstream by_word(fixture_json("fig4"));
  std::ostringstream word_out;
  cli::cmd_simulate(by_word, "110", "", word_out);

  std::istringstream by_rails(fixture_json("fig4"));
  std::ostringstream rails_out;
  cli::cmd_simulate(by_rails, "", "X31,X21,X10", rails_out);
  CHECK(word_out.str() == rails_out.str());
}

TEST_CASE("simulate command treats the spacer as a silent transaction") {
  std::istringstream in(fixture_json("fig3"));
  std::ostringstream out;
  CHECK(cli::cmd_simulate(in, "---", "", out) == 0);
  CHECK(out.str().empty());

  std::istringstream missing(fixture_json("fig3"));
  CHECK_THROWS_WITH(cli::cmd_simulate(missing, "", "", out),
                    Catch::Matchers::ContainsSubstring("missing codeword"));
}

TEST_CASE("simulate command rejects conflicting or mismatched codewords") {
  std::istringstream both(fixture_json("fig3"));
  std::ostringstream out;
  CHECK_THROWS_WITH(cli::cmd_simulate(both, "110", "X31,X21,X10", out),
                    ContainsSubstring("not both"));

  std::istringstream narrow(fixture_json("fig3"));
  CHECK_THROWS_WITH(cli::cmd_simulate(narrow, "11", "", out),
                    ContainsSubstring("has 2 variables but the netlist has 3"));
}

TEST_CASE("fixture command serializes the bundled circuits") {
  std::ostringstream out;
  CHECK(cli::cmd_fixture("fig5", 0, out) == 0);
  std::istringstream back(out.str());
  CHECK(cli::load_netlist(back) == build_fixture("fig5"));

  std::ostringstream sink;
  CHECK_THROWS_AS(cli::cmd_fixture("fig9", 0, sink), std::invalid_argument);
}

TEST_CASE("selfcheck command is deterministic and green") {
  cli::selfcheck_request req;
  req.count = 10;
  std::ostringstream first, second;
  CHECK(cli::cmd_selfcheck(req, first) == 0);
  CHECK(cli::cmd_selfcheck(req, second) == 0);
  CHECK(first.str() == second.str());
  CHECK_THAT(first.str(), ContainsSubstring("all checks passed"));
  CHECK_THAT(first.str(), ContainsSubstring("seed 12345"));
}

TEST_CASE("rail lists parse into codewords") {
  CHECK(cli::codeword_from_rails(3, "X31,X20,X11") == codeword::from_string("101"));
  CHECK(cli::codeword_from_rails(3, "X11 X20 X31") == codeword::from_string("101"));
  CHECK(cli::codeword_from_rails(3, "") == codeword::spacer(3));

  CHECK_THROWS_WITH(cli::codeword_from_rails(3, "X31,X30,X20,X11"),
                    ContainsSubstring("more than one rail"));
  CHECK_THROWS_WITH(cli::codeword_from_rails(3, "X31,X20"),
                    ContainsSubstring("leaves variable 1 undriven"));
  CHECK_THROWS_WITH(cli::codeword_from_rails(3, "X41,X20,X11"),
                    ContainsSubstring("outside 1..3"));
  CHECK_THROWS_AS(cli::codeword_from_rails(3, "X3"), std::invalid_argument);
}

TEST_CASE("malformed netlists are rejected with their diagnostics") {
  netlist broken = build_fixture("fig3");
  broken.gates.pop_back();  // drop the output OR merge
  std::istringstream in(to_json_text(broken));
  CHECK_THROWS_WITH(cli::load_netlist(in), ContainsSubstring("[undriven_net]"));
}

TEST_CASE("a synthesized netlist feeds straight back into analysis") {
  const synth_run run = run_synth(and3_table, synth_method::dims);
  std::istringstream in(run.netlist_json);
  std::ostringstream out;
  CHECK(cli::cmd_analyze(in, cli::analyze_request{}, out) == 0);

  const netlist nl = build_fixture("fig3");
  CHECK(out.str() == render_orphan_summary(nl, orphan_summary(nl), report_format::text));
}

TEST_CASE("mode and format names parse strictly") {
  CHECK(cli::parse_analyze_mode("orphans") == cli::analyze_mode::orphans);
  CHECK(cli::parse_analyze_mode("indication") == cli::analyze_mode::indication);
  CHECK(cli::parse_analyze_mode("all") == cli::analyze_mode::all);
  CHECK_THROWS_AS(cli::parse_analyze_mode("everything"), std::invalid_argument);

  CHECK(parse_report_format("text") == report_format::text);
  CHECK(parse_report_format("json") == report_format::json);
  CHECK_THROWS_AS(parse_report_format("yaml"), std::invalid_argument);
}
