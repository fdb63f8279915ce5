#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "qdi/qdi.hpp"

using namespace qdi;
using qdi::testing::acknowledged_gates;
using qdi::testing::all_functions;
using qdi::testing::and3;
using qdi::testing::is_subsequence;
using qdi::testing::orphan_tokens;

TEST_CASE("the factored AND orphans the unconsumed OR rise") {
  const netlist nl = build_fixture("fig4");

  // rails X30, X20, X11: OR1 rises off X20 but its C-element needs X10
  const orphan_report row2 = detect_orphans(nl, codeword::from_string("001"));
  CHECK(orphan_tokens(row2, phase_kind::set) == std::vector<std::string>{"OR1^"});
  CHECK(is_subsequence({"OR2", "C3", "OR3"}, acknowledged_gates(row2, phase_kind::set)));
  CHECK(row2.first_gate == "OR1");

  // rails X30, X21, X11: both shared ORs rise and neither is consumed
  const orphan_report row4 = detect_orphans(nl, codeword::from_string("011"));
  CHECK(orphan_tokens(row4, phase_kind::set) == std::vector<std::string>{"OR1^", "OR2^"});
  CHECK(acknowledged_gates(row4, phase_kind::set) == std::vector<std::string>{"C4", "OR3"});

  // rails X31, X21, X11: the true rail fires alone
  const orphan_report row8 = detect_orphans(nl, codeword::from_string("111"));
  CHECK(orphan_tokens(row8, phase_kind::set) == std::vector<std::string>{"OR1^", "OR2^"});
  CHECK(acknowledged_gates(row8, phase_kind::set) == std::vector<std::string>{"C1"});
}

TEST_CASE("the factored AND orphans exactly half of the codewords") {
  const auto rows = orphan_summary(build_fixture("fig4"));
  REQUIRE(rows.size() == 8);
  std::vector<std::uint32_t> dirty;
  for (const auto& row : rows) {
    if (!row.clean()) dirty.push_back(row.cw.index());
  }
  CHECK(dirty == std::vector<std::uint32_t>{1, 3, 5, 7});  // every codeword with X1 = 1

  CHECK(orphan_tokens(rows[1], phase_kind::set) == std::vector<std::string>{"OR1^"});
  CHECK(orphan_tokens(rows[5], phase_kind::set) == std::vector<std::string>{"OR1^"});
  CHECK(orphan_tokens(rows[3], phase_kind::set) == std::vector<std::string>{"OR1^", "OR2^"});
  CHECK(orphan_tokens(rows[7], phase_kind::set) == std::vector<std::string>{"OR1^", "OR2^"});
}

TEST_CASE("the factored AND also orphans the matching falls on reset") {
  const auto rows = orphan_summary(build_fixture("fig4"));
  CHECK(orphan_tokens(rows[1], phase_kind::reset) == std::vector<std::string>{"OR1v"});
  CHECK(orphan_tokens(rows[3], phase_kind::reset) == std::vector<std::string>{"OR1v", "OR2v"});
  CHECK(orphan_tokens(rows[0], phase_kind::reset).empty());
}

TEST_CASE("the minterm and safe ANDs are orphan-free on every codeword") {
  for (const auto& name : {"fig3", "fig5"}) {
    CAPTURE(name);
    for (const auto& row : orphan_summary(build_fixture(name))) {
      CAPTURE(row.cw.to_string());
      CHECK(row.clean());
    }
  }
}

TEST_CASE("first activated gates follow the minterm order") {
  std::vector<std::string> fig3_first, fig5_first;
  for (const auto& row : orphan_summary(build_fixture("fig3"))) fig3_first.push_back(row.first_gate);
  for (const auto& row : orphan_summary(build_fixture("fig5"))) fig5_first.push_back(row.first_gate);
  CHECK(fig3_first == std::vector<std::string>{"C2", "C3", "C4", "C5", "C6", "C7", "C8", "C1"});
  CHECK(fig5_first == std::vector<std::string>{"C2", "C2", "C3", "C3", "C4", "C4", "C5", "C1"});
}

TEST_CASE("published signal paths are subsequences of the acknowledged chains") {
  const std::vector<std::vector<std::string>> paths{
      {"OR1", "C2", "OR3"}, {"OR2", "C3", "OR3"}, {"OR1", "C2", "OR3"}, {"C4", "OR3"},
      {"OR1", "C2", "OR3"}, {"OR2", "C3", "OR3"}, {"OR1", "C2", "OR3"}, {"C1"},
  };
  const auto rows = orphan_summary(build_fixture("fig4"));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    CAPTURE(r);
    CHECK(is_subsequence(paths[r], acknowledged_gates(rows[r], phase_kind::set)));
  }
}

TEST_CASE("acknowledged and orphaned transitions partition each trace") {
  const netlist nl = build_fixture("fig4");
  const netlist_view view(nl);
  for (std::uint32_t index = 0; index < 8; ++index) {
    const codeword cw = codeword::from_index(3, index);
    const orphan_report report = detect_orphans(nl, cw);
    const transaction_trace tx = simulate_transaction(nl, cw);

    std::size_t internal = 0;
    for (const auto* phase : {&tx.set_phase, &tx.reset_phase}) {
      for (const auto& ev : phase->events) {
        if (view.driver_gate(view.net_index(ev.net)) >= 0) ++internal;
      }
    }
    CHECK(report.acknowledged.size() + report.orphans.size() == internal);
  }
}

TEST_CASE("the spacer produces no transitions to classify") {
  const orphan_report report = detect_orphans(build_fixture("fig4"), codeword::spacer(3));
  CHECK(report.acknowledged.empty());
  CHECK(report.orphans.empty());
  CHECK(report.first_gate.empty());
}

TEST_CASE("orphan enumeration refuses oversized input spaces") {
  CHECK_THROWS_WITH(orphan_summary(build_fixture("fig3"), 2),
                    Catch::Matchers::ContainsSubstring("2^3"));
}

TEST_CASE("non-isochronic forks need every branch acknowledged") {
  // f = X1 AND X2, false rail built on a forked OR: OR1 = X10 + X20 feeds
  // both C2 = C(OR1, X10) and C3 = C(OR1, X20). At codeword 01 only C3
  // fires, so the fork's other branch is covered only if the fork is
  // isochronic.
  auto build = [](bool isochronic) {
    netlist_builder b(2);
    b.add_gate(gate_kind::c_element, "C1", {"X11", "X21"});
    b.add_gate(gate_kind::or_gate, "OR1", {"X10", "X20"});
    b.add_gate(gate_kind::c_element, "C2", {"OR1", "X10"});
    b.add_gate(gate_kind::c_element, "C3", {"OR1", "X20"});
    b.add_gate(gate_kind::or_gate, "OR2", {"C2", "C3"});
    if (isochronic) b.mark_isochronic("OR1");
    b.set_output("f", "C1", "OR2");
    return std::move(b).build();
  };

  const orphan_report strict = detect_orphans(build(false), codeword::from_string("01"));
  CHECK(orphan_tokens(strict, phase_kind::set) == std::vector<std::string>{"OR1^"});

  const orphan_report relaxed = detect_orphans(build(true), codeword::from_string("01"));
  CHECK(relaxed.clean());
}

TEST_CASE("indication: the bundled circuits are all strongly indicating") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const indication_report report = classify_indication(build_fixture(name));
    CHECK(report.cls == io_class::strong);
    CHECK(report.witnesses.empty());
    CHECK_FALSE(report.early_set);
    CHECK_FALSE(report.early_reset);
  }
}

TEST_CASE("indication: the bare-OR AND classifies early") {
  const indication_report report = classify_indication(qdi::testing::early_and2());
  CHECK(report.cls == io_class::early);
  CHECK(report.early_set);
  CHECK(report.early_reset);
  REQUIRE_FALSE(report.witnesses.empty());
  CHECK(report.witnesses[0].output_index == 0);
}

TEST_CASE("indication: one early output among strong ones classifies weak") {
  const indication_report report = classify_indication(qdi::testing::weak_pair2());
  CHECK(report.cls == io_class::weak);
  CHECK_FALSE(report.early_set);
  CHECK_FALSE(report.early_reset);
  REQUIRE_FALSE(report.witnesses.empty());
  for (const auto& w : report.witnesses) CHECK(w.output_index == 1);  // only h is early
}

TEST_CASE("indication: exhaustive subsets agree with the one-variable-out shortcut") {
  std::vector<netlist> cases{qdi::testing::early_and2(), qdi::testing::weak_pair2()};
  for (const auto& name : fixture_names()) cases.push_back(build_fixture(name));
  for (const auto& nl : cases) {
    CHECK(classify_indication(nl, subset_mode::maximal).cls ==
          classify_indication(nl, subset_mode::exhaustive).cls);
  }
}

TEST_CASE("every minterm-synthesized function indicates strongly, exhaustively to 3 inputs") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& f : all_functions(n)) {
      const netlist nl = synth_dims(f);
      const indication_report maximal = classify_indication(nl, subset_mode::maximal);
      CHECK(maximal.cls == io_class::strong);
      REQUIRE(classify_indication(nl, subset_mode::exhaustive).cls == io_class::strong);
    }
  }
}

TEST_CASE("minterm and safe synthesis are orphan-free for every 2- and 3-input function") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& f : all_functions(n)) {
      for (const auto method : {synth_method::dims, synth_method::safe}) {
        const netlist nl = synthesize(f, method);
        for (const auto& row : orphan_summary(nl)) {
          CAPTURE(n, to_string(method), render_truth_table(f), row.cw.to_string());
          REQUIRE(row.clean());
        }
      }
    }
  }
}

TEST_CASE("minterm and safe synthesis stay orphan-free on sampled 4-input functions") {
  std::mt19937 rng(424242);
  for (int k = 0; k < 50; ++k) {
    const boolean_function f = qdi::testing::random_function(rng, 4);
    for (const auto method : {synth_method::dims, synth_method::safe}) {
      const netlist nl = synthesize(f, method);
      for (const auto& row : orphan_summary(nl)) {
        CAPTURE(k, to_string(method), render_truth_table(f), row.cw.to_string());
        REQUIRE(row.clean());
      }
    }
  }
}

TEST_CASE("orphan behavior is invariant under the OR fan-in cap") {
  std::mt19937 rng(7);
  std::vector<boolean_function> functions{and3(), qdi::testing::maj3()};
  for (int k = 0; k < 5; ++k) functions.push_back(qdi::testing::random_function(rng, 3));

  for (const auto& f : functions) {
    for (const auto method : {synth_method::dims, synth_method::fdims, synth_method::safe}) {
      std::vector<std::vector<bool>> patterns;
      for (int cap : {0, 2, 3}) {
        synth_options opt;
        opt.or_fanin_cap = cap;
        std::vector<bool> pattern;
        for (const auto& row : orphan_summary(synthesize(f, method, opt))) {
          pattern.push_back(row.clean());
        }
        patterns.push_back(std::move(pattern));
      }
      CAPTURE(render_truth_table(f), to_string(method));
      CHECK(patterns[0] == patterns[1]);
      CHECK(patterns[0] == patterns[2]);
    }
  }
}

TEST_CASE("cost of the minterm AND counts its eight product terms") {
  const cover_pair covers = dual_rail_cover(and3());
  const cost_report cost = estimate_cost(covers);
  CHECK(cost.minterm_count == 8);
  CHECK(cost.literal_count == 24);
  CHECK_FALSE(cost.naive_top_level_terms.has_value());
}

TEST_CASE("cost of the factored AND shows the underestimating term count") {
  const cover_pair covers = dual_rail_cover(and3());
  const cost_report cost =
      estimate_cost(fdims_factorize(covers.rail1), fdims_factorize(covers.rail0));
  CHECK(cost.naive_top_level_terms == 4);
  CHECK(cost.naive_underestimates);
  CHECK(cost.literal_count == 15);
  CHECK_FALSE(cost.minterm_count.has_value());
}

TEST_CASE("plain sums of products do not raise the underestimation flag") {
  const cover_pair covers = dual_rail_cover(qdi::testing::xor2());
  const cost_report cost =
      estimate_cost(fdims_factorize(covers.rail1), fdims_factorize(covers.rail0));
  CHECK(cost.naive_top_level_terms == 4);
  CHECK_FALSE(cost.naive_underestimates);
}

TEST_CASE("netlist costs count gates by kind and arity and measure depth") {
  const cost_report fig3 = estimate_cost(build_fixture("fig3"));
  CHECK(fig3.c_element_count == 8);
  CHECK(fig3.or_gate_count == 1);
  CHECK(fig3.total_gate_inputs == 31);
  CHECK(fig3.logic_depth == 2);
  REQUIRE(fig3.gate_counts.size() == 2);
  CHECK(fig3.gate_counts[0] == gate_count{gate_kind::c_element, 3, 8});
  CHECK(fig3.gate_counts[1] == gate_count{gate_kind::or_gate, 7, 1});

  const cost_report fig5 = estimate_cost(build_fixture("fig5"));
  CHECK(fig5.logic_depth == 3);

  const cost_report alias = estimate_cost(synthesize(qdi::testing::fn(1, "01"), synth_method::dims));
  CHECK(alias.c_element_count == 0);
  CHECK(alias.logic_depth == 0);
}

TEST_CASE("combined reports merge cover and netlist sections") {
  const cover_pair covers = dual_rail_cover(and3());
  const cost_report merged = combine(estimate_cost(covers), estimate_cost(build_fixture("fig3")));
  CHECK(merged.minterm_count == 8);
  CHECK(merged.has_netlist);
  CHECK(merged.c_element_count == 8);
}
