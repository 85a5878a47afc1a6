#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "kforce/generators.hpp"
#include "kforce/verifier.hpp"

using namespace kforce;
using Catch::Matchers::ContainsSubstring;

namespace {

const CheckRow& row_by_id(const BoundReport& report, const std::string& id) {
  for (const CheckRow& row : report.checks) {
    if (row.check_id == id) return row;
  }
  FAIL("missing check row " + id);
  static CheckRow dummy;
  return dummy;
}

int count_rows_tagged(const BoundReport& report, const std::string& tag) {
  int c = 0;
  for (const CheckRow& row : report.checks) {
    if (row.tag == tag) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("inequality suite on a 5-cycle") {
  BoundReport r = run_inequality_suite(cycle(5), 1);
  REQUIRE(r.summary.order == 5);
  REQUIRE(r.summary.regular);
  REQUIRE(r.summary.connected);
  REQUIRE(r.all_passed());

  const CheckRow& lower = row_by_id(r, "sandwich-lower");
  REQUIRE(lower.verdict == Verdict::pass);
  REQUIRE(lower.lhs == 1);
  REQUIRE(lower.rhs == 2);
  const CheckRow& upper = row_by_id(r, "sandwich-upper");
  REQUIRE(upper.lhs == 2);
  REQUIRE(upper.rhs == 3);

  // Max degree 2 < k+2 rules the refined bounds out.
  REQUIRE(row_by_id(r, "improved-zf-upper").verdict == Verdict::skip);
  REQUIRE(row_by_id(r, "improved-zf-upper").skipped_reason == "max degree 2 < k+2");
  REQUIRE(row_by_id(r, "zf-regular-bound").skipped_reason == "graph is not (k+2)-regular");

  // Every edge is small enough to check exhaustively: two rows per edge.
  REQUIRE(count_rows_tagged(r, "zf-edge-window") == 10);
}

TEST_CASE("inequality suite on the complete graph of order 4") {
  BoundReport r = run_inequality_suite(complete(4), 1);
  REQUIRE(r.all_passed());
  const CheckRow& improved = row_by_id(r, "improved-zf-upper");
  REQUIRE(improved.verdict == Verdict::pass);
  REQUIRE(improved.lhs == 3);
  REQUIRE(improved.rhs == 3);
  const CheckRow& ceiling = row_by_id(r, "pd-lower-ceiling");
  REQUIRE(ceiling.lhs == 1);
  REQUIRE(ceiling.rhs == 1);
  // (k+2)-regular and not the excluded bipartite case: the 3n/(k+3) bound
  // applies and is met with equality here.
  const CheckRow& regular = row_by_id(r, "zf-regular-bound");
  REQUIRE(regular.verdict == Verdict::pass);
  REQUIRE(regular.lhs == 3);
  REQUIRE(regular.rhs == 3);
}

TEST_CASE("the balanced complete bipartite exception is skipped by name") {
  BoundReport r = run_inequality_suite(complete_bipartite(3, 3), 1);
  REQUIRE(r.all_passed());
  const CheckRow& regular = row_by_id(r, "zf-regular-bound");
  REQUIRE(regular.verdict == Verdict::skip);
  REQUIRE(regular.skipped_reason ==
          "graph is the complete bipartite graph with both parts of size k+2");
  REQUIRE(row_by_id(r, "pd-order-bound").verdict == Verdict::pass);
}

TEST_CASE("k = 0 disables every rate-dependent check") {
  BoundReport r = run_inequality_suite(path(4), 0);
  REQUIRE(r.all_passed());
  REQUIRE(row_by_id(r, "sandwich-lower").verdict == Verdict::pass);
  REQUIRE(row_by_id(r, "sandwich-upper").verdict == Verdict::pass);
  for (const char* id : {"improved-zf-upper", "pd-lower-ceiling", "pd-order-bound",
                         "zf-order-bound", "zf-regular-bound"}) {
    REQUIRE(row_by_id(r, id).verdict == Verdict::skip);
    REQUIRE(row_by_id(r, id).skipped_reason == "k < 1");
  }
  const CheckRow& window = row_by_id(r, "edge-window");
  REQUIRE(window.verdict == Verdict::skip);
  REQUIRE(window.skipped_reason == "edge contraction window applies only at k = 1");
}

TEST_CASE("disconnected graphs skip the connectivity-gated checks") {
  BoundReport r = run_inequality_suite(Graph(4, {{0, 1}, {2, 3}}), 1);
  REQUIRE(r.all_passed());
  REQUIRE_FALSE(r.summary.connected);
  for (const char* id :
       {"improved-zf-upper", "pd-lower-ceiling", "pd-order-bound", "zf-order-bound"}) {
    REQUIRE(row_by_id(r, id).skipped_reason == "graph is disconnected");
  }
  REQUIRE(row_by_id(r, "sandwich-lower").verdict == Verdict::pass);
}

TEST_CASE("budget failures surface as named skips, not errors") {
  VerifyOptions opts;
  opts.solve.budget = 20;
  BoundReport r = run_inequality_suite(cycle(30), 1, opts);
  REQUIRE(r.all_passed());
  REQUIRE(row_by_id(r, "sandwich-lower").verdict == Verdict::skip);
  REQUIRE(row_by_id(r, "sandwich-lower").skipped_reason ==
          "enumeration budget exceeded while solving the forcing number");
  REQUIRE(row_by_id(r, "pd-order-bound").verdict == Verdict::pass);
  REQUIRE(row_by_id(r, "edge-window").skipped_reason ==
          "enumeration budget exceeded while solving the forcing number");
}

TEST_CASE("edge windows sample at most 32 edges deterministically") {
  Graph g = complete(12);  // 66 edges
  VerifyOptions opts;
  opts.seed = 7;
  BoundReport a = run_inequality_suite(g, 1, opts);
  BoundReport b = run_inequality_suite(g, 1, opts);
  REQUIRE(count_rows_tagged(a, "zf-edge-window") == 64);
  std::vector<std::string> ids_a, ids_b;
  for (const CheckRow& row : a.checks) ids_a.push_back(row.check_id);
  for (const CheckRow& row : b.checks) ids_b.push_back(row.check_id);
  REQUIRE(ids_a == ids_b);
  REQUIRE(a.all_passed());
}

TEST_CASE("a manually failed row flips the overall verdict") {
  BoundReport r;
  CheckRow bad;
  bad.check_id = "x";
  bad.verdict = Verdict::fail;
  r.checks.push_back(bad);
  REQUIRE_FALSE(r.all_passed());
  REQUIRE(std::string(verdict_name(Verdict::pass)) == "PASS");
  REQUIRE(std::string(verdict_name(Verdict::fail)) == "FAIL");
  REQUIRE(std::string(verdict_name(Verdict::skip)) == "SKIP");
}

TEST_CASE("closed-form family check in exact mode") {
  SierpinskiCheckReport r = check_sierpinski_formula(3, 3, 1, SierpinskiMode::exact);
  REQUIRE(r.expected == 3);
  REQUIRE(r.computed == 3);
  REQUIRE(r.passed);
  REQUIRE(std::string(sierpinski_mode_name(r.mode)) == "exact");

  REQUIRE_THROWS_WITH(check_sierpinski_formula(3, 2, 1, SierpinskiMode::exact),
                      ContainsSubstring("needs depth n >= 3"));
  REQUIRE_THROWS_WITH(check_sierpinski_formula(3, 3, 0, SierpinskiMode::exact),
                      ContainsSubstring("needs k >= 1"));
  REQUIRE_THROWS_WITH(check_sierpinski_formula(3, 3, 2, SierpinskiMode::exact),
                      ContainsSubstring("needs base p >= k+2"));
}

TEST_CASE("closed-form family check in witness mode") {
  SierpinskiCheckReport shallow = check_sierpinski_formula(3, 3, 1, SierpinskiMode::witness);
  REQUIRE(shallow.part_count == 1);
  REQUIRE(shallow.computed == 3);
  REQUIRE(shallow.passed);

  SierpinskiCheckReport deep = check_sierpinski_formula(3, 4, 1, SierpinskiMode::witness);
  REQUIRE(deep.part_count == 3);
  REQUIRE(deep.expected == 9);
  REQUIRE(deep.computed == 9);
  REQUIRE(deep.per_part_expected == 3);
  REQUIRE(deep.per_part_ok);
  REQUIRE(deep.witness_verified);
  REQUIRE(deep.witness->size() == 9);
  REQUIRE(deep.passed);
}

TEST_CASE("augmented block of the recursive family keeps the depth-3 value") {
  XhatBlockReport r = check_xhat_block_equality(3, 4, 1, {0});
  REQUIRE(r.block_value == 3);
  REQUIRE(r.base_value == 3);
  REQUIRE(r.values_equal);
  REQUIRE(r.pendant_count == 2);
  REQUIRE(r.expected_pendants == 2);
  REQUIRE(r.shape_ok);
  REQUIRE(r.passed);

  XhatBlockReport mid = check_xhat_block_equality(3, 4, 1, {1});
  REQUIRE(mid.passed);
  REQUIRE(mid.pendant_count == 2);

  REQUIRE_THROWS_WITH(check_xhat_block_equality(3, 3, 1, {}),
                      ContainsSubstring("needs depth n >= 4"));
  REQUIRE_THROWS_WITH(check_xhat_block_equality(3, 4, 1, {0, 1}),
                      ContainsSubstring("prefix must have length n-3"));
}

TEST_CASE("replacement equivalences hold on random graphs") {
  for (int k = 0; k <= 2; ++k) {
    SurgeryCheckReport r = check_surgery_equivalences(random_connected(7, 0.4, 5), k, 40, 99);
    REQUIRE(r.trials == 40);
    REQUIRE(r.failures == 0);
    REQUIRE(r.first_failure.empty());
    REQUIRE(r.passed);
  }
  REQUIRE_NOTHROW(check_surgery_equivalences(path(2), 1, 5, 7));
  REQUIRE_THROWS_WITH(check_surgery_equivalences(path(1), 1, 5, 7),
                      ContainsSubstring("at least 2 vertices"));
}

TEST_CASE("graph summaries") {
  GraphSummary s = summarize(complete(4));
  REQUIRE(s.order == 4);
  REQUIRE(s.max_degree == 3);
  REQUIRE(s.min_degree == 3);
  REQUIRE(s.regular);
  REQUIRE(s.connected);

  GraphSummary t = summarize(star(3));
  REQUIRE_FALSE(t.regular);
  REQUIRE(t.max_degree == 3);
  REQUIRE(t.min_degree == 1);
}
