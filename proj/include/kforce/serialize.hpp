#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kforce/graph.hpp"
#include "kforce/propagation.hpp"
#include "kforce/solvers.hpp"
#include "kforce/transforms.hpp"
#include "kforce/verifier.hpp"
#include "kforce/vertexset.hpp"

namespace kforce {

using nlohmann::json;

inline json set_json(const VertexSet& s) { return json(s.to_vector()); }

inline json trace_json(const PropagationTrace& t) {
  json rounds = json::array();
  for (const VertexSet& r : t.rounds) rounds.push_back(set_json(r));
  json forcers = json::array();
  for (const auto& round : t.forcers) {
    json pairs = json::array();
    for (const auto& [v, w] : round) pairs.push_back(json::array({v, w}));
    forcers.push_back(pairs);
  }
  return json{{"mode", mode_name(t.mode)},
              {"k", t.k},
              {"rounds", rounds},
              {"forcers", forcers},
              {"success", t.success}};
}

/// `parameter` is the public name of the solved quantity: "Zk", "gammaPk",
/// or "gamma".
inline json solve_json(const std::string& parameter, int k, const SolveResult& r) {
  json pool;
  if (r.pruned_pool) {
    pool = json(*r.pruned_pool);
  } else {
    pool = nullptr;
  }
  return json{{"parameter", parameter}, {"k", k},
              {"value", r.value},      {"witness", set_json(r.witness)},
              {"nodes_explored", r.nodes_explored}, {"pruned_pool", pool}};
}

inline json contraction_json(const ContractionResult& r) {
  return json{{"contracted_vertex", r.contracted_vertex},
              {"order", r.graph.order()},
              {"id_map", json(r.id_map)}};
}

inline json xhat_json(const XHatResult& r) {
  json pendants = json::array();
  for (const auto& owned : r.pendant_map) pendants.push_back(json(owned));
  return json{{"order", r.graph.order()},
              {"core_ids", set_json(r.core_ids)},
              {"original_ids", json(r.original_ids)},
              {"pendant_map", pendants}};
}

inline json interval_json(const BoundInterval& b) {
  json out{{"lower", b.lower},
           {"upper", b.upper},
           {"lower_ref", b.lower_ref},
           {"upper_ref", b.upper_ref}};
  out["witness_upper"] = b.witness_upper ? set_json(*b.witness_upper) : json(nullptr);
  return out;
}

inline json pd_contraction_json(int k, const ContractionBoundResult& r) {
  return json{{"parameter", "gammaPk"},
              {"k", k},
              {"interval", interval_json(r.interval)},
              {"contracted_value", r.contracted_value},
              {"xhat_value", r.xhat_value}};
}

inline json zf_contraction_json(int k, const ZfContractionBoundResult& r) {
  json out{{"parameter", "Zk"},
           {"k", k},
           {"hypothesis", json{{"holds", r.hypothesis.holds}, {"detail", r.hypothesis.detail}}},
           {"xhat_value", r.xhat_value},
           {"boundary_size", r.boundary_size}};
  out["interval"] = r.interval ? interval_json(*r.interval) : json(nullptr);
  out["contracted_value"] = r.contracted_value ? json(*r.contracted_value) : json(nullptr);
  return out;
}

inline json partition_json(const std::string& parameter, int k, const PartitionBoundResult& r) {
  json parts = json::array();
  for (const PartOutcome& part : r.parts) {
    parts.push_back(json{{"index", part.index},
                         {"value", part.value},
                         {"witness", set_json(part.witness)},
                         {"seconds", part.seconds},
                         {"hypothesis_ok", part.hypothesis_ok},
                         {"note", part.note}});
  }
  json out{{"parameter", parameter},
           {"k", k},
           {"hypotheses_hold", r.hypotheses_hold},
           {"parts", parts}};
  out["bound"] = r.bound ? json(*r.bound) : json(nullptr);
  out["witness"] = r.witness ? set_json(*r.witness) : json(nullptr);
  return out;
}

inline json summary_json(const GraphSummary& s) {
  return json{{"order", s.order},
              {"max_degree", s.max_degree},
              {"min_degree", s.min_degree},
              {"regular", s.regular},
              {"connected", s.connected}};
}

inline json report_json(const BoundReport& r) {
  json checks = json::array();
  for (const CheckRow& row : r.checks) {
    json entry{{"check_id", row.check_id},
               {"tag", row.tag},
               {"relation", row.relation},
               {"verdict", verdict_name(row.verdict)}};
    if (row.verdict == Verdict::skip) {
      entry["lhs"] = nullptr;
      entry["rhs"] = nullptr;
      entry["skipped_reason"] = row.skipped_reason;
    } else {
      entry["lhs"] = row.lhs;
      entry["rhs"] = row.rhs;
      entry["skipped_reason"] = nullptr;
    }
    checks.push_back(entry);
  }
  return json{{"summary", summary_json(r.summary)},
              {"k", r.k},
              {"checks", checks},
              {"all_passed", r.all_passed()}};
}

inline std::string report_text(const BoundReport& r) {
  std::ostringstream out;
  out << "graph: order=" << r.summary.order << " max_degree=" << r.summary.max_degree
      << " min_degree=" << r.summary.min_degree
      << " regular=" << (r.summary.regular ? "yes" : "no")
      << " connected=" << (r.summary.connected ? "yes" : "no") << " k=" << r.k << "\n";
  out << std::left << std::setw(28) << "check" << std::setw(20) << "tag" << std::right
      << std::setw(8) << "lhs" << std::setw(8) << "rhs"
      << "  verdict\n";
  for (const CheckRow& row : r.checks) {
    out << std::left << std::setw(28) << row.check_id << std::setw(20) << row.tag;
    if (row.verdict == Verdict::skip) {
      out << std::right << std::setw(8) << "-" << std::setw(8) << "-";
      out << "  SKIP (" << row.skipped_reason << ")\n";
    } else {
      out << std::right << std::setw(8) << row.lhs << std::setw(8) << row.rhs;
      out << "  " << verdict_name(row.verdict) << "\n";
    }
  }
  out << "overall: " << (r.all_passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

inline json sierpinski_report_json(const SierpinskiCheckReport& r) {
  json out{{"p", r.p},
           {"n", r.n},
           {"k", r.k},
           {"mode", sierpinski_mode_name(r.mode)},
           {"expected", r.expected},
           {"computed", r.computed},
           {"passed", r.passed}};
  if (r.mode == SierpinskiMode::witness) {
    out["part_count"] = r.part_count;
    out["per_part_expected"] = r.per_part_expected;
    out["per_part_ok"] = r.per_part_ok;
    out["witness_verified"] = r.witness_verified;
    out["witness"] = r.witness ? set_json(*r.witness) : json(nullptr);
  }
  return out;
}

inline std::string sierpinski_report_text(const SierpinskiCheckReport& r) {
  std::ostringstream out;
  out << "family base=" << r.p << " depth=" << r.n << " k=" << r.k
      << " mode=" << sierpinski_mode_name(r.mode) << "\n";
  out << "expected " << r.expected << ", computed " << r.computed << "\n";
  if (r.mode == SierpinskiMode::witness) {
    out << "parts: " << r.part_count << ", each expected " << r.per_part_expected << " ("
        << (r.per_part_ok ? "ok" : "MISMATCH") << ")\n";
    out << "witness verified on the full graph: " << (r.witness_verified ? "yes" : "NO") << "\n";
  }
  out << "overall: " << (r.passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace kforce
