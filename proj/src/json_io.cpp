#include "orbits/json_io.hpp"

#include "orbits/error.hpp"

namespace orbits {

json dense_json(const RankMatrix& r) { return r.rows(); }

json rank_matrix_json(const RankMatrix& r) { return {{"n", r.n()}, {"rank_matrix", dense_json(r)}}; }

RankMatrix rank_matrix_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("rank_matrix") : j;
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::Parse, "rank matrix must be a non-empty array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorKind::Parse, "rank matrix rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "rank matrix entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return RankMatrix::from_rows(out);
}

json involution_json(const Involution& s) {
  json pairs = json::array();
  for (const auto& p : s.pairs()) pairs.push_back({p.i, p.j});
  return {{"involution", to_string(s)}, {"n", s.n()}, {"length", s.length()}, {"pairs", pairs}, {"dim", dimension(s)}};
}

json moves_json(const std::vector<MoveOutcome>& moves) {
  json out = json::array();
  for (const auto& m : moves) {
    json src = json::array();
    for (const auto& p : m.source_pairs) src.push_back({p.i, p.j});
    out.push_back({{"involution", to_string(m.target)},
                   {"dim", dimension(m.target)},
                   {"kind", std::string(to_string(m.kind))},
                   {"source_pairs", src}});
  }
  return out;
}

json intersection_json(const IntersectionResult& r) {
  json comps = json::array();
  for (std::size_t x = 0; x < r.components.size(); ++x)
    comps.push_back({{"involution", to_string(r.components[x])}, {"dim", r.component_dims[x]}});
  json out = {{"meet", dense_json(r.meet)},
              {"irreducible", r.irreducible},
              {"components", comps},
              {"codim", r.codim},
              {"equidimensional", r.equidimensional}};
  if (r.outside_scope) out["note"] = "outside theorem scope";
  return out;
}

json tableau_json(const TwoColumnTableau& t) {
  return {{"tableau", to_string(t)}, {"col1", t.col1()}, {"col2", t.col2()}, {"involution", to_string(sigma_T(t))}};
}

json report_json(const VerificationReport& rep) {
  json fails = json::array();
  for (const auto& f : rep.failures)
    fails.push_back({{"claim", f.claim}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  return {{"suite", rep.suite},
          {"n_min", rep.n_min},
          {"n_max", rep.n_max},
          {"k_max", rep.k_max ? json(*rep.k_max) : json(nullptr)},
          {"checks_run", rep.checks_run},
          {"failure_count", rep.failure_count},
          {"failures", fails},
          {"notes", rep.notes},
          {"elapsed_seconds", rep.elapsed_seconds},
          {"passed", rep.passed()}};
}

}  // namespace orbits
