#include "mtl/json_io.hpp"

#include <string>

namespace mtl {

using nlohmann::json;

json chain_to_json(const Chain& c) {
  return json{{"size", c.size()}, {"product", c.rows()}};
}

std::pair<int, std::vector<std::vector<int>>> raw_table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("product"))
    throw Error(Reason::out_of_range, "chain document needs \"size\" and \"product\"");
  if (!j["size"].is_number_integer())
    throw Error(Reason::out_of_range, "\"size\" must be an integer");
  int n = j["size"].get<int>();
  if (!j["product"].is_array())
    throw Error(Reason::out_of_range, "\"product\" must be an array of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : j["product"]) {
    if (!row.is_array()) throw Error(Reason::out_of_range, "\"product\" rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw Error(Reason::out_of_range, "\"product\" entries must be integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  return {n, std::move(table)};
}

Chain chain_from_json(const json& j) {
  auto [n, table] = raw_table_from_json(j);
  return make_chain(n, table);
}

json check_to_json(const Check& c) {
  json out{{"ok", c.ok}};
  if (!c.ok) {
    json w = json::array();
    for (int v : c.witness)
      if (v >= 0) w.push_back(v);
    out["witness"] = w;
  }
  return out;
}

json axiom_report_to_json(const AxiomReport& r) {
  return json{{"size", r.size},
              {"unit", check_to_json(r.unit)},
              {"bottom", check_to_json(r.bottom)},
              {"commutative", check_to_json(r.commutative)},
              {"associative", check_to_json(r.associative)},
              {"monotone", check_to_json(r.monotone)},
              {"valid", r.valid()}};
}

json analysis_to_json(const Chain& c) {
  bool arch = false, simple = false;
  if (c.size() >= 2) {
    ArchStatus st = archimedean_status(c);
    arch = st.archimedean;
    simple = st.simple;
  }
  json filters = json::array();
  for (Filter f : all_filters(c)) filters.push_back(f.least);
  return json{{"idempotents", idempotents(c)},
              {"local_units", local_units(c)},
              {"locally_unital", is_locally_unital(c)},
              {"archimedean", arch},
              {"simple", simple},
              {"filters", filters}};
}

json quotient_to_json(const Quotient& q) {
  return json{{"algebra", chain_to_json(q.algebra)}, {"projection", q.projection}};
}

json decomposition_to_json(const Decomposition& d) {
  json comps = json::array();
  for (const Chain& c : d.components) comps.push_back(chain_to_json(c));
  return json{{"components", comps}, {"boundaries", d.boundaries}};
}

json split_sequence_to_json(const SplitSequence& s) {
  return json{{"F", chain_to_json(s.F)}, {"E", chain_to_json(s.E)}, {"A", chain_to_json(s.A)},
              {"j", s.j},               {"p", s.p},               {"s", s.s}};
}

SplitSequence split_sequence_from_json(const json& j) {
  for (const char* key : {"F", "E", "A", "j", "p", "s"})
    if (!j.contains(key))
      throw Error(Reason::out_of_range, std::string("sequence document needs \"") + key + "\"");
  auto ints = [&](const char* key) {
    std::vector<int> out;
    for (const auto& v : j[key]) {
      if (!v.is_number_integer())
        throw Error(Reason::out_of_range, std::string("\"") + key + "\" entries must be integers");
      out.push_back(v.get<int>());
    }
    return out;
  };
  return SplitSequence{chain_from_json(j["F"]), chain_from_json(j["E"]), chain_from_json(j["A"]),
                       ints("j"), ints("p"), ints("s")};
}

json hom_report_to_json(const HomReport& r) {
  return json{{"product", check_to_json(r.product)},
              {"residuum", check_to_json(r.residuum)},
              {"unit", check_to_json(r.unit)},
              {"bottom", check_to_json(r.bottom)},
              {"order", check_to_json(r.order)},
              {"meet", check_to_json(r.meet)},
              {"join", check_to_json(r.join)},
              {"ok", r.ok()}};
}

json split_report_to_json(const SplitReport& r) {
  return json{{"j_hom", hom_report_to_json(r.j_hom)},
              {"p_hom", hom_report_to_json(r.p_hom)},
              {"s_hom", hom_report_to_json(r.s_hom)},
              {"j_injective", check_to_json(r.j_injective)},
              {"p_surjective", check_to_json(r.p_surjective)},
              {"kernel", check_to_json(r.kernel)},
              {"section", check_to_json(r.section)},
              {"exact", r.ok()}};
}

json gcp_to_json(const GcpSpec& s) {
  json mu = json::object();
  for (size_t i = 0; i < s.mu.size(); ++i)
    for (size_t j = 0; j < s.mu[i].size(); ++j)
      mu[std::to_string(i) + "," + std::to_string(j)] = s.mu[i][j];
  return json{{"index_algebra", chain_to_json(s.index_algebra)},
              {"filter", chain_to_json(s.filter)},
              {"blocks", s.blocks},
              {"mu", mu}};
}

GcpSpec gcp_from_json(const json& j) {
  for (const char* key : {"index_algebra", "filter", "blocks", "mu"})
    if (!j.contains(key))
      throw Error(Reason::out_of_range, std::string("gcp document needs \"") + key + "\"");
  GcpSpec spec{chain_from_json(j["index_algebra"]), chain_from_json(j["filter"]), {}, {}};
  for (const auto& v : j["blocks"]) {
    if (!v.is_number_integer()) throw Error(Reason::out_of_range, "\"blocks\" must be integers");
    spec.blocks.push_back(v.get<int>());
  }
  const int m = spec.index_algebra.size();
  spec.mu.assign(m, std::vector<MuTable>(m));
  if (!j["mu"].is_object()) throw Error(Reason::out_of_range, "\"mu\" must be an object");
  for (const auto& [key, val] : j["mu"].items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
      throw Error(Reason::out_of_range, "mu keys must look like \"i,j\"");
    int i, jj;
    try {
      i = std::stoi(key.substr(0, comma));
      jj = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw Error(Reason::out_of_range, "mu keys must look like \"i,j\"");
    }
    if (i < 0 || i >= m || jj < 0 || jj >= m)
      throw Error(Reason::out_of_range, "mu key indices out of range");
    MuTable t;
    for (const auto& row : val) {
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw Error(Reason::out_of_range, "mu entries must be integers");
        r.push_back(v.get<int>());
      }
      t.push_back(std::move(r));
    }
    spec.mu[i][jj] = std::move(t);
  }
  return spec;
}

json condition_to_json(const Condition& c) {
  json out{{"ok", c.ok}};
  if (!c.ok) {
    out["witness"] = c.witness;
    out["note"] = c.note;
  }
  return out;
}

json condition_report_to_json(const ConditionReport& r) {
  json assembled;
  if (r.assembled) assembled = axiom_report_to_json(*r.assembled);
  return json{{"wellformed", condition_to_json(r.wellformed)},
              {"monotone", condition_to_json(r.monotone)},
              {"zero_annihilation", condition_to_json(r.zero)},
              {"zero_annihilation_weak", condition_to_json(r.zero_weak)},
              {"jointly_associative", condition_to_json(r.associative)},
              {"jointly_commutative", condition_to_json(r.commutative)},
              {"global_unit", condition_to_json(r.global_unit)},
              {"conditions_pass", r.conditions_ok()},
              {"assembled", assembled},
              {"valid", r.ok()}};
}

json claim_report_to_json(const ClaimReport& r) {
  return json{{"claim_id", r.claim_id},
              {"max_size", r.max_size},
              {"sizes", r.sizes},
              {"instances", r.instances},
              {"verdict", r.verdict()},
              {"counterexamples", r.counterexamples},
              {"info", r.info}};
}

}  // namespace mtl
