#include "stratkit/io.hpp"

#include <algorithm>
#include <set>

#include "stratkit/errors.hpp"

namespace stratkit {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) { throw InputError(what); }

void require_object(const json& j, std::string_view what) {
  if (!j.is_object()) invalid(std::string(what) + " must be a JSON object");
}

void allow_keys(const json& j, std::initializer_list<std::string_view> keys, std::string_view what) {
  for (const auto& [k, v] : j.items()) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      invalid("unknown key '" + k + "' in " + std::string(what));
    }
  }
}

const json& field(const json& j, const char* key, std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) invalid(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::string string_of(const json& j, std::string_view what) {
  if (!j.is_string()) invalid(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const json& j, std::string_view what) {
  if (!j.is_array()) invalid(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(string_of(e, what));
  return out;
}

bool bool_of(const json& j, std::string_view what) {
  if (!j.is_boolean()) invalid(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

json sorted_names(const FiniteSpace& s, PointSet set) { return sorted(s.names(set)); }

// --- spaces -----------------------------------------------------------------

FiniteSpace space_from_json(const json& j);

FiniteSpace space_of_fixture(const std::string& name) {
  const Fixture f = fixture(name);
  if (const auto* s = std::get_if<FiniteSpace>(&f.document)) return *s;
  if (const auto* d = std::get_if<Decomposition>(&f.document)) return d->space();
  invalid("fixture '" + name + "' has no space");
}

FiniteSpace space_from_json(const json& j) {
  require_object(j, "space");
  if (j.contains("fixture")) {
    allow_keys(j, {"fixture"}, "space reference");
    return space_of_fixture(string_of(j["fixture"], "fixture name"));
  }
  allow_keys(j, {"kind", "points", "min_open", "subbasis"}, "space");
  if (j.contains("kind") && j["kind"] != "space") invalid("expected kind \"space\"");
  auto points = strings_of(field(j, "points", "space"), "space points");
  const bool has_min = j.contains("min_open");
  const bool has_sub = j.contains("subbasis");
  if (has_min == has_sub) invalid("space needs exactly one of \"min_open\" and \"subbasis\"");
  if (has_sub) {
    std::vector<std::vector<std::string>> gens;
    const json& sub = j["subbasis"];
    if (!sub.is_array()) invalid("subbasis must be an array of point lists");
    for (const auto& g : sub) gens.push_back(strings_of(g, "subbasis member"));
    return FiniteSpace::from_subbasis(std::move(points), gens);
  }
  const json& mo = j["min_open"];
  require_object(mo, "min_open");
  // Build an index through a discrete space, which also checks duplicates.
  const FiniteSpace names = FiniteSpace::discrete(points);
  std::vector<PointSet> u(points.size());
  std::vector<bool> seen(points.size(), false);
  for (const auto& [k, v] : mo.items()) {
    const auto x = names.find(k);
    if (!x) invalid("min_open mentions unknown point '" + k + "'");
    seen[*x] = true;
    for (const auto& y : strings_of(v, "min_open entry")) {
      const auto yi = names.find(y);
      if (!yi) invalid("min_open of '" + k + "' mentions unknown point '" + y + "'");
      u[*x].insert(*yi);
    }
  }
  for (std::size_t x = 0; x < points.size(); ++x) {
    if (!seen[x]) invalid("min_open is missing point '" + points[x] + "'");
  }
  return FiniteSpace::from_min_open(std::move(points), std::move(u));
}

json space_to_json(const FiniteSpace& s) {
  json mo = json::object();
  for (std::size_t x = 0; x < s.size(); ++x) mo[s.name(x)] = sorted_names(s, s.min_open(x));
  return {{"kind", "space"}, {"points", sorted(s.points())}, {"min_open", mo}};
}

// --- orders -----------------------------------------------------------------

Proset proset_from_json(const json& j, std::string_view kind) {
  require_object(j, kind);
  allow_keys(j, {"kind", "elements", "leq_pairs", "close"}, kind);
  auto elements = strings_of(field(j, "elements", kind), "elements");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq_pairs")) {
    const json& lp = j["leq_pairs"];
    if (!lp.is_array()) invalid("leq_pairs must be an array of [a, b] pairs");
    for (const auto& p : lp) {
      if (!p.is_array() || p.size() != 2) invalid("each leq pair must be [a, b]");
      pairs.emplace_back(string_of(p[0], "leq pair element"), string_of(p[1], "leq pair element"));
    }
  }
  const bool close = j.contains("close") ? bool_of(j["close"], "close") : true;
  return Proset::from_relation(std::move(elements), pairs, close);
}

json proset_to_json(const Proset& p, std::string_view kind) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [a, b] : p.strict_pairs()) pairs.emplace_back(p.name(a), p.name(b));
  std::sort(pairs.begin(), pairs.end());
  json lp = json::array();
  for (const auto& [a, b] : pairs) lp.push_back({a, b});
  return {{"kind", kind}, {"elements", sorted(p.elements())}, {"leq_pairs", lp}, {"close", true}};
}

// --- decompositions ---------------------------------------------------------

Decomposition decomposition_from_json(const json& j) {
  require_object(j, "decomposition");
  allow_keys(j, {"kind", "space", "strata"}, "decomposition");
  FiniteSpace space = space_from_json(field(j, "space", "decomposition"));
  const json& st = field(j, "strata", "decomposition");
  require_object(st, "strata");
  std::vector<std::string> ids;
  std::vector<PointSet> strata;
  for (const auto& [id, pts] : st.items()) {
    ids.push_back(id);
    PointSet s;
    for (const auto& p : strings_of(pts, "stratum")) {
      const auto x = space.find(p);
      if (!x) invalid("stratum '" + id + "' mentions unknown point '" + p + "'");
      if (s.contains(*x)) invalid("stratum '" + id + "' lists '" + p + "' twice");
      s.insert(*x);
    }
    strata.push_back(s);
  }
  return Decomposition(std::move(space), std::move(ids), std::move(strata));
}

json decomposition_to_json(const Decomposition& d) {
  json st = json::object();
  for (std::size_t i = 0; i < d.stratum_count(); ++i) st[d.id(i)] = sorted_names(d.space(), d.stratum(i));
  return {{"kind", "decomposition"}, {"space", space_to_json(d.space())}, {"strata", st}};
}

// --- maps -------------------------------------------------------------------

SpaceMap map_from_json(const json& j) {
  require_object(j, "map");
  allow_keys(j, {"kind", "source", "target", "assignment"}, "map");
  FiniteSpace src = space_from_json(field(j, "source", "map"));
  FiniteSpace dst = space_from_json(field(j, "target", "map"));
  const json& as = field(j, "assignment", "map");
  require_object(as, "assignment");
  std::vector<std::size_t> assign(src.size(), 0);
  std::vector<bool> seen(src.size(), false);
  for (const auto& [k, v] : as.items()) {
    const auto x = src.find(k);
    if (!x) invalid("assignment mentions unknown source point '" + k + "'");
    const auto y = dst.find(string_of(v, "assignment value"));
    if (!y) invalid("assignment of '" + k + "' lands outside the target");
    assign[*x] = *y;
    seen[*x] = true;
  }
  for (std::size_t x = 0; x < src.size(); ++x) {
    if (!seen[x]) invalid("assignment is missing source point '" + src.name(x) + "'");
  }
  return SpaceMap(std::move(src), std::move(dst), std::move(assign));
}

json map_to_json(const SpaceMap& f) {
  json as = json::object();
  for (std::size_t x = 0; x < f.source.size(); ++x) as[f.source.name(x)] = f.target.name(f.assignment[x]);
  return {{"kind", "map"}, {"source", space_to_json(f.source)}, {"target", space_to_json(f.target)}, {"assignment", as}};
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string_view kind_of(const Document& doc) {
  struct Visitor {
    std::string_view operator()(const FiniteSpace&) const { return "space"; }
    std::string_view operator()(const ProsetDocument&) const { return "proset"; }
    std::string_view operator()(const PosetDocument&) const { return "poset"; }
    std::string_view operator()(const Decomposition&) const { return "decomposition"; }
    std::string_view operator()(const SpaceMap&) const { return "map"; }
    std::string_view operator()(const StrataOrderDocument&) const { return "order-on-strata"; }
    std::string_view operator()(const SymbolicDocument&) const { return "symbolic"; }
    std::string_view operator()(const PosetStratification&) const { return "poset-stratification"; }
  };
  return std::visit(Visitor{}, doc);
}

Document from_json(const json& j) {
  require_object(j, "document");
  const std::string kind = string_of(field(j, "kind", "document"), "kind");
  if (kind == "space") return space_from_json(j);
  if (kind == "proset") return ProsetDocument{proset_from_json(j, kind)};
  if (kind == "poset") return PosetDocument{Poset(proset_from_json(j, kind))};
  if (kind == "order-on-strata") return StrataOrderDocument{Poset(proset_from_json(j, kind))};
  if (kind == "decomposition") return decomposition_from_json(j);
  if (kind == "map") return map_from_json(j);
  if (kind == "symbolic") {
    allow_keys(j, {"kind", "family"}, "symbolic");
    return SymbolicDocument{parse_symbolic_family(string_of(field(j, "family", "symbolic"), "family"))};
  }
  if (kind == "poset-stratification") {
    allow_keys(j, {"kind", "decomposition", "order"}, "poset-stratification");
    Decomposition d = decomposition_from_json(field(j, "decomposition", kind));
    Poset order(proset_from_json(field(j, "order", kind), "order"));
    try {
      return PosetStratification(std::move(d), order);
    } catch (const PreconditionError& e) {
      invalid(std::string("invalid poset-stratification: ") + e.what());
    }
  }
  invalid("unknown document kind '" + kind + "'");
}

Document load(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
  return from_json(j);
}

json to_json(const Document& doc) {
  struct Visitor {
    json operator()(const FiniteSpace& s) const { return space_to_json(s); }
    json operator()(const ProsetDocument& p) const { return proset_to_json(p.value, "proset"); }
    json operator()(const PosetDocument& p) const { return proset_to_json(p.value.proset(), "poset"); }
    json operator()(const Decomposition& d) const { return decomposition_to_json(d); }
    json operator()(const SpaceMap& f) const { return map_to_json(f); }
    json operator()(const StrataOrderDocument& p) const { return proset_to_json(p.value.proset(), "order-on-strata"); }
    json operator()(const SymbolicDocument& s) const {
      return {{"kind", "symbolic"}, {"family", std::string(to_string(s.family))}};
    }
    json operator()(const PosetStratification& ps) const {
      json order = proset_to_json(ps.order().proset(), "poset");
      order.erase("kind");
      return {{"kind", "poset-stratification"},
              {"decomposition", decomposition_to_json(ps.decomposition())},
              {"order", order}};
    }
  };
  return std::visit(Visitor{}, doc);
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string save(const Document& doc) { return dump_canonical(to_json(doc)); }

Decomposition expect_decomposition(const Document& doc) {
  if (const auto* d = std::get_if<Decomposition>(&doc)) return *d;
  if (const auto* ps = std::get_if<PosetStratification>(&doc)) return ps->decomposition();
  invalid("expected a decomposition document, got " + std::string(kind_of(doc)));
}

Poset expect_order(const Document& doc) {
  if (const auto* o = std::get_if<StrataOrderDocument>(&doc)) return o->value;
  if (const auto* o = std::get_if<PosetDocument>(&doc)) return o->value;
  if (const auto* o = std::get_if<ProsetDocument>(&doc)) return Poset(o->value);
  invalid("expected an order-on-strata document, got " + std::string(kind_of(doc)));
}

// --- reports ----------------------------------------------------------------

json to_json(const ClassificationReport& r) {
  json search = r.poset_stratified.search_result ? json(*r.poset_stratified.search_result) : json(nullptr);
  return {
      {"kind", "classification"},
      {"alexandrov",
       {{"quotient_is_alexandrov", r.alexandrov.quotient_is_alexandrov},
        {"identity_homeomorphism", r.alexandrov.identity_homeomorphism},
        {"pi_continuous", r.alexandrov.pi_continuous}}},
      {"locally_finite", r.locally_finite},
      {"locally_closed", r.locally_closed},
      {"frontier",
       {{"frontier_condition", r.frontier.frontier_condition},
        {"closure_is_min_closed_union", r.frontier.closure_is_min_closed_union},
        {"preorder_matches_closure", r.frontier.preorder_matches_closure},
        {"pi_open", r.frontier.pi_open},
        {"witnesses", r.frontier.witnesses}}},
      {"poset_stratified",
       {{"exists_partial_order", r.poset_stratified.exists_partial_order},
        {"preorder_partial_and_continuous", r.poset_stratified.preorder_partial_and_continuous},
        {"strata_open_in_closed_union", r.poset_stratified.strata_open_in_closed_union},
        {"search_result", search},
        {"witnesses", r.poset_stratified.witnesses}}},
      {"stratification", r.stratification},
      {"stratification_reasons", r.stratification_reasons},
      {"semicontinuity",
       {{"sat_open_open", r.semicontinuity.sat_open_open},
        {"sat_closed_closed", r.semicontinuity.sat_closed_closed},
        {"pi_open", r.semicontinuity.pi_open},
        {"pi_closed", r.semicontinuity.pi_closed},
        {"lower_semicontinuous", r.semicontinuity.lower()},
        {"upper_semicontinuous", r.semicontinuity.upper()}}},
      {"witnesses", r.witnesses},
      {"verdict", std::string(to_string(r.verdict))},
  };
}

ClassificationReport classification_from_json(const json& j) {
  require_object(j, "classification");
  if (j.value("kind", "") != "classification") invalid("expected kind \"classification\"");
  try {
    ClassificationReport r;
    const auto& a = j.at("alexandrov");
    r.alexandrov = {a.at("quotient_is_alexandrov").get<bool>(), a.at("identity_homeomorphism").get<bool>(),
                    a.at("pi_continuous").get<bool>()};
    r.locally_finite = j.at("locally_finite").get<bool>();
    r.locally_closed = j.at("locally_closed").get<std::map<std::string, bool>>();
    const auto& f = j.at("frontier");
    r.frontier.frontier_condition = f.at("frontier_condition").get<bool>();
    r.frontier.closure_is_min_closed_union = f.at("closure_is_min_closed_union").get<bool>();
    r.frontier.preorder_matches_closure = f.at("preorder_matches_closure").get<bool>();
    r.frontier.pi_open = f.at("pi_open").get<bool>();
    r.frontier.witnesses = f.at("witnesses").get<Witnesses>();
    const auto& p = j.at("poset_stratified");
    r.poset_stratified.exists_partial_order = p.at("exists_partial_order").get<bool>();
    r.poset_stratified.preorder_partial_and_continuous = p.at("preorder_partial_and_continuous").get<bool>();
    r.poset_stratified.strata_open_in_closed_union = p.at("strata_open_in_closed_union").get<bool>();
    if (!p.at("search_result").is_null()) r.poset_stratified.search_result = p.at("search_result").get<bool>();
    r.poset_stratified.witnesses = p.at("witnesses").get<Witnesses>();
    r.stratification = j.at("stratification").get<bool>();
    r.stratification_reasons = j.at("stratification_reasons").get<std::vector<std::string>>();
    const auto& s = j.at("semicontinuity");
    r.semicontinuity = {s.at("sat_open_open").get<bool>(), s.at("sat_closed_closed").get<bool>(),
                        s.at("pi_open").get<bool>(), s.at("pi_closed").get<bool>()};
    r.witnesses = j.at("witnesses").get<Witnesses>();
    r.verdict = parse_ladder(j.at("verdict").get<std::string>());
    return r;
  } catch (const json::exception& e) {
    invalid(std::string("malformed classification report: ") + e.what());
  }
}

json to_json(const SweepReport& r) {
  json checks = json::object();
  for (const auto& [name, pf] : r.checks) checks[name] = {{"pass", pf.pass}, {"fail", pf.fail}};
  return {
      {"kind", "sweep-report"},
      {"points", r.points},
      {"spaces", r.spaces},
      {"partitions", r.partitions},
      {"instances", r.instances},
      {"stratifications", r.stratifications},
      {"poset_stratified", r.poset_stratified},
      {"theorem_b_checks", r.theorem_b_checks},
      {"refinements_tested", r.refinements_tested},
      {"checks", checks},
      {"failures", r.failures()},
      {"first_counterexample", r.first_counterexample ? json::parse(*r.first_counterexample) : json(nullptr)},
      {"first_failed_check", r.first_failed_check ? json(*r.first_failed_check) : json(nullptr)},
  };
}

SweepReport sweep_from_json(const json& j) {
  require_object(j, "sweep report");
  if (j.value("kind", "") != "sweep-report") invalid("expected kind \"sweep-report\"");
  try {
    SweepReport r;
    r.points = j.at("points").get<std::size_t>();
    r.spaces = j.at("spaces").get<std::size_t>();
    r.partitions = j.at("partitions").get<std::size_t>();
    r.instances = j.at("instances").get<std::size_t>();
    r.stratifications = j.at("stratifications").get<std::size_t>();
    r.poset_stratified = j.at("poset_stratified").get<std::size_t>();
    r.theorem_b_checks = j.at("theorem_b_checks").get<std::size_t>();
    r.refinements_tested = j.at("refinements_tested").get<std::size_t>();
    for (const auto& [name, pf] : j.at("checks").items()) {
      r.checks[name] = {pf.at("pass").get<std::size_t>(), pf.at("fail").get<std::size_t>()};
    }
    if (!j.at("first_counterexample").is_null()) r.first_counterexample = dump_canonical(j.at("first_counterexample"));
    if (!j.at("first_failed_check").is_null()) r.first_failed_check = j.at("first_failed_check").get<std::string>();
    if (j.at("failures").get<std::size_t>() != r.failures()) invalid("sweep report failure count is inconsistent");
    return r;
  } catch (const json::exception& e) {
    invalid(std::string("malformed sweep report: ") + e.what());
  }
}

}  // namespace stratkit
