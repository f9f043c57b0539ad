#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stratkit/errors.hpp"
#include "stratkit/io.hpp"
#include "stratkit/oracle.hpp"

namespace stratkit::cli {

namespace {

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report_text(const Decomposition& d, const ClassificationReport& r, std::ostream& out) {
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "strata: " << d.stratum_count() << ", points: " << d.space().size() << "\n";
  out << "alexandrov: quotient_is_alexandrov=" << yes_no(r.alexandrov.quotient_is_alexandrov)
      << " identity_homeomorphism=" << yes_no(r.alexandrov.identity_homeomorphism)
      << " pi_continuous=" << yes_no(r.alexandrov.pi_continuous) << "\n";
  out << "locally finite: " << yes_no(r.locally_finite) << "\n";
  out << "locally closed:";
  for (const auto& [id, lc] : r.locally_closed) out << " " << id << "=" << yes_no(lc);
  out << "\n";
  out << "frontier: frontier_condition=" << yes_no(r.frontier.frontier_condition)
      << " closure_is_min_closed_union=" << yes_no(r.frontier.closure_is_min_closed_union)
      << " preorder_matches_closure=" << yes_no(r.frontier.preorder_matches_closure)
      << " pi_open=" << yes_no(r.frontier.pi_open) << "\n";
  out << "poset-stratified: exists_partial_order=" << yes_no(r.poset_stratified.exists_partial_order)
      << " preorder_partial_and_continuous=" << yes_no(r.poset_stratified.preorder_partial_and_continuous)
      << " strata_open_in_closed_union=" << yes_no(r.poset_stratified.strata_open_in_closed_union) << "\n";
  out << "stratification: " << yes_no(r.stratification) << "\n";
  for (const auto& reason : r.stratification_reasons) out << "  reason: " << reason << "\n";
  out << "semicontinuity: sat_open_open=" << yes_no(r.semicontinuity.sat_open_open)
      << " sat_closed_closed=" << yes_no(r.semicontinuity.sat_closed_closed)
      << " pi_open=" << yes_no(r.semicontinuity.pi_open) << " pi_closed=" << yes_no(r.semicontinuity.pi_closed)
      << " (lower=" << yes_no(r.semicontinuity.lower()) << ", upper=" << yes_no(r.semicontinuity.upper()) << ")\n";
  for (const auto& [k, w] : r.witnesses) out << "witness " << k << ": " << w << "\n";
}

std::string poset_dot_for(const Decomposition& d) {
  const Proset leq = decomposition_preorder(d);
  if (is_poset(leq).value) return export_dot(Poset(leq));
  return export_dot(d);
}

std::string dot_for(const Document& doc) {
  if (const auto* d = std::get_if<Decomposition>(&doc)) return export_dot(*d);
  if (const auto* ps = std::get_if<PosetStratification>(&doc)) return export_dot(ps->order());
  if (const auto* s = std::get_if<FiniteSpace>(&doc)) return export_dot(Decomposition::pointwise(*s));
  if (const auto* p = std::get_if<ProsetDocument>(&doc)) {
    if (is_poset(p->value).value) return export_dot(Poset(p->value));
    return export_dot(Decomposition::pointwise(alexandrov_space(p->value)));
  }
  return export_dot(expect_order(doc));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite spaces, decompositions and stratifications", "stratkit"};
  app.require_subcommand(1, 1);

  std::string format = "text";
  std::string doc_path;
  std::string order_path;
  std::string expect;
  bool dot = false;
  bool exhaustive = false;
  bool filter_empty = false;
  std::size_t points = 3;
  std::string gen_kind;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  double density = 0.5;
  std::size_t gen_k = 0;
  std::string fixture_name;

  auto* check = app.add_subcommand("check", "full classification report");
  check->add_option("decomposition", doc_path, "decomposition document, - for stdin")->required();
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "classification ladder verdict");
  classify_cmd->add_option("decomposition", doc_path)->required();
  classify_cmd->add_option("--expect", expect, "expected verdict; exit 1 on mismatch")
      ->check(CLI::IsMember({"decomposition", "alexandrov", "poset-stratified", "stratification"}));

  auto* quotient = app.add_subcommand("quotient", "decomposition space");
  quotient->add_option("decomposition", doc_path)->required();

  auto* preorder = app.add_subcommand("preorder", "decomposition preorder");
  preorder->add_option("decomposition", doc_path)->required();
  preorder->add_flag("--dot", dot, "emit DOT instead of JSON");

  auto* coarsen_cmd = app.add_subcommand("coarsen", "poset-stratified coarsening");
  coarsen_cmd->add_option("decomposition", doc_path)->required();

  auto* thm_a = app.add_subcommand("theorem-a", "poset-stratification of a stratification");
  thm_a->add_option("decomposition", doc_path)->required();

  auto* thm_b = app.add_subcommand("theorem-b", "stratification from a continuous open map onto a poset");
  thm_b->add_option("decomposition", doc_path)->required();
  thm_b->add_option("order", order_path, "order-on-strata document")->required();
  thm_b->add_flag("--filter-empty", filter_empty, "drop order elements with empty preimage");

  auto* verify = app.add_subcommand("verify", "exhaustive verification sweep");
  verify->add_flag("--exhaustive", exhaustive)->required();
  verify->add_option("--points", points, "ground set size")->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* gen = app.add_subcommand("gen", "seeded random documents");
  gen->add_option("--kind", gen_kind)->required()->check(CLI::IsMember({"preorder", "partition"}));
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--seed", gen_seed)->required();
  auto* density_opt = gen->add_option("--density", density, "pair probability in [0, 1]");
  gen->add_option("--k", gen_k, "number of strata for partitions (default n)");

  auto* fixture_cmd = app.add_subcommand("fixture", "built-in fixtures");
  fixture_cmd->require_subcommand(1, 1);
  auto* fixture_list = fixture_cmd->add_subcommand("list", "list fixture names");
  auto* fixture_show = fixture_cmd->add_subcommand("show", "print a fixture document");
  fixture_show->add_option("name", fixture_name)->required();

  auto* export_cmd = app.add_subcommand("export-dot", "Graphviz output for a poset or decomposition");
  export_cmd->add_option("document", doc_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  auto load_doc = [&](const std::string& path) { return load(read_text(path, in)); };

  try {
    if (*check) {
      const Decomposition d = expect_decomposition(load_doc(doc_path));
      const ClassificationReport r = classify(d);
      if (format == "json") {
        out << dump_canonical(to_json(r));
      } else {
        print_report_text(d, r, out);
      }
      return kOk;
    }
    if (*classify_cmd) {
      const Decomposition d = expect_decomposition(load_doc(doc_path));
      const ClassificationReport r = classify(d);
      out << to_string(r.verdict) << "\n";
      if (expect.empty()) return kOk;
      const Ladder want = parse_ladder(expect);
      if (want == r.verdict) return kOk;
      std::string reason = "verdict is " + std::string(to_string(r.verdict));
      if (want == Ladder::stratification && !r.stratification_reasons.empty()) {
        reason = r.stratification_reasons.front();
      } else if (want == Ladder::poset_stratified && !r.poset_stratified.value()) {
        reason = "not poset-stratified";
      }
      out << "expected " << expect << ": " << reason << "\n";
      return kMismatch;
    }
    if (*quotient) {
      out << save(decomposition_space(expect_decomposition(load_doc(doc_path))));
      return kOk;
    }
    if (*preorder) {
      const Decomposition d = expect_decomposition(load_doc(doc_path));
      if (dot) {
        out << poset_dot_for(d);
      } else {
        out << save(ProsetDocument{decomposition_preorder(d)});
      }
      return kOk;
    }
    if (*coarsen_cmd) {
      const Coarsening c = coarsen(expect_decomposition(load_doc(doc_path)));
      out << save(c.stratification);
      return kOk;
    }
    if (*thm_a) {
      const Decomposition d = expect_decomposition(load_doc(doc_path));
      try {
        out << save(theorem_A(d));
      } catch (const PreconditionError& e) {
        out << "precondition failed: " << e.what() << "\n";
        return kMismatch;
      }
      return kOk;
    }
    if (*thm_b) {
      const Decomposition d = expect_decomposition(load_doc(doc_path));
      Poset order = expect_order(load_doc(order_path));
      if (filter_empty) {
        auto [kept, dropped] = restrict_order_to_strata(order, d);
        for (const auto& id : dropped) err << "note: dropped order element '" << id << "' with empty preimage\n";
        order = std::move(kept);
      }
      try {
        const PosetStratification ps(d, order);
        theorem_B(ps);
        out << "stratification confirmed; decomposition preorder is contained in the given order\n";
      } catch (const PreconditionError& e) {
        out << "precondition failed: " << e.what() << "\n";
        return kMismatch;
      }
      return kOk;
    }
    if (*verify) {
      const SweepReport r = exhaustive_verify(points);
      if (format == "json") {
        out << dump_canonical(to_json(r));
      } else {
        out << r.instances << " instances, " << r.failures() << " failures\n";
        out << "spaces " << r.spaces << ", partitions " << r.partitions << ", stratifications " << r.stratifications
            << ", poset-stratified " << r.poset_stratified << ", theorem B checks " << r.theorem_b_checks
            << ", refinements " << r.refinements_tested << "\n";
        for (const auto& [name, pf] : r.checks) {
          out << "  " << name << ": " << pf.pass << " pass, " << pf.fail << " fail\n";
        }
        if (r.first_failed_check) {
          out << "first failure (" << *r.first_failed_check << "):\n" << *r.first_counterexample;
        }
      }
      return r.failures() == 0 ? kOk : kDefect;
    }
    if (*gen) {
      GenParams params;
      params.k = gen_k;
      if (density_opt->count() > 0) {
        params.density = density;
        params.density_set = true;
      }
      const GenKind kind = gen_kind == "preorder" ? GenKind::preorder : GenKind::partition;
      out << save(generate(kind, gen_n, params, gen_seed));
      return kOk;
    }
    if (*fixture_cmd) {
      if (*fixture_list) {
        for (const auto& name : fixture_names()) out << name << "\n";
      } else if (*fixture_show) {
        out << save(fixture(fixture_name).document);
      }
      return kOk;
    }
    if (*export_cmd) {
      out << dot_for(load_doc(doc_path));
      return kOk;
    }
  } catch (const DefectError& e) {
    err << "internal equivalence failure: " << e.what() << "\n";
    return kDefect;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace stratkit::cli
