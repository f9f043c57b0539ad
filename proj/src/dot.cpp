#include <sstream>

#include "stratkit/io.hpp"

namespace stratkit {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string export_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (const auto& e : p.elements()) os << "  " << quoted(e) << ";\n";
  for (const auto& [a, b] : hasse(p)) {
    os << "  " << quoted(p.elements()[a]) << " -> " << quoted(p.elements()[b]) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const Decomposition& d) {
  const ClassificationReport report = classify(d);
  const Proset leq = decomposition_preorder(d);
  std::ostringstream os;
  os << "digraph decomposition {\n  rankdir=BT;\n";
  os << "  label=" << quoted(std::string(to_string(report.verdict)) + "; frontier condition: " +
                             yes_no(report.frontier.frontier_condition) +
                             "; decomposition map open: " + yes_no(report.frontier.pi_open))
     << ";\n";
  for (std::size_t i = 0; i < d.stratum_count(); ++i) {
    std::string pts;
    for (const auto& n : d.space().names(d.stratum(i))) pts += (pts.empty() ? "" : ",") + n;
    const bool lc = report.locally_closed.at(d.id(i));
    os << "  " << quoted(d.id(i)) << " [label=" << quoted(d.id(i) + "\n{" + pts + "}\n" +
                                                          (lc ? "locally closed" : "not locally closed"))
       << "];\n";
  }
  // Covers of the strict part; equivalent strata get a dashed two-way edge.
  for (std::size_t a = 0; a < leq.size(); ++a) {
    for (std::size_t b = 0; b < leq.size(); ++b) {
      if (a == b || !leq.leq(a, b)) continue;
      if (leq.leq(b, a)) {
        if (a < b) os << "  " << quoted(d.id(a)) << " -> " << quoted(d.id(b)) << " [dir=both, style=dashed];\n";
        continue;
      }
      bool covered = true;
      for (std::size_t c = 0; c < leq.size() && covered; ++c) {
        const bool above_a = leq.leq(a, c) && !leq.leq(c, a);
        const bool below_b = leq.leq(c, b) && !leq.leq(b, c);
        if (above_a && below_b) covered = false;
      }
      if (covered) os << "  " << quoted(d.id(a)) << " -> " << quoted(d.id(b)) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace stratkit
