#include "avgindep/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace avgindep {

std::string to_string(Status s) {
  return s == Status::Verified ? "verified" : "counterexample";
}

VerificationReport merge_reports(const std::string& claim, const std::string& range,
                                 std::span<const VerificationReport> parts) {
  VerificationReport out(claim, range);
  for (const auto& p : parts) {
    out.add_checked(p.checked());
    if (p.witness()) {
      Witness w = *p.witness();
      w.values.insert(w.values.begin(), {"sub_range", p.range()});
      out.fail(std::move(w));
    }
    for (const auto& [name, value] : p.facts()) out.add_fact(p.range() + ": " + name, value);
  }
  return out;
}

std::string to_json(const VerificationReport& report, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["claim"] = report.claim();
  doc["range"] = report.range();
  doc["status"] = to_string(report.status());
  doc["checked"] = report.checked();
  ordered_json facts = ordered_json::object();
  for (const auto& [name, value] : report.facts()) facts[name] = value;
  doc["facts"] = std::move(facts);
  if (const auto& w = report.witness()) {
    ordered_json wj;
    if (w->graph) {
      wj["n"] = w->graph->n();
      ordered_json edges = ordered_json::array();
      for (const auto& [u, v] : w->graph->edges()) edges.push_back({u, v});
      wj["edges"] = std::move(edges);
    }
    ordered_json values = ordered_json::object();
    for (const auto& [name, value] : w->values) values[name] = value;
    wj["values"] = std::move(values);
    doc["witness"] = std::move(wj);
  } else {
    doc["witness"] = nullptr;
  }
  if (!report.columns().empty()) {
    doc["table"]["columns"] = report.columns();
    doc["table"]["rows"] = report.rows();
  }
  return doc.dump(indent);
}

std::string to_text(const VerificationReport& report, bool color) {
  std::ostringstream os;
  const bool ok = report.verified();
  const char* on = !color ? "" : (ok ? "\033[32m" : "\033[31m");
  const char* off = color ? "\033[0m" : "";
  os << report.claim() << " [" << report.range() << "]: " << on
     << to_string(report.status()) << off << " (" << report.checked()
     << " checked)\n";
  for (const auto& [name, value] : report.facts())
    os << "  " << name << " = " << value << "\n";
  if (const auto& w = report.witness()) {
    os << "  witness:\n";
    if (w->graph) {
      os << "    edges:";
      for (const auto& [u, v] : w->graph->edges()) os << " " << u << "-" << v;
      os << " (n=" << w->graph->n() << ")\n";
    }
    for (const auto& [name, value] : w->values)
      os << "    " << name << " = " << value << "\n";
  }
  if (!report.columns().empty()) {
    std::vector<std::size_t> width(report.columns().size(), 0);
    for (std::size_t c = 0; c < width.size(); ++c) width[c] = report.columns()[c].size();
    for (const auto& row : report.rows())
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      os << " ";
      for (std::size_t c = 0; c < cells.size(); ++c) {
        os << " " << cells[c];
        if (c + 1 < cells.size() && c < width.size())
          os << std::string(width[c] - cells[c].size(), ' ');
      }
      os << "\n";
    };
    line(report.columns());
    for (const auto& row : report.rows()) line(row);
  }
  return os.str();
}

}  // namespace avgindep
