#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "avgindep/graph.hpp"

namespace avgindep {

enum class Status { Verified, Counterexample };

using NamedValue = std::pair<std::string, std::string>;

/// Offending object of a failed claim. `graph` is empty for claims that are
/// not about a particular graph (scalar inequalities, case bounds).
struct Witness {
  std::optional<Graph> graph;
  std::vector<NamedValue> values;
};

/// Outcome of checking one claim over a finite range. A report is a
/// counterexample exactly when it carries a witness.
class VerificationReport {
 public:
  VerificationReport(std::string claim, std::string range)
      : claim_(std::move(claim)), range_(std::move(range)) {}

  const std::string& claim() const { return claim_; }
  const std::string& range() const { return range_; }
  Status status() const {
    return witness_ ? Status::Counterexample : Status::Verified;
  }
  bool verified() const { return !witness_; }
  const std::optional<Witness>& witness() const { return witness_; }

  /// Number of objects (graphs, trees, cases, inequalities) examined.
  std::uint64_t checked() const { return checked_; }
  void set_checked(std::uint64_t n) { checked_ = n; }
  void add_checked(std::uint64_t n) { checked_ += n; }

  /// Keeps the first witness recorded.
  void fail(Witness w) {
    if (!witness_) witness_ = std::move(w);
  }

  /// Exact facts established by the run, rendered as strings.
  const std::vector<NamedValue>& facts() const { return facts_; }
  void add_fact(std::string name, std::string value) {
    facts_.emplace_back(std::move(name), std::move(value));
  }

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  void set_columns(std::vector<std::string> cols) { columns_ = std::move(cols); }
  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

 private:
  std::string claim_;
  std::string range_;
  std::uint64_t checked_ = 0;
  std::optional<Witness> witness_;
  std::vector<NamedValue> facts_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// Combines per-order reports of one claim into a single report over their
/// joint range; the earliest counterexample wins.
VerificationReport merge_reports(const std::string& claim, const std::string& range,
                                 std::span<const VerificationReport> parts);

/// JSON document: claim, range, status, checked, facts, witness (graph as
/// edge list, values as exact strings) and the optional table.
std::string to_json(const VerificationReport& report, int indent = 2);

/// Plain-text rendering for terminals.
std::string to_text(const VerificationReport& report, bool color = false);

std::string to_string(Status s);

}  // namespace avgindep
