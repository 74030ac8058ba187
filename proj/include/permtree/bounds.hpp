#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permtree/cuts.hpp"
#include "permtree/real.hpp"

namespace permtree {

/// Unnamed absolute constants; all default to 1.
struct ConstantConfig {
  double C1 = 1, C2 = 1, C3 = 1, C4 = 1;
  double c1_exp_const = 1, c1_count_const = 1;
  std::size_t r = 3;

  /// Applies "k=v,k=v" overrides; throws std::invalid_argument on unknown
  /// keys or non-positive values.
  void apply(const std::string& overrides);
  std::vector<std::pair<std::string, std::string>> entries() const;
  TreeConfig tree_config(std::size_t c3_threshold = 5) const;
};

/// Known Alt(m) diameters: exact values, or lower bounds from sampling.
struct AltDiamEntry {
  std::uint64_t diameter = 0;
  bool exact = false;
};
using AltDiamTable = std::map<std::size_t, AltDiamEntry>;

/// An upper bound on ln diam(Alt(m)) and where it came from: "table" (exact
/// entry), "closed-form" (the theorem's bound, m >= 16) or "order" (|Alt(m)|).
struct AltDiamBound {
  Real log_value;
  std::string source;
};
AltDiamBound resolve_alt_diam(std::size_t m, const AltDiamTable& table);

/// ln((196/243) k^3 * 5 m d) for k factors, m = max degree, d = max diameter.
Real product_alt_bound(const std::vector<std::size_t>& degrees, const std::vector<Real>& diameters);

/// ln of the factor a cut contributes: C1 -> ln C1 + C2 ln n + C3 ln^6 n,
/// C3 -> ln 17 + 4 ln n + ln diam(Alt(m)), C2 and sections -> 0.
Real cut_factor(const HorizontalCut& cut, std::size_t n, const ConstantConfig& cfg, const AltDiamTable& table);

struct LedgerEntry {
  std::size_t cut = 0;
  CutKind kind = CutKind::SECTION;
  std::string origin;
  std::uint64_t m = 0;
  Real log_factor;
  std::string alt_source;
};

struct BoundReport {
  std::size_t n = 0;
  ConstantConfig constants;
  std::vector<LedgerEntry> ledger;
  Real total_log;
  AuditReal audit_total_log;
  /// n^(C4 2^r log^8 n) * prod_K diam(Alt(m(K))), in log form.
  Real paper_form_log;
  std::optional<Real> closed_form_log;
  Real babai82_log, bs88_log;
  std::map<std::size_t, AltDiamBound> alt_used;
};

BoundReport total_bound(const CutSystem& sys, std::size_t n, const ConstantConfig& cfg, const AltDiamTable& table);

/// ln of the theorem bound: e^((ln ln n)^2 / ln 2). Requires n >= 16.
Real closed_form(const Real& n);
AuditReal closed_form_audit(const AuditReal& n);

struct ComparisonBounds {
  Real babai82;  // 4 sqrt(n) ln^2 n
  Real bs88;     // sqrt(n ln n), the o(1) in the exponent dropped
};
ComparisonBounds comparison_bounds(const Real& n);

struct InductionStep {
  std::string name;
  bool applicable = true;
  bool passed = false;
  /// Each link of the displayed chain as (lhs, rhs); passed iff lhs <= rhs for all.
  std::vector<std::pair<Real, Real>> links;
  /// Largest relative gap between the working and audit precisions.
  Real precision_gap;
};

struct InductionReport {
  std::string n;
  std::vector<InductionStep> steps;
  /// Fully assembled right-hand side of the final estimate minus the target
  /// exponent (informational; the constant term is absorbed "for n large").
  Real assembled_margin;
  bool passed() const;
};

/// The four estimates closing the induction at n (n' = e^(-1/10) n unless given).
InductionReport check_induction_inequalities(const Real& n, double C = 1.0,
                                             std::optional<Real> n_prime = std::nullopt,
                                             const ConstantConfig& cfg = {});

}  // namespace permtree
