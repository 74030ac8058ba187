#include "permtree/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permtree {

namespace mp = boost::multiprecision;

void ConstantConfig::apply(const std::string& overrides) {
  std::stringstream ss(overrides);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("constant override '" + item + "' is not key=value");
    std::string key = item.substr(0, eq), text = item.substr(eq + 1);
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw std::invalid_argument("constant '" + key + "' has a non-numeric value '" + text + "'");
    }
    if (!(value > 0)) throw std::invalid_argument("constant '" + key + "' must be positive");
    if (key == "C1") C1 = value;
    else if (key == "C2") C2 = value;
    else if (key == "C3") C3 = value;
    else if (key == "C4") C4 = value;
    else if (key == "c1_exp_const") c1_exp_const = value;
    else if (key == "c1_count_const") c1_count_const = value;
    else if (key == "r") {
      if (value != static_cast<double>(static_cast<std::size_t>(value)) || value > 16)
        throw std::invalid_argument("r must be an integer in [1, 16]");
      r = static_cast<std::size_t>(value);
    } else {
      throw std::invalid_argument("unknown constant '" + key + "'");
    }
  }
}

std::vector<std::pair<std::string, std::string>> ConstantConfig::entries() const {
  auto fmt = [](double v) {
    std::ostringstream os;
    os << v;
    return os.str();
  };
  return {{"C1", fmt(C1)},
          {"C2", fmt(C2)},
          {"C3", fmt(C3)},
          {"C4", fmt(C4)},
          {"c1_exp_const", fmt(c1_exp_const)},
          {"c1_count_const", fmt(c1_count_const)},
          {"r", std::to_string(r)}};
}

TreeConfig ConstantConfig::tree_config(std::size_t c3_threshold) const {
  TreeConfig t;
  t.c3_threshold = c3_threshold;
  t.c1_exp_const = c1_exp_const;
  t.c1_count_const = c1_count_const;
  return t;
}

namespace {

template <class R>
R theorem_exponent_from_log(const R& log_n) {
  R ll = log(log_n);
  return exp(ll * ll / log(R(2)));
}

}  // namespace

Real closed_form(const Real& n) {
  if (n < 16) throw std::invalid_argument("closed form needs n >= 16");
  return theorem_exponent_from_log(log(n));
}

AuditReal closed_form_audit(const AuditReal& n) {
  if (n < 16) throw std::invalid_argument("closed form needs n >= 16");
  return theorem_exponent_from_log(log(n));
}

ComparisonBounds comparison_bounds(const Real& n) {
  if (n < 2) throw std::invalid_argument("comparison bounds need n >= 2");
  Real ln = log(n);
  return {4 * sqrt(n) * ln * ln, sqrt(n * ln)};
}

AltDiamBound resolve_alt_diam(std::size_t m, const AltDiamTable& table) {
  auto it = table.find(m);
  if (it != table.end() && it->second.exact)
    return {log(Real(std::max<std::uint64_t>(it->second.diameter, 1))), "table"};
  if (m >= 16) return {closed_form(Real(m)), "closed-form"};
  BigInt order = m <= 2 ? BigInt(1) : factorial(m) / 2;
  return {log_of(order), "order"};
}

Real product_alt_bound(const std::vector<std::size_t>& degrees, const std::vector<Real>& diameters) {
  if (degrees.size() != diameters.size()) throw std::invalid_argument("degree and diameter lists differ in length");
  if (degrees.empty()) return 0;
  for (auto m : degrees)
    if (m < 5) throw std::invalid_argument("alternating degree below 5");
  for (const auto& d : diameters)
    if (!(d > 0)) throw std::invalid_argument("diameters must be positive");
  Real k = degrees.size();
  Real m = *std::max_element(degrees.begin(), degrees.end());
  Real d = *std::max_element(diameters.begin(), diameters.end());
  return log(Real(196) / 243 * k * k * k * 5 * m * d);
}

namespace {

template <class R>
R c1_factor(std::size_t n, const ConstantConfig& cfg) {
  R ln = log(R(n));
  return log(R(cfg.C1)) + R(cfg.C2) * ln + R(cfg.C3) * pow(ln, 6);
}

template <class R>
R c3_factor(std::size_t n, const R& alt_log) {
  return log(R(17)) + 4 * log(R(n)) + alt_log;
}

}  // namespace

Real cut_factor(const HorizontalCut& cut, std::size_t n, const ConstantConfig& cfg, const AltDiamTable& table) {
  switch (cut.kind) {
    case CutKind::SECTION:
    case CutKind::C2: return 0;
    case CutKind::C1: return c1_factor<Real>(n, cfg);
    case CutKind::C3: return c3_factor<Real>(n, resolve_alt_diam(cut.m, table).log_value);
  }
  throw std::invalid_argument("unknown cut kind");
}

BoundReport total_bound(const CutSystem& sys, std::size_t n, const ConstantConfig& cfg, const AltDiamTable& table) {
  BoundReport rep;
  rep.n = n;
  rep.constants = cfg;
  rep.total_log = 0;
  rep.audit_total_log = 0;
  Real alt_sum = 0;
  for (std::size_t k = 0; k < sys.cuts.size(); ++k) {
    const auto& cut = sys.cuts[k];
    LedgerEntry e;
    e.cut = k;
    e.kind = cut.kind;
    e.origin = cut.origin_string();
    e.m = cut.m;
    e.log_factor = cut_factor(cut, n, cfg, table);
    if (cut.kind == CutKind::C3) {
      auto alt = resolve_alt_diam(cut.m, table);
      e.alt_source = alt.source;
      rep.alt_used[cut.m] = alt;
      alt_sum += alt.log_value;
      rep.audit_total_log += c3_factor<AuditReal>(n, AuditReal(alt.log_value));
    } else if (cut.kind == CutKind::C1) {
      rep.audit_total_log += c1_factor<AuditReal>(n, cfg);
    }
    rep.total_log += e.log_factor;
    rep.ledger.push_back(std::move(e));
  }
  Real ln = n > 0 ? log(Real(n)) : Real(0);
  rep.paper_form_log = Real(cfg.C4) * Real(std::size_t{1} << cfg.r) * pow(ln, 9) + alt_sum;
  if (n >= 16) rep.closed_form_log = closed_form(Real(n));
  if (n >= 2) {
    auto cmp = comparison_bounds(Real(n));
    rep.babai82_log = cmp.babai82;
    rep.bs88_log = cmp.bs88;
  }
  return rep;
}

bool InductionReport::passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const InductionStep& s) { return s.passed; });
}

namespace {

template <class R>
struct Chains {
  std::vector<std::vector<std::pair<R, R>>> links;
  bool giant_applicable = true;
  R assembled;
};

template <class R>
Chains<R> induction_chains(const R& n, const R& C, const R& n_prime, const ConstantConfig& cfg) {
  const R ln2 = log(R(2));
  const R L = log(n);
  const R LL = log(L);
  auto F_log = [&](const R& log_x) {
    R l = log(log_x);
    return exp(l * l / ln2);
  };
  const R Phi = F_log(L);
  const R x = log(R(3) / 2);
  Chains<R> out;

  // F(2n/3) <= ... <= Phi - (ln(3/2) / (2 ln 2)) (LL / L) Phi
  R a1 = F_log(L - x);
  R eps = LL - x / L;
  R b1 = exp(eps * eps / ln2);
  R c1 = Phi * exp(-(x / ln2) * LL / L);
  R d1 = Phi - (x / (2 * ln2)) * (LL / L) * Phi;
  out.links.push_back({{a1, b1}, {b1, c1}, {c1, d1}});

  // r = 3 thin-cut term
  const R ln4 = log(R(4)), ln5 = log(R(5));
  R a2 = (8 * L / ln5) * F_log(L / 4);
  R b2 = (8 * L / ln5) * Phi * exp(-(ln4 / ln2) * LL);
  R c2 = (8 / ln5) / L * Phi;
  out.links.push_back({{a2, b2}, {b2, c2}});

  // sum over 1 <= j < r of 2^j F(n^(1/(j+1))), r = 3
  R a3 = 2 * F_log(L / 2) + 4 * F_log(L / 3);
  R e3 = LL - ln2;
  R b3 = 6 * exp(e3 * e3 / ln2);
  R c3 = 6 / L * Phi;
  out.links.push_back({{a3, b3}, {b3, c3}});

  // giant case: C (log n)^3 (log log n)^2 + F(n') < Phi for n' <= e^(-1/10) n
  out.giant_applicable = n_prime <= n * exp(R(-1) / 10);
  R a4 = C * L * L * L * LL * LL + F_log(log(n_prime));
  out.links.push_back({{a4, Phi}});

  R r = R(std::size_t{1} << cfg.r);
  out.assembled = (R(cfg.C4) + 1) * r * pow(L, 9) + a1 + a3 + a2 - Phi;
  return out;
}

}  // namespace

InductionReport check_induction_inequalities(const Real& n, double C, std::optional<Real> n_prime,
                                             const ConstantConfig& cfg) {
  if (n < 16) throw std::invalid_argument("induction check needs n >= 16");
  InductionReport rep;
  rep.n = n.str(0, std::ios_base::scientific);
  Real np = n_prime ? *n_prime : n * exp(Real(-1) / 10);
  auto lo = induction_chains<Real>(n, Real(C), np, cfg);
  auto hi = induction_chains<AuditReal>(AuditReal(n), AuditReal(C), AuditReal(np), cfg);
  const char* names[] = {"two-thirds", "thin-r3", "geometric-sum", "giant-induction"};
  // Links that are identities in exact arithmetic get a relative slack of
  // 1e-40, far below the 1e-15 tolerance and far above 50-digit rounding.
  const Real slack("1e-40");
  for (std::size_t s = 0; s < 4; ++s) {
    InductionStep step;
    step.name = names[s];
    step.precision_gap = 0;
    bool ok = true;
    for (std::size_t k = 0; k < lo.links[s].size(); ++k) {
      const auto& [l, r] = lo.links[s][k];
      step.links.push_back({l, r});
      bool strict = s == 3;
      bool holds = strict ? l < r : l <= r * (1 + slack);
      ok = ok && holds;
      for (const auto& [x, y] : {std::pair{l, AuditReal(hi.links[s][k].first)}, std::pair{r, AuditReal(hi.links[s][k].second)}}) {
        AuditReal diff = abs(AuditReal(x) - y);
        AuditReal scale = abs(y) > 0 ? abs(y) : AuditReal(1);
        step.precision_gap = std::max(step.precision_gap, Real(diff / scale));
      }
    }
    if (s == 3 && !lo.giant_applicable) {
      step.applicable = false;
      step.passed = true;
    } else {
      step.passed = ok && step.precision_gap < Real("1e-15");
    }
    rep.steps.push_back(std::move(step));
  }
  rep.assembled_margin = lo.assembled;
  return rep;
}

}  // namespace permtree
