#include "bhh/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "bhh/quadrature.hpp"

namespace bhh {

namespace {

using ordered_json = nlohmann::ordered_json;

void add_provenance(BoundsReport& report, const std::string& field,
                    std::string source, std::string method, double uncertainty,
                    std::optional<std::uint64_t> seed = std::nullopt) {
  report.provenance[field] =
      Provenance{std::move(source), std::move(method), uncertainty, seed};
}

ordered_json provenance_json(const Provenance& p) {
  ordered_json j;
  j["source"] = p.source;
  j["method"] = p.method;
  j["uncertainty"] = p.uncertainty;
  if (p.seed) {
    j["seed"] = *p.seed;
  } else {
    j["seed"] = nullptr;
  }
  return j;
}

}  // namespace

BoundsReport compose_rigorous() {
  BoundsReport report;

  const QuadratureResult beta = bhh_constant();
  report.beta_bhh = beta.value;
  add_provenance(report, "beta_bhh", "quadrature",
                 "nested adaptive Gauss-Kronrod, tail cut at 30",
                 beta.abs_error_estimate);

  const double p_b = event_b_probability();
  // One guaranteed zigzag gain of 3/4 per 4-tuple, diluted over 4 points.
  report.epsilon0_rigorous = 0.25 * 0.75 * p_b;
  add_provenance(report, "epsilon0_rigorous", "quadrature",
                 "(1/4)(3/4)(1-e^(-1/3))^3/6561, closed form", 0.0);

  report.upper_rigorous = report.beta_bhh - report.epsilon0_rigorous;
  add_provenance(report, "upper_rigorous", "bounds-report",
                 "beta_bhh - epsilon0_rigorous", beta.abs_error_estimate);

  const QuadratureResult probability = triangle_probability(1.0);
  const QuadratureResult gain = triangle_gain(1.0);
  report.lower_base = 0.625;
  add_provenance(report, "lower_base", "bounds-report",
                 "(1/2 + 3/4)/2, two nearest-neighbour edges per point", 0.0);
  // 1/3 per point of a triple; quadrature targets are 7/324 and 57/112.
  report.lower_correction = (1.0 / 3.0) * probability.value * gain.value;
  add_provenance(report, "lower_correction", "quadrature",
                 "(1/3) * P(triangle) * conditional excess",
                 probability.abs_error_estimate + gain.abs_error_estimate);

  report.lower_rigorous = report.lower_base + report.lower_correction;
  add_provenance(report, "lower_rigorous", "bounds-report",
                 "lower_base + lower_correction",
                 probability.abs_error_estimate + gain.abs_error_estimate);
  return report;
}

BoundsReport compose_empirical_from(const Estimate& gain4,
                                    const Estimate& gain6) {
  BoundsReport report = compose_rigorous();
  report.upper_empirical_zigzag = report.beta_bhh - gain4.mean / 4.0;
  add_provenance(report, "upper_empirical_zigzag", "estimators",
                 "beta_bhh - product_XA/4, batch means",
                 gain4.batch_stddev / 4.0, gain4.seed);
  report.upper_empirical_permute6 = report.beta_bhh - gain6.mean / 6.0;
  add_provenance(report, "upper_empirical_permute6", "estimators",
                 "beta_bhh - product_ZC/6, batch means",
                 gain6.batch_stddev / 6.0, gain6.seed);
  return report;
}

BoundsReport compose_empirical(std::uint64_t seed,
                               const EmpiricalBudgets& budgets) {
  const Estimate gain4 = estimate_event(
      Statistic::product_xa, budgets.zigzag_batches, budgets.zigzag_samples, seed);
  const Estimate gain6 = estimate_event(Statistic::product_zc,
                                        budgets.permute_batches,
                                        budgets.permute_samples, seed);
  return compose_empirical_from(gain4, gain6);
}

std::string to_json(const BoundsReport& report) {
  ordered_json j;
  j["beta_bhh"] = report.beta_bhh;
  j["epsilon0_rigorous"] = report.epsilon0_rigorous;
  j["upper_rigorous"] = report.upper_rigorous;
  if (report.upper_empirical_zigzag) {
    j["upper_empirical_zigzag"] = *report.upper_empirical_zigzag;
  } else {
    j["upper_empirical_zigzag"] = nullptr;
  }
  if (report.upper_empirical_permute6) {
    j["upper_empirical_permute6"] = *report.upper_empirical_permute6;
  } else {
    j["upper_empirical_permute6"] = nullptr;
  }
  j["lower_base"] = report.lower_base;
  j["lower_correction"] = report.lower_correction;
  j["lower_rigorous"] = report.lower_rigorous;
  ordered_json prov;
  for (const auto& [field, p] : report.provenance) {
    prov[field] = provenance_json(p);
  }
  j["provenance"] = prov;
  return j.dump(2) + "\n";
}

namespace {

struct Row {
  const char* name;
  std::optional<double> value;
};

std::vector<Row> report_rows(const BoundsReport& r) {
  return {
      {"beta_bhh", r.beta_bhh},
      {"epsilon0_rigorous", r.epsilon0_rigorous},
      {"upper_rigorous", r.upper_rigorous},
      {"upper_empirical_zigzag", r.upper_empirical_zigzag},
      {"upper_empirical_permute6", r.upper_empirical_permute6},
      {"lower_base", r.lower_base},
      {"lower_correction", r.lower_correction},
      {"lower_rigorous", r.lower_rigorous},
  };
}

}  // namespace

std::string to_csv(const BoundsReport& report) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "field,value,source,method,uncertainty,seed\n";
  for (const auto& row : report_rows(report)) {
    out << row.name << ',';
    if (row.value) out << *row.value;
    const auto it = report.provenance.find(row.name);
    if (it != report.provenance.end()) {
      out << ',' << it->second.source << ",\"" << it->second.method << "\","
          << it->second.uncertainty << ',';
      if (it->second.seed) out << *it->second.seed;
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
  return out.str();
}

std::string to_table(const BoundsReport& report) {
  std::ostringstream out;
  out << std::setprecision(12);
  for (const auto& row : report_rows(report)) {
    out << std::left << std::setw(26) << row.name;
    if (row.value) {
      out << std::setw(18) << *row.value;
    } else {
      out << std::setw(18) << "(not computed)";
    }
    const auto it = report.provenance.find(row.name);
    if (it != report.provenance.end()) {
      out << "  +/- " << std::setprecision(3) << it->second.uncertainty
          << std::setprecision(12) << "  [" << it->second.source << "]";
    }
    out << '\n';
  }
  return out.str();
}

bool check_report(const BoundsReport& report, std::string* diagnostic) {
  const auto fail = [&](const std::string& message) {
    if (diagnostic != nullptr) *diagnostic = message;
    return false;
  };
  const double correction_target = 19.0 / 5184.0;
  if (std::fabs(report.lower_correction - correction_target) > 1e-8) {
    return fail("lower_correction deviates from 19/5184 by more than 1e-8");
  }
  if (std::fabs(report.lower_rigorous - (0.625 + correction_target)) > 1e-8) {
    return fail("lower_rigorous deviates from 5/8 + 19/5184 by more than 1e-8");
  }
  if (!(report.epsilon0_rigorous >= 9.0 / 16.0 * 1e-6)) {
    return fail("epsilon0_rigorous below the 9/16 * 1e-6 floor");
  }
  if (report.upper_rigorous !=
      report.beta_bhh - report.epsilon0_rigorous) {
    return fail("upper_rigorous is not beta_bhh - epsilon0_rigorous");
  }
  if (std::fabs(report.beta_bhh - 0.92116) > 1e-4) {
    return fail("beta_bhh deviates from 0.92116 by more than 1e-4");
  }
  if (report.upper_empirical_zigzag && report.upper_empirical_permute6) {
    const double zig = *report.upper_empirical_zigzag;
    const double perm = *report.upper_empirical_permute6;
    if (!(report.lower_rigorous < perm && perm < zig &&
          zig < report.upper_rigorous)) {
      return fail("bound ordering violated: expected lower < permute6 < zigzag < upper");
    }
  }
  if (diagnostic != nullptr) diagnostic->clear();
  return true;
}

}  // namespace bhh
