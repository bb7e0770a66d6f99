#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "bhh/estimators.hpp"

namespace bhh {

// Where a reported number came from and how far to trust it: quadrature
// entries carry an absolute error estimate, Monte-Carlo entries a batch
// standard deviation and the seed, closed forms carry zero.
struct Provenance {
  std::string source;       // producing module
  std::string method;
  double uncertainty = 0.0; // tolerance or batch stddev
  std::optional<std::uint64_t> seed;
};

struct BoundsReport {
  double beta_bhh = 0.0;
  double epsilon0_rigorous = 0.0;
  double upper_rigorous = 0.0;
  std::optional<double> upper_empirical_zigzag;
  std::optional<double> upper_empirical_permute6;
  double lower_base = 0.0;        // exact 5/8
  double lower_correction = 0.0;  // target 19/5184
  double lower_rigorous = 0.0;
  std::map<std::string, Provenance> provenance;
};

struct EmpiricalBudgets {
  int zigzag_batches = 10;
  long zigzag_samples = 1'000'000;
  int permute_batches = 10;
  long permute_samples = 50'000;
};

// Rigorous side only: beta_bhh from quadrature, epsilon0 = (1/4)(3/4)P(B)
// from the closed form, lower correction (1/3) * P(triangle) * gain from
// quadrature. Empirical fields stay unset.
BoundsReport compose_rigorous();

// Everything: the rigorous fields plus the Monte-Carlo upper bounds
//   upper_zigzag   = beta_bhh - E[max(X,0)] / 4
//   upper_permute6 = beta_bhh - E[max(Z,0)] / 6
// with batch stddevs propagated into the provenance.
BoundsReport compose_empirical(std::uint64_t seed,
                               const EmpiricalBudgets& budgets = {});

// Assembly from already-computed gain estimates (gain4 = product_XA,
// gain6 = product_ZC).
BoundsReport compose_empirical_from(const Estimate& gain4, const Estimate& gain6);

// Canonical serialization; identical reports produce identical bytes.
std::string to_json(const BoundsReport& report);
std::string to_csv(const BoundsReport& report);
std::string to_table(const BoundsReport& report);

// Verifies the report against its exact targets (rational identities within
// 1e-8, epsilon0 floor, bound ordering). Returns false and fills diagnostic
// on the first violation.
bool check_report(const BoundsReport& report, std::string* diagnostic);

}  // namespace bhh
