#include "fuzzydrive/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fuzzydrive {

namespace {

void require_finite_point(const ScaledInputs& inputs, double L) {
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw std::invalid_argument("fuzzy: universe limit L must be finite and > 0");
  }
  if (!std::isfinite(inputs.e_star) || !std::isfinite(inputs.r_star)) {
    throw std::invalid_argument("fuzzy: scaled inputs must be finite");
  }
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

void FuzzyPdConfig::validate() const {
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw std::invalid_argument("FuzzyPdConfig: L must be finite and > 0");
  }
  if (!std::isfinite(Ge) || !std::isfinite(Gr) || !std::isfinite(Gu)) {
    throw std::invalid_argument("FuzzyPdConfig: gains must be finite");
  }
}

const char* to_string(RegionGroup group) {
  switch (group) {
    case RegionGroup::SquareEDom: return "SQUARE_E_DOM";
    case RegionGroup::SquareRDom: return "SQUARE_R_DOM";
    case RegionGroup::StripEPos: return "STRIP_E_POS";
    case RegionGroup::StripRPos: return "STRIP_R_POS";
    case RegionGroup::StripENeg: return "STRIP_E_NEG";
    case RegionGroup::StripRNeg: return "STRIP_R_NEG";
    case RegionGroup::CornerPP: return "CORNER_PP";
    case RegionGroup::CornerNP: return "CORNER_NP";
    case RegionGroup::CornerNN: return "CORNER_NN";
    case RegionGroup::CornerPN: return "CORNER_PN";
  }
  return "UNKNOWN";
}

namespace {
constexpr const char* kLabelNames[20] = {
    "IC1",  "IC2",  "IC3",  "IC4",  "IC5",  "IC6",  "IC7",
    "IC8",  "IC9",  "IC10", "IC11", "IC12", "IC13", "IC14",
    "IC15", "IC16", "IC17", "IC18", "IC19", "IC20",
};
}  // namespace

const char* to_string(RegionLabel label) {
  const int index = static_cast<int>(label) - 1;
  if (index < 0 || index >= 20) return "UNKNOWN";
  return kLabelNames[index];
}

RegionLabel region_label_from_string(const std::string& text) {
  for (int i = 0; i < 20; ++i) {
    if (text == kLabelNames[i]) return static_cast<RegionLabel>(i + 1);
  }
  throw std::invalid_argument("unknown region label: " + text);
}

MembershipVector membership_vector(const ScaledInputs& inputs, double L) {
  require_finite_point(inputs, L);
  const double two_l = 2.0 * L;
  MembershipVector mu;
  mu.mu_ep = clamp01((L + inputs.e_star) / two_l);
  mu.mu_en = clamp01((L - inputs.e_star) / two_l);
  mu.mu_rp = clamp01((L + inputs.r_star) / two_l);
  mu.mu_rn = clamp01((L - inputs.r_star) / two_l);
  return mu;
}

RuleStrengths rule_strengths(const MembershipVector& mu) {
  for (double m : {mu.mu_ep, mu.mu_en, mu.mu_rp, mu.mu_rn}) {
    if (!(m >= 0.0 && m <= 1.0)) {
      throw std::invalid_argument("rule_strengths: membership outside [0, 1]");
    }
  }
  RuleStrengths s;
  s.r1 = std::min(mu.mu_ep, mu.mu_rp);
  s.r2 = std::min(mu.mu_ep, mu.mu_rn);
  s.r3 = std::min(mu.mu_en, mu.mu_rp);
  s.r4 = std::min(mu.mu_en, mu.mu_rn);
  return s;
}

double centroid_defuzz(const RuleStrengths& strengths, double H) {
  const double sum = strengths.r1 + strengths.r2 + strengths.r3 + strengths.r4;
  if (!(sum > 0.0)) {
    throw DegenerateInferenceError("centroid_defuzz: all rule strengths are zero");
  }
  return H * (strengths.r1 - strengths.r4) / sum;
}

Region classify_region(const ScaledInputs& inputs, double L) {
  require_finite_point(inputs, L);
  const double e = inputs.e_star;
  const double r = inputs.r_star;

  Region region;
  if (e > L && r > L) {
    region.group = RegionGroup::CornerPP;
    region.label = RegionLabel::IC17;
  } else if (e < -L && r > L) {
    region.group = RegionGroup::CornerNP;
    region.label = RegionLabel::IC18;
  } else if (e < -L && r < -L) {
    region.group = RegionGroup::CornerNN;
    region.label = RegionLabel::IC19;
  } else if (e > L && r < -L) {
    region.group = RegionGroup::CornerPN;
    region.label = RegionLabel::IC20;
  } else if (e > L) {
    region.group = RegionGroup::StripEPos;
    region.label = r >= 0.0 ? RegionLabel::IC9 : RegionLabel::IC10;
  } else if (r > L) {
    region.group = RegionGroup::StripRPos;
    region.label = e >= 0.0 ? RegionLabel::IC11 : RegionLabel::IC12;
  } else if (e < -L) {
    region.group = RegionGroup::StripENeg;
    region.label = r >= 0.0 ? RegionLabel::IC13 : RegionLabel::IC14;
  } else if (r < -L) {
    region.group = RegionGroup::StripRNeg;
    region.label = e >= 0.0 ? RegionLabel::IC15 : RegionLabel::IC16;
  } else if (std::abs(e) >= std::abs(r)) {
    region.group = RegionGroup::SquareEDom;
    if (e >= 0.0 && r >= 0.0) region.label = RegionLabel::IC1;
    else if (e < 0.0 && r >= 0.0) region.label = RegionLabel::IC2;
    else if (e < 0.0 && r < 0.0) region.label = RegionLabel::IC5;
    else region.label = RegionLabel::IC6;
  } else {
    region.group = RegionGroup::SquareRDom;
    if (e >= 0.0 && r >= 0.0) region.label = RegionLabel::IC3;
    else if (e < 0.0 && r >= 0.0) region.label = RegionLabel::IC4;
    else if (e < 0.0 && r < 0.0) region.label = RegionLabel::IC7;
    else region.label = RegionLabel::IC8;
  }
  return region;
}

double closed_form(const ScaledInputs& inputs, double L) {
  const Region region = classify_region(inputs, L);
  const double e = inputs.e_star;
  const double r = inputs.r_star;
  switch (region.group) {
    case RegionGroup::SquareEDom:
      return L * (e + r) / (2.0 * (2.0 * L - std::abs(e)));
    case RegionGroup::SquareRDom:
      return L * (e + r) / (2.0 * (2.0 * L - std::abs(r)));
    case RegionGroup::StripEPos:
      return (L + r) / 2.0;
    case RegionGroup::StripRPos:
      return (L + e) / 2.0;
    case RegionGroup::StripENeg:
      return (-L + r) / 2.0;
    case RegionGroup::StripRNeg:
      return (-L + e) / 2.0;
    case RegionGroup::CornerPP:
      return L;
    case RegionGroup::CornerNN:
      return -L;
    case RegionGroup::CornerNP:
    case RegionGroup::CornerPN:
      return 0.0;
  }
  throw std::logic_error("closed_form: unreachable region group");
}

double oracle_output(const ScaledInputs& inputs, double L) {
  return centroid_defuzz(rule_strengths(membership_vector(inputs, L)), L);
}

double fuzzy_pd(double error, double rate, const FuzzyPdConfig& cfg,
                FuzzyMethod method) {
  cfg.validate();
  if (!std::isfinite(error) || !std::isfinite(rate)) {
    throw std::invalid_argument("fuzzy_pd: error and rate must be finite");
  }
  const ScaledInputs scaled{cfg.Ge * error, cfg.Gr * rate};
  const double u = method == FuzzyMethod::ClosedForm
                       ? closed_form(scaled, cfg.L)
                       : oracle_output(scaled, cfg.L);
  return cfg.Gu * u;
}

}  // namespace fuzzydrive
