#pragma once

#include <stdexcept>
#include <string>

namespace fuzzydrive {

/// Gains and universe-of-discourse limit of the four-rule fuzzy PD
/// controller. The output singleton height H is not stored: H = L.
struct FuzzyPdConfig {
  double Ge = 1.0;  ///< error gain
  double Gr = 1.0;  ///< rate gain
  double Gu = 1.0;  ///< output gain
  double L = 360.0; ///< positive limit of the input universe (= H)

  /// Throws std::invalid_argument if L <= 0 or any gain is non-finite.
  void validate() const;
};

/// Inputs after gain scaling: e_star = Ge*error, r_star = Gr*rate.
/// Values are not restricted to [-L, L]; points outside the square select
/// the strip and corner regions.
struct ScaledInputs {
  double e_star = 0.0;
  double r_star = 0.0;
};

/// Degrees of membership of the scaled inputs in the four input sets
/// (error positive/negative, rate positive/negative), each in [0, 1].
struct MembershipVector {
  double mu_ep = 0.0;
  double mu_en = 0.0;
  double mu_rp = 0.0;
  double mu_rn = 0.0;
};

/// Firing strengths of the four rules:
///   r1: error positive AND rate positive -> output positive
///   r2: error positive AND rate negative -> output zero
///   r3: error negative AND rate positive -> output zero
///   r4: error negative AND rate negative -> output negative
struct RuleStrengths {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double r4 = 0.0;
};

/// The ten semantically distinct groups of the 20 input-combination
/// regions. The group alone determines which closed-form output applies.
enum class RegionGroup {
  SquareEDom,  // |e*| <= L, |r*| <= L, |e*| >= |r*|
  SquareRDom,  // |e*| <= L, |r*| <= L, |e*| <  |r*|
  StripEPos,   // e* >  L, |r*| <= L
  StripRPos,   // r* >  L, |e*| <= L
  StripENeg,   // e* < -L, |r*| <= L
  StripRNeg,   // r* < -L, |e*| <= L
  CornerPP,    // e* >  L, r* >  L
  CornerNP,    // e* < -L, r* >  L
  CornerNN,    // e* < -L, r* < -L
  CornerPN,    // e* >  L, r* < -L
};

inline constexpr int kRegionGroupCount = 10;

/// Individual region labels IC1..IC20. Labels within a group follow a
/// fixed convention (the group, not the label, selects the output):
///  - square groups are labelled by quadrant counterclockwise:
///    e-dominant Q1->IC1, Q2->IC2, Q3->IC5, Q4->IC6;
///    rate-dominant Q1->IC3, Q2->IC4, Q3->IC7, Q4->IC8;
///  - strips take the smaller label on the half where the in-range
///    coordinate is >= 0 (e.g. e* > L: r* >= 0 -> IC9, r* < 0 -> IC10);
///  - corners: PP=IC17, NP=IC18, NN=IC19, PN=IC20.
enum class RegionLabel {
  IC1 = 1, IC2, IC3, IC4, IC5, IC6, IC7, IC8, IC9, IC10,
  IC11, IC12, IC13, IC14, IC15, IC16, IC17, IC18, IC19, IC20,
};

struct Region {
  RegionLabel label = RegionLabel::IC1;
  RegionGroup group = RegionGroup::SquareEDom;
};

const char* to_string(RegionGroup group);
const char* to_string(RegionLabel label);

/// Parses an "IC<n>" label; throws std::invalid_argument on anything else.
RegionLabel region_label_from_string(const std::string& text);

/// Thrown when all four rule strengths vanish. Unreachable for strengths
/// produced by membership_vector (the dominant rule is always >= 1/2);
/// kept as a guard for hand-built inputs.
class DegenerateInferenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Linear memberships of the scaled inputs, clamped to [0, 1]:
///   mu_ep = (L + e*) / 2L,  mu_en = (L - e*) / 2L   (rate likewise).
/// Inside [-L, L] each pair sums to exactly 1; outside it saturates to
/// (1, 0) or (0, 1). Throws std::invalid_argument on non-finite input
/// or L <= 0.
MembershipVector membership_vector(const ScaledInputs& inputs, double L);

/// Rule firing with the min conjunction:
///   r1 = min(ep, rp), r2 = min(ep, rn), r3 = min(en, rp), r4 = min(en, rn).
/// Throws std::invalid_argument if a membership is outside [0, 1].
RuleStrengths rule_strengths(const MembershipVector& mu);

/// Centre-of-mass defuzzification over output singletons at -H, 0, +H:
///   u = H * (r1 - r4) / (r1 + r2 + r3 + r4),  |u| <= H.
/// Throws DegenerateInferenceError when the strength sum is zero.
double centroid_defuzz(const RuleStrengths& strengths, double H);

/// Maps a scaled input pair to its input-combination region. Total over
/// finite inputs; boundary points resolve by fixed precedence (corners,
/// then strips, then square with |e*| >= |r*| taking the e-dominant
/// group). Adjacent groups' formulas agree on every boundary, so the
/// tie-break never changes the output.
Region classify_region(const ScaledInputs& inputs, double L);

/// The nine closed-form outputs, dispatched on classify_region:
///   square, e-dominant: L(e*+r*) / (2(2L-|e*|))
///   square, r-dominant: L(e*+r*) / (2(2L-|r*|))
///   strips:             (+-L + r*)/2  or  (+-L + e*)/2
///   corners:            +-L or 0
/// Always |u| <= L. Algebraically identical to oracle_output.
double closed_form(const ScaledInputs& inputs, double L);

/// The full inference chain membership_vector -> rule_strengths ->
/// centroid_defuzz with H = L. Kept as an independent evaluation path
/// for verifying closed_form.
double oracle_output(const ScaledInputs& inputs, double L);

enum class FuzzyMethod { ClosedForm, Oracle };

/// Whole controller on raw inputs: Gu * method(Ge*error, Gr*rate, L).
double fuzzy_pd(double error, double rate, const FuzzyPdConfig& cfg,
                FuzzyMethod method = FuzzyMethod::ClosedForm);

}  // namespace fuzzydrive
