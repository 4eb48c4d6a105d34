#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ssiwasawa/lubin_tate.hpp"
#include "ssiwasawa/series.hpp"
#include "ssiwasawa/tower.hpp"

namespace ssiw {

/// The supersingular (a_p = 0) formal group in Honda form: logarithm
/// l(X) = sum_k (-1)^k f^(2k)(X) / p^k and law G = l^-1(l(X) + l(Y)).
/// This group stands in for the formal group of the curve; no Weierstrass
/// model is involved.
struct HondaGroup {
    FrobeniusLift lift;
    int degree = 0;
    IwasawaSeries log;
    IwasawaSeries exp;
    BivariateSeries law;
    /// Smallest absolute precision on the coefficients of `law`.
    int precision = 0;
    /// Agreement of l(G(X,Y)) with l(X) + l(Y).
    int homomorphism_residual = 0;
};

/// Builds l to degree `degree` with the law and its checks. Throws
/// PrecisionExhausted if G cannot be certified integral.
HondaGroup honda_logarithm(const FrobeniusLift& f, int degree);

/// Exact l'(0) = p / (p + pi^2).
PadicScalar honda_linear_coefficient(const FrobeniusLift& f);

/// l(x) for x in pZ_p, summed by iterating f on x itself; the tail is
/// certified below p^target.
PadicScalar honda_log_value(const FrobeniusLift& f, const PadicScalar& x, int target);
/// Same for x in the maximal ideal of a tower ring, target in pi units.
TowerElement honda_log_value(const TowerRing& tower, const TowerElement& x, int target_pi);

/// A point of the base group, with its certified logarithm residual.
struct BasePoint {
    PadicScalar value;
    PadicScalar log;
    /// Valuation lower bound of l(value) - p/(p+1).
    int residual = 0;
};

/// epsilon with l(epsilon) = p/(p+1): the exponential series at p/(p+1),
/// polished by Newton steps on the exact logarithm until `digits`.
BasePoint epsilon_point(const HondaGroup& h, int digits);

/// A point of the group over a tower field. `log` is always known; the
/// coordinate is present when it was computed (log-route traces skip it).
struct FormalPoint {
    std::shared_ptr<const TowerRing> tower;
    /// Level of the field the point nominally lies in.
    int level = 0;
    std::optional<TowerElement> value;
    TowerElement log;
};

/// Which element plays e_0. `Zero` is forced when e_m runs over
/// F_f[pi^m] - F_f[pi^(m-1)]; `Primitive` shifts the sequence so that e_0 is
/// a nonzero pi-division point, and every field index moves up by one.
enum class E0Convention { Zero, Primitive };

/// G(x, y) from the truncated law, tail bounded by (D + 1) min(v(x), v(y)).
/// Throws ConvergenceGuard when the bound falls short of target_pi.
TowerElement law_sum(const HondaGroup& h, const TowerElement& x, const TowerElement& y, int target_pi);

/// The point y near `start` with l(y) = log_target, by Newton iteration.
/// `start` must lie within p^(1/(p-1)) of the answer, which makes the
/// residual of l a certificate for the coordinate.
TowerElement log_inverse_near(const TowerRing& tower, const TowerElement& start, const TowerElement& log_target);

/// c_n = e_n [+] epsilon in the tower ring.
FormalPoint c_point(const HondaGroup& h, const BasePoint& eps, const std::shared_ptr<const TowerRing>& tower, int n,
                    E0Convention convention = E0Convention::Zero);

enum class TraceField { K, L };

/// Trace with respect to the group law from level `from` down to `to`,
/// carried out on logarithms (the field trace of l(x)).
FormalPoint formal_trace(const FormalPoint& x, int from, int to, TraceField field = TraceField::K);
/// Same, summing the Galois conjugates with law_sum. Needs x.value.
FormalPoint formal_trace_group(const HondaGroup& h, const FormalPoint& x, int from, int to, int target_pi,
                               TraceField field = TraceField::K);

/// d_n = trace of c_(n+1) from k_(n+1) to L_n (the sum over Delta).
FormalPoint d_point(const HondaGroup& h, const BasePoint& eps, const std::shared_ptr<const TowerRing>& tower, int n);

enum class PmSign { Plus, Minus };

/// Membership in E^+(L_n) (traces to odd m land in L_(m-1)) or E^-(L_n)
/// (even m), certified to `digits` p-adic digits through l. Throws
/// PrecisionExhausted when the tower cannot certify that many digits.
bool pm_membership(const FormalPoint& x, int level, PmSign sign, int digits);

struct RelationReport {
    std::string name;
    /// p-adic digits to which both sides agree (floor of pi-valuation / e).
    int residual_digits = 0;
    int required_digits = 0;
    /// The multiplier of the n = 1 relations, when it lies in Q_p.
    std::optional<PadicScalar> unit;
    bool passed = false;
    std::string note;
};

/// The trace relations of c_n (levels 1..3) and, for the Zero convention,
/// of d_n, all checked on logarithms.
std::vector<RelationReport> trace_relations(const HondaGroup& h, E0Convention convention, int required_digits);

} // namespace ssiw
