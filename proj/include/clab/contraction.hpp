#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clab/orbit.hpp"
#include "clab/phi.hpp"
#include "clab/scalar.hpp"

namespace clab {

enum class Variant { TypeI, TypeII, TypeIII, HardyRogers, HegedusSzilagyi, TMMax };

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

// Which contraction inequality to certify, with validated coefficients.
//   TypeI           D(fx,fy) <= phi(Df x)^a * phi(Df y)^b * phi(Df(x,y))^g
//                               * phi(Mf(x,y))^(1-lambda),  over X \ Fix(f)
//   TypeII          D(fx,fy) <= a*phi(Df x) + b*phi(Df y) + g*phi(Df(x,y))
//                               + d*phi(Mf(x,y))
//   TypeIII         D(fx,fy) <= max of the four phi terms
//   HardyRogers     D(fx,fy) <= a*D(x,y) + b*D(x,fx) + g*D(y,fy) + d*D(x,fy)
//                               + mu*D(fx,y)
//   HegedusSzilagyi D(fx,fy) <= phi(Df(x,y))
//   TMMax           D(fx,fy) <= max of the first three phi terms
class ContractionSpec {
public:
    static ContractionSpec type1(const Rational& alpha, const Rational& beta,
                                 const Rational& gamma);
    static ContractionSpec type2(const Rational& alpha, const Rational& beta,
                                 const Rational& gamma, const Rational& delta);
    static ContractionSpec type3();
    static ContractionSpec hardy_rogers(const Rational& alpha, const Rational& beta,
                                        const Rational& gamma, const Rational& delta,
                                        const Rational& mu);
    static ContractionSpec hegedus_szilagyi();
    static ContractionSpec tmmax();

    Variant variant() const { return variant_; }
    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const Rational& gamma() const { return gamma_; }
    const Rational& delta() const { return delta_; }
    const Rational& mu() const { return mu_; }
    Rational lambda() const { return alpha_ + beta_ + gamma_; } // TypeI
    bool has_coefficients() const;

    std::string describe() const;

private:
    ContractionSpec() = default;

    Variant variant_ = Variant::TypeIII;
    Rational alpha_, beta_, gamma_, delta_, mu_;
};

// Everything a per-pair right-hand side can consume.
struct PairData {
    Rational df_x, df_y;    // D_f(x), D_f(y)
    Rational df_xy;         // D_f(x,y)
    Rational mf_xy;         // M_f(x,y)
    Rational d_x_y;         // D(x,y)
    Rational d_x_fx, d_y_fy, d_x_fy, d_fx_y;
};

// Right-hand side of the variant's inequality. Exact for every variant
// except TypeI, whose rational^rational factors come back as directed-
// rounding intervals; a TypeI product with any zero factor is exactly zero.
Scalar contraction_rhs(const ContractionSpec& spec, const PhiSpec& phi, const PairData& data,
                       int precision_digits);

enum class Verdict { Certified, Violated, Indeterminate };
std::string verdict_name(Verdict v);

struct Violation {
    PointId x, y;
    Scalar lhs, rhs;
};

struct CertificationReport {
    Verdict verdict = Verdict::Certified;
    std::size_t pairs_checked = 0;
    std::optional<Scalar> worst_margin; // min over pairs of RHS - LHS
    std::vector<Violation> violations;  // lexicographic by point index
    std::vector<std::pair<PointId, PointId>> indeterminate_pairs;
    std::string window_note;
    std::string domain_note;
    std::vector<PointId> excluded_points; // Fix(f), TypeI only
    bool phi_checked = false;
    bool phi_check_overridden = false;
    std::string phi_note;
    int precision_digits = 0;
    bool early_exit = false; // stopped at first violation (falsifier mode)
    // Optional extended TypeI uniqueness condition: the same inequality over
    // Fix(f) x Fix(f).
    std::optional<Verdict> fixed_point_check;
    std::vector<Violation> fixed_point_violations;
};

struct CertifyOptions {
    std::size_t max_steps = 0;      // 0: window size + 1
    int precision_digits = 0;       // 0: CONTRACTION_LAB_PRECISION or 30
    bool include_fixed_points = false;
    bool skip_phi_check = false;
    unsigned threads = 0;           // 0: hardware concurrency
    bool early_exit = false;
};

// Decides the inequality over every unordered window pair of the variant's
// domain. Throws InvariantError when the metric axioms or the phi property
// checks fail (unless skip_phi_check, which is recorded in the report).
CertificationReport certify(const SelfMap& map, const PhiSpec& phi, const ContractionSpec& spec,
                            const CertifyOptions& options = {});

struct ComparisonReport {
    enum class Kind { SeparationWitness, BothCertified, PairwiseImplication } kind;
    std::optional<Violation> witness; // pair where A's inequality holds, B's fails
    Verdict verdict_a = Verdict::Certified;
    Verdict verdict_b = Verdict::Certified;
    std::string domain_note;
};

// Joint per-pair evaluation of two contraction conditions on one instance.
ComparisonReport compare_classes(const SelfMap& map, const PhiSpec& phi,
                                 const ContractionSpec& spec_a, const ContractionSpec& spec_b,
                                 const CertifyOptions& options = {});

// CONTRACTION_LAB_PRECISION, default 30, clamped to [5, 10000].
int default_precision_digits();

} // namespace clab
