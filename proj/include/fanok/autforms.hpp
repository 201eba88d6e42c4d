#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fanok/matrix.hpp"
#include "fanok/poly.hpp"

namespace fanok {

/// Quadratic form on projective space, stored as its symmetric rational
/// matrix (checked at construction).
class QForm {
public:
  explicit QForm(Mat m);
  static QForm identity(std::size_t size);
  static QForm from_diagonal(const std::vector<Rational>& d);

  /// Matrix dimension n+1 (the form lives on P^n).
  std::size_t size() const { return m_.rows(); }
  const Mat& matrix() const { return m_; }
  bool nondegenerate() const { return !m_.det().is_zero(); }
  bool is_diagonal() const;

  friend bool operator==(const QForm& a, const QForm& b) { return a.m_ == b.m_; }
  friend bool operator!=(const QForm& a, const QForm& b) { return !(a == b); }

private:
  Mat m_;
};

/// The (F_Q, F_H, F_Q') configuration cutting out the curve C on the
/// quadric: F_Q nondegenerate, F_H a nonzero linear form, all on the same
/// projective space.
struct PencilConfig {
  QForm fq;
  std::vector<Rational> fh;
  QForm fqp;

  PencilConfig(QForm fq_, std::vector<Rational> fh_, QForm fqp_);
};

/// Named pencil presets accepted by the CLI: "case1" is the smooth
/// hyperplane-section configuration (Q = V(x0^2+...+x4^2), H = V(x0)),
/// "case2" the singular one (Q = V(x0*x1+x2^2+...+x4^2), H = V(x0)); both
/// carry the sample pencil quadric 2*x1^2+3*x2^2+5*x3^2+7*x4^2.
std::optional<PencilConfig> pencil_preset(const std::string& name);

/// Which ideal-preservation conditions enter the infinitesimal-stabilizer
/// system; the full configuration uses all three.
struct LieConditions {
  bool fix_hyperplane = true;
  bool fix_quadric = true;
  bool fix_pencil_quadric = true;
};

/// Dimension of the Lie algebra of the stabilizer of (F_H, F_Q, F_Q') in
/// PGL: matrices X acting as derivations with D_X(F_H) in span{F_H},
/// D_X(F_Q) in span{F_Q}, and D_X(F_Q') in span{F_Q, F_Q'} + F_H*(linear
/// forms). Exact kernel dimension of the assembled linear system, minus 1
/// for the scalar-matrix line. Zero certifies a finite automorphism group.
std::size_t lie_stabilizer_dim(const PencilConfig& config);
std::size_t lie_stabilizer_dim(const PencilConfig& config, const LieConditions& conditions);

/// Finite group of projective transformations, given by exact rational
/// representatives normalized so the first nonzero entry is 1.
struct GroupDescription {
  bool finite = true;
  std::vector<Mat> elements;
  std::vector<Mat> generators;
  std::vector<std::string> notes;

  std::size_t order() const { return elements.size(); }
};

/// The group of projective transformations fixing the coordinate
/// hyperplane x_k = 0 pointwise and preserving V(case_form), solved on the
/// bordered-matrix system by support-pattern branching: off-diagonal
/// product equations force at most one border unknown nonzero, and each
/// branch reduces to univariate quadratics solved exactly over Q.
/// Branches whose quadratics have no rational root are recorded as
/// inconsistent over the rationals. A solution family with a surviving
/// free parameter raises a regime error ("infinite stabilizer").
///
/// Supported shapes: forms diagonal outside the fixed coordinate, plus the
/// hyperbolic shape pairing x_k with one other coordinate.
GroupDescription ker_h_group(const QForm& case_form, std::size_t hyperplane);

/// B - (Tr(B)/m) * reference, with reference the identity form of size m;
/// the result is traceless.
QForm trace_normalize(const QForm& b, const QForm& reference);

/// Stabilizer {P : P P^T = I, P B P^T = B} modulo scalars for a diagonal
/// form with pairwise distinct entries: the sign-diagonal matrices,
/// enumerated explicitly (order 2^(n+1)/2 on P^n).
GroupDescription diagonal_pair_stabilizer(const QForm& b);

/// Squarefreeness of det(x*Q1 - Q2): certifies that the pair is
/// simultaneously diagonalizable with pairwise distinct eigenvalue ratios.
/// Q1 must be nondegenerate.
bool simdiag_check(const QForm& q1, const QForm& q2);

/// Restriction of a form to the coordinate hyperplane x_k = 0 (delete row
/// and column k).
QForm restrict_to_hyperplane(const QForm& q, std::size_t k);

/// Everything the automorphism pipeline derives from one pencil: the Lie
/// dimension, the Ker_H order for the applicable case, and the reduction
/// to a simultaneously diagonalized pair on the hyperplane section.
struct AutSummary {
  std::size_t lie_dim = 0;
  bool aut_finite = false;
  std::optional<std::string> kerh_case;
  std::optional<std::size_t> kerh_order;
  std::optional<bool> simdiag;
  std::optional<QForm> normalized_restricted;
  std::optional<std::size_t> stabilizer_order;
  std::vector<std::string> notes;
};

AutSummary analyze_pencil(const PencilConfig& config);

}  // namespace fanok
