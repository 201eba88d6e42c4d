#include "fanok/autforms.hpp"

#include <algorithm>
#include <optional>

#include "fanok/errors.hpp"
#include "fanok/quadpoly.hpp"

namespace fanok {

QForm::QForm(Mat m) : m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() == 0)
    throw InputError("quadratic form: matrix must be square and nonempty");
  if (!m_.is_symmetric()) throw InputError("quadratic form: matrix must be symmetric");
}

QForm QForm::identity(std::size_t size) {
  return QForm(Mat::identity(size));
}

QForm QForm::from_diagonal(const std::vector<Rational>& d) {
  return QForm(Mat::diagonal(d));
}

bool QForm::is_diagonal() const {
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (!m_.at(i, j).is_zero()) return false;
  return true;
}

PencilConfig::PencilConfig(QForm fq_, std::vector<Rational> fh_, QForm fqp_)
    : fq(std::move(fq_)), fh(std::move(fh_)), fqp(std::move(fqp_)) {
  if (fh.size() != fq.size() || fqp.size() != fq.size())
    throw InputError("pencil configuration: dimension mismatch");
  if (std::all_of(fh.begin(), fh.end(), [](const Rational& x) { return x.is_zero(); }))
    throw InputError("pencil configuration: hyperplane form is zero");
  if (!fq.nondegenerate()) throw InputError("pencil configuration: F_Q is degenerate");
}

std::optional<PencilConfig> pencil_preset(const std::string& name) {
  const std::vector<Rational> axis{Rational(1), Rational(0), Rational(0), Rational(0),
                                   Rational(0)};
  const QForm sample_qp = QForm::from_diagonal(
      {Rational(0), Rational(2), Rational(3), Rational(5), Rational(7)});
  if (name == "case1") return PencilConfig(QForm::identity(5), axis, sample_qp);
  if (name == "case2") {
    Mat hyperbolic(5, 5);
    hyperbolic.at(0, 1) = hyperbolic.at(1, 0) = Rational(1, 2);
    hyperbolic.at(2, 2) = hyperbolic.at(3, 3) = hyperbolic.at(4, 4) = Rational(1);
    return PencilConfig(QForm(std::move(hyperbolic)), axis, sample_qp);
  }
  return std::nullopt;
}

std::size_t lie_stabilizer_dim(const PencilConfig& config) {
  return lie_stabilizer_dim(config, LieConditions{});
}

std::size_t lie_stabilizer_dim(const PencilConfig& config, const LieConditions& cond) {
  if (!config.fq.nondegenerate()) throw InputError("lie stabilizer: F_Q is degenerate");
  const std::size_t m = config.fq.size();
  const Mat& q = config.fq.matrix();
  const Mat& qp = config.fqp.matrix();
  const auto& h = config.fh;

  // Unknown layout: the m*m matrix entries row-major, then the multipliers
  // of the included conditions, then the coefficient vector of the linear
  // form multiplying F_H.
  std::size_t cols = m * m;
  std::size_t alpha = 0, lambda = 0, gamma = 0, delta = 0, u0 = 0;
  if (cond.fix_hyperplane) alpha = cols++;
  if (cond.fix_quadric) lambda = cols++;
  if (cond.fix_pencil_quadric) {
    gamma = cols++;
    delta = cols++;
    u0 = cols;
    cols += m;
  }
  const auto xv = [m](std::size_t i, std::size_t j) { return i * m + j; };

  std::vector<std::vector<Rational>> rows;
  if (cond.fix_hyperplane) {
    // D_X(F_H) = alpha F_H: sum_i h_i X_{ij} - alpha h_j = 0 for each j.
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Rational> row(cols, Rational(0));
      for (std::size_t i = 0; i < m; ++i) row[xv(i, j)] += h[i];
      row[alpha] -= h[j];
      rows.push_back(std::move(row));
    }
  }
  if (cond.fix_quadric) {
    // D_X(F_Q) = lambda F_Q: (X^T Q + Q X)_{ij} = lambda Q_{ij}, i <= j.
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        std::vector<Rational> row(cols, Rational(0));
        for (std::size_t k = 0; k < m; ++k) {
          row[xv(k, i)] += q.at(k, j);
          row[xv(k, j)] += q.at(i, k);
        }
        row[lambda] -= q.at(i, j);
        rows.push_back(std::move(row));
      }
  }
  if (cond.fix_pencil_quadric) {
    // D_X(F_Q') = gamma F_Q + delta F_Q' + F_H * (u . x):
    // (X^T Q' + Q' X)_{ij} - gamma Q_{ij} - delta Q'_{ij} - h_i u_j - h_j u_i = 0.
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        std::vector<Rational> row(cols, Rational(0));
        for (std::size_t k = 0; k < m; ++k) {
          row[xv(k, i)] += qp.at(k, j);
          row[xv(k, j)] += qp.at(i, k);
        }
        row[gamma] -= q.at(i, j);
        row[delta] -= qp.at(i, j);
        row[u0 + j] -= h[i];
        row[u0 + i] -= h[j];
        rows.push_back(std::move(row));
      }
  }

  Mat sys(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) sys.at(i, j) = rows[i][j];
  const std::size_t kernel = cols - sys.rank();
  // The scalar-matrix line (X = I with the matching multipliers) always
  // solves the system; the stabilizer lives in PGL, so it is removed.
  return kernel - 1;
}

namespace {

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class& num = r.num();
  const mpz_class& den = r.den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(sn, sd));
}

// Roots of a2 v^2 + a1 v + a0 = 0 over Q; nullopt when none are rational.
std::optional<std::vector<Rational>> rational_roots(const Rational& a2, const Rational& a1,
                                                    const Rational& a0) {
  const Rational disc = a1 * a1 - Rational(4) * a2 * a0;
  const auto root = exact_sqrt(disc);
  if (!root) return std::nullopt;
  const Rational twice = Rational(2) * a2;
  std::vector<Rational> out{(-a1 + *root) / twice};
  if (!root->is_zero()) out.push_back((-a1 - *root) / twice);
  return out;
}

// Branching solver for the bordered similitude systems: deterministic
// propagation of univariate equations, branching on exact quadratic roots
// and on product equations u*v = 0. The pointwise-fixing cut (border
// variables forced to zero) is applied once if a branch stalls.
class BranchSolver {
 public:
  BranchSolver(std::size_t nvars, std::vector<int> cut_vars)
      : nvars_(nvars), cut_vars_(std::move(cut_vars)) {}

  struct State {
    std::vector<std::optional<Rational>> values;
    std::vector<QuadPoly> eqs;
  };

  void run(State st, bool cut_applied) {
    for (;;) {
      // Propagate: drop satisfied equations, fail on contradictions, and
      // resolve equations in a single variable of degree one.
      bool restart = false;
      for (std::size_t i = 0; i < st.eqs.size();) {
        const QuadPoly& e = st.eqs[i];
        if (e.is_zero()) {
          st.eqs.erase(st.eqs.begin() + i);
          continue;
        }
        if (e.is_constant()) return;  // nonzero constant: dead branch
        const auto vars = e.variables();
        if (vars.size() == 1) {
          const int v = *vars.begin();
          const Rational a2 = e.coeff(Mono{v, v});
          const Rational a1 = e.coeff(Mono{-1, v});
          const Rational a0 = e.coeff(Mono{-1, -1});
          if (a2.is_zero()) {
            set_value(st, v, -a0 / a1);
            restart = true;
            break;
          }
          if (a1.is_zero() && a0.is_zero()) {
            set_value(st, v, Rational(0));
            restart = true;
            break;
          }
        }
        ++i;
      }
      if (restart) continue;

      // Branch on a univariate quadratic.
      for (std::size_t i = 0; i < st.eqs.size(); ++i) {
        const QuadPoly e = st.eqs[i];
        const auto vars = e.variables();
        if (vars.size() != 1) continue;
        const int v = *vars.begin();
        const auto roots = rational_roots(e.coeff(Mono{v, v}), e.coeff(Mono{-1, v}),
                                          e.coeff(Mono{-1, -1}));
        if (!roots) {
          notes.push_back("branch inconsistent over the rationals: " + e.str() +
                          " = 0 has no rational root");
          return;
        }
        st.eqs.erase(st.eqs.begin() + i);
        for (const Rational& r : *roots) {
          State child = st;
          set_value(child, v, r);
          run(std::move(child), cut_applied);
        }
        return;
      }

      // Branch on a product equation c * u * v = 0.
      for (std::size_t i = 0; i < st.eqs.size(); ++i) {
        if (st.eqs[i].terms().size() != 1) continue;
        const Mono mono = st.eqs[i].terms().begin()->first;
        if (mono.u < 0 || mono.u == mono.v) continue;
        st.eqs.erase(st.eqs.begin() + i);
        for (const int v : {mono.u, mono.v}) {
          State child = st;
          set_value(child, v, Rational(0));
          run(std::move(child), cut_applied);
        }
        return;
      }

      // Stalled: apply the pointwise-fixing cut once, then classify.
      if (!cut_applied) {
        cut_applied = true;
        bool changed = false;
        for (const int v : cut_vars_)
          if (!st.values[static_cast<std::size_t>(v)]) {
            set_value(st, v, Rational(0));
            changed = true;
          }
        if (changed) continue;
      }
      if (!st.eqs.empty())
        throw RegimeError("ker_h solver: unsupported residual equation structure");
      for (std::size_t v = 0; v < nvars_; ++v)
        if (!st.values[v]) {
          infinite = true;
          return;
        }
      std::vector<Rational> sol(nvars_);
      for (std::size_t v = 0; v < nvars_; ++v) sol[v] = *st.values[v];
      solutions.push_back(std::move(sol));
      return;
    }
  }

  std::vector<std::vector<Rational>> solutions;
  std::vector<std::string> notes;
  bool infinite = false;

 private:
  static void set_value(State& st, int v, const Rational& value) {
    st.values[static_cast<std::size_t>(v)] = value;
    for (auto& e : st.eqs) e = e.substituted(v, value);
  }

  std::size_t nvars_;
  std::vector<int> cut_vars_;
};

bool contains(const std::vector<Mat>& set, const Mat& m) {
  return std::any_of(set.begin(), set.end(), [&](const Mat& x) { return x == m; });
}

std::vector<Mat> closure_of(const std::vector<Mat>& gens, std::size_t m) {
  std::vector<Mat> out{Mat::identity(m)};
  std::vector<Mat> frontier = out;
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& f : frontier)
      for (const Mat& g : gens) {
        const Mat p = projective_normalize(f * g);
        if (!contains(out, p)) {
          out.push_back(p);
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Mat> compute_generators(const std::vector<Mat>& elements, std::size_t m) {
  std::vector<Mat> gens;
  std::vector<Mat> generated{Mat::identity(m)};
  for (const Mat& e : elements) {
    if (contains(generated, e)) continue;
    gens.push_back(e);
    generated = closure_of(gens, m);
  }
  return gens;
}

void verify_group(const GroupDescription& g, std::size_t m) {
  if (!contains(g.elements, Mat::identity(m)))
    throw RegimeError("stabilizer solver produced a set without the identity");
  for (const Mat& a : g.elements)
    for (const Mat& b : g.elements)
      if (!contains(g.elements, projective_normalize(a * b)))
        throw RegimeError("stabilizer solver produced a set not closed under products");
}

}  // namespace

GroupDescription ker_h_group(const QForm& case_form, std::size_t hyperplane) {
  const std::size_t m = case_form.size();
  if (m < 2) throw InputError("ker_h: the form must live on at least P^1");
  if (hyperplane >= m) throw InputError("ker_h: hyperplane index out of range");
  const Mat& q = case_form.matrix();

  // Shape validation: diagonal outside the fixed coordinate; at most one
  // hyperbolic coupling between x_k and another coordinate, and then no
  // diagonal term at x_k.
  std::size_t couplings = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (q.at(i, j).is_zero()) continue;
      if (i != hyperplane && j != hyperplane)
        throw InputError("ker_h: unsupported form shape (coupling away from the fixed coordinate)");
      ++couplings;
    }
  if (couplings > 1) throw InputError("ker_h: unsupported form shape (multiple couplings)");
  if (couplings == 1 && !q.at(hyperplane, hyperplane).is_zero())
    throw InputError("ker_h: unsupported form shape (hyperbolic coupling with a diagonal term)");

  // Bordered matrix unknowns: B is a at (k,k), the row border b_j, the
  // column border s_j, and a common diagonal lambda elsewhere. lambda is
  // pinned to 1 as the projective normalization (lambda = 0 would make B
  // singular), and mu is the similitude multiplier of B Q B^T = mu Q.
  const int var_a = 0, var_lambda = 1, var_mu = 2;
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < m; ++j)
    if (j != hyperplane) others.push_back(j);
  const auto bvar = [&](std::size_t idx) { return 3 + static_cast<int>(idx); };
  const auto svar = [&](std::size_t idx) { return 3 + static_cast<int>(m - 1 + idx); };
  const std::size_t nvars = 3 + 2 * (m - 1);

  std::vector<std::vector<QuadPoly>> b(m, std::vector<QuadPoly>(m));
  b[hyperplane][hyperplane] = QuadPoly::var(var_a);
  for (std::size_t idx = 0; idx < others.size(); ++idx) {
    const std::size_t j = others[idx];
    b[hyperplane][j] = QuadPoly::var(bvar(idx));
    b[j][hyperplane] = QuadPoly::var(svar(idx));
    b[j][j] = QuadPoly::var(var_lambda);
  }

  BranchSolver::State st;
  st.values.resize(nvars);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      QuadPoly e;
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t r = 0; r < m; ++r) {
          if (q.at(p, r).is_zero()) continue;
          e += q.at(p, r) * mul_linear(b[i][p], b[j][r]);
        }
      e -= q.at(i, j) * QuadPoly::var(var_mu);
      if (!e.is_zero()) st.eqs.push_back(std::move(e));
    }

  std::vector<int> cut_vars;
  for (std::size_t idx = 0; idx < others.size(); ++idx) cut_vars.push_back(svar(idx));
  BranchSolver solver(nvars, cut_vars);

  // lambda = 1 seed.
  st.values[var_lambda] = Rational(1);
  for (auto& e : st.eqs) e = e.substituted(var_lambda, Rational(1));
  solver.run(std::move(st), false);
  if (solver.infinite) throw RegimeError("infinite stabilizer");

  GroupDescription group;
  group.notes = solver.notes;
  for (const auto& sol : solver.solutions) {
    if (sol[var_mu].is_zero()) {
      group.notes.push_back("discarded a mu = 0 solution (singular transformation)");
      continue;
    }
    // Pointwise fixing requires a vanishing column border.
    bool fixes = true;
    for (std::size_t idx = 0; idx < others.size(); ++idx)
      if (!sol[static_cast<std::size_t>(svar(idx))].is_zero()) fixes = false;
    if (!fixes) {
      group.notes.push_back("discarded a solution that does not fix the hyperplane pointwise");
      continue;
    }
    Mat elem(m, m);
    elem.at(hyperplane, hyperplane) = sol[var_a];
    for (std::size_t idx = 0; idx < others.size(); ++idx) {
      const std::size_t j = others[idx];
      elem.at(hyperplane, j) = sol[static_cast<std::size_t>(bvar(idx))];
      elem.at(j, hyperplane) = sol[static_cast<std::size_t>(svar(idx))];
      elem.at(j, j) = sol[var_lambda];
    }
    if (elem.det().is_zero()) {
      group.notes.push_back("discarded a singular solution");
      continue;
    }
    const Mat normalized = projective_normalize(elem);
    if (!contains(group.elements, normalized)) group.elements.push_back(normalized);
  }
  std::sort(group.elements.begin(), group.elements.end(), lex_less);
  verify_group(group, m);
  group.generators = compute_generators(group.elements, m);
  return group;
}

QForm trace_normalize(const QForm& b, const QForm& reference) {
  if (b.size() != reference.size()) throw InputError("trace normalize: size mismatch");
  if (reference.matrix() != Mat::identity(reference.size()))
    throw InputError("trace normalize: reference must be the identity form");
  const Rational shift = b.matrix().trace() / Rational(static_cast<long>(b.size()));
  return QForm(b.matrix() - shift * reference.matrix());
}

GroupDescription diagonal_pair_stabilizer(const QForm& b) {
  if (!b.is_diagonal())
    throw InputError("diagonal pair stabilizer: the form must be diagonal");
  const std::size_t m = b.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (b.matrix().at(i, i) == b.matrix().at(j, j))
        throw InputError(
            "distinctness precondition violated (stabilizer may be positive-dimensional)");

  // All sign-diagonal matrices modulo scalars: pin the first entry to +1.
  GroupDescription group;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (m - 1)); ++mask) {
    Mat p = Mat::identity(m);
    for (std::size_t i = 0; i + 1 < m; ++i)
      if ((mask >> i) & 1U) p.at(i + 1, i + 1) = Rational(-1);
    group.elements.push_back(std::move(p));
  }
  std::sort(group.elements.begin(), group.elements.end(), lex_less);
  for (std::size_t i = 1; i < m; ++i) {
    Mat gen = Mat::identity(m);
    gen.at(i, i) = Rational(-1);
    group.generators.push_back(std::move(gen));
  }
  return group;
}

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) minor[i - 1].push_back(m[i][j]);
    const Poly term = m[0][col] * poly_det(minor);
    if (col % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace

bool simdiag_check(const QForm& q1, const QForm& q2) {
  if (q1.size() != q2.size()) throw InputError("simdiag: size mismatch");
  if (!q1.nondegenerate()) throw InputError("simdiag: Q1 must be nondegenerate");
  const std::size_t m = q1.size();
  std::vector<std::vector<Poly>> pencil(m, std::vector<Poly>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      pencil[i][j] = Poly{-q2.matrix().at(i, j), q1.matrix().at(i, j)};
  return squarefree_check(poly_det(pencil));
}

QForm restrict_to_hyperplane(const QForm& q, std::size_t k) {
  if (k >= q.size()) throw InputError("restriction: coordinate index out of range");
  if (q.size() < 2) throw InputError("restriction: form too small");
  Mat r(q.size() - 1, q.size() - 1);
  for (std::size_t i = 0, ri = 0; i < q.size(); ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, rj = 0; j < q.size(); ++j) {
      if (j == k) continue;
      r.at(ri, rj) = q.matrix().at(i, j);
      ++rj;
    }
    ++ri;
  }
  return QForm(std::move(r));
}

AutSummary analyze_pencil(const PencilConfig& config) {
  AutSummary summary;
  summary.lie_dim = lie_stabilizer_dim(config);
  summary.aut_finite = summary.lie_dim == 0;

  // Ker_H and the hyperplane-section reduction need the hyperplane to be a
  // coordinate axis in the supplied coordinates.
  std::optional<std::size_t> axis;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < config.fh.size(); ++i)
    if (!config.fh[i].is_zero()) {
      axis = i;
      ++nonzero;
    }
  if (nonzero != 1) {
    summary.notes.push_back(
        "ker_h and the hyperplane-section reduction skipped: the hyperplane form is not a "
        "coordinate axis");
    return summary;
  }

  const QForm restricted = restrict_to_hyperplane(config.fq, *axis);
  summary.kerh_case =
      restricted.nondegenerate() ? "smooth-hyperplane-section" : "singular-hyperplane-section";
  try {
    const GroupDescription g = ker_h_group(config.fq, *axis);
    summary.kerh_order = g.order();
    for (const auto& note : g.notes) summary.notes.push_back("ker_h: " + note);
  } catch (const InputError& e) {
    summary.notes.push_back(std::string("ker_h skipped: ") + e.what());
  } catch (const RegimeError& e) {
    summary.notes.push_back(std::string("ker_h: ") + e.what());
  }

  if (!restricted.nondegenerate()) {
    summary.notes.push_back(
        "restriction of the quadric to the hyperplane is degenerate; reduction step skipped");
    return summary;
  }
  const QForm restricted_qp = restrict_to_hyperplane(config.fqp, *axis);
  summary.simdiag = simdiag_check(restricted, restricted_qp);
  if (!*summary.simdiag) {
    summary.notes.push_back(
        "restricted pair has a repeated eigenvalue; stabilizer enumeration skipped");
    return summary;
  }
  if (restricted == QForm::identity(restricted.size()) && restricted_qp.is_diagonal()) {
    const QForm normalized = trace_normalize(restricted_qp, restricted);
    summary.normalized_restricted = normalized;
    summary.stabilizer_order = diagonal_pair_stabilizer(normalized).order();
  } else {
    summary.notes.push_back(
        "restricted pair is not presented in simultaneously diagonalized coordinates; "
        "stabilizer enumeration skipped");
  }
  return summary;
}

}  // namespace fanok
