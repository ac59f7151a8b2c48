#include "rbop/cli.hpp"

#include "rbop/cohomology.hpp"
#include "rbop/deformation.hpp"
#include "rbop/problem.hpp"
#include "rbop/rmatrix.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>

namespace rbop::cli {

namespace {

using nlohmann::json;

struct CommandError {
  int code;
  std::string message;
};

constexpr Index kDefaultOrderCap = 4;

ProblemFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CommandError{2, "cannot open " + path};
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw CommandError{2, path + ": " + e.what()};
  }
  try {
    return parse_problem(j);
  } catch (const ParseError& e) {
    throw CommandError{2, path + ": " + e.what()};
  }
}

std::string format_vec(const Vec& v, const std::vector<std::string>& labels, char prefix) {
  std::ostringstream os;
  bool first = true;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    if (!first) os << " + ";
    os << v(i).str() << "*";
    if (static_cast<size_t>(i) < labels.size())
      os << labels[static_cast<size_t>(i)];
    else
      os << prefix << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

json vec_json(const Vec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

json mat_json(const Mat& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r).transpose()));
  return out;
}

// Cochains travel as their coefficient table plus an explicit degree header.
json cochain_json(const Cochain& f) {
  json out;
  out["degree"] = f.degree();
  out["module_dim"] = f.module_dim();
  out["alg_dim"] = f.alg_dim();
  out["coefficients"] = mat_json(f.table());
  return out;
}

const Mat& require_operator(const ProblemFile& p) {
  if (!p.op) throw CommandError{2, "the file has no operator section"};
  return *p.op;
}

Vec resolve_element(const ProblemFile& p, const std::string& spec) {
  for (const auto& [name, v] : p.task.nijenhuis_candidates)
    if (name == spec) return v;
  Vec v(p.algebra.dim());
  std::stringstream ss(spec);
  std::string item;
  Index i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= v.size()) throw CommandError{2, "element: too many coordinates"};
    auto r = Rat::parse(item);
    if (!r) throw CommandError{2, "element: bad coordinate \"" + item + "\""};
    v(i++) = *r;
  }
  if (i != v.size()) throw CommandError{2, "element: expected " + std::to_string(v.size()) + " coordinates"};
  return v;
}

int cmd_validate(const ProblemFile& p, bool as_json, std::ostream& out) {
  const auto algebra_violations = validate_algebra(p.algebra);
  std::vector<BimoduleViolation> module_violations;
  bool bimodule_built = true;
  std::string bimodule_error;
  if (p.bimodule) {
    try {
      module_violations = validate_bimodule(realize_bimodule(p.algebra, p.bimodule));
    } catch (const std::exception& e) {
      bimodule_built = false;
      bimodule_error = e.what();
    }
  }
  const bool ok = algebra_violations.empty() && module_violations.empty() && bimodule_built;
  if (as_json) {
    json j;
    j["algebra_associative"] = algebra_violations.empty();
    j["algebra_violations"] = json::array();
    for (const auto& v : algebra_violations)
      j["algebra_violations"].push_back({{"i", v.i}, {"j", v.j}, {"k", v.k},
                                         {"lhs", vec_json(v.lhs)}, {"rhs", vec_json(v.rhs)}});
    if (p.bimodule) {
      j["bimodule_valid"] = module_violations.empty() && bimodule_built;
      j["bimodule_violations"] = json::array();
      for (const auto& v : module_violations)
        j["bimodule_violations"].push_back({{"axiom", v.axiom}, {"i", v.i}, {"j", v.j}, {"u", v.u}});
      if (!bimodule_built) j["bimodule_error"] = bimodule_error;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "algebra: " << (algebra_violations.empty() ? "associative" : "NOT associative") << "\n";
    for (const auto& v : algebra_violations)
      out << "  violation at (" << v.i << ", " << v.j << ", " << v.k << "): "
          << format_vec(v.lhs, p.algebra.labels(), 'e') << " vs " << format_vec(v.rhs, p.algebra.labels(), 'e')
          << "\n";
    if (p.bimodule) {
      if (!bimodule_built)
        out << "bimodule: cannot build (" << bimodule_error << ")\n";
      else {
        out << "bimodule: " << (module_violations.empty() ? "valid" : "NOT valid") << "\n";
        for (const auto& v : module_violations)
          out << "  axiom " << v.axiom << " fails at (" << v.i << ", " << v.j << ", " << v.u << ")\n";
      }
    }
  }
  return ok ? 0 : 1;
}

int cmd_check_op(const ProblemFile& p, const std::string& kind, const Rat& weight, unsigned seed,
                 bool as_json, std::ostream& out) {
  const Mat& T = require_operator(p);
  json j;
  bool holds = false;
  std::ostringstream text;

  if (kind == "o-operator") {
    const Bimodule bm = realize_bimodule(p.algebra, p.bimodule);
    const Defect defect = o_operator_defect(bm, T);
    holds = defect.is_zero();
    text << "defect = " << (holds ? "0" : "nonzero") << "\n";
    for (const auto& w : defect.witnesses)
      text << "  witness (m" << w.u << ", m" << w.v << "): " << format_vec(w.lhs, p.algebra.labels(), 'e')
           << " vs " << format_vec(w.rhs, p.algebra.labels(), 'e') << "\n";
    // Multilinearity spot-check of the defect table on random module vectors.
    std::mt19937 rng(seed);
    const std::vector<Rat> pool = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(2)};
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    int samples = 0;
    for (int s = 0; s < 8; ++s) {
      Vec x(bm.dim()), y(bm.dim());
      for (Index i = 0; i < bm.dim(); ++i) {
        x(i) = pool[pick(rng)];
        y(i) = pool[pick(rng)];
      }
      std::vector<Vec> args{x, y};
      const Vec via_table = defect.difference.eval(args);
      const Vec direct = bm.algebra().mul(T * x, T * y) -
                         T * (bm.act_right(x, T * y) + bm.act_left(T * x, y));
      if (via_table != direct) throw CommandError{2, "internal defect spot-check failed"};
      ++samples;
    }
    text << "spot-check: ok (" << samples << " samples)\n";
    j["kind"] = "o-operator";
    j["defect_zero"] = holds;
    j["witnesses"] = json::array();
    for (const auto& w : defect.witnesses)
      j["witnesses"].push_back({{"u", w.u}, {"v", w.v}, {"lhs", vec_json(w.lhs)}, {"rhs", vec_json(w.rhs)}});
  } else if (kind == "rota-baxter") {
    holds = is_rota_baxter(p.algebra, T, weight);
    text << "rota-baxter(weight " << weight.str() << ") = " << (holds ? "yes" : "no") << "\n";
    if (weight.is_zero()) {
      const bool defect_route = is_o_operator(adjoint_bimodule(p.algebra), T);
      if (defect_route != holds) throw CommandError{2, "internal adjoint-defect cross-check failed"};
      text << "adjoint-bimodule defect agrees\n";
    }
    j["kind"] = "rota-baxter";
    j["weight"] = weight.str();
    j["holds"] = holds;
  } else if (kind == "left-averaging" || kind == "right-averaging" || kind == "averaging") {
    const bool left = is_left_averaging(p.algebra, T);
    const bool right = is_right_averaging(p.algebra, T);
    holds = (kind == "left-averaging") ? left : (kind == "right-averaging") ? right : (left && right);
    const bool left_defect = is_o_operator(one_sided_bimodule(p.algebra, Side::left), T);
    const bool right_defect = is_o_operator(one_sided_bimodule(p.algebra, Side::right), T);
    if (left != left_defect || right != right_defect)
      throw CommandError{2, "internal one-sided-defect cross-check failed"};
    text << kind << " = " << (holds ? "yes" : "no") << "\n";
    text << "one-sided-bimodule defects agree\n";
    j["kind"] = kind;
    j["holds"] = holds;
    j["left"] = left;
    j["right"] = right;
  } else {
    throw CommandError{2, "unknown kind \"" + kind + "\""};
  }

  if (as_json)
    out << j.dump(2) << "\n";
  else
    out << text.str();
  return holds ? 0 : 1;
}

int cmd_cohomology(const ProblemFile& p, Index degree, Index cap, bool as_json, std::ostream& out) {
  const Mat& T = require_operator(p);
  const Bimodule bm = realize_bimodule(p.algebra, p.bimodule);
  CohomologyReport rep;
  try {
    rep = cohomology_report(bm, T, degree, cap);
  } catch (const std::out_of_range& e) {
    throw CommandError{2, e.what()};
  } catch (const std::invalid_argument& e) {
    throw CommandError{2, e.what()};
  }
  if (as_json) {
    json j;
    j["degree"] = rep.degree;
    j["dim_cocycles"] = rep.dim_cocycles;
    j["dim_coboundaries"] = rep.dim_coboundaries;
    j["dim_cohomology"] = rep.dim_cohomology;
    j["cocycle_basis"] = mat_json(rep.cocycle_basis.basis());
    j["coboundary_basis"] = mat_json(rep.coboundary_basis.basis());
    j["representatives"] = json::array();
    for (const auto& r : rep.representatives) j["representatives"].push_back(cochain_json(r));
    out << j.dump(2) << "\n";
  } else {
    out << "degree " << rep.degree << ": dim Z = " << rep.dim_cocycles << ", dim B = " << rep.dim_coboundaries
        << ", dim H = " << rep.dim_cohomology << "\n";
    for (size_t i = 0; i < rep.representatives.size(); ++i) {
      out << "representative " << i << ":";
      const Vec f = rep.representatives[i].flattened();
      for (Index k = 0; k < f.size(); ++k) out << " " << f(k).str();
      out << "\n";
    }
  }
  return 0;
}

int cmd_nijenhuis(const ProblemFile& p, const std::string& element, bool as_json, std::ostream& out) {
  const Mat& T = require_operator(p);
  const Bimodule bm = realize_bimodule(p.algebra, p.bimodule);
  const Vec a = resolve_element(p, element);
  NijenhuisElementReport rep;
  try {
    rep = is_nijenhuis_element(bm, T, a);
  } catch (const std::invalid_argument& e) {
    throw CommandError{2, e.what()};
  }
  if (as_json) {
    json j;
    j["element"] = vec_json(a);
    j["differential_image_central"] = rep.differential_image_central;
    j["commutator_products_vanish"] = rep.commutator_products_vanish;
    j["left_action_compatible"] = rep.left_action_compatible;
    j["right_action_compatible"] = rep.right_action_compatible;
    j["nijenhuis"] = rep.ok();
    out << j.dump(2) << "\n";
  } else {
    out << "element: " << format_vec(a, p.algebra.labels(), 'e') << "\n";
    out << "  [a, l_T(m,a) - r_T(a,m)] = 0:      " << (rep.differential_image_central ? "yes" : "no") << "\n";
    out << "  (ab - ba)(ac - ca) = 0:            " << (rep.commutator_products_vanish ? "yes" : "no") << "\n";
    out << "  l_[a,b] l_a = l_[a,b] r_a:         " << (rep.left_action_compatible ? "yes" : "no") << "\n";
    out << "  r_[a,b] l_a = r_[a,b] r_a:         " << (rep.right_action_compatible ? "yes" : "no") << "\n";
    out << "nijenhuis: " << (rep.ok() ? "yes" : "no") << "\n";
  }
  return rep.ok() ? 0 : 1;
}

TruncatedDeformation build_deformation(const ProblemFile& p, const std::optional<DeformationSpec>& spec,
                                       Index order_cap) {
  const Mat& T = require_operator(p);
  const Bimodule bm = realize_bimodule(p.algebra, p.bimodule);
  TruncatedDeformation d{bm, T, {}};
  if (spec) d.terms = spec->terms;
  if (d.order() > order_cap)
    throw CommandError{2, "deformation order " + std::to_string(d.order()) +
                              " exceeds the truncation cap; raise --order"};
  return d;
}

int cmd_deform_check(const ProblemFile& p, Index order_cap, bool as_json, std::ostream& out) {
  if (!p.deformation) throw CommandError{2, "the file has no deformation section"};
  const TruncatedDeformation d = build_deformation(p, p.deformation, order_cap);
  const OrderCheckResult res = check_order(d);
  json j;
  j["order"] = d.order();
  j["ok"] = res.ok;
  if (!res.ok) {
    j["failing_order"] = res.failing_order;
    j["residual"] = cochain_json(res.residual);
  }
  if (as_json)
    out << j.dump(2) << "\n";
  else if (res.ok)
    out << "deformation equations hold through order " << d.order() << "\n";
  else
    out << "deformation equation fails at order " << res.failing_order << "\n";
  return res.ok ? 0 : 1;
}

int cmd_deform_extend(const ProblemFile& p, Index order_cap, bool as_json, std::ostream& out) {
  if (!p.deformation) throw CommandError{2, "the file has no deformation section"};
  const TruncatedDeformation d = build_deformation(p, p.deformation, order_cap);
  ObstructionResult res;
  try {
    res = obstruction(d);
  } catch (const std::invalid_argument& e) {
    throw CommandError{2, e.what()};
  }
  json j;
  j["obstruction"] = cochain_json(res.cocycle);
  j["obstruction_is_cocycle"] = res.is_cocycle_verified;
  j["class_trivial"] = res.class_trivial;
  if (res.extension) j["extension"] = mat_json(*res.extension);
  if (res.certificate) j["certificate"] = vec_json(*res.certificate);
  if (as_json)
    out << j.dump(2) << "\n";
  else {
    out << "obstruction cocycle " << (res.cocycle.is_zero() ? "vanishes" : "is nonzero") << "; d_H(Ob) = 0: "
        << (res.is_cocycle_verified ? "verified" : "FAILED") << "\n";
    if (res.class_trivial) {
      out << "class trivial; extension term:\n";
      const Mat& e = *res.extension;
      for (Index r = 0; r < e.rows(); ++r) {
        out << " ";
        for (Index c = 0; c < e.cols(); ++c) out << " " << e(r, c).str();
        out << "\n";
      }
    } else {
      out << "class nontrivial; certificate: " << format_vec(*res.certificate, {}, 'c') << "\n";
    }
  }
  return res.class_trivial ? 0 : 1;
}

int cmd_deform_equiv(const ProblemFile& p, Index order_flag, bool as_json, std::ostream& out) {
  if (!p.deformation) throw CommandError{2, "the file has no deformation section"};
  if (!p.equivalence) throw CommandError{2, "the file has no equivalence section"};
  const Index order_cap = std::max<Index>(order_flag, kDefaultOrderCap);
  const TruncatedDeformation d1 = build_deformation(p, p.deformation, order_cap);
  const TruncatedDeformation d2 = build_deformation(p, p.second_deformation, order_cap);
  const Vec& a = p.equivalence->element;
  const bool linear_case = p.equivalence->phi_tail.empty() && p.equivalence->psi_tail.empty() &&
                           d1.order() <= 1 && d2.order() <= 1 && order_flag <= 1;
  json j;
  bool ok;
  std::ostringstream text;
  if (linear_case) {
    const Mat zero = Mat::Zero(d1.base.rows(), d1.base.cols());
    const Mat U1 = d1.order() >= 1 ? d1.terms[0] : zero;
    const Mat U2 = d2.order() >= 1 ? d2.terms[0] : zero;
    const LinearEquivalenceReport rep = linear_equivalence_check(d1.bimodule, d1.base, U1, U2, a);
    ok = rep.ok();
    j["mode"] = "linear";
    j["generator_1_cocycle"] = rep.generator_1.is_cocycle;
    j["generator_1_o_operator"] = rep.generator_1.is_o_operator;
    j["generator_2_cocycle"] = rep.generator_2.is_cocycle;
    j["generator_2_o_operator"] = rep.generator_2.is_o_operator;
    j["commutator_products_vanish"] = rep.commutator_products_vanish;
    j["infinitesimal_difference"] = rep.infinitesimal_difference;
    j["conjugation_identity"] = rep.conjugation_identity;
    j["left_action_compatible"] = rep.left_action_compatible;
    j["right_action_compatible"] = rep.right_action_compatible;
    j["morphism_all_orders"] = rep.morphism_all_orders;
    text << "linear equivalence: " << (ok ? "yes" : "no") << "\n";
    if (!rep.generator_1.ok()) text << "  first generator fails (cond-p/cond-q)\n";
    if (!rep.generator_2.ok()) text << "  second generator fails (cond-p/cond-q)\n";
    if (!rep.morphism_all_orders) text << "  the pair is not an O-morphism for all t\n";
  } else {
    const Index order = std::max({order_flag, d1.order(), d2.order()});
    const FormalEquivalenceReport rep =
        formal_equivalence_check(d1, d2, a, p.equivalence->phi_tail, p.equivalence->psi_tail, order);
    ok = rep.ok();
    j["mode"] = "formal";
    j["order"] = order;
    j["preconditions_ok"] = rep.preconditions_ok;
    j["failed_morphism_orders"] = rep.failed_morphism;
    j["failed_intertwine_orders"] = rep.failed_intertwine;
    j["failed_left_orders"] = rep.failed_left;
    j["failed_right_orders"] = rep.failed_right;
    text << "formal equivalence through order " << order << ": " << (ok ? "yes" : "no") << "\n";
    auto list = [&text](const char* name, const std::vector<Index>& v) {
      if (v.empty()) return;
      text << "  " << name << " fails at orders:";
      for (Index k : v) text << " " << k;
      text << "\n";
    };
    if (!rep.preconditions_ok) text << "  deformation equations fail\n";
    list("algebra-morphism condition", rep.failed_morphism);
    list("intertwining condition", rep.failed_intertwine);
    list("left action condition", rep.failed_left);
    list("right action condition", rep.failed_right);
  }
  if (as_json)
    out << j.dump(2) << "\n";
  else
    out << text.str();
  return ok ? 0 : 1;
}

Wedge2 build_wedge(const ProblemFile& p, const std::optional<std::vector<std::tuple<Index, Index, Rat>>>& e,
                   const char* which) {
  if (!e) throw CommandError{2, std::string("the file has no ") + which + " section"};
  try {
    return Wedge2(p.algebra, *e);
  } catch (const std::invalid_argument& err) {
    throw CommandError{2, err.what()};
  }
}

// "i,j,p/q;i,j,p/q" from the --entries flag.
std::vector<std::tuple<Index, Index, Rat>> parse_inline_entries(const std::string& text) {
  std::vector<std::tuple<Index, Index, Rat>> out;
  std::stringstream ss(text);
  std::string triple;
  while (std::getline(ss, triple, ';')) {
    std::stringstream ts(triple);
    std::string i, j, v;
    if (!std::getline(ts, i, ',') || !std::getline(ts, j, ',') || !std::getline(ts, v, ','))
      throw CommandError{2, "--entries: expected \"i,j,p/q\" triples separated by ';'"};
    const auto r = Rat::parse(v);
    if (!r) throw CommandError{2, "--entries: bad rational \"" + v + "\""};
    try {
      out.push_back({std::stol(i), std::stol(j), *r});
    } catch (const std::exception&) {
      throw CommandError{2, "--entries: bad index in \"" + triple + "\""};
    }
  }
  return out;
}

int cmd_rmatrix_check(const ProblemFile& p, const std::string& inline_entries, bool as_json,
                      std::ostream& out) {
  std::optional<std::vector<std::tuple<Index, Index, Rat>>> entries = p.rmatrix;
  if (!inline_entries.empty()) entries = parse_inline_entries(inline_entries);
  const Wedge2 r = build_wedge(p, entries, "rmatrix");
  const Tensor3 yb = yb_bracket(r);
  const bool holds = is_r_matrix(r);
  json j;
  j["yb_bracket_zero"] = yb.is_zero();
  j["coadjoint_defect_zero"] = holds;
  if (!holds) {
    for (Index a = 0; a < yb.n0; ++a)
      for (Index b = 0; b < yb.n1; ++b)
        for (Index c = 0; c < yb.n2; ++c)
          if (!yb(a, b, c).is_zero() && !j.contains("witness")) {
            j["witness"] = {{"alpha", a}, {"beta", b}, {"gamma", c}, {"value", yb(a, b, c).str()}};
          }
  }
  if (as_json)
    out << j.dump(2) << "\n";
  else {
    out << "[[r,r]] = " << (holds ? "0" : "nonzero") << "\n";
    if (j.contains("witness"))
      out << "  witness (" << j["witness"]["alpha"] << ", " << j["witness"]["beta"] << ", "
          << j["witness"]["gamma"] << "): " << j["witness"]["value"].get<std::string>() << "\n";
  }
  return holds ? 0 : 1;
}

int cmd_rmatrix_coproduct(const ProblemFile& p, bool as_json, std::ostream& out) {
  const Wedge2 r = build_wedge(p, p.rmatrix, "rmatrix");
  if (!is_r_matrix(r)) {
    out << (as_json ? "{\"error\": \"not an r-matrix\"}\n" : "not an r-matrix\n");
    return 1;
  }
  const Coproduct cp = induced_coproduct(r);
  const bool bialgebra = infinitesimal_bialgebra_check(p.algebra, cp.delta);
  json j;
  j["bialgebra"] = bialgebra;
  j["delta"] = json::array();
  for (Index k = 0; k < cp.dim; ++k) {
    json jk = json::array();
    for (Index a = 0; a < cp.dim; ++a) {
      json row = json::array();
      for (Index b = 0; b < cp.dim; ++b) row.push_back(cp.delta(k, a, b).str());
      jk.push_back(row);
    }
    j["delta"].push_back(jk);
  }
  if (as_json)
    out << j.dump(2) << "\n";
  else {
    out << "triangular infinitesimal bialgebra: " << (bialgebra ? "yes" : "no") << "\n";
    for (Index k = 0; k < cp.dim; ++k) {
      out << "delta(e" << k << ") =";
      bool any = false;
      for (Index a = 0; a < cp.dim; ++a)
        for (Index b = 0; b < cp.dim; ++b)
          if (!cp.delta(k, a, b).is_zero()) {
            out << " + " << cp.delta(k, a, b).str() << "*(e" << a << " x e" << b << ")";
            any = true;
          }
      if (!any) out << " 0";
      out << "\n";
    }
  }
  return bialgebra ? 0 : 1;
}

int cmd_rmatrix_weak_morphism(const ProblemFile& p, bool as_json, std::ostream& out) {
  const Wedge2 r1 = build_wedge(p, p.rmatrix, "rmatrix");
  const Wedge2 r2 = build_wedge(p, p.second_rmatrix, "second_rmatrix");
  if (!p.morphism) throw CommandError{2, "the file has no morphism section"};
  WeakMorphismReport rep;
  try {
    rep = weak_morphism_check(r1, r2, p.morphism->phi, p.morphism->psi);
  } catch (const std::invalid_argument& e) {
    throw CommandError{2, e.what()};
  }
  json j;
  j["phi_is_algebra_morphism"] = rep.phi_is_algebra_morphism;
  j["tensor_condition"] = rep.tensor_condition;
  j["left_compatible"] = rep.left_compatible;
  j["right_compatible"] = rep.right_compatible;
  j["weak_morphism"] = rep.ok();
  if (as_json)
    out << j.dump(2) << "\n";
  else {
    out << "phi algebra morphism:         " << (rep.phi_is_algebra_morphism ? "yes" : "no") << "\n";
    out << "(psi x id) r2 = (id x phi) r1: " << (rep.tensor_condition ? "yes" : "no") << "\n";
    out << "psi(phi(a) b) = a psi(b):      " << (rep.left_compatible ? "yes" : "no") << "\n";
    out << "psi(a phi(b)) = psi(a) b:      " << (rep.right_compatible ? "yes" : "no") << "\n";
    out << "weak morphism: " << (rep.ok() ? "yes" : "no") << "\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification and deformation toolkit for relative Rota-Baxter operators"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  std::string kind = "o-operator";
  std::string weight_str = "0";
  std::string element;
  Index degree = 0;
  Index degree_cap = kDefaultDegreeCap;
  Index order = 1;
  unsigned seed = 0;
  std::string fixture_name;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "problem file (JSON)")->required();
    cmd->add_flag("--json", as_json, "emit a JSON report");
  };

  CLI::App* validate = app.add_subcommand("validate", "check algebra and bimodule axioms");
  add_common(validate);

  CLI::App* check_op = app.add_subcommand("check-op", "verify an operator identity and print a defect summary");
  add_common(check_op);
  check_op->add_option("--kind", kind,
                       "o-operator | rota-baxter | left-averaging | right-averaging | averaging");
  check_op->add_option("--weight", weight_str, "Rota-Baxter weight (rational)");
  check_op->add_option("--seed", seed, "seed for the multilinearity spot-check");

  CLI::App* cohomology = app.add_subcommand("cohomology", "cocycle/coboundary/cohomology dimensions");
  add_common(cohomology);
  cohomology->add_option("--degree", degree, "cochain degree")->required();
  cohomology->add_option("--degree-cap", degree_cap, "largest admissible degree");

  CLI::App* nijenhuis = app.add_subcommand("nijenhuis", "check a Nijenhuis element candidate");
  add_common(nijenhuis);
  nijenhuis->add_option("--element", element, "candidate name from the file, or inline \"c0,c1,...\"")->required();

  CLI::App* deform = app.add_subcommand("deform", "deformation computations");
  deform->require_subcommand(1);
  CLI::App* deform_check = deform->add_subcommand("check", "verify deformation equations order by order");
  add_common(deform_check);
  deform_check->add_option("--order", order, "truncation order cap");
  CLI::App* deform_extend = deform->add_subcommand("extend", "obstruction class and next-order extension");
  add_common(deform_extend);
  deform_extend->add_option("--order", order, "truncation order cap");
  CLI::App* deform_equiv = deform->add_subcommand("equiv", "equivalence of two deformations");
  add_common(deform_equiv);
  deform_equiv->add_option("--order", order, "truncation order for the formal check");

  CLI::App* rmatrix = app.add_subcommand("rmatrix", "associative Yang-Baxter computations");
  rmatrix->require_subcommand(1);
  CLI::App* rmatrix_check = rmatrix->add_subcommand("check", "[[r,r]] = 0, both routes");
  add_common(rmatrix_check);
  std::string inline_entries;
  rmatrix_check->add_option("--entries", inline_entries,
                            "inline wedge entries \"i,j,p/q;...\" overriding the file section");
  CLI::App* rmatrix_coproduct = rmatrix->add_subcommand("coproduct", "induced triangular bialgebra coproduct");
  add_common(rmatrix_coproduct);
  CLI::App* rmatrix_weak = rmatrix->add_subcommand("weak-morphism", "weak morphism between two r-matrices");
  add_common(rmatrix_weak);

  CLI::App* emit = app.add_subcommand("emit-fixture", "write a catalog fixture as a problem file");
  emit->add_option("name", fixture_name, "fixture name")->required();
  emit->add_option("-o,--output", out_path, "output path (default: stdout)");

  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv;
  std::string prog = "rbop";
  argv.push_back(prog.data());
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help lands here
      out << app.help() << "\n";
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (emit->parsed()) {
      ProblemFile p = fixture(fixture_name);
      const std::string text = to_json(p).dump(2);
      if (out_path.empty())
        out << text << "\n";
      else {
        std::ofstream f(out_path);
        if (!f) throw CommandError{2, "cannot write " + out_path};
        f << text << "\n";
      }
      return 0;
    }

    const ProblemFile p = load(file);
    if (validate->parsed()) return cmd_validate(p, as_json, out);
    if (check_op->parsed()) {
      auto w = Rat::parse(weight_str);
      if (!w) throw CommandError{2, "--weight: bad rational"};
      return cmd_check_op(p, kind, *w, seed, as_json, out);
    }
    if (cohomology->parsed()) return cmd_cohomology(p, degree, degree_cap, as_json, out);
    if (nijenhuis->parsed()) return cmd_nijenhuis(p, element, as_json, out);
    if (deform->parsed()) {
      const Index cap = std::max<Index>(order, kDefaultOrderCap);
      if (deform_check->parsed()) return cmd_deform_check(p, cap, as_json, out);
      if (deform_extend->parsed()) return cmd_deform_extend(p, cap, as_json, out);
      if (deform_equiv->parsed()) return cmd_deform_equiv(p, order, as_json, out);
    }
    if (rmatrix->parsed()) {
      if (rmatrix_check->parsed()) return cmd_rmatrix_check(p, inline_entries, as_json, out);
      if (rmatrix_coproduct->parsed()) return cmd_rmatrix_coproduct(p, as_json, out);
      if (rmatrix_weak->parsed()) return cmd_rmatrix_weak_morphism(p, as_json, out);
    }
    throw CommandError{2, "no command"};
  } catch (const CommandError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rbop::cli
