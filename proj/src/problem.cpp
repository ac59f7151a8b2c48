#include "rbop/problem.hpp"

namespace rbop {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

Rat parse_rat(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (auto r = Rat::parse(j.get<std::string>())) return *r;
    fail(path, "not a rational \"p/q\" string");
  }
  if (j.is_number_integer()) return Rat(j.get<long>());
  fail(path, "expected a rational string or integer");
}

Index parse_index(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long>() < 0) fail(path, "expected a nonnegative integer");
  return static_cast<Index>(j.get<long>());
}

Vec parse_vec(const json& j, Index len, const std::string& path) {
  if (!j.is_array() || static_cast<Index>(j.size()) != len)
    fail(path, "expected an array of length " + std::to_string(len));
  Vec out(len);
  for (Index i = 0; i < len; ++i) out(i) = parse_rat(j[static_cast<size_t>(i)], path + "[" + std::to_string(i) + "]");
  return out;
}

Mat parse_mat(const json& j, Index rows, Index cols, const std::string& path) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    fail(path, "expected " + std::to_string(rows) + " rows");
  Mat out(rows, cols);
  for (Index r = 0; r < rows; ++r)
    out.row(r) = parse_vec(j[static_cast<size_t>(r)], cols, path + "[" + std::to_string(r) + "]").transpose();
  return out;
}

Tensor3 parse_tensor3(const json& j, Index d0, Index d1, Index d2, const std::string& path) {
  if (!j.is_array() || static_cast<Index>(j.size()) != d0)
    fail(path, "expected " + std::to_string(d0) + " outer entries");
  Tensor3 out(d0, d1, d2);
  for (Index i = 0; i < d0; ++i) {
    const json& ji = j[static_cast<size_t>(i)];
    const std::string pi = path + "[" + std::to_string(i) + "]";
    if (!ji.is_array() || static_cast<Index>(ji.size()) != d1) fail(pi, "expected " + std::to_string(d1) + " entries");
    for (Index k = 0; k < d1; ++k) {
      const Vec row = parse_vec(ji[static_cast<size_t>(k)], d2, pi + "[" + std::to_string(k) + "]");
      for (Index l = 0; l < d2; ++l) out(i, k, l) = row(l);
    }
  }
  return out;
}

json rat_to_json(const Rat& r) { return r.str(); }

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rat_to_json(v(i)));
  return out;
}

json mat_to_json(const Mat& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.row(r).transpose()));
  return out;
}

json tensor3_to_json(const Tensor3& t) {
  json out = json::array();
  for (Index i = 0; i < t.n0; ++i) {
    json ji = json::array();
    for (Index j = 0; j < t.n1; ++j) {
      json jj = json::array();
      for (Index k = 0; k < t.n2; ++k) jj.push_back(rat_to_json(t(i, j, k)));
      ji.push_back(jj);
    }
    out.push_back(ji);
  }
  return out;
}

std::vector<std::tuple<Index, Index, Rat>> parse_wedge_entries(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of [i, j, value] triples");
  std::vector<std::tuple<Index, Index, Rat>> out;
  for (size_t t = 0; t < j.size(); ++t) {
    const json& e = j[t];
    const std::string pe = path + "[" + std::to_string(t) + "]";
    if (!e.is_array() || e.size() != 3) fail(pe, "expected [i, j, value]");
    out.push_back({parse_index(e[0], pe + "[0]"), parse_index(e[1], pe + "[1]"), parse_rat(e[2], pe + "[2]")});
  }
  return out;
}

}  // namespace

ProblemFile parse_problem(const json& j) {
  if (!j.is_object()) throw ParseError("top level: expected an object");
  if (!j.contains("algebra")) throw ParseError("algebra: missing section");
  const json& ja = j.at("algebra");
  if (!ja.contains("dim")) throw ParseError("algebra.dim: missing");
  const Index dim = parse_index(ja.at("dim"), "algebra.dim");
  if (!ja.contains("mu")) throw ParseError("algebra.mu: missing");
  Tensor3 mu = parse_tensor3(ja.at("mu"), dim, dim, dim, "algebra.mu");
  std::vector<std::string> labels;
  if (ja.contains("labels")) {
    for (const auto& l : ja.at("labels")) labels.push_back(l.get<std::string>());
  }

  ProblemFile p(Algebra(dim, std::move(mu), std::move(labels)));
  if (j.contains("format_version")) p.format_version = j.at("format_version").get<int>();
  if (p.format_version != 1) throw ParseError("format_version: unsupported");

  std::optional<Index> module_dim;
  if (j.contains("bimodule")) {
    const json& jb = j.at("bimodule");
    BimoduleSpec spec;
    const std::string kind = jb.value("kind", "adjoint");
    if (kind == "adjoint")
      spec.kind = BimoduleSpec::Kind::adjoint;
    else if (kind == "coadjoint")
      spec.kind = BimoduleSpec::Kind::coadjoint;
    else if (kind == "left")
      spec.kind = BimoduleSpec::Kind::left;
    else if (kind == "right")
      spec.kind = BimoduleSpec::Kind::right;
    else if (kind == "explicit") {
      spec.kind = BimoduleSpec::Kind::explicit_tensors;
      if (!jb.contains("dim")) throw ParseError("bimodule.dim: missing for explicit bimodule");
      spec.dim = parse_index(jb.at("dim"), "bimodule.dim");
      spec.left = parse_tensor3(jb.at("left"), dim, spec.dim, spec.dim, "bimodule.left");
      spec.right = parse_tensor3(jb.at("right"), spec.dim, dim, spec.dim, "bimodule.right");
    } else
      throw ParseError("bimodule.kind: unknown kind \"" + kind + "\"");
    module_dim = (spec.kind == BimoduleSpec::Kind::explicit_tensors) ? spec.dim : dim;
    p.bimodule = std::move(spec);
  }

  const Index mdim = module_dim.value_or(dim);
  if (j.contains("operator"))
    p.op = parse_mat(j.at("operator").at("matrix"), dim, mdim, "operator.matrix");
  if (j.contains("deformation")) {
    DeformationSpec d;
    for (size_t i = 0; i < j.at("deformation").at("terms").size(); ++i)
      d.terms.push_back(parse_mat(j.at("deformation").at("terms")[i], dim, mdim,
                                  "deformation.terms[" + std::to_string(i) + "]"));
    p.deformation = std::move(d);
  }
  if (j.contains("second_deformation")) {
    DeformationSpec d;
    for (size_t i = 0; i < j.at("second_deformation").at("terms").size(); ++i)
      d.terms.push_back(parse_mat(j.at("second_deformation").at("terms")[i], dim, mdim,
                                  "second_deformation.terms[" + std::to_string(i) + "]"));
    p.second_deformation = std::move(d);
  }
  if (j.contains("rmatrix")) p.rmatrix = parse_wedge_entries(j.at("rmatrix").at("entries"), "rmatrix.entries");
  if (j.contains("second_rmatrix"))
    p.second_rmatrix = parse_wedge_entries(j.at("second_rmatrix").at("entries"), "second_rmatrix.entries");
  if (j.contains("morphism")) {
    MorphismSpec m;
    m.phi = parse_mat(j.at("morphism").at("phi"), dim, dim, "morphism.phi");
    m.psi = parse_mat(j.at("morphism").at("psi"), mdim, mdim, "morphism.psi");
    p.morphism = std::move(m);
  }
  if (j.contains("equivalence")) {
    EquivalenceSpec e;
    e.element = parse_vec(j.at("equivalence").at("element"), dim, "equivalence.element");
    if (j.at("equivalence").contains("phi_tail"))
      for (size_t i = 0; i < j.at("equivalence").at("phi_tail").size(); ++i)
        e.phi_tail.push_back(parse_mat(j.at("equivalence").at("phi_tail")[i], dim, dim,
                                       "equivalence.phi_tail[" + std::to_string(i) + "]"));
    if (j.at("equivalence").contains("psi_tail"))
      for (size_t i = 0; i < j.at("equivalence").at("psi_tail").size(); ++i)
        e.psi_tail.push_back(parse_mat(j.at("equivalence").at("psi_tail")[i], mdim, mdim,
                                       "equivalence.psi_tail[" + std::to_string(i) + "]"));
    p.equivalence = std::move(e);
  }
  if (j.contains("task")) {
    const json& jt = j.at("task");
    if (jt.contains("degree_cap")) p.task.degree_cap = parse_index(jt.at("degree_cap"), "task.degree_cap");
    if (jt.contains("nijenhuis_candidates")) {
      for (const auto& [name, jv] : jt.at("nijenhuis_candidates").items())
        p.task.nijenhuis_candidates.push_back({name, parse_vec(jv, dim, "task.nijenhuis_candidates." + name)});
    }
  }
  return p;
}

json to_json(const ProblemFile& p) {
  json j;
  j["format_version"] = p.format_version;
  j["algebra"]["dim"] = p.algebra.dim();
  j["algebra"]["mu"] = tensor3_to_json(p.algebra.structure());
  if (!p.algebra.labels().empty()) j["algebra"]["labels"] = p.algebra.labels();
  if (p.bimodule) {
    switch (p.bimodule->kind) {
      case BimoduleSpec::Kind::adjoint:
        j["bimodule"]["kind"] = "adjoint";
        break;
      case BimoduleSpec::Kind::coadjoint:
        j["bimodule"]["kind"] = "coadjoint";
        break;
      case BimoduleSpec::Kind::left:
        j["bimodule"]["kind"] = "left";
        break;
      case BimoduleSpec::Kind::right:
        j["bimodule"]["kind"] = "right";
        break;
      case BimoduleSpec::Kind::explicit_tensors:
        j["bimodule"]["kind"] = "explicit";
        j["bimodule"]["dim"] = p.bimodule->dim;
        j["bimodule"]["left"] = tensor3_to_json(p.bimodule->left);
        j["bimodule"]["right"] = tensor3_to_json(p.bimodule->right);
        break;
    }
  }
  if (p.op) j["operator"]["matrix"] = mat_to_json(*p.op);
  if (p.deformation) {
    j["deformation"]["terms"] = json::array();
    for (const Mat& t : p.deformation->terms) j["deformation"]["terms"].push_back(mat_to_json(t));
  }
  if (p.second_deformation) {
    j["second_deformation"]["terms"] = json::array();
    for (const Mat& t : p.second_deformation->terms) j["second_deformation"]["terms"].push_back(mat_to_json(t));
  }
  if (p.rmatrix) {
    j["rmatrix"]["entries"] = json::array();
    for (const auto& [a, b, c] : *p.rmatrix) j["rmatrix"]["entries"].push_back({a, b, rat_to_json(c)});
  }
  if (p.second_rmatrix) {
    j["second_rmatrix"]["entries"] = json::array();
    for (const auto& [a, b, c] : *p.second_rmatrix) j["second_rmatrix"]["entries"].push_back({a, b, rat_to_json(c)});
  }
  if (p.morphism) {
    j["morphism"]["phi"] = mat_to_json(p.morphism->phi);
    j["morphism"]["psi"] = mat_to_json(p.morphism->psi);
  }
  if (p.equivalence) {
    j["equivalence"]["element"] = vec_to_json(p.equivalence->element);
    if (!p.equivalence->phi_tail.empty()) {
      j["equivalence"]["phi_tail"] = json::array();
      for (const Mat& t : p.equivalence->phi_tail) j["equivalence"]["phi_tail"].push_back(mat_to_json(t));
    }
    if (!p.equivalence->psi_tail.empty()) {
      j["equivalence"]["psi_tail"] = json::array();
      for (const Mat& t : p.equivalence->psi_tail) j["equivalence"]["psi_tail"].push_back(mat_to_json(t));
    }
  }
  j["task"]["degree_cap"] = p.task.degree_cap;
  if (!p.task.nijenhuis_candidates.empty()) {
    for (const auto& [name, v] : p.task.nijenhuis_candidates)
      j["task"]["nijenhuis_candidates"][name] = vec_to_json(v);
  }
  return j;
}

Bimodule realize_bimodule(const Algebra& alg, const std::optional<BimoduleSpec>& spec) {
  if (!spec) return adjoint_bimodule(alg);
  switch (spec->kind) {
    case BimoduleSpec::Kind::adjoint:
      return adjoint_bimodule(alg);
    case BimoduleSpec::Kind::coadjoint:
      return coadjoint_bimodule(alg);
    case BimoduleSpec::Kind::left:
      return one_sided_bimodule(alg, Side::left);
    case BimoduleSpec::Kind::right:
      return one_sided_bimodule(alg, Side::right);
    case BimoduleSpec::Kind::explicit_tensors:
      return Bimodule(alg, spec->dim, spec->left, spec->right);
  }
  throw std::logic_error("realize_bimodule: unreachable");
}

namespace {

Algebra make_poly3() {
  Tensor3 mu(3, 3, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      if (i + j < 3) mu(i, j, i + j) = Rat(1);
  return Algebra(3, std::move(mu), {"1", "x", "x^2"});
}

Algebra make_dual2() {
  Tensor3 mu(2, 2, 2);
  mu(0, 0, 0) = Rat(1);
  mu(0, 1, 1) = Rat(1);
  mu(1, 0, 1) = Rat(1);
  return Algebra(2, std::move(mu), {"1", "x"});
}

Algebra make_abelian2() { return Algebra(2, Tensor3(2, 2, 2), {"a", "b"}); }

Algebra make_ut2() {
  Tensor3 mu(3, 3, 3);
  mu(0, 0, 0) = Rat(1);  // E11 E11 = E11
  mu(0, 1, 1) = Rat(1);  // E11 E12 = E12
  mu(1, 2, 1) = Rat(1);  // E12 E22 = E12
  mu(2, 2, 2) = Rat(1);  // E22 E22 = E22
  return Algebra(3, std::move(mu), {"E11", "E12", "E22"});
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"poly3_R", "poly3_D",         "dual2",
                                                 "abelian2", "ut2", "proj2_averaging"};
  return names;
}

ProblemFile fixture(const std::string& name) {
  if (name == "poly3_R") {
    ProblemFile p(make_poly3());
    BimoduleSpec adjoint_spec;
    adjoint_spec.kind = BimoduleSpec::Kind::adjoint;
    p.bimodule = adjoint_spec;
    Mat R = Mat::Zero(3, 3);
    R(1, 0) = Rat(1);
    R(2, 1) = Rat(1, 2);
    p.op = R;
    return p;
  }
  if (name == "poly3_D") {
    ProblemFile p(make_poly3());
    BimoduleSpec adjoint_spec;
    adjoint_spec.kind = BimoduleSpec::Kind::adjoint;
    p.bimodule = adjoint_spec;
    Mat D = Mat::Zero(3, 3);
    D(0, 1) = Rat(1);
    D(1, 2) = Rat(2);
    p.op = D;
    return p;
  }
  if (name == "dual2") return ProblemFile(make_dual2());
  if (name == "abelian2") return ProblemFile(make_abelian2());
  if (name == "ut2") return ProblemFile(make_ut2());
  if (name == "proj2_averaging") {
    ProblemFile p(make_dual2());
    BimoduleSpec left_spec;
    left_spec.kind = BimoduleSpec::Kind::left;
    p.bimodule = left_spec;
    Mat P = Mat::Zero(2, 2);
    P(0, 0) = Rat(1);
    p.op = P;
    return p;
  }
  throw ParseError("unknown fixture \"" + name + "\"");
}

}  // namespace rbop
