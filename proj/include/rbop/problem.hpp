#pragma once

#include "rbop/algebra.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace rbop {

/// Input error with the JSON path of the offending field.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct BimoduleSpec {
  enum class Kind { adjoint, coadjoint, left, right, explicit_tensors };
  Kind kind = Kind::adjoint;
  Index dim = 0;       // explicit only
  Tensor3 left, right;  // explicit only
};

struct DeformationSpec {
  std::vector<Mat> terms;  // T_1 .. T_n
};

struct MorphismSpec {
  Mat phi, psi;
};

struct EquivalenceSpec {
  Vec element;
  std::vector<Mat> phi_tail, psi_tail;  // coefficients from t^2 on
};

struct TaskSpec {
  Index degree_cap = 3;
  std::vector<std::pair<std::string, Vec>> nijenhuis_candidates;
};

struct ProblemFile {
  explicit ProblemFile(Algebra alg) : algebra(std::move(alg)) {}

  int format_version = 1;
  Algebra algebra;
  std::optional<BimoduleSpec> bimodule;
  std::optional<Mat> op;
  std::optional<DeformationSpec> deformation;
  std::optional<DeformationSpec> second_deformation;
  std::optional<std::vector<std::tuple<Index, Index, Rat>>> rmatrix;
  std::optional<std::vector<std::tuple<Index, Index, Rat>>> second_rmatrix;
  std::optional<MorphismSpec> morphism;
  std::optional<EquivalenceSpec> equivalence;
  TaskSpec task;
};

ProblemFile parse_problem(const nlohmann::json& j);
nlohmann::json to_json(const ProblemFile& p);

/// The bimodule a problem file describes (defaults to adjoint).
Bimodule realize_bimodule(const Algebra& alg, const std::optional<BimoduleSpec>& spec);

const std::vector<std::string>& fixture_names();
ProblemFile fixture(const std::string& name);

}  // namespace rbop
