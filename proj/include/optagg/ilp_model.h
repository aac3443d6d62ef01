#ifndef OPTAGG_ILP_MODEL_H_
#define OPTAGG_ILP_MODEL_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "optagg/rational.h"
#include "optagg/topology.h"
#include "optagg/traffic.h"

namespace optagg {

// Binary variable families of the aggregation-aware routing model:
//   kX      demand routes over arc
//   kZ      demand, aggregated at node, carries its merged lightpath on arc
//   kTheta  demand is aggregated at node
//   kF      demand is aggregated with partner
enum class VarKind { kX, kZ, kTheta, kF };

struct VarRef {
  VarKind kind = VarKind::kX;
  std::size_t demand = 0;
  std::optional<Arc> arc;
  std::optional<NodeId> node;
  std::optional<std::size_t> partner;

  static VarRef X(std::size_t d, Arc e) { return {VarKind::kX, d, e, std::nullopt, std::nullopt}; }
  static VarRef Z(std::size_t d, NodeId v, Arc e) { return {VarKind::kZ, d, e, v, std::nullopt}; }
  static VarRef Theta(std::size_t d, NodeId v) {
    return {VarKind::kTheta, d, std::nullopt, v, std::nullopt};
  }
  static VarRef F(std::size_t d1, std::size_t d2) {
    return {VarKind::kF, d1, std::nullopt, std::nullopt, d2};
  }

  friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

// x_d{D}_e{T}_{H}, z_d{D}_v{V}_e{T}_{H}, t_d{D}_v{V}, f_d{D1}_d{D2}.
std::string variable_name(const VarRef& var);

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
const char* relation_symbol(Relation relation);

struct Term {
  Rational coefficient;
  std::size_t var = 0;  // index into IlpModel::variables()
};

struct LinearConstraint {
  std::string name;  // row name, "eq<N>_..."
  int equation = 0;  // 2..12
  std::vector<Term> terms;
  Relation relation = Relation::kEqual;
  Rational rhs;

  std::string tag() const { return "eq" + std::to_string(equation); }
};

// All variables are binary. The objective is +1 on every x and -1/2 on
// every z.
class IlpModel {
 public:
  std::span<const VarRef> variables() const { return variables_; }
  std::span<const LinearConstraint> constraints() const { return constraints_; }
  std::span<const Term> objective() const { return objective_; }

  const VarRef& variable(std::size_t index) const { return variables_.at(index); }
  std::optional<std::size_t> find(const VarRef& var) const;
  std::size_t count(VarKind kind) const;

  // Copy with every row of one equation family removed.
  IlpModel without_equation(int equation) const;

 private:
  friend IlpModel build_ilp(const Topology& topology, const DemandSet& demands);

  std::size_t add_variable(const VarRef& var);

  std::vector<VarRef> variables_;
  std::map<VarRef, std::size_t> index_;
  std::vector<LinearConstraint> constraints_;
  std::vector<Term> objective_;
};

// Expands every constraint family over its quantifiers. Throws
// ParameterError for an empty demand set.
IlpModel build_ilp(const Topology& topology, const DemandSet& demands);

// 0/1 value per variable.
class Assignment {
 public:
  void set(const VarRef& var, bool value) { values_[var] = value; }
  std::optional<bool> get(const VarRef& var) const;
  const std::map<VarRef, bool>& values() const { return values_; }

  // Every model variable set to 0.
  static Assignment Zeros(const IlpModel& model);

 private:
  std::map<VarRef, bool> values_;
};

struct Violation {
  std::string name;
  int equation = 0;
  Rational lhs;
  Relation relation = Relation::kEqual;
  Rational rhs;

  std::string tag() const { return "eq" + std::to_string(equation); }
};

std::ostream& operator<<(std::ostream& os, const Violation& v);

// Every row that does not hold, in model order. Throws InputError when the
// assignment misses model variables or names variables outside the model.
std::vector<Violation> validate_assignment(const IlpModel& model, const Assignment& assignment);

// Sum of x minus half the sum of z, exact.
Rational objective_value(const IlpModel& model, const Assignment& assignment);

}  // namespace optagg

#endif  // OPTAGG_ILP_MODEL_H_
