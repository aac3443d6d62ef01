#include "optagg/ilp_model.h"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "optagg/errors.h"

namespace optagg {
namespace {

std::string ArcSuffix(const Arc& e) {
  return "_e" + std::to_string(e.tail.value) + "_" + std::to_string(e.head.value);
}

bool Holds(const Rational& lhs, Relation relation, const Rational& rhs) {
  switch (relation) {
    case Relation::kLessEqual:
      return lhs <= rhs;
    case Relation::kEqual:
      return lhs == rhs;
    case Relation::kGreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

// Collects terms for one row, merging repeated variables.
class RowBuilder {
 public:
  RowBuilder(std::string name, int equation) : name_(std::move(name)), equation_(equation) {}

  RowBuilder& add(const Rational& coefficient, std::size_t var) {
    coefficients_[var] += coefficient;
    return *this;
  }

  // Rows whose terms cancel out are dropped when trivially satisfied.
  void finish(Relation relation, const Rational& rhs, std::vector<LinearConstraint>* rows) {
    LinearConstraint row{std::move(name_), equation_, {}, relation, rhs};
    for (const auto& [var, c] : coefficients_) {
      if (c != Rational(0)) row.terms.push_back({c, var});
    }
    if (row.terms.empty()) {
      if (!Holds(0, relation, rhs)) {
        throw ContractError("row " + row.name + " is infeasible by construction");
      }
      return;
    }
    rows->push_back(std::move(row));
  }

 private:
  std::string name_;
  int equation_;
  std::map<std::size_t, Rational> coefficients_;
};

std::string D(std::size_t d) { return "_d" + std::to_string(d); }
std::string V(NodeId v) { return "_v" + std::to_string(v.value); }

}  // namespace

std::string variable_name(const VarRef& var) {
  switch (var.kind) {
    case VarKind::kX:
      return "x" + D(var.demand) + ArcSuffix(*var.arc);
    case VarKind::kZ:
      return "z" + D(var.demand) + V(*var.node) + ArcSuffix(*var.arc);
    case VarKind::kTheta:
      return "t" + D(var.demand) + V(*var.node);
    case VarKind::kF:
      return "f" + D(var.demand) + D(*var.partner);
  }
  return {};
}

const char* relation_symbol(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

std::optional<std::size_t> IlpModel::find(const VarRef& var) const {
  auto it = index_.find(var);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IlpModel::count(VarKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      variables_.begin(), variables_.end(), [kind](const VarRef& v) { return v.kind == kind; }));
}

IlpModel IlpModel::without_equation(int equation) const {
  IlpModel copy = *this;
  std::erase_if(copy.constraints_,
                [equation](const LinearConstraint& c) { return c.equation == equation; });
  return copy;
}

std::size_t IlpModel::add_variable(const VarRef& var) {
  std::size_t index = variables_.size();
  variables_.push_back(var);
  index_.emplace(var, index);
  return index;
}

IlpModel build_ilp(const Topology& topology, const DemandSet& demands) {
  if (demands.empty()) {
    throw ParameterError("cannot build a model without demands");
  }
  IlpModel m;
  const auto nodes = topology.nodes();
  const auto arcs = topology.arcs();
  const std::size_t n_dem = demands.size();

  for (std::size_t d = 0; d < n_dem; ++d) {
    for (const Arc& e : arcs) m.add_variable(VarRef::X(d, e));
  }
  for (std::size_t d = 0; d < n_dem; ++d) {
    for (NodeId v : nodes) {
      for (const Arc& e : arcs) m.add_variable(VarRef::Z(d, v, e));
    }
  }
  for (std::size_t d = 0; d < n_dem; ++d) {
    for (NodeId v : nodes) m.add_variable(VarRef::Theta(d, v));
  }
  for (std::size_t d1 = 0; d1 < n_dem; ++d1) {
    for (std::size_t d2 = 0; d2 < n_dem; ++d2) {
      if (d1 != d2) m.add_variable(VarRef::F(d1, d2));
    }
  }

  auto x = [&](std::size_t d, const Arc& e) { return *m.find(VarRef::X(d, e)); };
  auto z = [&](std::size_t d, NodeId v, const Arc& e) { return *m.find(VarRef::Z(d, v, e)); };
  auto theta = [&](std::size_t d, NodeId v) { return *m.find(VarRef::Theta(d, v)); };
  auto f = [&](std::size_t d1, std::size_t d2) { return *m.find(VarRef::F(d1, d2)); };
  auto& rows = m.constraints_;

  for (std::size_t i = 0; i < m.variables_.size(); ++i) {
    if (m.variables_[i].kind == VarKind::kX) m.objective_.push_back({1, i});
    if (m.variables_[i].kind == VarKind::kZ) m.objective_.push_back({Rational(-1, 2), i});
  }

  // eq2: flow conservation of each demand's route.
  for (const Demand& dem : demands.demands()) {
    for (NodeId v : nodes) {
      RowBuilder row("eq2" + D(dem.id) + V(v), 2);
      for (const Arc& e : arcs) {
        if (e.tail == v) row.add(1, x(dem.id, e));
        if (e.head == v) row.add(-1, x(dem.id, e));
      }
      int rhs = v == dem.source ? 1 : v == dem.dest ? -1 : 0;
      row.finish(Relation::kEqual, rhs, &rows);
    }
  }

  // eq3: at most one aggregation node, never the destination.
  for (const Demand& dem : demands.demands()) {
    RowBuilder sum("eq3" + D(dem.id) + "_sum", 3);
    for (NodeId v : nodes) sum.add(1, theta(dem.id, v));
    sum.finish(Relation::kLessEqual, 1, &rows);
    RowBuilder dest("eq3" + D(dem.id) + "_dest", 3);
    dest.add(1, theta(dem.id, dem.dest));
    dest.finish(Relation::kEqual, 0, &rows);
  }

  // eq4: at most one partner.
  for (std::size_t d1 = 0; d1 < n_dem; ++d1) {
    RowBuilder row("eq4" + D(d1), 4);
    for (std::size_t d2 = 0; d2 < n_dem; ++d2) {
      if (d2 != d1) row.add(1, f(d1, d2));
    }
    row.finish(Relation::kLessEqual, 1, &rows);
  }

  // eq5: no partner with a different destination.
  for (std::size_t d1 = 0; d1 < n_dem; ++d1) {
    RowBuilder row("eq5" + D(d1), 5);
    for (std::size_t d2 = 0; d2 < n_dem; ++d2) {
      if (d2 != d1 && demands[d2].dest != demands[d1].dest) row.add(1, f(d2, d1));
    }
    row.finish(Relation::kEqual, 0, &rows);
  }

  // eq6: pairing is symmetric.
  for (std::size_t d1 = 0; d1 < n_dem; ++d1) {
    for (std::size_t d2 = 0; d2 < n_dem; ++d2) {
      if (d1 == d2) continue;
      RowBuilder row("eq6" + D(d1) + D(d2), 6);
      row.add(1, f(d1, d2)).add(-1, f(d2, d1));
      row.finish(Relation::kEqual, 0, &rows);
    }
  }

  // eq7: aggregated links only for paired demands.
  for (std::size_t d1 = 0; d1 < n_dem; ++d1) {
    for (const Arc& e : arcs) {
      RowBuilder row("eq7" + D(d1) + ArcSuffix(e), 7);
      for (NodeId v : nodes) row.add(1, z(d1, v, e));
      for (std::size_t d2 = 0; d2 < n_dem; ++d2) {
        if (d2 != d1) row.add(-1, f(d1, d2));
      }
      row.finish(Relation::kLessEqual, 0, &rows);
    }
  }

  // eq8: paired iff aggregated somewhere.
  for (std::size_t d1 = 0; d1 < n_dem; ++d1) {
    RowBuilder row("eq8" + D(d1), 8);
    for (std::size_t d2 = 0; d2 < n_dem; ++d2) {
      if (d2 != d1) row.add(1, f(d1, d2));
    }
    for (NodeId v : nodes) row.add(-1, theta(d1, v));
    row.finish(Relation::kEqual, 0, &rows);
  }

  // eq9, eq10: partners aggregate at the same node.
  for (int equation : {9, 10}) {
    const int sign = equation == 9 ? 1 : -1;
    for (std::size_t d1 = 0; d1 < n_dem; ++d1) {
      for (std::size_t d2 = 0; d2 < n_dem; ++d2) {
        if (d1 == d2) continue;
        for (NodeId v : nodes) {
          RowBuilder row("eq" + std::to_string(equation) + D(d1) + D(d2) + V(v), equation);
          row.add(sign, theta(d1, v)).add(-sign, theta(d2, v)).add(1, f(d1, d2));
          row.finish(Relation::kLessEqual, 1, &rows);
        }
      }
    }
  }

  // eq11: aggregated links lie on the demand's route.
  for (std::size_t d = 0; d < n_dem; ++d) {
    for (NodeId v : nodes) {
      for (const Arc& e : arcs) {
        RowBuilder row("eq11" + D(d) + V(v) + ArcSuffix(e), 11);
        row.add(1, z(d, v, e)).add(-1, x(d, e));
        row.finish(Relation::kLessEqual, 0, &rows);
      }
    }
  }

  // eq12: aggregated flow runs from the aggregation node to the destination.
  for (const Demand& dem : demands.demands()) {
    for (NodeId v : nodes) {
      for (NodeId i : nodes) {
        RowBuilder row("eq12" + D(dem.id) + V(v) + "_i" + std::to_string(i.value), 12);
        for (const Arc& e : arcs) {
          if (e.tail == i) row.add(1, z(dem.id, v, e));
          if (e.head == i) row.add(-1, z(dem.id, v, e));
        }
        // Cases are taken in order, so i == v == dest reads +theta.
        int theta_coefficient = i == v ? 1 : i == dem.dest ? -1 : 0;
        if (theta_coefficient != 0) row.add(-theta_coefficient, theta(dem.id, v));
        row.finish(Relation::kEqual, 0, &rows);
      }
    }
  }
  return m;
}

std::optional<bool> Assignment::get(const VarRef& var) const {
  auto it = values_.find(var);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Assignment Assignment::Zeros(const IlpModel& model) {
  Assignment a;
  for (const VarRef& v : model.variables()) a.values_.emplace(v, false);
  return a;
}

std::ostream& operator<<(std::ostream& os, const Violation& v) {
  return os << v.name << ": " << format_decimal(v.lhs) << ' ' << relation_symbol(v.relation)
            << ' ' << format_decimal(v.rhs);
}

namespace {

std::vector<std::uint8_t> DenseValues(const IlpModel& model, const Assignment& assignment) {
  std::vector<std::uint8_t> values(model.variables().size(), 0);
  std::vector<std::uint8_t> seen(values.size(), 0);
  std::vector<std::string> unknown;
  for (const auto& [var, value] : assignment.values()) {
    auto index = model.find(var);
    if (!index) {
      unknown.push_back(variable_name(var));
      continue;
    }
    values[*index] = value ? 1 : 0;
    seen[*index] = 1;
  }
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) missing.push_back(variable_name(model.variable(i)));
  }
  if (missing.empty() && unknown.empty()) return values;

  std::ostringstream msg;
  auto list = [&msg](const char* what, const std::vector<std::string>& names) {
    msg << names.size() << ' ' << what << ':';
    for (std::size_t i = 0; i < names.size() && i < 20; ++i) msg << ' ' << names[i];
    if (names.size() > 20) msg << " ...";
    msg << "; ";
  };
  if (!missing.empty()) list("missing variables", missing);
  if (!unknown.empty()) list("variables not in the model", unknown);
  throw InputError("assignment does not match the model: " + msg.str());
}

}  // namespace

std::vector<Violation> validate_assignment(const IlpModel& model, const Assignment& assignment) {
  const std::vector<std::uint8_t> values = DenseValues(model, assignment);
  std::vector<Violation> violations;
  for (const LinearConstraint& row : model.constraints()) {
    Rational lhs = 0;
    for (const Term& t : row.terms) {
      if (values[t.var]) lhs += t.coefficient;
    }
    if (!Holds(lhs, row.relation, row.rhs)) {
      violations.push_back({row.name, row.equation, lhs, row.relation, row.rhs});
    }
  }
  return violations;
}

Rational objective_value(const IlpModel& model, const Assignment& assignment) {
  const std::vector<std::uint8_t> values = DenseValues(model, assignment);
  Rational total = 0;
  for (const Term& t : model.objective()) {
    if (values[t.var]) total += t.coefficient;
  }
  return total;
}

}  // namespace optagg
