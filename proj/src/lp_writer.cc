#include "optagg/lp_writer.h"

#include <span>
#include <sstream>

namespace optagg {
namespace {

constexpr std::size_t kTermsPerLine = 8;

void WriteTerms(std::ostream& out, std::span<const Term> terms, const IlpModel& model) {
  std::size_t on_line = 0;
  for (const Term& t : terms) {
    if (on_line == kTermsPerLine) {
      out << "\n   ";
      on_line = 0;
    }
    const bool negative = t.coefficient < 0;
    out << (negative ? " - " : " + ") << format_decimal(negative ? -t.coefficient : t.coefficient)
        << ' ' << variable_name(model.variable(t.var));
    ++on_line;
  }
}

}  // namespace

std::string export_lp(const IlpModel& model) {
  std::ostringstream out;
  out << "\\ aggregation-aware routing model\n";
  out << "\\ " << model.count(VarKind::kX) << " x, " << model.count(VarKind::kZ) << " z, "
      << model.count(VarKind::kTheta) << " theta, " << model.count(VarKind::kF) << " f, "
      << model.constraints().size() << " rows\n";
  out << "Minimize\n obj:";
  WriteTerms(out, model.objective(), model);
  out << "\nSubject To\n";
  for (const LinearConstraint& row : model.constraints()) {
    out << ' ' << row.name << ':';
    WriteTerms(out, row.terms, model);
    out << ' ' << relation_symbol(row.relation) << ' ' << format_decimal(row.rhs) << '\n';
  }
  out << "Binary\n";
  std::size_t on_line = 0;
  for (const VarRef& var : model.variables()) {
    out << ' ' << variable_name(var);
    if (++on_line == kTermsPerLine) {
      out << '\n';
      on_line = 0;
    }
  }
  if (on_line != 0) out << '\n';
  out << "End\n";
  return out.str();
}

}  // namespace optagg
