#ifndef OPTAGG_LP_WRITER_H_
#define OPTAGG_LP_WRITER_H_

#include <string>

#include "optagg/ilp_model.h"

namespace optagg {

// CPLEX-style LP text: Minimize / Subject To / Binary / End. Rows are named
// after their constraint, variables per variable_name(). Output depends only
// on the model.
std::string export_lp(const IlpModel& model);

}  // namespace optagg

#endif  // OPTAGG_LP_WRITER_H_
