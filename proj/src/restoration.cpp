#include "tnn_cells/restoration.hpp"

#include <sstream>

namespace tnn {

bool is_active_step(StepIndex r, int m, int p) {
  if (r.j < 1 || r.j > m || r.beta < 1 || r.beta > p) return false;
  return !(r.j == 1 && r.beta == 1);
}

std::vector<StepIndex> active_steps(int m, int p) {
  if (m < 1 || p < 1) throw std::invalid_argument("m and p must be positive");
  std::vector<StepIndex> out;
  for (int j = 1; j <= m; ++j)
    for (int b = 1; b <= p; ++b)
      if (!(j == 1 && b == 1)) out.push_back({j, b});
  return out;
}

std::vector<StepIndex> trace_steps(int m, int p) {
  std::vector<StepIndex> out = active_steps(m, p);
  out.push_back({m, p + 1});
  return out;
}

StepIndex successor(StepIndex r, int m, int p) {
  if (!is_active_step(r, m, p)) throw std::invalid_argument("step " + r.str() + " has no successor");
  if (r.beta < p) return {r.j, r.beta + 1};
  if (r.j < m) return {r.j + 1, 1};
  return {m, p + 1};
}

std::string trace_to_string(const MatrixTrace<Rational>& trace) {
  std::ostringstream os;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    os << trace.steps()[k].str() << "\n" << to_string(trace.by_position(k));
    if (k + 1 < trace.size()) os << "\n";
  }
  return os.str();
}

}  // namespace tnn
