#ifndef LSA_TRACE_HPP
#define LSA_TRACE_HPP

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "lsa/energy.hpp"

namespace lsa {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  double ms() const
  {
    return std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start).count();
  }
};

// One solver iteration. energy is E(S_t) at the start of the iteration;
// predicted/actual are the model and true reductions of the step proposed
// there. lambda is 0 and accepted is 1 for solvers without a trust region.
struct TraceRow {
  int iter = 0;
  double lambda = 0.0;
  double energy = 0.0;
  double predicted = 0.0;
  double actual = 0.0;
  bool accepted = false;
  double wall_ms = 0.0;
};

struct SolverTrace {
  std::vector<TraceRow> rows;
  Labeling final_labeling;
  double final_energy = 0.0;
  std::string termination;
  double total_ms = 0.0;
};

// CSV with header iter,lambda,energy,predicted,actual,accepted,wall_ms.
void write_trace_csv(std::ostream& out, const SolverTrace& trace);
void write_trace_csv_file(const std::string& path, const SolverTrace& trace);

}

#endif
