#include "lsa/trace.hpp"

#include <fstream>
#include <ostream>

#include "lsa/energy_io.hpp"
#include "lsa/errors.hpp"

namespace lsa {

void write_trace_csv(std::ostream& out, const SolverTrace& trace)
{
  out << "iter,lambda,energy,predicted,actual,accepted,wall_ms\n";
  for (const TraceRow& r : trace.rows) {
    out << r.iter << ',' << format_real(r.lambda) << ',' << format_real(r.energy) << ','
        << format_real(r.predicted) << ',' << format_real(r.actual) << ','
        << (r.accepted ? 1 : 0) << ',' << format_real(r.wall_ms) << '\n';
  }
}

void write_trace_csv_file(const std::string& path, const SolverTrace& trace)
{
  std::ofstream out(path);
  if (!out)
    throw io_error("cannot open trace file: " + path);
  write_trace_csv(out, trace);
  out.flush();
  if (!out)
    throw io_error("write failed: " + path);
}

}
