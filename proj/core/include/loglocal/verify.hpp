#pragma once

#include <string>
#include <vector>

#include "loglocal/givental.hpp"
#include "loglocal/toric.hpp"
#include "loglocal/tropical.hpp"

namespace loglocal {

/* Per-degree comparison record. Every field is exact; every flag is an
   exact-equality result with no tolerances. For degenerate degrees (some
   tangency zero) the tropical counts are the vanishing values of the theory
   and the pipelines are compared on the local side only. */
struct DegreeReport {
  std::vector<Int> d;
  std::vector<Int> tangencies;
  Int n_factor;  // the conversion factor N_d

  Rat rp_closed, rp_tropical;
  Rat rq_closed, rq_tropical;
  Rat p_closed, p_series;
  Rat q_closed, q_series;

  bool correspondence_p = false;  // N_d * p == Rp
  bool correspondence_q = false;  // N_d * q == Rq
  bool pipelines_agree = false;   // tropical == closed and series == closed

  bool ok() const { return correspondence_p && correspondence_q && pipelines_agree; }
};

DegreeReport verify_degree(const NefToricProduct& x, const CurveClass& d);

// Reports for all 0 < d <= dmax in lexicographic order.
std::vector<DegreeReport> sweep(const NefToricProduct& x,
                                const std::vector<Int>& dmax);

int count_failures(const std::vector<DegreeReport>& reports);

// Table serialization shared with the command line tool. Byte-deterministic:
// ordered keys, canonical "num/den" rationals, ";"-joined vectors in CSV.
enum class TableKind { Log, Local, Verify };

std::string table_to_csv(TableKind kind, const std::vector<DegreeReport>& reports);
std::string table_to_json(TableKind kind, const std::vector<DegreeReport>& reports,
                          const std::vector<Int>& dmax, int indent = 2);

}  // namespace loglocal
