#include "loglocal/verify.hpp"

#include <sstream>

#include "json.hpp"

namespace loglocal {

DegreeReport verify_degree(const NefToricProduct& x, const CurveClass& d) {
  check_curve_class(x, d);
  DegreeReport r;
  r.d = d.d;
  bool degenerate = false;
  for (int j = 0; j < x.num_divisors(); ++j) {
    r.tangencies.push_back(tangency(x, d, j));
    if (r.tangencies.back() == 0) degenerate = true;
  }
  r.n_factor = sign_factor(x, d);

  LogInvariantPair closed_log = log_invariants(x, d);
  r.rp_closed = closed_log.rp;
  r.rq_closed = closed_log.rq;
  if (degenerate) {
    // no maximally tangent curve exists; the virtual counts vanish
    r.rp_tropical = 0;
    r.rq_tropical = 0;
  } else {
    r.rp_tropical = Rat(multiplicity(build_p_curve(x, d)));
    r.rq_tropical = Rat(multiplicity(build_q_curve(x, d)));
  }

  r.p_closed = p_closed(x, d);
  r.q_closed = q_closed(x, d);
  r.p_series = p_local_series(x, d);
  r.q_series = q_local_series(x, d);

  Rat n(r.n_factor);
  r.correspondence_p = (n * r.p_series == r.rp_tropical);
  r.correspondence_q = (n * r.q_series == r.rq_tropical);
  r.pipelines_agree = (r.rp_tropical == r.rp_closed && r.rq_tropical == r.rq_closed &&
                       r.p_series == r.p_closed && r.q_series == r.q_closed);
  return r;
}

std::vector<DegreeReport> sweep(const NefToricProduct& x,
                                const std::vector<Int>& dmax) {
  std::vector<DegreeReport> out;
  for (const CurveClass& d : degree_box(x, dmax)) out.push_back(verify_degree(x, d));
  return out;
}

int count_failures(const std::vector<DegreeReport>& reports) {
  int n = 0;
  for (const DegreeReport& r : reports)
    if (!r.ok()) ++n;
  return n;
}

namespace {

std::string join_ints(const std::vector<Int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ";";
    os << int_str(v[i]);
  }
  return os.str();
}

nlohmann::ordered_json int_array(const std::vector<Int>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Int& x : v) a.push_back(int_str(x));
  return a;
}

}  // namespace

std::string table_to_csv(TableKind kind, const std::vector<DegreeReport>& reports) {
  std::ostringstream os;
  switch (kind) {
    case TableKind::Log:
      os << "d,e,N,Rp,Rq\n";
      break;
    case TableKind::Local:
      os << "d,e,N,p,q\n";
      break;
    case TableKind::Verify:
      os << "d,e,N,Rp,Rq,p,q,match\n";
      break;
  }
  for (const DegreeReport& r : reports) {
    os << join_ints(r.d) << "," << join_ints(r.tangencies) << ","
       << int_str(r.n_factor);
    switch (kind) {
      case TableKind::Log:
        os << "," << rat_str(r.rp_tropical) << "," << rat_str(r.rq_tropical);
        break;
      case TableKind::Local:
        os << "," << rat_str(r.p_series) << "," << rat_str(r.q_series);
        break;
      case TableKind::Verify:
        os << "," << rat_str(r.rp_tropical) << "," << rat_str(r.rq_tropical) << ","
           << rat_str(r.p_series) << "," << rat_str(r.q_series) << ","
           << (r.ok() ? "true" : "false");
        break;
    }
    os << "\n";
  }
  return os.str();
}

std::string table_to_json(TableKind kind, const std::vector<DegreeReport>& reports,
                          const std::vector<Int>& dmax, int indent) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json out;
  out["schema_version"] = 1;
  switch (kind) {
    case TableKind::Log:
      out["command"] = "log";
      break;
    case TableKind::Local:
      out["command"] = "local";
      break;
    case TableKind::Verify:
      out["command"] = "verify";
      break;
  }
  out["dmax"] = int_array(dmax);
  ordered_json rows = ordered_json::array();
  for (const DegreeReport& r : reports) {
    ordered_json row;
    row["d"] = int_array(r.d);
    row["e"] = int_array(r.tangencies);
    row["N"] = int_str(r.n_factor);
    switch (kind) {
      case TableKind::Log:
        row["Rp"] = rat_str(r.rp_tropical);
        row["Rq"] = rat_str(r.rq_tropical);
        break;
      case TableKind::Local:
        row["p"] = rat_str(r.p_series);
        row["q"] = rat_str(r.q_series);
        break;
      case TableKind::Verify:
        row["Rp"] = rat_str(r.rp_tropical);
        row["Rq"] = rat_str(r.rq_tropical);
        row["p"] = rat_str(r.p_series);
        row["q"] = rat_str(r.q_series);
        row["Np"] = rat_str(Rat(r.n_factor) * r.p_series);
        row["Nq"] = rat_str(Rat(r.n_factor) * r.q_series);
        row["correspondence_p"] = r.correspondence_p;
        row["correspondence_q"] = r.correspondence_q;
        row["pipelines_agree"] = r.pipelines_agree;
        row["match"] = r.ok();
        break;
    }
    rows.push_back(row);
  }
  out["rows"] = rows;
  if (kind == TableKind::Verify) out["mismatches"] = count_failures(reports);
  return out.dump(indent);
}

}  // namespace loglocal
