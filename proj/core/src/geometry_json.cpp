#include "loglocal/geometry_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace loglocal {

namespace {

using ordered_json = nlohmann::ordered_json;

Int int_from_json(const ordered_json& v, const std::string& path) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) {
    std::uint64_t u = v.get<std::uint64_t>();
    Int out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    return out;
  }
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw InputError("geometry: " + path + ": not an integer string");
    }
  }
  throw InputError("geometry: " + path + ": expected an integer");
}

NefToricProduct product_from_json(const ordered_json& root) {
  if (!root.is_object()) throw InputError("geometry: top level must be an object");
  if (!root.contains("factors")) throw InputError("geometry: missing \"factors\" array");
  const ordered_json& jfactors = root["factors"];
  if (!jfactors.is_array() || jfactors.empty())
    throw InputError("geometry: factors: expected a nonempty array");

  std::vector<FwpsFactor> factors;
  for (size_t i = 0; i < jfactors.size(); ++i) {
    const std::string fp = "factors[" + std::to_string(i) + "]";
    const ordered_json& jf = jfactors[i];
    if (!jf.is_object()) throw InputError("geometry: " + fp + ": expected an object");
    for (auto it = jf.begin(); it != jf.end(); ++it)
      if (it.key() != "weights" && it.key() != "rays" && it.key() != "group_order")
        throw InputError("geometry: " + fp + "." + it.key() + ": unknown key");

    if (!jf.contains("weights") || !jf["weights"].is_array() || jf["weights"].size() < 2)
      throw InputError("geometry: " + fp +
                       ".weights: expected an array of at least two integers");
    std::vector<Int> weights;
    for (size_t k = 0; k < jf["weights"].size(); ++k) {
      Int w = int_from_json(jf["weights"][k], fp + ".weights[" + std::to_string(k) + "]");
      if (w < 1)
        throw InputError("geometry: " + fp + ".weights[" + std::to_string(k) +
                         "]: must be a positive integer");
      weights.push_back(w);
    }
    const size_t n = weights.size() - 1;

    Int group_order = 1;
    if (jf.contains("group_order"))
      group_order = int_from_json(jf["group_order"], fp + ".group_order");
    if (group_order < 1)
      throw InputError("geometry: " + fp + ".group_order: must be a positive integer");

    if (jf.contains("rays")) {
      const ordered_json& jr = jf["rays"];
      if (!jr.is_array() || jr.size() != weights.size())
        throw InputError("geometry: " + fp + ".rays: expected " +
                         std::to_string(weights.size()) + " ray vectors");
      std::vector<IntVec> rays;
      for (size_t k = 0; k < jr.size(); ++k) {
        const std::string rp = fp + ".rays[" + std::to_string(k) + "]";
        if (!jr[k].is_array() || jr[k].size() != n)
          throw InputError("geometry: " + rp + ": expected an integer vector of length " +
                           std::to_string(n));
        IntVec ray;
        for (size_t c = 0; c < n; ++c)
          ray.push_back(int_from_json(jr[k][c], rp + "[" + std::to_string(c) + "]"));
        rays.push_back(std::move(ray));
      }
      factors.push_back(factor_from_rays(std::move(weights), std::move(rays), group_order));
    } else {
      if (group_order != 1)
        throw InputError("geometry: " + fp +
                         ".group_order: explicit rays are required for fake quotients");
      try {
        factors.push_back(factor_from_weights(weights));
      } catch (const InputError& e) {
        throw InputError("geometry: " + fp + ".weights: " + e.what());
      }
    }
  }
  return NefToricProduct(std::move(factors));
}

ordered_json geometry_json_value(const NefToricProduct& x) {
  ordered_json jfactors = ordered_json::array();
  for (const FwpsFactor& f : x.factors()) {
    ordered_json jf;
    ordered_json jw = ordered_json::array();
    for (const Int& w : f.weights) jw.push_back(int_str(w));
    jf["weights"] = jw;
    ordered_json jr = ordered_json::array();
    for (const IntVec& ray : f.rays) {
      ordered_json jv = ordered_json::array();
      for (const Int& c : ray) jv.push_back(int_str(c));
      jr.push_back(jv);
    }
    jf["rays"] = jr;
    jf["group_order"] = int_str(f.group_order);
    jfactors.push_back(jf);
  }
  ordered_json out;
  out["factors"] = jfactors;
  return out;
}

}  // namespace

NefToricProduct geometry_from_json_text(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("geometry: JSON parse error: ") + e.what());
  }
  return product_from_json(root);
}

NefToricProduct geometry_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("geometry: cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return geometry_from_json_text(buf.str());
}

std::string geometry_to_json(const NefToricProduct& x, int indent) {
  return geometry_json_value(x).dump(indent);
}

std::string describe_geometry_json(const NefToricProduct& x,
                                   const ValidationReport& report, int indent) {
  ordered_json out;
  out["schema_version"] = 1;
  out["command"] = "describe";
  out["geometry"] = geometry_json_value(x);

  ordered_json derived;
  derived["dims"] = x.dims();
  derived["r"] = x.num_factors();
  derived["total_dim"] = x.total_dim();
  derived["num_divisors"] = x.num_divisors();
  ordered_json divs = ordered_json::array();
  for (int j = 0; j < x.num_divisors(); ++j) {
    const Divisor& dv = x.divisor(j);
    ordered_json jd;
    jd["factor"] = dv.factor;
    jd["local"] = dv.local;
    jd["last"] = dv.last;
    jd["weight"] = int_str(dv.weight);
    ordered_json dir = ordered_json::array();
    for (const Int& c : dv.direction) dir.push_back(int_str(c));
    jd["direction"] = dir;
    divs.push_back(jd);
  }
  derived["divisors"] = divs;
  ordered_json qmat = ordered_json::array();
  for (int i = 0; i < x.num_factors(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < x.num_divisors(); ++j) row.push_back(int_str(x.q_entry(i, j)));
    qmat.push_back(row);
  }
  derived["q_matrix"] = qmat;
  ordered_json gdecl = ordered_json::array();
  for (const FwpsFactor& f : x.factors()) gdecl.push_back(int_str(f.group_order));
  derived["group_orders_declared"] = gdecl;
  ordered_json grec = ordered_json::array();
  for (const Rat& g : report.recomputed_group_order) grec.push_back(rat_str(g));
  derived["group_orders_recomputed"] = grec;
  derived["point_constant"] = int_str(x.point_constant());
  out["derived"] = derived;

  ordered_json val;
  val["ok"] = report.ok();
  ordered_json viols = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json jv;
    jv["factor"] = v.factor;
    jv["rule"] = v.rule;
    jv["detail"] = v.detail;
    viols.push_back(jv);
  }
  val["violations"] = viols;
  out["validation"] = val;
  return out.dump(indent);
}

}  // namespace loglocal
