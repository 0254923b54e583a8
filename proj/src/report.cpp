#include "vsl/report.hpp"

#include <limits>

namespace vsl {

using nlohmann::json;

namespace {

// integers that do not fit in 64 bits are emitted as decimal strings
json num(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(x));
  }
  return json(to_string(x));
}

const char* route_name(PathRoute r) {
  switch (r) {
    case PathRoute::Trivial: return "trivial";
    case PathRoute::Induction: return "induction";
    case PathRoute::ResidueWalk: return "residue_walk";
    case PathRoute::Search: return "search";
  }
  return "?";
}

}  // namespace

json to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) {
    a.push_back(num(x));
  }
  return a;
}

json to_json(const Vass& vass, const Configuration& c) {
  return {{"state", vass.state_name(c.state)}, {"vec", to_json(c.vec)}};
}

json to_json(const Vass& vass, const Run& run) {
  json trans = json::array();
  for (TransitionId t : run.transitions()) {
    trans.push_back(t);
  }
  json configs = json::array();
  for (const Configuration& c : run.configs()) {
    configs.push_back(to_json(vass, c));
  }
  return {{"length", run.length()}, {"transitions", trans}, {"configs", configs}};
}

json to_json(const Vass& vass, const SemilinearConfigSet& set) {
  json comps = json::array();
  for (const Component& c : set.components()) {
    json periods = json::array();
    for (const IntVec& p : c.set.periods()) {
      periods.push_back(to_json(p));
    }
    comps.push_back({{"state", vass.state_name(c.state)},
                     {"base", to_json(c.set.base())},
                     {"periods", periods}});
  }
  return {{"size", num(set.size())}, {"components", comps}};
}

json to_json(const Vass& vass, const ReachVerdict& v) {
  json j = {{"verdict", to_string(v.kind)},
            {"stats", {{"explored", v.stats.explored}, {"dead", v.stats.dead}, {"pruned", v.stats.pruned}}}};
  j["witness"] = v.witness ? to_json(vass, *v.witness) : json(nullptr);
  return j;
}

json to_json(const Vass& vass, const DualVerdict& v) {
  json j = {{"verdict", to_string(v.kind)},
            {"run_levels", v.run_levels},
            {"separator_sizes", v.separator_sizes},
            {"diagnostics", v.diagnostics}};
  j["run"] = v.run ? to_json(vass, *v.run) : json(nullptr);
  j["separator"] = v.separator ? to_json(vass, *v.separator) : json(nullptr);
  return j;
}

json to_json(const Vass& vass, const CheckReport& r) {
  json conds = json::array();
  for (const ConditionReport& c : r.conditions) {
    json e = {{"condition", c.condition},
              {"status", to_string(c.status)},
              {"detail", c.detail},
              {"pruned", c.pruned},
              {"samples", c.samples}};
    if (c.witness_run) {
      e["witness_run"] = to_json(vass, *c.witness_run);
    }
    if (c.witness_config) {
      e["witness_config"] = to_json(vass, *c.witness_config);
    }
    conds.push_back(std::move(e));
  }
  return {{"norm_bound", num(r.norm_bound)}, {"all_hold", r.all_hold()}, {"conditions", conds}};
}

json to_json(const StepPath& path) {
  json pts = json::array();
  for (const IntVec& p : path.points) {
    pts.push_back(to_json(p));
  }
  return {{"route", route_name(path.route)},
          {"length", path.length()},
          {"elimination_order", path.elimination_order},
          {"points", pts}};
}

json envelope(const std::string& command, json body) {
  json j = {{"schema_version", kSchemaVersion}, {"command", command}};
  for (auto& [k, v] : body.items()) {
    j[k] = v;
  }
  return j;
}

}  // namespace vsl
