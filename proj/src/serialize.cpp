#include "toricres/serialize.hpp"

namespace toricres {

Json to_json(LatticeVec v) { return Json::array({v.a, v.b}); }

Json to_json(const std::vector<LatticeVec>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const AffineSemigroup& s) { return to_json(s.gens()); }

Json to_json(const MonomialIdeal& ideal) {
  return Json{{"base", to_json(ideal.base())}, {"exps", to_json(ideal.exps())}};
}

Json to_json(const Fan2& fan) {
  return Json{{"ambient", to_json(std::vector<LatticeVec>{fan.ambient.r1(), fan.ambient.r2()})},
              {"rays", to_json(fan.rays)}};
}

namespace {

Json blowup_body(const BlowupResult& result) {
  Json vertices = Json::array();
  for (auto i : result.vertex_indices) vertices.push_back(i + 1);
  Json charts = Json::array();
  for (const auto& c : result.charts) {
    charts.push_back(Json{{"vertex", c.vertex + 1}, {"generators", to_json(c.semigroup)}, {"class", c.cls.tag()}});
  }
  Json gluings = Json::array();
  for (const auto& g : result.gluings) {
    gluings.push_back(Json{{"from", g.from + 1}, {"to", g.to + 1}, {"localizer", to_json(g.localizer)}});
  }
  Json out{{"vertex_indices", vertices}, {"charts", charts}, {"gluings", gluings}};
  out["fan"] = result.fan ? to_json(result.fan->fan) : Json(nullptr);
  return out;
}

Json step_json(const ResolutionTrace& trace, std::size_t index) {
  const StepRecord& step = trace.steps[index];
  Json charts = Json::array();
  for (const auto& c : step.charts) {
    Json entry{{"vertex", c.vertex + 1},
               {"generators", to_json(c.semigroup)},
               {"class", c.cls.tag()},
               {"normalized", c.normalized}};
    entry["step"] = c.child ? step_json(trace, *c.child) : Json(nullptr);
    charts.push_back(std::move(entry));
  }
  Json gluings = Json::array();
  for (const auto& g : step.blowup.gluings) {
    gluings.push_back(Json{{"from", g.from + 1}, {"to", g.to + 1}, {"localizer", to_json(g.localizer)}});
  }
  Json vertices = Json::array();
  for (auto i : step.blowup.vertex_indices) vertices.push_back(i + 1);
  return Json{{"level", step.level},
              {"chart", Json{{"generators", to_json(step.chart)}, {"class", step.cls.tag()}}},
              {"ideal", to_json(step.ideal.exps())},
              {"vertex_indices", vertices},
              {"new_rays", to_json(step.new_rays)},
              {"charts", charts},
              {"gluings", gluings}};
}

}  // namespace

Json to_json(const MonomialIdeal& ideal, const BlowupResult& result) {
  Json out{{"schema", kBlowupSchema}, {"base", to_json(ideal.base())}, {"exps", to_json(ideal.exps())}};
  const Json body = blowup_body(result);
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

Json to_json(const ResolutionTrace& trace) {
  Json out{{"schema", kTraceSchema},
           {"selector", trace.selector},
           {"normalize", trace.normalize},
           {"root", Json{{"generators", to_json(trace.root)}, {"class", trace.root_class.tag()}}},
           {"root_normalized", trace.root_normalized},
           {"terminated", trace.terminated},
           {"depth", trace.depth},
           {"divisor_count", divisor_count(trace)},
           {"new_rays_per_step", trace.new_rays_per_level},
           {"global_fan", to_json(trace.global_fan)}};
  out["steps"] = trace.steps.empty() ? Json(nullptr) : step_json(trace, 0);
  return out;
}

std::vector<LatticeVec> lattice_vecs_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "expected an array of [a,b] pairs");
  std::vector<LatticeVec> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
      throw Error(ErrorKind::Parse, "expected an integer pair, got " + item.dump());
    }
    out.push_back({item[0].get<Int>(), item[1].get<Int>()});
  }
  return out;
}

AffineSemigroup semigroup_from_json(const Json& j) {
  auto gens = lattice_vecs_from_json(j);
  if (gens.empty()) throw Error(ErrorKind::Parse, "semigroup needs at least one generator");
  return AffineSemigroup(std::move(gens));
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("exps")) {
    throw Error(ErrorKind::Parse, "expected {\"base\": [...], \"exps\": [...]}");
  }
  return MonomialIdeal(semigroup_from_json(j["base"]), lattice_vecs_from_json(j["exps"]));
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace toricres
