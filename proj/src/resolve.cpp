#include "toricres/resolve.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "toricres/matfact.hpp"

namespace toricres {

std::string IdealSelector::name() const {
  switch (kind) {
    case SelectorKind::AnDerivation: return "an-derivation";
    case SelectorKind::MaximalMonomial: return "maximal-monomial";
    case SelectorKind::Explicit: return "explicit";
  }
  return "unknown";
}

MonomialIdeal select_ideal(const IdealSelector& sel, const AffineSemigroup& chart, const ChartClass& cls,
                           bool at_root) {
  switch (sel.kind) {
    case SelectorKind::AnDerivation: {
      if (cls.kind != ChartClass::Kind::CyclicQuotient || cls.type.q != cls.type.n - 1) {
        throw Error(ErrorKind::SelectorInapplicable,
                    "derivation ideal is only available on A_k charts, got " + cls.tag());
      }
      const Int k = cls.type.n - 1;
      const auto standard = gamma_n(k);
      const auto to_standard = cone_isomorphism(chart.cone(), standard.cone());
      if (!to_standard) {
        throw Error(ErrorKind::InternalMismatch, "no lattice isomorphism from chart to Γ_" + std::to_string(k));
      }
      const Mat2 back = to_standard->inverse();
      std::vector<LatticeVec> exps;
      const MonomialIdeal standard_ideal = derivation_ideal_an(static_cast<unsigned>(k));
      for (auto m : standard_ideal.exps()) exps.push_back(back(m));
      return MonomialIdeal(chart, std::move(exps));
    }
    case SelectorKind::Explicit:
      if (at_root) {
        if (!sel.ideal) throw Error(ErrorKind::InvalidArgument, "explicit selector without an ideal");
        if (!same_semigroup(sel.ideal->base(), chart)) {
          throw Error(ErrorKind::SelectorInapplicable, "explicit ideal lives on a different semigroup");
        }
        return MonomialIdeal(chart, sel.ideal->exps());
      }
      [[fallthrough]];
    case SelectorKind::MaximalMonomial:
      return MonomialIdeal(chart, minimal_generators(chart).gens());
  }
  throw Error(ErrorKind::InvalidArgument, "unknown selector");
}

namespace {

struct Task {
  std::optional<std::size_t> parent_step;
  std::size_t parent_chart = 0;
  AffineSemigroup chart;
  ChartClass cls;
};

struct TaskResult {
  MonomialIdeal ideal;
  BlowupResult blowup;
};

std::vector<TaskResult> run_tasks(const std::vector<Task>& tasks, const IdealSelector& sel, bool at_root,
                                  unsigned threads) {
  std::vector<std::optional<TaskResult>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  auto work = [&](std::size_t i) {
    try {
      MonomialIdeal ideal = select_ideal(sel, tasks[i].chart, tasks[i].cls, at_root);
      BlowupResult b = blowup(ideal);
      results[i].emplace(TaskResult{std::move(ideal), std::move(b)});
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) work(i);
      });
    }
  }
  std::vector<TaskResult> out;
  out.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

void merge_into_fan(Fan2& global, const Fan2& local) {
  auto& rays = global.rays;
  const auto it = std::find(rays.begin(), rays.end(), local.ambient.r1());
  if (it == rays.end() || it + 1 == rays.end() || *(it + 1) != local.ambient.r2()) {
    throw Error(ErrorKind::InternalMismatch,
                "chart cone " + to_string(local.ambient.r1()) + " " + to_string(local.ambient.r2()) +
                    " is not a cone of the global fan");
  }
  rays.insert(it + 1, local.rays.begin() + 1, local.rays.end() - 1);
}

}  // namespace

ResolutionTrace resolve_generic(const AffineSemigroup& s, const IdealSelector& sel, const ResolveOptions& options) {
  const ChartClass root_class = classify(s);
  AffineSemigroup root_chart = s;
  ChartClass chart_class = root_class;
  bool root_normalized = false;
  if (root_class.kind == ChartClass::Kind::NonNormal && options.normalize) {
    root_chart = saturation(s);
    chart_class = classify(root_chart);
    root_normalized = true;
  }
  const Cone2 sigma = dual_cone(s.cone());
  ResolutionTrace trace{s,
                        root_class,
                        root_chart,
                        root_normalized,
                        sel.name(),
                        options.normalize,
                        {},
                        0,
                        false,
                        Fan2{sigma, {sigma.r1(), sigma.r2()}},
                        {}};

  bool stuck = false;  // a non-normal chart was left without normalization
  std::vector<Task> pending;
  if (chart_class.kind == ChartClass::Kind::CyclicQuotient) {
    pending.push_back({std::nullopt, 0, root_chart, chart_class});
  } else if (chart_class.kind == ChartClass::Kind::NonNormal) {
    stuck = true;
  }

  std::size_t level = 1;
  while (!pending.empty() && level <= options.max_steps) {
    auto results = run_tasks(pending, sel, level == 1, options.threads);
    std::vector<Task> next;
    std::size_t level_rays = 0;
    for (std::size_t t = 0; t < pending.size(); ++t) {
      const std::size_t step_index = trace.steps.size();
      if (pending[t].parent_step) trace.steps[*pending[t].parent_step].charts[pending[t].parent_chart].child = step_index;
      auto& r = results[t];
      if (!r.blowup.fan) throw Error(ErrorKind::InternalMismatch, "blow-up of a saturated chart lacks a fan");
      const Fan2& local = r.blowup.fan->fan;
      merge_into_fan(trace.global_fan, local);
      std::vector<LatticeVec> new_rays(local.rays.begin() + 1, local.rays.end() - 1);
      level_rays += new_rays.size();

      std::vector<ChartRecord> charts;
      for (const auto& chart : r.blowup.charts) {
        ChartRecord record{chart.vertex, chart.semigroup, chart.cls, false, std::nullopt};
        AffineSemigroup next_chart = chart.semigroup;
        ChartClass next_class = chart.cls;
        if (chart.cls.kind == ChartClass::Kind::NonNormal) {
          if (options.normalize) {
            record.normalized = true;
            next_chart = saturation(chart.semigroup);
            next_class = classify(next_chart);
          } else {
            stuck = true;
          }
        }
        if (next_class.kind == ChartClass::Kind::CyclicQuotient) {
          next.push_back({step_index, charts.size(), std::move(next_chart), next_class});
        }
        charts.push_back(std::move(record));
      }
      trace.steps.push_back(StepRecord{level, pending[t].chart, pending[t].cls, std::move(r.ideal),
                                       std::move(r.blowup), std::move(charts), std::move(new_rays)});
    }
    trace.new_rays_per_level.push_back(level_rays);
    trace.depth = level;
    pending = std::move(next);
    ++level;
  }
  trace.terminated = pending.empty() && !stuck;
  return trace;
}

ResolutionTrace resolve_an(unsigned n, const ResolveOptions& options) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "resolve_an requires n >= 1");
  ResolveOptions opts = options;
  opts.max_steps = std::max<std::size_t>(opts.max_steps, n + 1);
  ResolutionTrace trace = [&] {
    try {
      return resolve_generic(gamma_n(n), IdealSelector::an_derivation(), opts);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SelectorInapplicable) {
        throw Error(ErrorKind::InternalMismatch, std::string("chart outside the A_k family: ") + e.what());
      }
      throw;
    }
  }();
  if (!trace.terminated) throw Error(ErrorKind::InternalMismatch, "A_n resolution did not terminate");
  return trace;
}

std::string DualGraph::to_dot() const {
  std::ostringstream out;
  out << "graph dual_graph {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < self_intersections.size(); ++i) {
    out << "  e" << i + 1 << " [label=\"" << self_intersections[i] << "\"];\n";
  }
  for (std::size_t i = 1; i < self_intersections.size(); ++i) {
    out << "  e" << i << " -- e" << i + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string DualGraph::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < self_intersections.size(); ++i) {
    if (i > 0) out << ' ';
    out << self_intersections[i];
  }
  return out.str();
}

DualGraph dual_graph(const ResolutionTrace& t) {
  if (!t.terminated) throw Error(ErrorKind::NotResolved, "trace has non-smooth leaves");
  const auto& v = t.global_fan.rays;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (det(v[i], v[i + 1]) != 1) {
      throw Error(ErrorKind::NonSmoothFan, "fan cone " + to_string(v[i]) + " " + to_string(v[i + 1]) +
                                               " is not unimodular");
    }
  }
  DualGraph g;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Int b = det(v[i - 1], v[i + 1]);
    if (v[i - 1] + v[i + 1] != b * v[i]) {
      throw Error(ErrorKind::InternalMismatch, "ray relation fails at " + to_string(v[i]));
    }
    g.self_intersections.push_back(checked_neg(b));
  }
  return g;
}

DualGraph hj_oracle(Int n, Int q) {
  DualGraph g;
  for (Int b : hj_fractions(n, q)) g.self_intersections.push_back(-b);
  return g;
}

std::size_t divisor_count(const ResolutionTrace& t) { return t.global_fan.interior_ray_count(); }

}  // namespace toricres
