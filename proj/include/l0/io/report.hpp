// Human-readable reports with machine-readable blocks in the document format.
#pragma once

#include <string>
#include <vector>

#include "l0/helly.hpp"
#include "l0/io/document.hpp"
#include "l0/stratification.hpp"
#include "l0/trace.hpp"

namespace l0::io {

inline void emit_trace(Writer& w, const Trace& t) {
  for (const auto& line : t.lines()) w.comment("trace: " + line);
}

template <class R>
std::string norm_summary(const NormValue<R>& n) {
  std::string s;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (k) s += ", ";
    s += n.space()->atom(k).id + " " + n.format(k);
  }
  return s;
}

template <Field K>
void emit_stratification(Writer& w, const Stratification<K>& s) {
  const auto& m = s.generators;
  w.comment("stratification of " + std::to_string(m.generators().size()) + " generator(s) in dimension " +
            std::to_string(m.dim()) + " over " + std::to_string(m.space()->size()) + " atom(s)");
  for (std::size_t i = s.parts.size(); i-- > 0;)
    if (!s.parts[i].is_empty())
      w.comment("A" + std::to_string(i) + " = " + format_event(s.parts[i]) + ": free of rank " + std::to_string(i) +
                (s.parts[i].is_null() ? " (null event)" : ""));
  for (std::size_t i = 0; i < s.parts.size(); ++i) w.event("A" + std::to_string(i), s.parts[i]);
  for (std::size_t i = 1; i < s.parts.size(); ++i) {
    if (s.parts[i].is_empty()) continue;
    for (std::size_t j = 0; j < s.bases[i].size(); ++j)
      w.vector("A" + std::to_string(i) + ".b" + std::to_string(j + 1), s.bases[i][j].mask(s.parts[i]));
  }
}

template <Field K>
void emit_elimination(Writer& w, const EliminationSolution<K>& sol, const Event& a, std::size_t m) {
  w.comment("homogeneous system: " + std::to_string(m) + " equation(s), " + std::to_string(sol.solution.size()) +
            " unknown(s) on " + format_event(a));
  w.comment("nontrivial on " + format_event(sol.nontrivial_on));
  w.event("nontrivial", sol.nontrivial_on);
  for (std::size_t j = 0; j < sol.solution.size(); ++j) w.scalar("lambda" + std::to_string(j + 1), sol.solution[j]);
}

template <Field K>
void emit_orthogonal(Writer& w, const OrthogonalWitness<K>& o) {
  if (o.module_is_full()) {
    w.comment("the submodule is all of L0 a.s.: no nonzero orthogonal vector");
    w.flag("full", "1");
    w.event("proper", o.proper);
    return;
  }
  w.comment("proper on " + format_event(o.proper) + "; x is orthogonal to every generator");
  w.flag("full", "0");
  w.event("proper", o.proper);
  w.vector("x", *o.vector);
}

template <Field K>
void emit_verdict_header(Writer& w, const HellyVerdict<K>& v, const HellyInstance<K>& inst) {
  if (v.feasible) {
    w.comment("FEASIBLE");
    w.comment("minimal norm: " + norm_summary(v.minimal_norm));
  } else {
    w.comment("INFEASIBLE on " + format_event(*v.violation_event));
    for (std::size_t a : v.violation_event->indices()) {
      const std::string& id = inst.space()->atom(a).id;
      if (v.inconsistent.contains(a))
        w.comment(id + ": the equations have no common solution");
      else
        w.comment(id + ": minimal norm " + v.minimal_norm.format(a) + " exceeds beta " +
                  FieldTraits<RealOf<K>>::format(inst.beta[a]));
    }
  }
  w.flag("feasible", v.feasible ? "1" : "0");
  if (!v.feasible) {
    w.event("violation", *v.violation_event);
    w.event("inconsistent", v.inconsistent);
    w.event("over_budget", v.over_budget);
  }
}

template <Field K>
void emit_witness(Writer& w, const std::vector<L0Scalar<K>>& lambda) {
  w.comment("witness: |sum lambda_k xi_k| > beta ||sum lambda_k f_k||* on the violation event");
  for (std::size_t k = 0; k < lambda.size(); ++k) w.scalar("lambda" + std::to_string(k + 1), lambda[k]);
}

template <Field K>
void emit_solution(Writer& w, const L0Vector<K>& x) {
  NormValue<RealOf<K>> n = norm(x);
  w.comment("||x||: " + norm_summary(n));
  w.vector("solution", x);
  w.scalar("norm_squared", n.squared());
}

template <Field K>
void emit_samplewise(Writer& w, const SamplewiseReport<K>& r, bool everywhere) {
  const std::string scope = everywhere ? "on every atom" : "almost surely";
  if (r.feasible) {
    w.comment("FEASIBLE " + scope);
    w.comment("equations and bound hold on " + format_event(r.solved));
    if (!r.patched.is_empty()) w.comment("null atoms patched by the per-atom solve: " + format_event(r.patched));
  } else {
    w.comment("INFEASIBLE " + scope + ": failing atoms " + format_event(r.failing));
  }
  w.flag("feasible", r.feasible ? "1" : "0");
  w.flag("everywhere", everywhere ? "1" : "0");
  w.event("solved", r.solved);
  w.event("patched", r.patched);
  w.event("failing", r.failing);
  if (r.feasible) emit_solution(w, *r.solution);
}

}  // namespace l0::io
