#include "l0/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <optional>

#include "l0/conjugate.hpp"
#include "l0/helly.hpp"
#include "l0/io/document.hpp"
#include "l0/io/report.hpp"
#include "l0/oracle/suites.hpp"
#include "l0/stratification.hpp"

namespace l0::cli {
namespace {

enum class Command { none, stratify, solve, ortho, check, construct, witness, samplewise, selftest };

struct Options {
  Command command = Command::none;
  std::string mode = "exact";
  double tol = ProbSpace::kDefaultTolerance;
  bool trace = false;
  std::string space, module, coeffs, event, functionals, matrices, targets;
  std::string beta, eps = "1/1000";
  bool everywhere = false;
  bool full = false;
};

/// Constant literal, or a file holding one scalar block.
template <Field K>
L0Scalar<RealOf<K>> real_scalar(const std::string& arg, const SpacePtr& space, const std::string& what) {
  using R = RealOf<K>;
  if (arg.empty()) throw InvalidArgument("--" + what + " is required");
  try {
    return L0Scalar<R>::constant(space, FieldTraits<R>::parse(arg));
  } catch (const ParseError&) {
    throw;
  } catch (const Error&) {
  }
  io::Document doc = io::read_document(arg);
  auto blocks = doc.blocks_of(io::BlockKind::scalar);
  if (blocks.size() != 1) throw ParseError(doc.file, 0, "expected exactly one scalar block for " + what);
  return io::scalar_from<R>(doc, *blocks.front(), space);
}

template <Field K>
HellyInstance<K> load_instance(const Options& o, const io::Document& fdoc, const io::Document& tdoc,
                               const SpacePtr& space) {
  std::vector<RandomFunctional<K>> fs;
  for (auto& y : io::vectors_from<K>(fdoc, space)) fs.emplace_back(std::move(y));
  auto targets = io::scalars_from<K>(tdoc, space);
  if (targets.size() != fs.size())
    throw ParseError(tdoc.file, 0,
                     std::to_string(targets.size()) + " target block(s) for " + std::to_string(fs.size()) +
                         " functional(s)");
  return {std::move(fs), std::move(targets), real_scalar<K>(o.beta, space, "beta"),
          real_scalar<K>(o.eps, space, "eps")};
}

template <Field K>
int execute(const Options& o, const std::vector<io::Document>& docs, const SpacePtr& space, std::ostream& out) {
  Trace trace;
  Trace* tp = o.trace ? &trace : nullptr;
  io::Writer w;
  int code = kOk;
  switch (o.command) {
    case Command::stratify: {
      auto gens = io::vectors_from<K>(docs[0], space);
      const std::size_t dim = gens.front().dim();
      auto s = stratify(SubmoduleSpec<K>(dim, std::move(gens)), tp);
      io::emit_trace(w, trace);
      io::emit_stratification(w, s);
      break;
    }
    case Command::solve: {
      L0Matrix<K> rows;
      for (const auto& eq : io::vectors_from<K>(docs[0], space)) rows.push_back(eq.coords());
      Event a = o.event.empty() ? Event::full(space) : io::event_from_list(o.event, space);
      auto sol = solve_underdetermined(rows, a, tp);
      io::emit_trace(w, trace);
      io::emit_elimination(w, sol, a, rows.size());
      break;
    }
    case Command::ortho: {
      auto gens = io::vectors_from<K>(docs[0], space);
      const std::size_t dim = gens.front().dim();
      auto ow = orthogonal_witness(SubmoduleSpec<K>(dim, std::move(gens)), tp);
      io::emit_trace(w, trace);
      io::emit_orthogonal(w, ow);
      break;
    }
    case Command::check:
    case Command::construct:
    case Command::witness: {
      auto inst = load_instance<K>(o, docs[0], docs[1], space);
      auto v = solve(inst, tp);
      io::emit_trace(w, trace);
      io::emit_verdict_header(w, v, inst);
      if (!v.feasible) {
        code = kInfeasible;
        if (o.command != Command::construct) io::emit_witness(w, *v.witness);
      } else if (o.command == Command::construct) {
        io::emit_solution(w, *v.solution);
      } else if (o.command == Command::witness) {
        w.comment("no witness exists for a feasible instance");
      }
      break;
    }
    case Command::samplewise: {
      auto rows = io::vectors_from<K>(docs[0], space);
      auto targets = io::scalars_from<K>(docs[1], space);
      if (targets.size() != rows.size())
        throw ParseError(docs[1].file, 0,
                         std::to_string(targets.size()) + " target block(s) for " + std::to_string(rows.size()) +
                             " matrix row(s)");
      SamplewiseProblem<K> p{std::move(rows), std::move(targets), real_scalar<K>(o.beta, space, "beta"),
                             real_scalar<K>(o.eps, space, "eps")};
      auto rep = solve_samplewise(p, o.everywhere, tp);
      io::emit_trace(w, trace);
      io::emit_samplewise(w, rep, o.everywhere);
      if (!rep.feasible) code = kInfeasible;
      break;
    }
    default:
      throw InvalidArgument("no command");
  }
  out << w.str();
  return code;
}

int selftest(const Options& o, std::ostream& out) {
  auto sizes = o.full ? oracle::SuiteSizes{} : oracle::SuiteSizes::quick();
  bool ok = true;
  for (auto suite : {oracle::suite_stratification, oracle::suite_elimination, oracle::suite_helly,
                     oracle::suite_orthogonal, oracle::suite_samplewise, oracle::suite_float}) {
    auto r = suite(sizes);
    ok = ok && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases";
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << '\n';
    if (!r.first_failure.empty()) out << "  first failure: " << r.first_failure << '\n';
  }
  return ok ? kOk : kError;
}

void add_space(CLI::App* cmd, Options& o) {
  cmd->add_option("--space", o.space, "probability space file")->required();
}

void add_helly_inputs(CLI::App* cmd, Options& o) {
  add_space(cmd, o);
  cmd->add_option("--functionals", o.functionals, "Riesz vectors of f_1..f_n, one vector block each")->required();
  cmd->add_option("--targets", o.targets, "targets xi_1..xi_n, one scalar block each")->required();
  cmd->add_option("--beta", o.beta, "budget: literal or scalar file")->required();
  cmd->add_option("--eps", o.eps, "slack: literal or scalar file")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Stratification and Helly-type feasibility for random linear functionals on L0(F,K^n)", "l0cli"};
  app.require_subcommand(1);
  app.add_option("--mode", o.mode, "exact (rationals) or float")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  app.add_option("--tol", o.tol, "float-mode tolerance")->capture_default_str();
  app.add_flag("--trace", o.trace, "print the event-lattice steps as comments");
  app.fallthrough();

  auto* strat = app.add_subcommand("stratify", "partition into strata where the submodule is free");
  add_space(strat, o);
  strat->add_option("--module", o.module, "generators, one vector block each")->required();
  strat->callback([&] { o.command = Command::stratify; });

  auto* solve_cmd = app.add_subcommand("solve", "nontrivial solution of an underdetermined homogeneous system");
  add_space(solve_cmd, o);
  solve_cmd->add_option("--coeffs", o.coeffs, "one vector block per equation")->required();
  solve_cmd->add_option("--event", o.event, "comma-separated atom ids (default: all atoms)");
  solve_cmd->callback([&] { o.command = Command::solve; });

  auto* ortho = app.add_subcommand("ortho", "nonzero vector orthogonal to a proper submodule");
  add_space(ortho, o);
  ortho->add_option("--module", o.module, "generators, one vector block each")->required();
  ortho->callback([&] { o.command = Command::ortho; });

  auto* helly = app.add_subcommand("helly", "Helly-type feasibility of f_i(x) = xi_i, ||x|| <= beta");
  helly->require_subcommand(1);
  helly->fallthrough();
  auto* check_cmd = helly->add_subcommand("check", "feasibility verdict");
  add_helly_inputs(check_cmd, o);
  check_cmd->callback([&] { o.command = Command::check; });
  auto* construct_cmd = helly->add_subcommand("construct", "build x with f_i(x) = xi_i and ||x|| <= beta");
  add_helly_inputs(construct_cmd, o);
  construct_cmd->callback([&] { o.command = Command::construct; });
  auto* witness_cmd = helly->add_subcommand("witness", "coefficients that violate the Helly condition");
  add_helly_inputs(witness_cmd, o);
  witness_cmd->callback([&] { o.command = Command::witness; });
  auto* sample_cmd = helly->add_subcommand("samplewise", "per-atom solve for sample-wise functionals");
  add_space(sample_cmd, o);
  sample_cmd->add_option("--matrices", o.matrices, "row i of the per-atom matrix, one vector block per row")
      ->required();
  sample_cmd->add_option("--targets", o.targets, "targets, one scalar block per row")->required();
  sample_cmd->add_option("--beta", o.beta, "budget: literal or scalar file")->required();
  sample_cmd->add_option("--eps", o.eps, "slack: literal or scalar file")->capture_default_str();
  sample_cmd->add_flag("--everywhere", o.everywhere, "require a solution on null atoms too");
  sample_cmd->callback([&] { o.command = Command::samplewise; });

  auto* self = app.add_subcommand("selftest", "run the oracle property suites");
  self->add_flag("--full", o.full, "acceptance-size suites");
  self->callback([&] { o.command = Command::selftest; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (o.command == Command::selftest) return selftest(o, out);
    const Mode mode = o.mode == "float" ? Mode::approximate : Mode::exact;
    if (!(o.tol > 0)) throw InvalidArgument("--tol must be positive");
    SpacePtr space = io::space_from(io::read_document(o.space), mode, mode == Mode::exact ? 1e-9 : o.tol);

    std::vector<io::Document> docs;
    switch (o.command) {
      case Command::stratify:
      case Command::ortho:
        docs.push_back(io::read_document(o.module));
        break;
      case Command::solve:
        docs.push_back(io::read_document(o.coeffs));
        break;
      case Command::samplewise:
        docs.push_back(io::read_document(o.matrices));
        docs.push_back(io::read_document(o.targets));
        break;
      default:
        docs.push_back(io::read_document(o.functionals));
        docs.push_back(io::read_document(o.targets));
    }
    const bool complex = std::any_of(docs.begin(), docs.end(), [](const io::Document& d) {
      return d.has_complex_literal();
    });
    if (mode == Mode::approximate) {
      if (complex) throw InvalidArgument("complex data is supported in exact mode only");
      return execute<double>(o, docs, space, out);
    }
    if (complex) return execute<GaussRational>(o, docs, space, out);
    return execute<Rational>(o, docs, space, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace l0::cli
