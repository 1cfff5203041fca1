#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "zel/composition.hpp"
#include "zel/diagram.hpp"
#include "zel/error.hpp"
#include "zel/involution.hpp"
#include "zel/json_io.hpp"
#include "zel/oracle.hpp"
#include "zel/ring.hpp"
#include "zel/sweep.hpp"

namespace zel::cli {

namespace {

void report_error(std::ostream& err, std::string_view code, std::string_view message) {
  err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

const CLI::Validator half_exp_check(
    [](std::string& s) -> std::string {
      try {
        HalfExp::parse(s);
        return {};
      } catch (const Error&) {
        return "expected an integer or half-integer such as 3/2, got " + s;
      }
    },
    "HALF");

Sign parse_sign(const std::string& s) { return s == "+" || s == "plus" ? Sign::Plus : Sign::Minus; }

struct Flags {
  std::string line = "rho";
  int n = 1;
  int d = 1;
  int k = 0;
  std::string shift = "0";
  std::string in;
  std::string in2;
  std::string side = "right";
  std::string sign = "+";
  std::string basis = "z";
  std::string side_condition = "none";
  bool trace = false;
  bool dual = false;
  bool highest = false;
  bool ascii = false;
  std::size_t max_nodes = ClosureOptions{}.max_nodes;
  int nmax = 4;
  int dmax = 4;
  std::optional<int> kmax;
  int jobs = 1;
};

void add_triple(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "number of segments in each ladder")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--d", f.d, "length of each segment")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--k", f.k, "twist parameter, the ladders sit at -k/2 and k/2")
      ->required()
      ->check(CLI::NonNegativeNumber);
}

void add_sign(CLI::App* cmd, Flags& f) {
  cmd->add_option("--sign", f.sign, "+ for nu^(-k/2) x nu^(k/2), - for the reverse")
      ->check(CLI::IsMember({"+", "-", "plus", "minus"}));
}

int check_exit(const SweepReport& report, std::ostream& err) {
  if (report.all_agree()) return 0;
  report_error(err, to_string(Errc::AgreementFailure),
               std::to_string(report.disagreements()) + " of " + std::to_string(report.cells.size()) +
                   " cells disagree");
  return 1;
}

std::string ascii_report(const CompositionReport& r) {
  std::ostringstream os;
  os << "n=" << r.params.n << " d=" << r.params.d << " k=" << r.params.k << " sign " << to_string(r.sign)
     << " basis " << to_string(r.basis) << " length " << r.length() << '\n';
  for (const auto& f : r.factors) {
    os << "\nr_" << f.index << ' ' << f.ms.to_string() << '\n' << render_diagram(f.ms);
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multisegment calculus for products of Speh representations", "zelc"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--line", f.line, "cuspidal line label")->capture_default_str();

  auto* speh_cmd = app.add_subcommand("speh", "print the Speh multisegment a(n,d) centered at --shift");
  speh_cmd->add_option("--n", f.n)->required()->check(CLI::PositiveNumber);
  speh_cmd->add_option("--d", f.d)->required()->check(CLI::PositiveNumber);
  speh_cmd->add_option("--shift", f.shift, "center exponent, e.g. 0, -2, 3/2")->check(half_exp_check);

  auto* dual_cmd = app.add_subcommand("dual", "Zelevinsky involution of a multisegment");
  dual_cmd->add_option("--in", f.in, "multisegment JSON file, - for stdin")->required();
  dual_cmd->add_option("--side", f.side, "right runs the algorithm from the largest end, left mirrors it")
      ->check(CLI::IsMember({"left", "right"}));
  dual_cmd->add_flag("--trace", f.trace, "include the emitted segments and intermediate states");

  auto* derive_cmd = app.add_subcommand("derive", "derivative of Z(a) for a ladder a");
  derive_cmd->add_option("--in", f.in, "multisegment JSON file, - for stdin")->required();
  derive_cmd->add_flag("--dual", f.dual, "shorten beginnings instead of ends");
  derive_cmd->add_flag("--highest", f.highest, "only the highest derivative a^-");

  auto* compose_cmd = app.add_subcommand("compose", "composition series of the twisted Speh product");
  add_triple(compose_cmd, f);
  add_sign(compose_cmd, f);
  compose_cmd->add_option("--basis", f.basis, "z for Zelevinsky, l for Langlands parameters")
      ->check(CLI::IsMember({"z", "l", "Z", "L"}));
  compose_cmd->add_flag("--ascii", f.ascii, "draw the factors instead of printing JSON");

  auto* lattice_cmd = app.add_subcommand("lattice", "chain of submodules");
  add_triple(lattice_cmd, f);
  add_sign(lattice_cmd, f);

  auto* oracle_cmd = app.add_subcommand("oracle", "independent composition series by exhaustion");
  add_triple(oracle_cmd, f);
  oracle_cmd->add_option("--max-nodes", f.max_nodes, "cap on the down-closure size")->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check", "compare the oracle against the closed form on a box of (n,d,k)");
  check_cmd->add_option("--nmax", f.nmax)->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("--dmax", f.dmax)->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("--kmax", f.kmax, "largest k (default n+d+1 per cell)")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-nodes", f.max_nodes, "cap on the down-closure size")->check(CLI::PositiveNumber);

  auto* render_cmd = app.add_subcommand("render", "ASCII diagram of a multisegment or of a pair {n,d,k}");
  render_cmd->add_option("--in", f.in, "JSON file, - for stdin")->required();

  auto* conj_cmd = app.add_subcommand("conjecture", "predicted factors of L(pi1) x L(pi2) for Speh-like ladders");
  conj_cmd->add_option("--pi1", f.in, "multisegment JSON file")->required();
  conj_cmd->add_option("--pi2", f.in2, "multisegment JSON file")->required();
  conj_cmd->add_option("--side-condition", f.side_condition)->check(CLI::IsMember({"none", "verbatim"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "FlagError", e.what());
    return 2;
  }

  try {
    const Line line(f.line);
    const Sign sign = parse_sign(f.sign);

    if (speh_cmd->parsed()) {
      out << to_json(speh(f.n, f.d, HalfExp::parse(f.shift), line)).dump(2) << '\n';
    } else if (dual_cmd->parsed()) {
      const Multisegment a = parse_multisegment(read_json(f.in));
      DualTrace trace;
      DualTrace* tp = f.trace ? &trace : nullptr;
      const Multisegment t = f.side == "left" ? mw_dual_left(a, tp) : mw_dual(a, tp);
      if (f.trace) {
        out << json{{"dual", to_json(t)}, {"trace", to_json(trace)}}.dump(2) << '\n';
      } else {
        out << to_json(t).dump(2) << '\n';
      }
    } else if (derive_cmd->parsed()) {
      const Multisegment a = parse_multisegment(read_json(f.in));
      if (f.highest) {
        out << to_json(highest_derivative(a)).dump(2) << '\n';
      } else {
        out << to_json(f.dual ? derivative_ladder_dual(a) : derivative_ladder(a)).dump(2) << '\n';
      }
    } else if (compose_cmd->parsed()) {
      const bool langlands = f.basis == "l" || f.basis == "L";
      const CompositionReport r = langlands ? compose_langlands(f.n, f.d, f.k, sign, line)
                                            : compose_zelevinsky(f.n, f.d, f.k, sign, line);
      if (f.ascii) {
        out << ascii_report(r);
      } else {
        out << to_json(r).dump(2) << '\n';
      }
    } else if (lattice_cmd->parsed()) {
      const auto chain = lattice_chain(f.n, f.d, f.k, sign, line);
      out << json{{"n", f.n}, {"d", f.d}, {"k", f.k}, {"sign", to_string(sign)}, {"chain", to_json(chain)}}.dump(2)
          << '\n';
    } else if (oracle_cmd->parsed()) {
      OracleOptions opts;
      opts.closure.max_nodes = f.max_nodes;
      out << to_json(oracle_composition(f.n, f.d, f.k, opts, line)).dump(2) << '\n';
    } else if (check_cmd->parsed()) {
      SweepOptions opts;
      opts.nmax = f.nmax;
      opts.dmax = f.dmax;
      opts.kmax = f.kmax;
      opts.jobs = f.jobs;
      opts.oracle.closure.max_nodes = f.max_nodes;
      const SweepReport report = run_sweep(opts);
      out << to_json(report).dump(2) << '\n';
      return check_exit(report, err);
    } else if (render_cmd->parsed()) {
      const json j = read_json(f.in);
      out << (j.contains("segments") ? render_diagram(parse_multisegment(j)) : render_diagram(parse_params(j)));
    } else if (conj_cmd->parsed()) {
      const auto side = f.side_condition == "verbatim" ? SideCondition::Verbatim : SideCondition::None;
      const ConjectureResult r =
          conjecture_jh(parse_multisegment(read_json(f.in)), parse_multisegment(read_json(f.in2)), side);
      out << to_json(r).dump(2) << '\n';
    }
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error(err, "IOError", e.what());
    return 1;
  }
  return 0;
}

}  // namespace zel::cli
