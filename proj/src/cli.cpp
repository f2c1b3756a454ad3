#include "lfactor/cli.hpp"

#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lfactor/parse.hpp"
#include "lfactor/report.hpp"
#include "lfactor/verify.hpp"

namespace lfac {

namespace {

int exit_code_for(const Error& e) { return e.is_guard() ? kExitGuard : kExitInput; }

// Runs body into a buffer and forwards it to `out` only when it returns kExitOk.
int buffered(std::ostream& out, std::ostream& err, const std::function<int(std::ostream&)>& body) {
  std::ostringstream buf;
  int code;
  try {
    code = body(buf);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (code == kExitOk)
    out << buf.str();
  else
    err << buf.str();
  return code;
}

std::string numeric_str(const NumericLFactor& l) {
  std::string s;
  for (const auto& [k, m] : l) {
    s += s.empty() ? "" : " ";
    s += "(1 - q^-s*";
    if (k.q_exp.doubled() != 0) s += "q^" + k.q_exp.str() + "*";
    s += rational_str(k.value) + ")";
    if (m != 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

int cmd_compute(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  return buffered(out, err, [&](std::ostream& os) {
    RootDatum d = parse_group(spec.group);
    RepSum r = named_rep(d, spec.rep);
    auto chi = parse_character(spec.character, d.rank());
    for (const auto& [hw, m] : r.summands) {
      auto dim = weyl_dimension(d, hw);
      if (dim > spec.max_dim)
        throw Error(ErrorCode::TooLarge, "summand " + format_vec(hw.coords) + " has dimension " + dim.str() +
                                             " above --max-dim " + std::to_string(spec.max_dim));
    }
    for (const auto& [gamma, m] : rep_dominant_support(d, r)) orbit(d, gamma, spec.max_weyl);
    auto rep = verify_theorem(d, r);
    if (spec.output == OutputMode::Structured) {
      os << canonical_dump(report_json(spec.group, spec.rep, rep));
    } else {
      os << text_report(d, spec.group, spec.rep, rep);
      if (!chi.is_generic()) {
        os << "\ncharacter " << spec.character << "\n";
        os << "satake  L(s)^-1 = " << numeric_str(satake_lfactor(d, r, chi)) << "\n";
        os << "hecke   L(s)^-1 = " << numeric_str(hecke_lfactor(d, r, chi)) << "\n";
      }
    }
    return rep.equal ? kExitOk : kExitCheckFailed;
  });
}

int cmd_verify(const std::string& suite, std::ostream& out, std::ostream& err) {
  return buffered(out, err, [&](std::ostream& os) {
    bool ok = true;
    for (const auto& c : run_suite(suite)) {
      os << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
      ok = ok && c.passed;
    }
    os << (ok ? "all checks passed\n" : "some checks FAILED\n");
    return ok ? kExitOk : kExitCheckFailed;
  });
}

int cmd_table1(int max_rank, std::ostream& out, std::ostream& err) {
  return buffered(out, err, [&](std::ostream& os) {
    if (max_rank < 1 || max_rank > 8) throw Error(ErrorCode::BadParameters, "--max-rank must lie in 1..8");
    std::vector<std::pair<char, int>> types;
    for (int r = 1; r <= max_rank; ++r) types.emplace_back('A', r);
    for (int r = 2; r <= max_rank; ++r) types.emplace_back('B', r);
    for (int r = 2; r <= max_rank; ++r) types.emplace_back('C', r);
    for (int r = 3; r <= max_rank; ++r) types.emplace_back('D', r);
    for (int r : {6, 7, 8}) types.emplace_back('E', r);
    types.emplace_back('F', 4);
    types.emplace_back('G', 2);
    os << "type  dim  m0  I  class  highest\n";
    for (auto [t, r] : types) {
      for (const auto& row : table1_rows(t, r)) {
        std::string boxed;
        for (int s : row.boxed) boxed += (boxed.empty() ? "" : ",") + std::to_string(s + 1);
        os << t << r << "  " << row.dimension.str() << "  " << row.m0 << "  {" << boxed << "}  "
           << (row.minuscule ? "minuscule" : "quasi-minuscule") << "  " << format_vec(row.highest.coords) << "\n";
      }
    }
    return kExitOk;
  });
}

int cmd_datum(const std::string& path, std::uint64_t max_weyl, std::ostream& out, std::ostream& err) {
  return buffered(out, err, [&](std::ostream& os) {
    RootDatum d = load_datum_file(path);
    auto summary = [&](const RootDatum& x, const std::string& title) {
      os << title << "\n";
      os << "  rank " << x.rank() << ", semisimple rank " << x.num_simple() << ", " << x.num_roots() << " roots\n";
      os << "  2rho " << format_vec(two_rho(x).coords) << "\n";
      try {
        os << "  |W| = " << enumerate_group(x, max_weyl).size() << "\n";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::GroupTooLarge) throw;
        os << "  |W| > " << max_weyl << " (guard)\n";
      }
    };
    summary(d, "datum " + path);
    summary(dual(d), "dual");
    return kExitOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unramified local L-factors via Satake parameters and Hecke operators"};
  app.require_subcommand(1);

  JobSpec spec;
  std::string output = "text";
  auto* compute = app.add_subcommand("compute", "compute both sides of the L-factor identity");
  compute->add_option("--group", spec.group, "gl:n | gsp:2n | simple:X:r:adj|sc | @file")->required();
  compute->add_option("--rep", spec.rep, "std|spin|adj|wedge:l|sym:l|hw:c1,...,ck, joined with +")->required();
  compute->add_option("--character", spec.character, "generic or a list of rationals such as 2,3,1/2");
  compute->add_option("--output", output, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  compute->add_option("--max-weyl", spec.max_weyl, "orbit and Weyl group guard");
  compute->add_option("--max-dim", spec.max_dim, "representation dimension guard");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suite, "theorem|root_identity|concave|table1|triangle|all")
      ->check(CLI::IsMember(suite_names()));

  int max_rank = 8;
  auto* table1 = app.add_subcommand("table1", "list nontrivial quasi-minuscule representations");
  table1->add_option("--max-rank", max_rank, "largest classical rank (1..8)");

  std::string path;
  std::uint64_t datum_max_weyl = spec.max_weyl;
  auto* datum = app.add_subcommand("datum", "validate and summarize a root-datum file");
  datum->add_option("path", path, "root-datum text file")->required();
  datum->add_option("--max-weyl", datum_max_weyl, "Weyl group enumeration guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  spec.output = output == "structured" ? OutputMode::Structured : OutputMode::Text;
  if (*compute) return cmd_compute(spec, out, err);
  if (*verify) return cmd_verify(suite, out, err);
  if (*table1) return cmd_table1(max_rank, out, err);
  return cmd_datum(path, datum_max_weyl, out, err);
}

}  // namespace lfac
