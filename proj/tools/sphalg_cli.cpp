// sphalg: command-line front end for the exact polynomial library.
//
// Exit status: 0 success, 1 bad input or failed precondition, 2 a
// verification suite failed.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphalg/errors.hpp"
#include "sphalg/harmonic.hpp"
#include "sphalg/mean.hpp"
#include "sphalg/text.hpp"
#include "sphalg/verify.hpp"
#include "sphalg/zonal.hpp"

namespace {

using namespace sphalg;
using nlohmann::json;

constexpr int kBadInput = 1;
constexpr int kVerifyFailed = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<GaussianRational> parse_scalar_list(const std::string& s) {
  std::vector<GaussianRational> out;
  for (const std::string& item : split(s, ',')) out.push_back(parse_scalar(item));
  return out;
}

template <class T>
std::vector<T> parse_int_list(const std::string& s, const char* what) {
  std::vector<T> out;
  for (const std::string& item : split(s, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::logic_error&) {
      throw PreconditionError(std::string("bad ") + what + " list entry '" + item + "'");
    }
  }
  return out;
}

OrthoMatrix read_matrix(const std::string& path, std::size_t N) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open matrix file " + path);
  std::vector<std::vector<GaussianRational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<GaussianRational> row;
    std::string w;
    while (words >> w) {
      if (w[0] == '#') break;
      row.push_back(parse_scalar(w));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.size() != N) {
    throw PreconditionError("matrix file has " + std::to_string(rows.size()) + " rows, expected N=" + std::to_string(N));
  }
  return OrthoMatrix::from_rows(std::move(rows));
}

void print_polys(const std::vector<Poly>& polys) {
  for (const Poly& p : polys) std::cout << p.to_string() << '\n';
}

json polys_json(const std::vector<Poly>& polys) {
  json arr = json::array();
  for (const Poly& p : polys) arr.push_back(to_json(p));
  return arr;
}

int run_verify(const std::string& name, std::uint64_t seed, bool serial, bool as_json) {
  verify::Options opts{seed, !serial};
  std::vector<const verify::Suite*> chosen;
  if (name == "all") {
    for (const verify::Suite& s : verify::suites()) chosen.push_back(&s);
  } else if (name == "acceptance") {
    for (const verify::Suite& s : verify::suites()) {
      if (s.acceptance) chosen.push_back(&s);
    }
  } else if (const verify::Suite* s = verify::find_suite(name)) {
    chosen.push_back(s);
  } else {
    throw PreconditionError("unknown suite '" + name + "' (try --list)");
  }
  bool ok = true;
  json report = json::array();
  for (const verify::Suite* s : chosen) {
    const verify::SuiteResult r = verify::run_suite(*s, opts);
    ok = ok && r.passed();
    if (as_json) {
      report.push_back({{"suite", r.name},
                        {"passed", r.passed()},
                        {"checks", r.checks},
                        {"failures", r.failures},
                        {"seconds", r.seconds},
                        {"messages", r.messages}});
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "  checks=" << r.checks << " failures=" << r.failures
              << "  " << std::fixed << std::setprecision(2) << r.seconds << "s\n";
    for (const std::string& m : r.messages) std::cout << "    " << m << '\n';
  }
  if (as_json) std::cout << json{{"seed", seed}, {"passed", ok}, {"suites", report}}.dump(2) << '\n';
  return ok ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact harmonic analysis on polynomial rings over Q(i)"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::size_t dim = 0;
  std::string poly_text;

  auto* decompose = app.add_subcommand("decompose", "Harmonic decomposition p = sum (X.X)^j p_j; prints p_0, p_1, ...");
  decompose->add_option("-N", dim, "Number of variables")->required();
  decompose->add_option("poly", poly_text, "Polynomial")->required();

  long basis_n = 0;
  long basis_d = 0;
  auto* basis = app.add_subcommand("basis", "Basis of the homogeneous harmonics of degree d in N variables");
  basis->add_option("N", basis_n, "Number of variables (>= 2)")->required();
  basis->add_option("d", basis_d, "Degree")->required();

  auto* mean = app.add_subcommand("mean", "Normalized spherical mean lambda_0");
  mean->add_option("-N", dim, "Number of variables")->required();
  mean->add_option("poly", poly_text, "Polynomial")->required();

  std::string c_text;
  auto* project = app.add_subcommand("project", "Harmonic polynomial congruent to p modulo X.X - c");
  project->add_option("-N", dim, "Number of variables")->required();
  project->add_option("c", c_text, "Scalar c")->required();
  project->add_option("poly", poly_text, "Polynomial")->required();

  std::string t_text;
  long zonal_n = 0;
  auto* zonal = app.add_subcommand("zonal", "Zonal harmonic of degree n for direction t; prints q(Y), then h");
  zonal->add_option("-N", dim, "Number of variables (must match t)");
  zonal->add_option("t", t_text, "Direction, comma separated, e.g. 1,0,0")->required();
  zonal->add_option("c", c_text, "Scalar c")->required();
  zonal->add_option("n", zonal_n, "Degree")->required();

  std::string a_text;
  std::string eps_text;
  auto* eigen = app.add_subcommand("eigen", "Y = prod (x_{2j-1} + i eps_j x_{2j})^a_j");
  eigen->add_option("a", a_text, "Exponents, comma separated (floor(N/2) entries)")->required();
  eigen->add_option("eps", eps_text, "Signs, comma separated, each 1 or -1")->required();
  eigen->add_option("N", dim, "Number of variables")->required();

  std::string matrix_path;
  auto* rotate_cmd = app.add_subcommand("rotate", "p(XA) for an orthogonal matrix A read from a file");
  rotate_cmd->add_option("-N", dim, "Number of variables")->required();
  rotate_cmd->add_option("--matrix", matrix_path, "File with N rows of N scalars")->required();
  rotate_cmd->add_option("poly", poly_text, "Polynomial")->required();

  std::string suite = "all";
  std::uint64_t seed = verify::kDefaultSeed;
  bool serial = false;
  bool list = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites ('all', 'acceptance', or one name)");
  verify_cmd->add_option("suite", suite, "Suite name");
  verify_cmd->add_option("--seed", seed, "Sampling seed");
  verify_cmd->add_flag("--serial", serial, "Check samples on one thread");
  verify_cmd->add_flag("--list", list, "List suites and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kBadInput;
  }

  try {
    if (*decompose) {
      const HarmonicDecomposition h = harmonic_decompose(parse_poly(poly_text, dim));
      if (as_json) {
        std::cout << json{{"dim", h.dim}, {"parts", polys_json(h.parts)}}.dump() << '\n';
      } else {
        print_polys(h.parts);
      }
    } else if (*basis) {
      if (basis_n < 2) throw PreconditionError("basis: N must be >= 2");
      const std::vector<Poly> b = harmonic_basis(static_cast<std::size_t>(basis_n), basis_d);
      if (as_json) {
        std::cout << json{{"dim", basis_n}, {"degree", basis_d}, {"basis", polys_json(b)}}.dump() << '\n';
      } else {
        print_polys(b);
      }
    } else if (*mean) {
      const GaussianRational v = spherical_mean(parse_poly(poly_text, dim));
      if (as_json) {
        std::cout << to_json(v).dump() << '\n';
      } else {
        std::cout << v << '\n';
      }
    } else if (*project) {
      const Poly h = project_lc(parse_poly(poly_text, dim), parse_scalar(c_text));
      std::cout << (as_json ? to_json(h).dump() : h.to_string()) << '\n';
    } else if (*zonal) {
      const std::vector<GaussianRational> t = parse_scalar_list(t_text);
      if (dim != 0 && dim != t.size()) throw PreconditionError("zonal: t has " + std::to_string(t.size()) + " entries but N=" + std::to_string(dim));
      const ZonalHarmonic z = zonal_harmonic(t, parse_scalar(c_text), zonal_n);
      if (as_json) {
        json q = json::array();
        for (const GaussianRational& v : z.q.coeffs()) q.push_back(to_json(v));
        std::cout << json{{"q", q}, {"h", to_json(z.h)}}.dump() << '\n';
      } else {
        std::cout << z.q.to_string() << '\n' << z.h.to_string() << '\n';
      }
    } else if (*eigen) {
      const EigenSignature sig(dim, parse_int_list<unsigned>(a_text, "exponent"), parse_int_list<int>(eps_text, "sign"));
      const Poly y = eigen_monomial(sig);
      std::cout << (as_json ? to_json(y).dump() : y.to_string()) << '\n';
    } else if (*rotate_cmd) {
      const Poly p = parse_poly(poly_text, dim);
      const Poly out = rotate(p, read_matrix(matrix_path, dim));
      std::cout << (as_json ? to_json(out).dump() : out.to_string()) << '\n';
    } else if (*verify_cmd) {
      if (list) {
        for (const verify::Suite& s : verify::suites()) {
          std::cout << s.name << (s.acceptance ? "  [acceptance]  " : "  ") << s.summary << '\n';
        }
        return 0;
      }
      return run_verify(suite, seed, serial, as_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return 0;
}
