// Command-line front end for the e7sym library.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "e7sym/conformal.hpp"
#include "e7sym/cubie.hpp"
#include "e7sym/harness.hpp"
#include "e7sym/json_io.hpp"

namespace {

using e7sym::AlgebraTag;
using e7sym::io::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

// Signed unit symbol of e_i e_j, e.g. "-e5".
struct UnitProduct {
  int sign;
  int index;
};

UnitProduct unit_product(AlgebraTag tag, int i, int j) {
  const e7sym::AlgElem z = e7sym::AlgElem::unit(tag, i) * e7sym::AlgElem::unit(tag, j);
  for (int k = 0; k < tag.dim(); ++k) {
    if (!z[k].is_zero()) return {z[k].sign(), k};
  }
  throw std::logic_error("unit product vanished");
}

void print_mul_table(int level, const std::string& format) {
  const AlgebraTag tag(level);
  const int n = tag.dim();
  if (format == "json") {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) {
        const auto u = unit_product(tag, i, j);
        row.push_back({{"sign", u.sign}, {"index", u.index}});
      }
      rows.push_back(row);
    }
    std::cout << rows.dump() << '\n';
    return;
  }
  const int width = 4;
  std::cout << std::setw(width) << "";
  for (int j = 0; j < n; ++j) std::cout << std::setw(width) << e7sym::unit_symbol(j);
  std::cout << '\n';
  for (int i = 0; i < n; ++i) {
    std::cout << std::setw(width) << e7sym::unit_symbol(i);
    for (int j = 0; j < n; ++j) {
      const auto u = unit_product(tag, i, j);
      std::cout << std::setw(width) << (u.sign < 0 ? "-" : "") + e7sym::unit_symbol(u.index);
    }
    std::cout << '\n';
  }
}

std::vector<AlgebraTag> parse_algebras(const std::vector<std::string>& names) {
  std::vector<AlgebraTag> out;
  for (const auto& s : names) {
    // accept "R", "R,C" and "RC"
    for (char c : s) {
      if (c == ',' || c == ' ') continue;
      out.push_back(AlgebraTag::from_letter(std::string(1, c)));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  // default seed comes from the environment, read once
  std::uint64_t default_seed = 1;
  if (const char* env = std::getenv("E7SYM_SEED")) default_seed = std::stoull(env);

  CLI::App app{"Exact e7 computations over R, C, H and O"};
  app.require_subcommand(1);

  int level = 3;
  std::string format = "text";
  auto* mul = app.add_subcommand("mul-table", "Unit multiplication table");
  mul->add_option("--level", level, "Cayley-Dickson level 0..3")->check(CLI::Range(0, 3));
  mul->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string which, input;
  auto* inv = app.add_subcommand("invariant", "det or trace of a Hermitian matrix");
  inv->add_option("which", which, "det or trace")->required()->check(CLI::IsMember({"det", "trace"}));
  inv->add_option("--input", input, "HermMat JSON file")->required();

  std::string algebra = "O";
  auto* dims = app.add_subcommand("dims", "Dimension of the e7 bracket closure");
  dims->add_option("--algebra", algebra, "R, C, H or O")->required();

  std::string theta_file, p_file;
  auto* act = app.add_subcommand("act", "Freudenthal action of Theta on P");
  act->add_option("--theta", theta_file, "Theta JSON file")->required();
  act->add_option("--p", p_file, "FreudVec JSON file")->required();

  std::string a_file, b_file;
  auto* br = app.add_subcommand("bracket", "Commutator in e7 basis coordinates");
  br->add_option("--a", a_file, "Theta JSON file")->required();
  br->add_option("--b", b_file, "Theta JSON file")->required();

  auto* cube = app.add_subcommand("cube", "Cube representation");
  cube->require_subcommand(1);
  std::string cube_p;
  auto* assemble = cube->add_subcommand("assemble", "Cube of a FreudVec");
  assemble->add_option("--p", cube_p, "FreudVec JSON file")->required();
  std::string mode = "sided", cube_theta, cube_file;
  auto* cact = cube->add_subcommand("act", "Tensor action on a cube");
  cact->add_option("--mode", mode, "naive or sided")->check(CLI::IsMember({"naive", "sided"}));
  cact->add_option("--theta", cube_theta, "Theta JSON file")->required();
  cact->add_option("--cube", cube_file, "Cube JSON file")->required();

  std::vector<std::string> v_algebras, v_suites;
  std::uint64_t seed = default_seed;
  int samples = 20, jobs = 1;
  std::string report;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--algebra", v_algebras, "Algebras (default all)");
  verify->add_option("--suite", v_suites, "Suites (default all)");
  verify->add_option("--seed", seed, "Seed (default $E7SYM_SEED or 1)");
  verify->add_option("--samples", samples, "Samples per randomized check")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "Concurrent checks")->check(CLI::PositiveNumber);
  verify->add_option("--report", report, "JSON-lines report file (default stdout)");

  std::string sc_algebra = "O", sc_out;
  auto* sc = app.add_subcommand("export-sc", "Structure constants as CSV");
  sc->add_option("--algebra", sc_algebra, "R, C, H or O")->required();
  sc->add_option("--out", sc_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mul) {
      print_mul_table(level, format);
    } else if (*inv) {
      const e7sym::HermMat x = e7sym::io::herm_from_json(read_json(input));
      std::cout << (which == "det" ? e7sym::det(x) : e7sym::trace(x)).to_string() << '\n';
    } else if (*dims) {
      const e7sym::E7Structure e7(AlgebraTag::from_letter(algebra));
      std::cout << e7sym::close_under_bracket(e7.matrices()).dimension() << '\n';
    } else if (*act) {
      const e7sym::E7Elem theta = e7sym::io::theta_from_json(read_json(theta_file));
      const e7sym::FreudVec p = e7sym::io::freudvec_from_json(read_json(p_file));
      std::cout << e7sym::io::to_json(e7sym::freudenthal_action(theta, p)).dump() << '\n';
    } else if (*br) {
      const json ja = read_json(a_file), jb = read_json(b_file);
      const e7sym::E7Structure e7(e7sym::io::algebra_from_json(ja));
      const auto c = e7.coordinates(e7sym::bracket(e7sym::io::theta_from_json(ja, e7),
                                                   e7sym::io::theta_from_json(jb, e7)));
      if (!c) {
        std::cout << "outside span\n";
      } else {
        json out = json::array();
        for (const auto& x : *c) out.push_back(x.to_string());
        std::cout << out.dump() << '\n';
      }
    } else if (*assemble) {
      const auto p = e7sym::io::freudvec_from_json(read_json(cube_p));
      std::cout << e7sym::io::to_json(e7sym::assemble_cube(p)).dump() << '\n';
    } else if (*cact) {
      const e7sym::E7Elem theta = e7sym::io::theta_from_json(read_json(cube_theta));
      const e7sym::Cube c = e7sym::io::cube_from_json(read_json(cube_file));
      const e7sym::Cube out =
          mode == "naive" ? e7sym::naive_action(theta, c) : e7sym::sided_action(theta, c);
      std::cout << e7sym::io::to_json(out).dump() << '\n';
    } else if (*verify) {
      e7sym::harness::RunConfig cfg;
      cfg.seed = seed;
      cfg.samples = samples;
      cfg.jobs = jobs;
      if (!v_algebras.empty()) cfg.algebras = parse_algebras(v_algebras);
      if (!v_suites.empty()) cfg.suites = v_suites;
      const auto results = e7sym::harness::verify_all(cfg);
      if (report.empty()) {
        e7sym::harness::write_report(std::cout, cfg, results);
      } else {
        std::ofstream out(report);
        if (!out) throw std::runtime_error("cannot write " + report);
        e7sym::harness::write_report(out, cfg, results);
        for (const auto& r : results) {
          std::cerr << r.check_id << ' ' << r.algebra.letter() << ' '
                    << e7sym::harness::to_string(r.status) << '\n';
        }
      }
      return e7sym::harness::any_failed(results) ? 1 : 0;
    } else if (*sc) {
      const auto table = e7sym::harness::export_structure_constants(AlgebraTag::from_letter(sc_algebra));
      if (sc_out.empty()) {
        e7sym::harness::write_structure_constants_csv(std::cout, table);
      } else {
        std::ofstream out(sc_out);
        if (!out) throw std::runtime_error("cannot write " + sc_out);
        e7sym::harness::write_structure_constants_csv(out, table);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
