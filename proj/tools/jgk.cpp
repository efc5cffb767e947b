#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "jgk/autos.hpp"
#include "jgk/certify.hpp"
#include "jgk/json_io.hpp"

namespace fs = std::filesystem;
using namespace jgk;

namespace {

constexpr int kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitSolver = 3;

const std::vector<std::string> kModels = {"g2-z2", "f4-z3", "e8-z5", "d4-z2", "e6-z3"};

struct Options {
  std::string out = "./out";
  std::uint64_t seed = 0;
  int threads = 0;
};

/// A fully built model: table, grading group data, expected class dimension.
struct Bundle {
  std::string id;
  LieAlgebra L;
  int p = 0, r = 3, expected_d = 0, cond = 1;
  std::vector<int> deg;         // sidecar degrees (bitmask for the Z_2 models)
  ModelAutos autos;             // filled by make_autos
  Cyc zeta;
  Subspace cartan;              // split Cartan used for type identification
  std::string extra_error;
};

Bundle make_bundle(const std::string& id, bool skip_normalization, int threads,
                   bool need_autos = true) {
  Bundle b;
  b.id = id;
  if (id == "e8-z5" || id == "e6-z3" || id == "f4-z3") {
    GradedModel model;
    F4Build f4;
    if (id == "f4-z3") {
      f4 = build_f4();
      model = f4.model;
      b.cartan = f4_cartan(f4);
    } else {
      model = id == "e8-z5" ? build_e8() : build_e6();
      b.cartan = diagonal_cartan(model);
    }
    b.p = model.p;
    b.cond = model.L.conductor();
    b.expected_d = id == "e6-z3" ? 3 : 2;
    b.deg = model.deg;
    b.zeta = Cyc::zeta_pow(b.cond, 1);
    if (need_autos) {
      if (id == "f4-z3") {
        ModelAutos ambient = tensor_model_autos(f4.e6, skip_normalization, threads);
        if (!ambient.status.ok) {
          b.L = std::move(model.L);
          b.autos.status = ambient.status;
          return b;
        }
        b.autos = restricted_autos(f4, ambient, threads);
      } else {
        b.autos = tensor_model_autos(model, skip_normalization, threads);
      }
    }
    b.L = std::move(model.L);
  } else if (id == "g2-z2" || id == "d4-z2") {
    OctonionAlgebra O = octonion_algebra();
    OperatorAlgebra A = id == "g2-z2" ? derivation_algebra(O.mul) : skew_algebra(O);
    b.p = 2;
    b.cond = 1;
    b.expected_d = id == "g2-z2" ? 2 : 4;
    b.deg = O.deg;  // base-space degrees are not the sidecar; see below
    b.zeta = Cyc::rational(1, Rat(-1));
    if (need_autos) b.autos = octonion_model_autos(A, O.deg, threads);
    // sidecar: Z_2^3 bitmask of each operator-basis element
    auto comps = induced_grading_on_maps(A, O.deg, 3);
    b.deg.assign(static_cast<std::size_t>(A.L.dim()), -1);
    for (const auto& [alpha, S] : comps) {
      int mask = alpha[0] | (alpha[1] << 1) | (alpha[2] << 2);
      for (const auto& row : S.basis) b.deg[static_cast<std::size_t>(row.front().first)] = mask;
    }
    const char* stem = id == "g2-z2" ? "der" : "skew";
    for (int t = 0; t < A.L.dim(); ++t)
      A.L.labels.push_back(std::string(stem) + std::to_string(t) + ":a" +
                           std::to_string(b.deg[static_cast<std::size_t>(t)]));
    b.L = std::move(A.L);
  } else {
    fail("unknown model id '" + id + "'");
  }
  return b;
}

fs::path out_dir(const Options& opt) {
  fs::path dir(opt.out);
  fs::create_directories(dir);
  return dir;
}

void write_json(const fs::path& p, const json& j) {
  std::ofstream f(p);
  require(f.good(), "cannot open " + p.string() + " for writing");
  f << j.dump(1) << "\n";
}

json read_json(const fs::path& p) {
  std::ifstream f(p);
  require(f.good(), "missing file " + p.string());
  json j;
  f >> j;
  return j;
}

bool valid_model(const std::string& id) {
  return std::find(kModels.begin(), kModels.end(), id) != kModels.end();
}

int cmd_build(const std::string& model, const Options& opt) {
  Bundle b = make_bundle(model, false, opt.threads, false);
  fs::path dir = out_dir(opt);
  write_json(dir / (model + ".alg.json"), algebra_to_json(b.L));
  write_json(dir / (model + ".deg.json"), degrees_to_json(b.p, b.deg));
  std::cout << model << ": dim " << b.L.dim() << ", conductor " << b.cond << ", written to "
            << (dir / (model + ".alg.json")).string() << "\n";
  return kExitOk;
}

int cmd_grade(const std::string& model, bool skip_normalization, const Options& opt) {
  fs::path dir = out_dir(opt);
  json aj = read_json(dir / (model + ".alg.json"));
  LieAlgebra from_file = algebra_from_json(aj);
  Bundle b = make_bundle(model, skip_normalization, opt.threads);
  require(from_file == b.L,
          "algebra file does not match the deterministic build; rebuild with 'build " + model + "'");
  if (!b.autos.status.ok) {
    std::cerr << "automorphism certification failed: " << b.autos.status.error << "\n";
    return kExitCheckFailed;
  }
  Grading G;
  G.p = b.p;
  G.r = static_cast<int>(b.autos.gens.size());
  G.components = grading_from_group(b.L, b.autos.gens, b.p, b.zeta);
  write_json(dir / (model + ".grading.json"), grading_to_json(G, b.L.dim(), b.cond));
  std::cout << model << ": " << G.components.size() << " homogeneous classes written to "
            << (dir / (model + ".grading.json")).string() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& model, long long sample, bool full_jacobi, bool timing,
               const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  fs::path dir = out_dir(opt);
  LieAlgebra L = algebra_from_json(read_json(dir / (model + ".alg.json")));
  Grading G = grading_from_json(read_json(dir / (model + ".grading.json")));
  Bundle spec = make_bundle(model, false, opt.threads, false);
  require(L.dim() == spec.L.dim(), "algebra file has unexpected dimension");

  Mat gram = killing(L);
  Certificate cert = jordan_certificate(L, G, spec.expected_d, &gram, opt.threads);
  cert.seed = opt.seed;
  bool full = full_jacobi || L.dim() <= 80;
  Check jac = full ? jacobi_sweep_full(L, opt.threads)
                   : jacobi_sweep_sample(L, sample, opt.seed, opt.threads);
  cert.checks.push_back(jac);
  if (timing)
    cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  write_json(dir / (model + ".cert.json"), certificate_to_json(cert));
  for (const auto& c : cert.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.count << " items)";
    if (!c.pass) std::cout << " -- " << c.witness;
    std::cout << "\n";
  }
  std::cout << "certificate written to " << (dir / (model + ".cert.json")).string() << "\n";
  return cert.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_report(const Options& opt) {
  fs::path dir(opt.out);
  std::cout << "model    group   dim g_a  lines  cartan  orthogonal\n";
  // mirror of the grading table, including the out-of-scope row
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"g2-z2", "Z_2^3"}, {"f4-z3", "Z_3^3"}, {"e8-z5", "Z_5^3"},
      {"d4-z2", "Z_2^3"}, {"e8-z25", "Z_2^5"}, {"e6-z3", "Z_3^3"}};
  for (const auto& [id, group] : rows) {
    if (id == "e8-z25") {
      std::cout << "e8-z25   Z_2^5   out of scope\n";
      continue;
    }
    fs::path p = dir / (id + ".cert.json");
    if (!fs::exists(p)) continue;
    json cj = read_json(p);
    std::string cartan = "-", orth = "-";
    long long class_dim = 0, lines = 0;
    if (cj.contains("dims")) {
      if (cj["dims"].contains("class_dim")) class_dim = cj["dims"]["class_dim"].get<long long>();
      if (cj["dims"].contains("lines")) lines = cj["dims"]["lines"].get<long long>();
    }
    for (const auto& c : cj["checks"]) {
      if (c["name"] == "lines_are_cartan") cartan = c["pass"].get<bool>() ? "pass" : "FAIL";
      if (c["name"] == "killing_orthogonal") orth = c["pass"].get<bool>() ? "pass" : "FAIL";
    }
    std::printf("%-8s %-7s %-8lld %-6lld %-7s %s\n", id.c_str(), group.c_str(), class_dim, lines,
                cartan.c_str(), orth.c_str());
  }
  return kExitOk;
}

int cmd_export(const std::string& model, const Options& opt) {
  Bundle b = make_bundle(model, false, opt.threads);
  require(b.autos.status.ok, "automorphism certification failed: " + b.autos.status.error);
  fs::path dir = out_dir(opt);
  json j;
  json gens = json::array();
  for (const auto& g : b.autos.gens) {
    json e;
    e["order"] = g.order;
    e["matrix"] = matrix_to_json(g.matrix);
    gens.push_back(std::move(e));
  }
  j["generators"] = gens;
  write_json(dir / (model + ".autos.json"), j);
  std::cout << model << ": " << b.autos.gens.size() << " generators written to "
            << (dir / (model + ".autos.json")).string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded models of the exceptional simple Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  if (const char* env = std::getenv("JGK_OUT")) opt.out = env;
  app.add_option("--out", opt.out, "output directory (or env JGK_OUT)");
  app.add_option("--seed", opt.seed, "seed for sampled sweeps")->default_val(0);
  app.add_option("--threads", opt.threads, "worker cap, 0 = hardware")->default_val(0);

  std::string model;
  bool skip_normalization = false, full_jacobi = false, timing = false;
  long long sample = 1000000;

  CLI::App* build = app.add_subcommand("build", "build a model and write its table");
  build->add_option("model", model, "one of g2-z2 d4-z2 f4-z3 e6-z3 e8-z5")->required();

  CLI::App* grade = app.add_subcommand("grade", "construct and certify the grading group");
  grade->add_option("model", model)->required();
  grade->add_flag("--skip-normalization", skip_normalization,
                  "skip the degree-1 normalization (negative control)");

  CLI::App* verify = app.add_subcommand("verify", "run the grading certificate");
  verify->add_option("model", model)->required();
  verify->add_option("--sample", sample, "Jacobi sample size for large models")->default_val(1000000);
  verify->add_flag("--full-jacobi", full_jacobi, "sweep every triple regardless of dimension");
  verify->add_flag("--timing", timing, "record wall-clock time in the certificate");

  CLI::App* report = app.add_subcommand("report", "summarize certificates");
  CLI::App* exportc = app.add_subcommand("export", "write the grading automorphism matrices");
  exportc->add_option("model", model)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(build) || app.got_subcommand(grade) || app.got_subcommand(exportc) ||
        (app.got_subcommand(verify))) {
      if (!valid_model(model)) {
        std::cerr << "unknown model '" << model << "'; expected one of:";
        for (const auto& s : kModels) std::cerr << " " << s;
        std::cerr << "\n";
        return kExitUsage;
      }
    }
    if (app.got_subcommand(build)) return cmd_build(model, opt);
    if (app.got_subcommand(grade)) return cmd_grade(model, skip_normalization, opt);
    if (app.got_subcommand(verify)) return cmd_verify(model, sample, full_jacobi, timing, opt);
    if (app.got_subcommand(report)) return cmd_report(opt);
    if (app.got_subcommand(exportc)) return cmd_export(model, opt);
  } catch (const json::exception& e) {
    std::cerr << "error: malformed artifact file (" << e.what() << ")\n";
    return kExitUsage;
  } catch (const error& e) {
    std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    if (what.find("missing file") != std::string::npos) return kExitUsage;
    if (what.find("no equivariant map") != std::string::npos ||
        what.find("build failed") != std::string::npos)
      return kExitSolver;
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
