#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trsect/oracle.hpp"
#include "trsect/sections.hpp"

using namespace trsect;

namespace {

constexpr const char* kVersion = "trsect 0.1.0";

// exit codes: 0 definite verdict, 2 verdict limited by unresolved strata,
// 3 input error, 4 precondition violation
enum ExitCode { kOk = 0, kUnresolved = 2, kInputError = 3, kPrecondition = 4 };

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fnv1a(const std::string& data) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

struct Report {
  std::ostringstream body;
  std::string output_file;

  template <typename T>
  void kv(const std::string& key, const T& value) {
    body << key << ": " << value << "\n";
  }
  void flush() {
    std::cout << body.str();
    if (!output_file.empty()) {
      std::ofstream out(output_file);
      out << body.str();
    }
  }
};

void manifest(Report& rep, const std::string& command, const std::vector<std::string>& inputs,
              const std::string& flags, unsigned seed) {
  rep.kv("command", command);
  for (const auto& in : inputs) {
    rep.kv("input", in);
    rep.kv("input-digest", fnv1a(slurp(in)));
  }
  if (!flags.empty()) rep.kv("flags", flags);
  rep.kv("seed", seed);
  rep.kv("version", kVersion);
}

std::string point_str(const std::vector<Rational>& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + to_string(p[i]);
  return s;
}

std::string box_str(const std::vector<std::pair<Rational, Rational>>& box) {
  std::string s;
  for (size_t i = 0; i < box.size(); ++i) {
    if (i) s += " x ";
    s += "[" + to_string(box[i].first) + ", " + to_string(box[i].second) + "]";
  }
  return s;
}

std::string alg_str(const RealAlgebraicNumber& a) {
  if (a.is_rational()) return to_string(a.rational_value());
  return "(" + to_string(a.lo()) + ", " + to_string(a.hi()) + ")";
}

ParametricSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse_system(in);
}

ProjectiveCurve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse_curve(in);
}

void emit_classification(Report& rep, const ClassificationReport& cr, bool with_max = true) {
  rep.kv("delta", cr.delta);
  rep.kv("w", cr.w.str());
  rep.kv("regions", cr.regions.size());
  for (const auto& rg : cr.regions) {
    std::ostringstream os;
    os << rg.descriptor << " | sample " << point_str(rg.sample) << " | real " << rg.real
       << " | complex " << rg.complex_distinct;
    rep.kv("region", os.str());
  }
  for (const auto& bp : cr.boundary) {
    std::ostringstream os;
    os << alg_str(bp.point) << " | real "
       << (bp.real ? std::to_string(*bp.real) : std::string("unresolved")) << " | complex "
       << (bp.complex_distinct ? std::to_string(*bp.complex_distinct) : std::string("unresolved"))
       << " | method " << bp.method;
    if (!bp.minor_signs.empty()) {
      os << " | minors";
      for (int s : bp.minor_signs) os << ' ' << s;
    }
    rep.kv("boundary", os.str());
  }
  if (with_max) rep.kv("max-real", cr.max_real);
  for (const auto& u : cr.unresolved) rep.kv("unresolved", u);
}

int emit_witness(Report& rep, const WitnessResult& wr, int target) {
  rep.kv("target", target);
  if (wr.point) {
    rep.kv("verdict", "WITNESS");
    rep.kv("point", point_str(*wr.point));
    rep.kv("real", wr.real);
    for (const auto& b : wr.boxes) rep.kv("box", box_str(b));
  } else {
    rep.kv("verdict", "ABSENT_ON_SAMPLED_CELLS");
  }
  for (const auto& u : wr.unresolved) rep.kv("unresolved", u);
  return wr.point ? kOk : (wr.unresolved.empty() ? kOk : kUnresolved);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real-solution classification for parametric polynomial systems "
               "and totally real sections of curves"};
  app.require_subcommand(1);

  unsigned seed = 20240801;
  int jobs = 1;
  if (const char* env = std::getenv("TRSECT_JOBS")) jobs = std::max(1, std::atoi(env));
  std::string output_file;
  app.add_option("--seed", seed, "random seed for witness search and the oracle");
  app.add_option("--jobs", jobs, "parallel chart passes");
  app.add_option("--output", output_file, "also write the report to a file");

  std::string sys_file, curve_file, q1_text, q2_text, chart_opt, hyperplane_opt;
  int target = -1, tries = 400;
  double max_minutes = 0;
  bool all_charts = false;

  auto* matrix_cmd = app.add_subcommand("matrix", "print the parametric Hermite matrix");
  matrix_cmd->add_option("system", sys_file, "system file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "classify real solution counts");
  classify_cmd->add_option("system", sys_file, "system file")->required();

  auto* witness_cmd = app.add_subcommand("witness", "search a parameter point with a "
                                                    "prescribed number of real solutions");
  witness_cmd->add_option("system", sys_file, "system file")->required();
  witness_cmd->add_option("--target-count", target, "required real count")->required();
  witness_cmd->add_option("--tries", tries, "randomized attempts before certified cells");

  auto* section_cmd = app.add_subcommand("section", "search a totally real hyperplane section");
  section_cmd->add_option("curve", curve_file, "curve file")->required();
  section_cmd->add_option("--target-count", target, "required real count (default: delta)");
  section_cmd->add_option("--chart", chart_opt,
                          "i,j: normalize coefficient i, dehomogenize at j (single pass)");
  section_cmd->add_flag("--all-charts", all_charts, "cover all strata (default)");
  section_cmd->add_option("--tries", tries, "randomized attempts per pass");
  section_cmd->add_option("--max-minutes", max_minutes, "advisory budget, recorded only");

  auto* fiber_cmd = app.add_subcommand("fiber", "classify the fibers of a pencil on a plane curve");
  fiber_cmd->add_option("curve", curve_file, "plane curve file")->required();
  fiber_cmd->add_option("q1", q1_text, "first homogeneous form")->required();
  fiber_cmd->add_option("q2", q2_text, "second homogeneous form")->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify a hyperplane section or count a "
                                                  "parameter-free system with the oracle");
  verify_cmd->add_option("input", curve_file, "curve file (with --hyperplane) or system file")
      ->required();
  verify_cmd->add_option("--hyperplane", hyperplane_opt, "comma-separated coefficients");

  CLI11_PARSE(app, argc, argv);

  Report rep;
  rep.output_file = output_file;
  auto started = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*matrix_cmd) {
      manifest(rep, "matrix", {sys_file}, "", seed);
      auto sys = load_system(sys_file);
      auto H = hermite_matrix(sys);
      rep.kv("delta", H.dim());
      for (const auto& b : H.basis()) {
        std::string mono;
        for (size_t i = sys.vars->nparams(); i < sys.vars->size(); ++i) {
          if (!b[i]) continue;
          if (!mono.empty()) mono += "*";
          mono += sys.vars->name(i);
          if (b[i] > 1) mono += "^" + std::to_string(b[i]);
        }
        rep.kv("basis", mono.empty() ? "1" : mono);
      }
      for (size_t i = 0; i < H.dim(); ++i)
        for (size_t j = i; j < H.dim(); ++j) {
          std::ostringstream os;
          os << i << " " << j << " | " << H.entry(i, j).num().str();
          if (!H.entry(i, j).den().is_constant()) os << " / " << H.entry(i, j).den().str();
          rep.kv("entry", os.str());
        }
      rep.kv("winfty", H.winfty().str());
      rep.kv("gb-winfty", H.gb_winfty().str());
      rep.kv("wh", H.wh().str());
      rep.kv("w", H.w().str());
    } else if (*classify_cmd) {
      manifest(rep, "classify", {sys_file}, "", seed);
      auto sys = load_system(sys_file);
      auto cr = sys.vars->nparams() == 1 ? classify_1param(sys) : classify_multiparam(sys);
      emit_classification(rep, cr);
      if (!cr.unresolved.empty()) code = kUnresolved;
    } else if (*witness_cmd) {
      manifest(rep, "witness", {sys_file}, "--target-count=" + std::to_string(target), seed);
      auto sys = load_system(sys_file);
      code = emit_witness(rep, find_witness(sys, target, seed, tries), target);
    } else if (*section_cmd) {
      std::string flags;
      if (target >= 0) flags += "--target-count=" + std::to_string(target);
      if (!chart_opt.empty()) flags += (flags.empty() ? "" : " ") + ("--chart=" + chart_opt);
      manifest(rep, "section", {curve_file}, flags, seed);
      auto curve = load_curve(curve_file);
      if (!chart_opt.empty()) {
        auto comma = chart_opt.find(',');
        if (comma == std::string::npos)
          throw std::invalid_argument("--chart expects i,j");
        size_t ni = std::stoul(chart_opt.substr(0, comma));
        size_t cj = std::stoul(chart_opt.substr(comma + 1));
        auto sp = section_system(curve, ni, cj);
        rep.kv("delta", sp.delta);
        int want = target >= 0 ? target : static_cast<int>(sp.delta);
        code = emit_witness(rep, find_witness(sp.system, want, seed, tries), want);
      } else {
        auto sv = totally_real_section(curve, SIZE_MAX, seed, tries, jobs);
        rep.kv("delta", sv.delta);
        if (target >= 0 && static_cast<size_t>(target) != sv.delta)
          throw std::invalid_argument("--target-count must equal the section degree");
        rep.kv("verdict", sv.found ? "WITNESS" : "NONE_SIMPLE");
        if (sv.found) {
          rep.kv("hyperplane", point_str(sv.hyperplane));
          rep.kv("real", sv.real);
          for (const auto& b : sv.boxes) rep.kv("box", box_str(b));
        }
        rep.kv("infinity-real", sv.inf_real);
        rep.kv("infinity-complex", sv.inf_complex);
        for (const auto& u : sv.unresolved) rep.kv("unresolved", u);
        if (!sv.found && !sv.unresolved.empty()) code = kUnresolved;
      }
    } else if (*fiber_cmd) {
      manifest(rep, "fiber", {curve_file}, "", seed);
      auto curve = load_curve(curve_file);
      auto q1 = parse_mpoly(q1_text, curve.coords);
      auto q2 = parse_mpoly(q2_text, curve.coords);
      auto fr = fiber_classify(curve.equations[0], q1, q2);
      emit_classification(rep, fr.affine, false);
      rep.kv("infinity-real", fr.inf_real);
      rep.kv("infinity-complex", fr.inf_complex);
      rep.kv("max-real", fr.max_real);
      rep.kv("totally-real-fiber", fr.totally_real ? "yes" : "no");
      if (!fr.unresolved.empty()) code = kUnresolved;
    } else if (*verify_cmd) {
      if (!hyperplane_opt.empty()) {
        manifest(rep, "verify", {curve_file}, "--hyperplane=" + hyperplane_opt, seed);
        auto curve = load_curve(curve_file);
        std::vector<Rational> coeffs;
        std::stringstream ss(hyperplane_opt);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
        auto vr = verify_hyperplane(curve, coeffs);
        rep.kv("dim", vr.dim);
        rep.kv("real", vr.real);
        rep.kv("complex", vr.complex_distinct);
        for (const auto& b : vr.boxes) rep.kv("box", box_str(b));
        if (vr.complex_distinct < static_cast<int>(vr.dim))
          rep.kv("note", "multiple intersection point: rank below the section degree");
      } else {
        manifest(rep, "verify", {curve_file}, "", seed);
        auto sys = load_system(curve_file);
        if (sys.vars->nparams() != 0)
          throw std::invalid_argument("oracle verification needs a parameter-free system");
        auto o = oracle_count(sys.equations, seed);
        rep.kv("real", o.real_distinct);
        rep.kv("complex", o.complex_distinct);
        for (const auto& b : o.real_boxes) rep.kv("box", box_str(b));
      }
    }
  } catch (const NotZeroDimensional& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const OracleNotZeroDimensional& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NonSpecializable& e) {
    std::cerr << "error: " << e.what() << " (try another chart)\n";
    return kPrecondition;
  } catch (const DegreeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const TooManyParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  rep.flush();
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::cerr << "# elapsed " << secs << "s\n";
  (void)max_minutes;
  (void)all_charts;
  return code;
}
