#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trilinear/cremona.hpp"
#include "trilinear/en_resolution.hpp"
#include "trilinear/generator.hpp"
#include "trilinear/report.hpp"
#include "trilinear/verify.hpp"

using namespace trilinear;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stderr)); }

void report_error(const std::string& msg) {
  if (use_color()) {
    std::cerr << "\033[31merror:\033[0m " << msg << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
}

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

void emit(const Json& j, const std::string& out) {
  std::string text = dump(j);
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << text;
}

std::set<std::string> split_commas(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

TriTensor load_tensor(const std::string& path, const std::string& fixture_name, const std::string& field) {
  TriTensor t = fixture_name.empty() ? read_tensor(read_input(path)) : fixture(fixture_name);
  if (!field.empty()) {
    Field f = Field::parse(field);
    if (f != t.field()) {
      if (!f.is_prime() || !t.field().is_rational()) throw InputError("can only reduce a rational tensor to Fp");
      t = t.reduce_mod(f.modulus());
    }
  }
  return t;
}

Json complex_json(const GradedComplex& c, int twist) {
  Json terms = Json::array();
  for (const auto& t : c.terms) {
    terms.push_back({{"label", t.label()},
                     {"kind", t.kind == ComplexTerm::Kind::Symmetric ? "symmetric" : "divided"},
                     {"exterior", t.exterior},
                     {"power", t.power},
                     {"twist", t.twist},
                     {"rank", t.rank()}});
  }
  Json diffs = Json::array();
  for (const auto& d : c.differentials) {
    Json rows = Json::array();
    for (const auto& row : d) {
      Json r = Json::array();
      for (const auto& entry : row) {
        Json coeffs = Json::array();
        for (std::size_t v = 0; v < c.nvars; ++v) {
          Exponent e{};
          e[v] = 1;
          coeffs.push_back(entry.coefficient(e).to_string());
        }
        r.push_back(coeffs);
      }
      rows.push_back(r);
    }
    diffs.push_back({{"rows", d.size()}, {"cols", d.empty() ? 0 : d[0].size()}, {"entries", rows}});
  }
  auto dd = verify_dd_zero(c);
  auto hf = hilbert_function(c, 0, 6);
  Json out{{"schema", "en-complex/1"},
           {"twist", twist},
           {"regime", c.regime},
           {"field", c.field.name()},
           {"variables", c.nvars},
           {"terms", terms},
           {"differentials", diffs},
           {"dd_zero", dd.ok},
           {"alternating_rank_sum", c.alternating_rank_sum()},
           {"hilbert_function", {{"degrees", hf.degrees}, {"values", hf.values}}}};
  if (!dd.ok) out["first_nonzero"] = dd.first_nonzero;
  return out;
}

Json trace_json(const DivisorClass& c) {
  auto trace = reduce(c);
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"before", s.before.to_string()},
                     {"triple", {s.triple[0], s.triple[1], s.triple[2]}},
                     {"after", s.after.to_string()}});
  }
  auto d = dcheck(c);
  return Json{{"input", c.to_string()},
              {"steps", steps},
              {"terminal", trace.terminal.to_string()},
              {"negative_entries", trace.negative_entries},
              {"stalls", trace.stalls},
              {"nef", is_nef(c)},
              {"dcheck", {{"d", d.d.to_string()}, {"dh", d.dh}, {"dd", d.dd}, {"ok", d.ok()}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for (3,3,4) tensors, their cubic surfaces and the kernel bundle"};
  app.require_subcommand(1);
  std::string out;

  auto* gen = app.add_subcommand("gen", "Write a tensor as JSON");
  std::string kind = "random-entries", fixture_name, field = "Q", points;
  std::uint64_t seed = 0;
  long bound = 5;
  gen->add_option("--kind", kind, "random-entries | from-points | fixture")
      ->check(CLI::IsMember({"random-entries", "from-points", "fixture"}));
  gen->add_option("--fixture", fixture_name, "Fixture name (implies --kind fixture)");
  gen->add_option("--seed", seed, "Seed for random entries");
  gen->add_option("--field", field, "Q or Fp:<p>");
  gen->add_option("--bound", bound, "Entries drawn from [-bound, bound]")->check(CLI::Range(0L, 1000000L));
  gen->add_option("--points", points, "Six points such as \"(1:0:0),(0:1:0),...\"");
  gen->add_option("--out", out, "Output file");

  auto* an = app.add_subcommand("analyze", "Run every check on a tensor and print a report");
  std::string input;
  std::uint32_t scan_prime = 101;
  std::string skip, analyze_field;
  bool no_timing = false;
  an->add_option("tensor", input, "Tensor JSON file, or - for stdin");
  an->add_option("--fixture", fixture_name, "Analyze a fixture instead of a file");
  an->add_option("--field", analyze_field, "Reduce the tensor to Fp:<p> first");
  an->add_option("--scan-prime", scan_prime, "Prime for exhaustive scans");
  an->add_option("--skip", skip, "Comma-separated checks to skip");
  an->add_flag("--no-timing", no_timing, "Drop elapsed_ms fields");
  an->add_option("--out", out, "Output file");

  auto* ver = app.add_subcommand("verify", "Property suites over seeded random instances");
  std::string suite = "all";
  std::size_t trials = 10;
  ver->add_option("--suite", suite, "involution | schur | cohomology | cremona | en | all");
  ver->add_option("--trials", trials, "Random instances per suite");
  ver->add_option("--seed", seed, "Seed");
  ver->add_option("--out", out, "Output file");

  auto* cr = app.add_subcommand("cremona", "Reduce a divisor class n:a1,...,a6 by Cremona transformations");
  std::string klass;
  long enumerate = -1;
  cr->add_option("class", klass, "Class such as 10:4,4,4,4,4,4");
  cr->add_option("--enumerate", enumerate, "List every solution with n up to this bound instead");
  cr->add_option("--out", out, "Output file");

  auto* en = app.add_subcommand("en", "Build the Eagon-Northcott type complex for a twist");
  int twist = 1;
  std::string order = "as-is";
  std::uint32_t gamma_prime = 0;
  en->add_option("tensor", input, "Tensor JSON file, or - for stdin");
  en->add_option("--fixture", fixture_name, "Use a fixture instead of a file");
  en->add_option("--field", analyze_field, "Reduce the tensor to Fp:<p> first");
  en->add_option("--twist", twist, "Twist t")->required();
  en->add_option("--order", order, "as-is | v-first")->check(CLI::IsMember({"as-is", "v-first"}));
  en->add_option("--scan-prime", gamma_prime, "Also list incidence points over this prime");
  en->add_option("--out", out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      GeneratorSpec spec;
      spec.seed = seed;
      spec.field = Field::parse(field);
      spec.bound = bound;
      spec.points = points;
      spec.fixture = fixture_name;
      if (!fixture_name.empty() || kind == "fixture") {
        if (fixture_name.empty()) throw InputError("--kind fixture needs --fixture");
        spec.kind = GeneratorSpec::Kind::Fixture;
      } else if (kind == "from-points") {
        if (points.empty()) throw InputError("--kind from-points needs --points");
        spec.kind = GeneratorSpec::Kind::FromPoints;
      }
      emit(tensor_to_json(generate(spec)), out);
      return kExitOk;
    }
    if (*an) {
      if (input.empty() && fixture_name.empty()) throw InputError("analyze needs a tensor file or --fixture");
      AnalyzeOptions opts;
      opts.scan_prime = scan_prime;
      opts.skip = split_commas(skip);
      auto result = analyze(load_tensor(input, fixture_name, analyze_field), opts);
      emit(no_timing ? strip_timing(result.report) : result.report, out);
      return result.exit_code;
    }
    if (*ver) {
      auto result = verify(suite, trials, seed);
      emit(result.report, out);
      return result.exit_code;
    }
    if (*cr) {
      if (enumerate >= 0) {
        Json list = Json::array();
        for (const auto& c : enumerate_nn2(enumerate)) list.push_back(trace_json(c));
        emit(Json{{"schema", "cremona/1"}, {"n_max", enumerate}, {"solutions", list}}, out);
        return kExitOk;
      }
      if (klass.empty()) throw InputError("cremona needs a class or --enumerate");
      Json j = trace_json(DivisorClass::parse(klass));
      j["schema"] = "cremona/1";
      emit(j, out);
      return kExitOk;
    }
    if (*en) {
      if (input.empty() && fixture_name.empty()) throw InputError("en needs a tensor file or --fixture");
      TriTensor t = load_tensor(input, fixture_name, analyze_field);
      if (order == "v-first") t = v_first(t);
      auto c = en_complex(t, twist);
      Json j = complex_json(c, twist);
      if (gamma_prime != 0) {
        if (!is_prime_u64(gamma_prime) || gamma_prime > 2000) throw InputError("--scan-prime must be a prime below 2000");
        auto g = gamma_points(t, gamma_prime);
        Json pairs = Json::array();
        for (const auto& [x, y] : g.pairs) pairs.push_back({x.to_string(), y.to_string()});
        j["incidence"] = {{"field", Field::prime(gamma_prime).name()}, {"pairs", pairs}, {"saturated", g.saturated}};
      }
      emit(j, out);
      return j["dd_zero"].get<bool>() ? kExitOk : kExitCheckFailed;
    }
  } catch (const InputError& e) {
    report_error(e.what());
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    report_error(e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    report_error(e.what());
    return kExitCheckFailed;
  }
  return kExitOk;
}
