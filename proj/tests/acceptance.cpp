// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "trilinear/cohomology.hpp"
#include "trilinear/cremona.hpp"
#include "trilinear/en_resolution.hpp"
#include "trilinear/generator.hpp"
#include "trilinear/hilbert_burch.hpp"
#include "trilinear/schur.hpp"
#include "trilinear/tensor_io.hpp"

using namespace trilinear;

namespace {

const Field Q = Field::rationals();

struct Outcome {
  bool pass = false;
  std::string detail;
};

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(Q, x));
  return v;
}

std::vector<long> as_longs(const TruncatedSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coefficients()) out.push_back(c.rational().get_num().get_si());
  return out;
}

std::string join(const std::vector<long>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

TriTensor random_generic(std::mt19937_64& rng) {
  for (;;) {
    TriTensor t = random_tensor(rng, {3, 3, 4}, Q, 5);
    if (main_assumption(t)) return t;
  }
}

Outcome c1_chern() {
  TruncatedSeries up = TruncatedSeries(Q, 4, {1, 1}).pow(9);
  TruncatedSeries down = TruncatedSeries(Q, 4, {1, 2}).pow(3).inverse();
  auto c = as_longs(chern_polynomial());
  bool ok = as_longs(up) == std::vector<long>{1, 9, 36, 84} && as_longs(down) == std::vector<long>{1, -6, 24, -80} &&
            c == std::vector<long>{1, 3, 6, 4} && up * down == chern_polynomial();
  return {ok, "c(E) = " + join(c) + " from " + join(as_longs(up)) + " * " + join(as_longs(down))};
}

Outcome c2_doublelines() {
  Outcome o{true, ""};
  std::string cubic = det_cubic(fixture("doubleline-1")).to_string();
  if (cubic != "-x0^2*x3 + x1^2*x2") o.pass = false;
  o.detail = "det(doubleline-1) = " + cubic;
  const std::vector<Vector> line{vec({0, 0, 1, 0}), vec({0, 0, 0, 1}), vec({0, 0, 1, 1}), vec({0, 0, 1, 2}),
                                 vec({0, 0, 2, -1})};
  for (const char* name : {"doubleline-1", "doubleline-2"}) {
    TriTensor t = fixture(name);
    std::size_t rank_one = 0;
    for (const auto& y : line) rank_one += rank(slice(t, 2, y)) == 1;
    bool main = main_assumption(t);
    bool image_fails = !main_assumption(cross_product_involution(t).bprime);
    o.pass = o.pass && rank_one == line.size() && main && image_fails;
    o.detail += std::string("; ") + name + ": rank 1 at " + std::to_string(rank_one) + "/5 points of x0=x1=0, main " +
                (main ? "ok" : "fails") + ", image " + (image_fails ? "fails" : "passes");
  }
  return o;
}

Outcome c3_involution() {
  std::mt19937_64 rng(3);
  std::size_t good = 0, resampled = 0;
  for (std::size_t trial = 0; trial < 100;) {
    TriTensor t = random_tensor(rng, {3, 3, 4}, Q, 5);
    if (!main_assumption(t)) {
      ++resampled;
      continue;
    }
    auto first = cross_product_involution(t);
    if (!main_assumption(first.bprime)) {
      ++resampled;
      continue;
    }
    good += cross_product_involution(first.bprime).uprime_basis == u_subspace(t);
    ++trial;
  }
  return {good == 100, std::to_string(good) + "/100 with U'' = U, " + std::to_string(resampled) + " resampled"};
}

Outcome c4_schur() {
  std::mt19937_64 rng(4);
  std::vector<TriTensor> cases{fixture("cayley6")};
  for (int i = 0; i < 10; ++i) cases.push_back(random_generic(rng));
  std::size_t good = 0;
  std::set<std::string> conventions;
  for (const auto& t : cases) {
    DenseMatrix s = schur_map(t);
    auto q = schur_quadric(t);
    auto cc = cubic_correspondence_check(t);
    bool ok = rank(s) == 9 && matrix_kernel(s).size() == 1 && q.nondegenerate && schur_carries_u_to_uprime(t) &&
              schur_quadric(trivial_involution(t)).q == q.q && cc.ok;
    if (cc.ok) conventions.insert(cc.convention);
    good += ok;
  }
  std::string conv = conventions.size() == 1 ? *conventions.begin() : std::to_string(conventions.size()) + " conventions";
  return {good == cases.size() && conventions.size() == 1,
          std::to_string(good) + "/" + std::to_string(cases.size()) + " tensors, convention " + conv};
}

Outcome c5_double_six() {
  std::mt19937_64 rng(5);
  std::vector<std::pair<std::string, DoubleSix>> found;
  std::vector<SchurQuadric> quadrics;
  auto add = [&](const std::string& label, const TriTensor& t, BasePointMode mode) {
    try {
      auto ds = double_six(t, mode);
      if (ds.matching.size() != 6) return;
      found.emplace_back(label, std::move(ds));
      quadrics.push_back(schur_quadric(t));
    } catch (const DoubleSixError&) {
    }
  };
  add("cayley6/Q", fixture("cayley6"), BasePointMode::minors());
  for (int i = 0; found.size() < 4 && i < 20; ++i) {
    TriTensor t = points_to_tensor(random_general_points(rng, Q, 5));
    std::size_t before = found.size();
    add("points#" + std::to_string(i) + "/Q", t, BasePointMode::minors());
    if (found.size() == before) add("points#" + std::to_string(i) + "/F1009", t.reduce_mod(1009), BasePointMode::scan(1009));
  }
  std::size_t good = 0;
  std::string labels;
  for (std::size_t i = 0; i < found.size(); ++i) {
    auto r = orthogonality_check(quadrics[i], found[i].second);
    good += r.ok && r.exact_zeros == 24 && r.cross_pair_nonzero;
    labels += (i ? "," : "") + found[i].first;
  }
  return {found.size() >= 3 && good == found.size(),
          std::to_string(good) + "/" + std::to_string(found.size()) + " double sixes with 24 exact zeros (" + labels + ")"};
}

Outcome c6_hilbert_burch() {
  std::mt19937_64 rng(6);
  std::size_t good = 0;
  for (int i = 0; i < 20; ++i) {
    auto pts = random_general_points(rng, Q, 5);
    auto bp = base_points(points_to_tensor(pts), Side::U, BasePointMode::minors());
    std::vector<PlanePoint> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    auto cubics = cubics_through_points(pts);
    good += bp.complete && bp.points == sorted && same_span(maximal_minors(linear_syzygies(cubics)), cubics);
  }
  return {good == 20, std::to_string(good) + "/20 configurations round-trip"};
}

Outcome c7_cohomology() {
  std::mt19937_64 rng(7);
  const std::array<std::array<long, 3>, 5> expected{{{0, 6, 0}, {-1, 0, 3}, {-2, 0, 3}, {-3, 0, 0}, {-4, 0, 0}}};
  std::size_t good = 0;
  for (int i = 0; i < 10; ++i) {
    auto table = cohomology_table(KernelBundleModel(points_to_tensor(random_general_points(rng, Q, 5))), -4, 4);
    bool ok = true;
    for (auto [n, h0, h1] : expected) ok = ok && table.at(n).h[0] == h0 && table.at(n).h[1] == h1;
    for (long n = -1; n <= 4; ++n) ok = ok && table.at(n).h[0] - table.at(n).h[1] == euler_characteristic(n);
    good += ok;
  }
  return {good == 10, std::to_string(good) + "/10 tables minimal with h0-h1 = chi on [-1,4]"};
}

Outcome c8_degeneracy() {
  std::mt19937_64 rng(8);
  std::vector<std::pair<std::string, TriTensor>> cases{{"cayley6", fixture("cayley6")}};
  for (int i = 0; i < 2; ++i)
    cases.emplace_back("points#" + std::to_string(i), points_to_tensor(random_general_points(rng, Q, 5)));
  std::size_t good = 0;
  std::string detail;
  for (const auto& [label, t] : cases) {
    auto r = degeneracy_locus_check(KernelBundleModel(t), 101);
    good += r.ok && r.mismatches == 0 && r.jumping == 0;
    detail += (detail.empty() ? "" : ", ") + label + " " + std::to_string(r.degenerate) + "=" +
              std::to_string(r.on_cubic);
  }
  return {good == cases.size(), std::to_string(good) + "/3 loci equal the reversed cubic over F_101 (" + detail + ")"};
}

Outcome c9_en() {
  std::mt19937_64 rng(9);
  std::size_t good = 0;
  for (int i = 0; i < 10; ++i) {
    TriTensor t = random_tensor(rng, {3, 3, 4}, Q, 5);
    TriTensor vf = v_first(t);
    std::vector<Vector> pts;
    while (pts.size() < 20) {
      Vector x;
      for (int k = 0; k < 4; ++k) x.push_back(Scalar(Q, static_cast<long>(rng() % 19) - 9));
      if (!is_zero(x) && !on_support(vf, x)) pts.push_back(std::move(x));
    }
    bool ok = true;
    for (int twist = 1; twist <= 3; ++twist) {
      auto c = en_complex(vf, twist);
      auto ex = verify_generic_exactness(c, vf, pts);
      ok = ok && verify_dd_zero(c).ok && ex.conclusive && ex.exact && ex.points_used == 20;
    }
    auto hf = hilbert_function(en_complex(t, 1), 3, 8);
    ok = ok && std::all_of(hf.values.begin(), hf.values.end(), [](long v) { return v == 6; });
    good += ok;
  }
  return {good == 10, std::to_string(good) + "/10 tensors: d*d = 0, exact at 20 points, dualized HF stable at 6"};
}

Outcome c10_cremona() {
  auto sols = enumerate_nn2(64);
  const DivisorClass two{2, {0, 0, 0, 0, 0, 0}}, three{3, {2, 1, 0, 0, 0, 0}};
  std::set<DivisorClass> n4, all_equal;
  std::vector<std::string> exceptions;
  for (const auto& c : sols) {
    if (c.n == 4) n4.insert(c);
    if (std::all_of(c.a.begin(), c.a.end(), [&](long v) { return v == c.a[0]; })) all_equal.insert(c);
    auto term = reduce(c).terminal;
    if (!(term == two || term == three)) exceptions.push_back(c.to_string() + "->" + term.to_string());
  }
  const std::set<DivisorClass> n4_expected{{4, {3, 1, 1, 1, 0, 0}}, {4, {2, 2, 2, 0, 0, 0}}};
  std::set<long> equal_n;
  for (const auto& c : all_equal) equal_n.insert(c.n);
  bool ok = n4 == n4_expected && equal_n == std::set<long>{2, 10} && exceptions.empty();
  std::string detail = std::to_string(sols.size()) + " solutions, " + std::to_string(exceptions.size()) + " exceptions";
  if (!exceptions.empty()) detail += " (first " + exceptions.front() + ")";
  return {ok, detail};
}

std::string capture(const std::string& args) {
  std::string cmd = "NO_COLOR=1 " + std::string(TRILINEAR_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Outcome c11_determinism() {
  std::size_t same = 0, total = 0;
  for (const char* f : {"cayley6", "doubleline-1", "doubleline-2"}) {
    for (const std::string cmd : {"gen --fixture ", "analyze --fixture "}) {
      std::string a = capture(cmd + f), b = capture(cmd + f);
      ++total;
      if (a.empty() || b.empty()) continue;
      same += dump(strip_timing(Json::parse(a))) == dump(strip_timing(Json::parse(b)));
    }
  }
  std::string g1 = capture("gen --seed 11 --bound 5"), g2 = capture("gen --seed 11 --bound 5");
  ++total;
  same += !g1.empty() && g1 == g2;
  return {same == total, std::to_string(same) + "/" + std::to_string(total) + " outputs identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"chern polynomial", c1_chern},         {"doubleline fixtures", c2_doublelines},
      {"involution suite", c3_involution},     {"schur suite", c4_schur},
      {"double-six orthogonality", c5_double_six}, {"hilbert-burch roundtrip", c6_hilbert_burch},
      {"cohomology table", c7_cohomology},     {"degeneracy locus", c8_degeneracy},
      {"eagon-northcott", c9_en},              {"cremona reduction", c10_cremona},
      {"determinism", c11_determinism}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("criterion %2zu %-26s %s  %.2fs  %s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                secs, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
