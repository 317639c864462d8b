#include "trilinear/cremona.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace trilinear {

std::string DivisorClass::to_string() const {
  std::string s = "(" + std::to_string(n) + ";";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

DivisorClass DivisorClass::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("divisor class must look like n:a1,...,a6");
  DivisorClass c;
  std::size_t used = 0;
  try {
    c.n = std::stol(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing characters");
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    std::size_t count = 0;
    while (std::getline(rest, item, ',')) {
      if (count == 6) throw std::invalid_argument("too many entries");
      c.a[count++] = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument("trailing characters");
    }
    if (count != 6) throw std::invalid_argument("need six entries");
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("bad divisor class '" + text + "': " + e.what());
  }
  return c;
}

DivisorClass DivisorClass::sorted() const {
  DivisorClass c = *this;
  std::sort(c.a.begin(), c.a.end(), std::greater<>());
  return c;
}

DivisorClass hyperplane_class() { return {3, {1, 1, 1, 1, 1, 1}}; }

long pairing(const DivisorClass& x, const DivisorClass& y) {
  long s = x.n * y.n;
  for (std::size_t i = 0; i < 6; ++i) s -= x.a[i] * y.a[i];
  return s;
}

const std::vector<DivisorClass>& exceptional_curves() {
  static const std::vector<DivisorClass> curves = [] {
    std::vector<DivisorClass> out;
    for (std::size_t i = 0; i < 6; ++i) {
      DivisorClass e;
      e.a[i] = -1;
      out.push_back(e);
    }
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        DivisorClass l{1, {}};
        l.a[i] = l.a[j] = 1;
        out.push_back(l);
      }
    }
    for (std::size_t i = 0; i < 6; ++i) {
      DivisorClass q{2, {1, 1, 1, 1, 1, 1}};
      q.a[i] = 0;
      out.push_back(q);
    }
    return out;
  }();
  return curves;
}

bool is_nef(const DivisorClass& c) {
  const auto& curves = exceptional_curves();
  return std::all_of(curves.begin(), curves.end(), [&](const DivisorClass& e) { return pairing(c, e) >= 0; });
}

bool satisfies_nn2(const DivisorClass& c) {
  long sum = std::accumulate(c.a.begin(), c.a.end(), 0L);
  return pairing(c, c) == 4 && 3 * c.n == sum + 6;
}

DivisorClass cremona(const DivisorClass& c, const Triple& t) {
  auto [i, j, k] = t;
  if (i >= 6 || j >= 6 || k >= 6 || i == j || j == k || i == k) {
    throw std::invalid_argument("Cremona triple needs three distinct indices in 0..5");
  }
  DivisorClass out = c;
  out.n = 2 * c.n - c.a[i] - c.a[j] - c.a[k];
  out.a[i] = c.n - c.a[j] - c.a[k];
  out.a[j] = c.n - c.a[i] - c.a[k];
  out.a[k] = c.n - c.a[i] - c.a[j];
  return out;
}

ReductionTrace reduce(const DivisorClass& c, std::size_t max_steps) {
  if (!satisfies_nn2(c)) throw PreconditionError(c.to_string() + " does not satisfy n^2 = sum a^2 + 4, 3n = sum a + 6");
  if (std::any_of(c.a.begin(), c.a.end(), [](long v) { return v < 0; })) {
    throw PreconditionError(c.to_string() + " has a negative entry");
  }
  ReductionTrace trace;
  DivisorClass cur = c.sorted();
  while (cur.n > 3) {
    if (trace.steps.size() == max_steps) {
      throw NonTermination("reduction of " + c.to_string() + " did not reach n <= 3 in " + std::to_string(max_steps) +
                           " steps");
    }
    // stable sort descending keeps the lowest index first among ties
    std::array<std::size_t, 6> order{0, 1, 2, 3, 4, 5};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return cur.a[x] > cur.a[y]; });
    Triple t{order[0], order[1], order[2]};
    std::sort(t.begin(), t.end());
    DivisorClass next = cremona(cur, t);
    std::string label = "step " + std::to_string(trace.steps.size()) + ": " + cur.to_string() + " -> " + next.to_string();
    if (std::any_of(next.a.begin(), next.a.end(), [](long v) { return v < 0; })) trace.negative_entries.push_back(label);
    if (next.n >= cur.n) trace.stalls.push_back(label);
    trace.steps.push_back({cur, t, next});
    cur = next.sorted();
  }
  trace.terminal = cur;
  return trace;
}

std::vector<DivisorClass> enumerate_nn2(long n_max) {
  if (n_max > 64) throw std::invalid_argument("enumeration bound is at most 64");
  std::vector<DivisorClass> out;
  for (long n = 0; n <= n_max; ++n) {
    const long sum = 3 * n - 6;
    const long squares = n * n - 4;
    if (sum < 0 || squares < 0) continue;
    DivisorClass c;
    c.n = n;
    // Fill a[pos..5] descending, each ≤ cap, with the remaining sum and square sum.
    std::function<void(std::size_t, long, long, long)> fill = [&](std::size_t pos, long cap, long s, long q) {
      const long slots = static_cast<long>(6 - pos);
      if (slots == 0) {
        if (s == 0 && q == 0) out.push_back(c);
        return;
      }
      // Squares are at least s²/slots and at most cap·s.
      if (q * slots < s * s || q > cap * s) return;
      for (long v = std::min(cap, s); v >= 0; --v) {
        if (v * slots < s) break;
        if (v * v > q) continue;
        c.a[pos] = v;
        fill(pos + 1, v, s - v, q - v * v);
      }
    };
    fill(0, sum, sum, squares);
  }
  return out;
}

DCheck dcheck(const DivisorClass& c) {
  if (!satisfies_nn2(c)) throw PreconditionError(c.to_string() + " does not satisfy n^2 = sum a^2 + 4, 3n = sum a + 6");
  DCheck out;
  DivisorClass h = hyperplane_class();
  out.d.n = c.n - h.n;
  for (std::size_t i = 0; i < 6; ++i) out.d.a[i] = c.a[i] - h.a[i];
  out.dh = pairing(out.d, h);
  out.dd = pairing(out.d, out.d);
  return out;
}

}  // namespace trilinear
