#include "gatom/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace gatom {

namespace {

using cplx = std::complex<double>;

// (G7, K15) pair; positive abscissae, symmetric rule.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct PanelResult {
  cplx value;
  double err;
};

PanelResult gk15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  cplx fv[15];
  const cplx fc = f(c);
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
  }
  fv[7] = fc;

  cplx resg = kWg[3] * fc;
  for (int j = 0; j < 3; ++j) {
    resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
  }
  cplx resk = kWgk[7] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
  }
  const cplx reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
  }

  double err = std::abs(resk - resg) * h;
  resasc *= h;
  resabs *= h;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * eps * resabs);
  return {resk * h, err};
}

struct Interval {
  double a, b;
  cplx value;
  double err;
};

struct ByError {
  bool operator()(const Interval& x, const Interval& y) const { return x.err < y.err; }
};

}  // namespace

namespace {

// Globally adaptive refinement over an initial partition given by `cuts`
// (ascending interval endpoints, cuts.size() >= 2).
QuadResult adapt_gk(const Integrand& f, const std::vector<double>& cuts, const QuadSpec& spec) {
  std::priority_queue<Interval, std::vector<Interval>, ByError> heap;
  cplx total = 0.0;
  double total_err = 0.0;
  int panels = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    PanelResult r = gk15(f, cuts[i], cuts[i + 1]);
    heap.push({cuts[i], cuts[i + 1], r.value, r.err});
    total += r.value;
    total_err += r.err;
    ++panels;
  }

  auto tolerance = [&]() { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

  // NaN-safe form: a non-finite error estimate must enter the loop and throw,
  // not compare false and return garbage.
  while (!(total_err <= tolerance())) {
    if (!std::isfinite(total_err) || !std::isfinite(std::abs(total))) {
      throw NonConvergence("integrand produced a non-finite value", total, total_err);
    }
    if (panels >= spec.max_subdivisions) {
      throw NonConvergence("quadrature did not converge within the subdivision budget", total,
                           total_err);
    }
    if (heap.empty()) break;
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; keep its estimate and stop
      // splitting it by treating the error as converged roundoff.
      total_err -= worst.err;
      continue;
    }
    PanelResult left = gk15(f, worst.a, mid);
    PanelResult right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push({worst.a, mid, left.value, left.err});
    heap.push({mid, worst.b, right.value, right.err});
    ++panels;
  }
  return {total, total_err, panels};
}

// [a, b] split at every in-range breakpoint, deduplicated; always at least
// the interval itself.
std::vector<double> partition(double a, double b, const std::vector<double>& breakpoints) {
  std::vector<double> cuts{a, b};
  for (double x : breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  const double min_len = 1e-12 * (b - a);
  std::vector<double> out{cuts.front()};
  for (double x : cuts) {
    if (x - out.back() > min_len) out.push_back(x);
  }
  if (out.size() < 2) {
    out.push_back(b);
  } else {
    out.back() = b;  // a kept breakpoint within min_len of b stands in for it
  }
  return out;
}

}  // namespace

QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadSpec& spec) {
  return adapt_gk(f, {a, b}, spec);
}

QuadResult integrate(const Integrand& f, const QuadSpec& spec) {
  if (!(spec.truncation > 0.0)) {
    throw InvalidParams("integration window not resolved: truncation must be positive");
  }
  return adapt_gk(f, partition(-spec.truncation, spec.truncation, spec.breakpoints), spec);
}

namespace {

cplx simpson(const cplx& fa, const cplx& fm, const cplx& fb, double h) {
  return (h / 6.0) * (fa + 4.0 * fm + fb);
}

struct SimpsonFrame {
  double a, b;
  cplx fa, fm, fb;
  cplx whole;
  double tol;
};

}  // namespace

QuadResult integrate_simpson(const Integrand& f, const QuadSpec& spec) {
  if (!(spec.truncation > 0.0)) {
    throw InvalidParams("integration window not resolved: truncation must be positive");
  }
  const double A = -spec.truncation, B = spec.truncation;

  // Seed estimate for the relative-tolerance scale.
  cplx rough = 0.0;
  const int seed_n = 64;
  for (int i = 0; i < seed_n; ++i) {
    double x0 = A + (B - A) * i / seed_n;
    double x1 = A + (B - A) * (i + 1) / seed_n;
    rough += simpson(f(x0), f(0.5 * (x0 + x1)), f(x1), x1 - x0);
  }
  const double tol0 = std::max(spec.abs_tol, spec.rel_tol * std::abs(rough));

  cplx total = 0.0;
  double total_err = 0.0;
  int panels = 0;

  // Seed the recursion at the breakpoints too; tolerance apportioned by
  // segment length so the total stays at tol0.
  std::vector<SimpsonFrame> stack;
  const std::vector<double> cuts = partition(A, B, spec.breakpoints);
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    const double a = cuts[j], b = cuts[j + 1];
    cplx fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    stack.push_back({a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol0 * (b - a) / (B - A)});
  }
  while (!stack.empty()) {
    SimpsonFrame fr = stack.back();
    stack.pop_back();
    if (++panels > 8 * spec.max_subdivisions) {
      throw NonConvergence("simpson rule did not converge within the subdivision budget",
                           total + fr.whole, total_err);
    }
    const double m = 0.5 * (fr.a + fr.b);
    const cplx flm = f(0.5 * (fr.a + m));
    const cplx frm = f(0.5 * (m + fr.b));
    const cplx left = simpson(fr.fa, flm, fr.fm, m - fr.a);
    const cplx right = simpson(fr.fm, frm, fr.fb, fr.b - m);
    const cplx delta = left + right - fr.whole;
    if (std::abs(delta) <= 15.0 * fr.tol || m - fr.a < 1e-14 * (B - A)) {
      total += left + right + delta / 15.0;
      total_err += std::abs(delta) / 15.0;
    } else {
      stack.push_back({fr.a, m, fr.fa, flm, fr.fm, left, 0.5 * fr.tol});
      stack.push_back({m, fr.b, fr.fm, frm, fr.fb, right, 0.5 * fr.tol});
    }
  }
  return {total, total_err, panels};
}

double default_truncation(const GaussianPulse& pulse, std::complex<double> pole) {
  return std::max(10.0 / pulse.width, std::abs(pole.real()) + 20.0 * std::abs(pole.imag()));
}

}  // namespace gatom
