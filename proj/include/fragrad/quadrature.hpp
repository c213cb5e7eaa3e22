#pragma once

// Globally adaptive Gauss-Kronrod (10/21) quadrature over a list of panels.
//
// The caller supplies panel edges; mandatory split points (resonances,
// carrier periods) go there. The panel with the largest error estimate is
// bisected until the summed error meets the tolerance or the evaluation
// budget runs out. A trailing +infinity edge is handled with x = a / u.
//
// Results are summed in panel order at the end, so the value does not
// depend on the order in which panels were refined.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace fragrad::quad {

struct Options {
  double abs_tol = 0.0;
  double rel_tol = 1e-8;
  std::size_t max_evaluations = 1'000'000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  std::size_t panels = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208931969001, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for the nodes kKronrodNodes[1], [3], ..., [9].
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  std::size_t segment;
};

template <class F>
Panel gauss_kronrod_21(F& f, double a, double b, std::size_t segment) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrodWeights[10] * fc;
  double gauss = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss), segment};
}

}  // namespace detail

/// Integrates f over [edges.front(), edges.back()]. edges must be strictly
/// increasing; the last edge may be +infinity if the one before it is > 0.
template <class F>
Result integrate(F&& f, std::span<const double> edges, const Options& opts = {}) {
  using detail::Panel;
  Result out;
  if (edges.size() < 2) return out;

  const double inf = std::numeric_limits<double>::infinity();
  const bool infinite_tail = edges.back() == inf;
  const std::size_t tail_segment = edges.size() - 2;
  const double tail_start = infinite_tail ? edges[edges.size() - 2] : 0.0;

  std::size_t evaluations = 0;
  auto counted = [&](double x) {
    ++evaluations;
    return f(x);
  };
  // [tail_start, inf) becomes u in (0, 1] with x = tail_start / u.
  auto mapped = [&](double u) {
    ++evaluations;
    const double x = tail_start / u;
    return f(x) * tail_start / (u * u);
  };
  auto evaluate = [&](double a, double b, std::size_t segment) {
    if (infinite_tail && segment == tail_segment) {
      return detail::gauss_kronrod_21(mapped, a, b, segment);
    }
    return detail::gauss_kronrod_21(counted, a, b, segment);
  };

  std::vector<Panel> panels;
  panels.reserve(2 * edges.size());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (infinite_tail && i == tail_segment) {
      panels.push_back(evaluate(0.0, 1.0, i));
    } else {
      panels.push_back(evaluate(edges[i], edges[i + 1], i));
    }
  }

  auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::make_heap(panels.begin(), panels.end(), by_error);

  auto totals = [&]() {
    double value = 0.0;
    double error = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      error += p.error;
    }
    return std::pair{value, error};
  };

  auto [value, error] = totals();
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
    if (evaluations + 42 > opts.max_evaluations) break;
    std::pop_heap(panels.begin(), panels.end(), by_error);
    const Panel worst = panels.back();
    panels.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel cannot be split further in double precision.
      panels.push_back(worst);
      std::push_heap(panels.begin(), panels.end(), by_error);
      break;
    }
    const Panel left = evaluate(worst.a, mid, worst.segment);
    const Panel right = evaluate(mid, worst.b, worst.segment);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push_back(left);
    std::push_heap(panels.begin(), panels.end(), by_error);
    panels.push_back(right);
    std::push_heap(panels.begin(), panels.end(), by_error);
    // Running sums drift; resync occasionally.
    if (panels.size() % 1024 == 0) std::tie(value, error) = totals();
  }

  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) {
    return x.segment != y.segment ? x.segment < y.segment : x.a < y.a;
  });
  std::tie(out.value, out.error) = totals();
  out.evaluations = evaluations;
  out.panels = panels.size();
  out.converged = out.error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(out.value));
  return out;
}

/// Sorted, de-duplicated copy of points restricted to the open interval (lo, hi),
/// with lo and hi prepended/appended.
inline std::vector<double> make_edges(double lo, double hi, std::vector<double> points) {
  std::vector<double> edges{lo};
  std::sort(points.begin(), points.end());
  for (double x : points) {
    if (x > edges.back() && x < hi) edges.push_back(x);
  }
  edges.push_back(hi);
  return edges;
}

}  // namespace fragrad::quad
