#include "hma/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace hma {

namespace {

const double kRoot17 = std::pow(17.0, 0.25);
const double kRoot8 = std::pow(8.0, 0.25);
const double kRoot5 = std::pow(5.0, 0.25);
const double kSqrt8 = std::sqrt(8.0);
const double kLogGrowth = std::log(5.0 / 3.0);

double descent_factor(double alpha, double beta) { return (1.0 - alpha - beta) / (1.0 - alpha); }

class Builder {
 public:
  Builder(ChainReport& report, const GaugeBall& ball) : report_(report), ball_(ball) {}

  Point projection(const Point& from, const Point& to, const std::string& label) {
    ChainStep s;
    s.label = label;
    s.from = from;
    s.to = to;
    s.lambda = lambda_to_boundary(from, to, ball_);
    s.lambda_bound = 2.0;
    s.factor = 0.5;
    push(s);
    return to;
  }

  Point move(const Point& from, Direction dir, double sigma, double alpha, double beta,
             const std::string& label) {
    ChainStep s;
    s.label = label;
    s.from = from;
    s.to = exp_flow(dir, sigma, from);
    s.lambda = lambda_to_boundary(s.from, s.to, ball_);
    s.alpha = alpha;
    s.beta = beta;
    s.lambda_bound = (1.0 - alpha) / beta;
    s.factor = descent_factor(alpha, beta);
    push(s);
    return s.to;
  }

  /// Case 1 descent from (0, 0, t) with sqrt|t| <= R / 2.
  void near_descent(const Point& start) {
    const double t = start.t;
    if (t == 0.0) return;
    const double sigma = std::sqrt(std::abs(t)) / 2.0;
    // t > 0: X, Y, -X, -Y. t < 0: Y, X, -Y, -X.
    const Direction first = t > 0.0 ? Direction::X : Direction::Y;
    const Direction second = t > 0.0 ? Direction::Y : Direction::X;
    const char* n1 = t > 0.0 ? "X" : "Y";
    const char* n2 = t > 0.0 ? "Y" : "X";
    Point p = move(start, first, sigma, 0.5, 0.25, std::string("near:") + n1);
    p = move(p, second, sigma, kRoot17 / 4.0, 0.25, std::string("near:") + n2);
    p = move(p, first, -sigma, kRoot8 / 4.0, 0.25, std::string("near:-") + n1);
    ChainStep last;
    last.label = std::string("near:-") + n2;
    last.from = p;
    // The last flow lands on the origin up to rounding; the chain ends exactly there.
    last.to = origin;
    last.lambda = lambda_to_boundary(last.from, last.to, ball_);
    last.alpha = 0.25;
    last.beta = 0.25;
    last.lambda_bound = 3.0;
    last.factor = descent_factor(0.25, 0.25);
    push(last);
  }

  /// One five-point loop of Case 2 from (0, 0, t); returns (0, 0, t -+ 4 d^2).
  Point far_loop(const Point& start, double R) {
    const double t = start.t;
    const double d = std::sqrt((R * R - std::abs(t)) / 6.0);
    const Direction first = t > 0.0 ? Direction::X : Direction::Y;
    const Direction second = t > 0.0 ? Direction::Y : Direction::X;
    const double a2 = kRoot5 / kSqrt8;
    const double b = 1.0 / kSqrt8;
    // Step 1 is the lambda >= 2 estimate, recorded with factor 1/2.
    ChainStep s;
    s.label = "far:1";
    s.from = start;
    s.to = exp_flow(first, d, start);
    s.lambda = lambda_to_boundary(s.from, s.to, ball_);
    s.lambda_bound = 2.0;
    s.factor = 0.5;
    push(s);
    Point p = move(s.to, second, d, a2, b, "far:2");
    p = move(p, first, -d, 0.5, b, "far:3");
    p = move(p, second, -d, a2, b, "far:4");
    // Snap the horizontal coordinates, which are zero up to rounding.
    return Point{0.0, 0.0, p.t};
  }

 private:
  void push(const ChainStep& s) {
    report_.steps.push_back(s);
    report_.total_factor *= s.factor;
  }

  ChainReport& report_;
  GaugeBall ball_;
};

}  // namespace

const char* to_string(ChainCase c) noexcept { return c == ChainCase::near ? "near" : "far"; }

std::vector<Point> ChainReport::points() const {
  std::vector<Point> out{start};
  for (const ChainStep& s : steps) out.push_back(s.to);
  return out;
}

double near_case_constant() noexcept {
  return 0.5 * descent_factor(kRoot17 / 4.0, 0.25) * descent_factor(kRoot8 / 4.0, 0.25) *
         descent_factor(0.25, 0.25);
}

double far_loop_constant() noexcept {
  const double q = (kSqrt8 - kRoot5 - 1.0) / (kSqrt8 - kRoot5);
  return 0.5 * q * (1.0 - 1.0 / std::sqrt(2.0)) * q;
}

double chain_exponent_form(double t0, double R) {
  const double c1 = near_case_constant();
  const double gamma = -std::log(c1);
  const double base = 4.0 * (R * R - std::abs(t0)) / (3.0 * R * R);
  return c1 * c1 * std::pow(base, gamma / kLogGrowth);
}

ChainReport build_chain(const Point& xi0, double R) {
  const GaugeBall ball(origin, R);
  if (!ball.contains(xi0)) throw std::invalid_argument("build_chain: start point outside B_R(0)");
  ChainReport report;
  report.start = xi0;
  report.R = R;
  Builder b(report, ball);

  Point xi1{0.0, 0.0, xi0.t};
  if (xi0.x != 0.0 || xi0.y != 0.0) b.projection(xi0, xi1, "project");

  const double t0 = xi0.t;
  if (std::sqrt(std::abs(t0)) <= R / 2.0) {
    report.chain_case = ChainCase::near;
    b.near_descent(xi1);
    return report;
  }

  report.chain_case = ChainCase::far;
  report.t_levels.push_back(t0);
  Point p = xi1;
  while (std::abs(p.t) > R * R / 4.0) {
    p = b.far_loop(p, R);
    report.t_levels.push_back(p.t);
    ++report.iterations;
  }
  const int n = report.iterations;
  const double before_last = std::abs(report.t_levels[static_cast<std::size_t>(n - 1)]);
  const double log_ratio =
      (n - 1) + std::log(0.75 * R * R / (R * R - before_last)) / kLogGrowth;
  report.iteration_log = log_ratio;
  const double c1 = near_case_constant();
  report.exponent_form_recursion = c1 * c1 * std::exp(std::log(c1) * log_ratio);
  report.exponent_form_factor = chain_exponent_form(t0, R);
  b.near_descent(p);
  return report;
}

}  // namespace hma
