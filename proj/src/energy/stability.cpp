#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "wwdtn/energy.hpp"
#include "wwdtn/error.hpp"
#include "wwdtn/extension.hpp"

namespace wwdtn {

namespace {

// A = P (L_a - diag f'(u)) P on the free nodes, solved against A - sigma with
// preconditioned conjugate gradients; the preconditioner is (S + c)^-1.
class ShiftedForm {
 public:
  ShiftedForm(const SlabGrid& grid, const FractionalParams& params, std::vector<double> curvature,
              std::span<const std::uint8_t> pinned, double sigma)
      : op_(grid, params), curv_(std::move(curvature)), free_(curv_.size(), 1.0), sigma_(sigma), tmp_(curv_.size()) {
    for (std::size_t i = 0; i < free_.size(); ++i)
      if (!pinned.empty() && pinned[i]) free_[i] = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < curv_.size(); ++i)
      if (free_[i] != 0.0) hi = std::max(hi, curv_[i] - sigma_);
    pc_shift_ = std::max(hi, 1e-3);
  }

  std::size_t size() const { return curv_.size(); }

  // out = A x (shift excluded); x must vanish at pinned nodes.
  void apply(std::span<const double> x, std::span<double> out) {
    op_.apply(x, out);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = free_[i] * (out[i] + curv_[i] * x[i]);
  }

  void precondition(std::span<const double> r, std::span<double> z) {
    op_.apply_inverse_shifted(r, pc_shift_, z);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] *= free_[i];
  }

  // Solves (A - sigma) x = b, starting from x = 0.
  void solve(std::span<const double> b, std::span<double> x, double rtol) {
    const std::size_t n = size();
    std::vector<double> r(b.begin(), b.end()), z(n), p(n), ap(n);
    std::fill(x.begin(), x.end(), 0.0);
    const double b2 = dot(b, b);
    if (b2 == 0.0) return;
    precondition(r, z);
    p = z;
    double rz = dot(r, z);
    for (int k = 0; k < 5000; ++k) {
      apply(p, ap);
      for (std::size_t i = 0; i < n; ++i) ap[i] -= sigma_ * p[i] * free_[i];
      const double alpha = rz / dot(p, ap);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] += alpha * p[i];
        r[i] -= alpha * ap[i];
      }
      if (dot(r, r) <= rtol * rtol * b2) return;
      precondition(r, z);
      const double rz_new = dot(r, z);
      const double beta = rz_new / rz;
      rz = rz_new;
      for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }
    fail(ErrorKind::not_converged, "inner conjugate-gradient solve did not converge");
  }

  static double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
  }

  const std::vector<double>& free_mask() const { return free_; }

 private:
  TraceMultiplier op_;
  std::vector<double> curv_;
  std::vector<double> free_;
  double sigma_;
  double pc_shift_ = 1.0;
  std::vector<double> tmp_;
};

}  // namespace

double second_variation_min_eig(const SlabField& v, std::span<const std::uint8_t> pinned, const Potential& pot,
                                const FractionalParams& params, const EigenOptions& opt) {
  const SlabGrid& grid = v.grid();
  const std::size_t m = grid.trace_size();
  require(pinned.empty() || pinned.size() == m, "pinned mask does not match the grid");
  require(opt.tol > 0.0 && opt.max_iter > 0, "eigen options must be positive");

  std::vector<double> curv(m);
  double lowest = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < m; ++i) {
    curv[i] = -pot.df(v.at(0, i));
    if (pinned.empty() || !pinned[i]) {
      lowest = any ? std::min(lowest, curv[i]) : curv[i];
      any = true;
    }
  }
  require(any, "no free nodes to test");
  // L_a is non-negative, so A - sigma >= 1/2 on the free nodes.
  const double sigma = lowest - 0.5;
  ShiftedForm form(grid, params, curv, pinned, sigma);
  const auto& mask = form.free_mask();

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> jitter(-0.01, 0.01);
  std::vector<double> x(m), y(m), ax(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = mask[i] * (1.0 + jitter(rng));

  auto normalize = [&](std::vector<double>& w) {
    const double nrm = std::sqrt(ShiftedForm::dot(w, w));
    for (double& t : w) t /= nrm;
  };
  normalize(x);
  double lambda = 0.0;
  for (int it = 0; it < opt.max_iter; ++it) {
    form.solve(x, y, 1e-12);
    normalize(y);
    x.swap(y);
    form.apply(x, ax);
    const double next = ShiftedForm::dot(x, ax);
    double res2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double d = ax[i] - next * x[i];
      res2 += d * d;
    }
    const double change = std::abs(next - lambda);
    lambda = next;
    if (it > 0 && std::sqrt(res2) <= 100 * opt.tol && change <= 1e-3 * opt.tol) return lambda;
  }
  fail(ErrorKind::not_converged, "inverse iteration did not converge in " + std::to_string(opt.max_iter) + " steps");
}

}  // namespace wwdtn
