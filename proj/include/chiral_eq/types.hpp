#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace chiral_eq {

// Parameters of the generalized beta-Gaussian eigenvalue gas with joint density
//   P(lambda) ~ exp(-n sum_k lambda_k^2) prod_k |lambda_k|^{2 mu_n}
//               prod_{i<j} |lambda_i - lambda_j|^beta.
// The limit shape depends on beta and c = lim mu_n / n; finite-n operations
// additionally use n and mu_n (defaulting to c*n).
struct EnsembleParams {
    double beta;
    double c;
    int n;
    double mu_n;

    EnsembleParams(double beta_, double c_, int n_ = 1)
        : beta(beta_), c(c_), n(n_), mu_n(c_ * static_cast<double>(n_)) {
        validate();
    }
    EnsembleParams(double beta_, double c_, int n_, double mu_n_)
        : beta(beta_), c(c_), n(n_), mu_n(mu_n_) {
        validate();
    }

    // c' = 2c/beta; derived on demand so there is a single source of truth.
    double c_prime() const { return 2.0 * c / beta; }
    // alpha_n = mu_n/n, the finite-n counterpart of c.
    double alpha_n() const { return mu_n / static_cast<double>(n); }

  private:
    void validate() const {
        if (!(beta > 0.0))
            throw std::invalid_argument("EnsembleParams: beta must be > 0");
        if (!(c >= 0.0))
            throw std::invalid_argument("EnsembleParams: c must be >= 0");
        if (n < 1)
            throw std::invalid_argument("EnsembleParams: n must be >= 1");
        if (!(mu_n >= 0.0))
            throw std::invalid_argument("EnsembleParams: mu_n must be >= 0");
    }
};

// Two-cut support S = [-b,-a] u [a,b]. a = 0 exactly when c = 0, in which
// case S degenerates to the single interval [-b, b].
struct Support {
    double a;
    double b;

    bool contains(double t) const {
        const double x = std::abs(t);
        return x >= a && x <= b;
    }
    bool strictly_inside(double t) const {
        const double x = std::abs(t);
        return x > a && x < b;
    }
};

struct QuadratureSpec {
    double tol = 1e-10;
    int max_subdivisions = 20;  // panel-count doublings before giving up
};

// Thrown when the adaptive quadrature cannot reach the requested tolerance;
// carries the last achieved successive-estimate difference.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const { return achieved_; }

  private:
    double achieved_;
};

}  // namespace chiral_eq
