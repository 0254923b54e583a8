#include "vsl/relaxation.hpp"

namespace vsl {

StateEquation::StateEquation(const Vass& vass, Configuration target, bool backward)
    : vass_(&vass), target_(std::move(target)), backward_(backward) {
  vass.check(target_);
  const std::size_t d = vass.dim();
  rows_ = d + vass.num_states();
  cols_ = vass.num_transitions();
  a_.assign(rows_, std::vector<Int>(cols_, Int(0)));
  for (std::size_t t = 0; t < cols_; ++t) {
    const Transition& tr = vass.transition(t);
    for (std::size_t i = 0; i < d; ++i) {
      a_[i][t] = tr.effect[i];
    }
    a_[d + index(tr.dst)][t] += 1;
    a_[d + index(tr.src)][t] -= 1;
  }

  // column echelon form by unimodular column operations
  echelon_ = a_;
  pivot_col_.assign(rows_, -1);
  std::size_t c = 0;
  for (std::size_t r = 0; r < rows_ && c < cols_; ++r) {
    for (;;) {
      // smallest nonzero |entry| among columns >= c moves to column c
      long best = -1;
      for (std::size_t k = c; k < cols_; ++k) {
        if (echelon_[r][k] != 0 &&
            (best < 0 || abs(echelon_[r][k]) < abs(echelon_[r][static_cast<std::size_t>(best)]))) {
          best = static_cast<long>(k);
        }
      }
      if (best < 0) {
        break;
      }
      if (static_cast<std::size_t>(best) != c) {
        for (std::size_t i = 0; i < rows_; ++i) {
          std::swap(echelon_[i][c], echelon_[i][static_cast<std::size_t>(best)]);
        }
      }
      bool others = false;
      for (std::size_t k = c + 1; k < cols_; ++k) {
        if (echelon_[r][k] == 0) {
          continue;
        }
        const Int q = echelon_[r][k] / echelon_[r][c];
        for (std::size_t i = 0; i < rows_; ++i) {
          echelon_[i][k] -= q * echelon_[i][c];
        }
        if (echelon_[r][k] != 0) {
          others = true;
        }
      }
      if (!others) {
        pivot_col_[r] = static_cast<long>(c);
        ++c;
        break;
      }
    }
  }
}

std::vector<Int> StateEquation::rhs(const Configuration& c) const {
  const std::size_t d = vass_->dim();
  std::vector<Int> b(rows_, Int(0));
  for (std::size_t i = 0; i < d; ++i) {
    b[i] = target_.vec[i] - c.vec[i];
  }
  b[d + index(target_.state)] += 1;
  b[d + index(c.state)] -= 1;
  if (backward_) {
    for (Int& x : b) {
      x = -x;
    }
  }
  return b;
}

bool StateEquation::integer_feasible(const Configuration& c) const {
  std::vector<Int> resid = rhs(c);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (pivot_col_[r] < 0) {
      if (resid[r] != 0) {
        return false;
      }
      continue;
    }
    const auto col = static_cast<std::size_t>(pivot_col_[r]);
    const Int& p = echelon_[r][col];
    if (resid[r] % p != 0) {
      return false;
    }
    const Int y = resid[r] / p;
    for (std::size_t i = r; i < rows_; ++i) {
      resid[i] -= y * echelon_[i][col];
    }
  }
  return true;
}

bool StateEquation::rational_feasible(const Configuration& c) const {
  const std::vector<Int> b = rhs(c);
  const std::size_t m = rows_;
  const std::size_t n = cols_;
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) {
      tab[i][j] = flip ? Rational(-a_[i][j]) : Rational(a_[i][j]);
    }
    tab[i][n + i] = 1;
    tab[i][width - 1] = flip ? Rational(-b[i]) : Rational(b[i]);
    basis[i] = n + i;
  }
  // phase-one objective: minimise the sum of artificials
  std::vector<Rational> cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (j < n || j == width - 1) {
        cost[j] -= tab[i][j];
      }
    }
  }
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) {
      break;
    }
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) {
        continue;
      }
      Rational ratio = tab[i][width - 1] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) {
      break;  // unbounded cannot happen in phase one
    }
    const Rational piv = tab[leave][enter];
    for (Rational& x : tab[leave]) {
      x /= piv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) {
        continue;
      }
      const Rational f = tab[i][enter];
      for (std::size_t j = 0; j < width; ++j) {
        tab[i][j] -= f * tab[leave][j];
      }
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) {
        cost[j] -= f * tab[leave][j];
      }
    }
    basis[leave] = enter;
  }
  return cost[width - 1] == 0;
}

bool StateEquation::dead(const Configuration& c) const {
  return !integer_feasible(c) || !rational_feasible(c);
}

}  // namespace vsl
