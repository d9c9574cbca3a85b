#include "hermia/hermitian.hpp"

#include <stdexcept>

namespace hermia {

GaussianInt to_gaussian(Unit u) {
  switch (u) {
    case Unit::One:
      return GaussianInt(1, 0);
    case Unit::I:
      return GaussianInt(0, 1);
    case Unit::MinusI:
      return GaussianInt(0, -1);
    case Unit::Zero:
      break;
  }
  return GaussianInt(0, 0);
}

namespace {

Unit unit_of(PairState s) {
  switch (s) {
    case PairState::Digon:
      return Unit::One;
    case PairState::ArcUV:
      return Unit::I;
    case PairState::ArcVU:
      return Unit::MinusI;
    case PairState::None:
      break;
  }
  return Unit::Zero;
}

}  // namespace

HermitianMatrix hermitian(const Digraph& d) {
  HermitianMatrix h;
  h.n_ = d.order();
  h.u_.assign(h.n_ * h.n_, Unit::Zero);
  for (Vertex u = 0; u < h.n_; ++u) {
    for (Vertex v = u + 1; v < h.n_; ++v) {
      const Unit x = unit_of(d.state(u, v));
      h.u_[u * h.n_ + v] = x;
      h.u_[v * h.n_ + u] = conj(x);
    }
  }
  return h;
}

Digraph digraph_of(const HermitianMatrix& h) {
  Digraph d(h.size());
  for (std::size_t u = 0; u < h.size(); ++u) {
    for (std::size_t v = u + 1; v < h.size(); ++v) {
      switch (h.unit(u, v)) {
        case Unit::One:
          d.set_state(u, v, PairState::Digon);
          break;
        case Unit::I:
          d.set_state(u, v, PairState::ArcUV);
          break;
        case Unit::MinusI:
          d.set_state(u, v, PairState::ArcVU);
          break;
        case Unit::Zero:
          break;
      }
    }
  }
  return d;
}

HermitianMatrix HermitianMatrix::transpose() const {
  HermitianMatrix t = *this;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) t.u_[r * n_ + c] = u_[c * n_ + r];
  }
  return t;
}

GaussianMatrix HermitianMatrix::to_gaussian_matrix() const {
  GaussianMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) m(r, c) = entry(r, c);
  }
  return m;
}

HermitianMatrix HermitianMatrix::principal(const std::vector<std::size_t>& rows) const {
  HermitianMatrix p;
  p.n_ = rows.size();
  p.u_.resize(p.n_ * p.n_);
  for (std::size_t a = 0; a < p.n_; ++a) {
    for (std::size_t b = 0; b < p.n_; ++b) p.u_[a * p.n_ + b] = unit(rows.at(a), rows.at(b));
  }
  return p;
}

HermitianMatrix HermitianMatrix::from_gaussian(const GaussianMatrix& m) {
  HermitianMatrix h;
  h.n_ = m.size();
  h.u_.resize(h.n_ * h.n_);
  for (std::size_t r = 0; r < h.n_; ++r) {
    for (std::size_t c = 0; c < h.n_; ++c) {
      const GaussianInt& z = m(r, c);
      Unit x;
      if (z.is_zero()) {
        x = Unit::Zero;
      } else if (z == GaussianInt(1, 0)) {
        x = Unit::One;
      } else if (z == GaussianInt(0, 1)) {
        x = Unit::I;
      } else if (z == GaussianInt(0, -1)) {
        x = Unit::MinusI;
      } else {
        throw std::invalid_argument("entry outside {0, 1, i, -i}");
      }
      if (r == c && x != Unit::Zero) throw std::invalid_argument("nonzero diagonal entry");
      if (m(c, r) != z.conj()) throw std::invalid_argument("matrix is not conjugate symmetric");
      h.u_[r * h.n_ + c] = x;
    }
  }
  return h;
}

}  // namespace hermia
