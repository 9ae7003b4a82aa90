#ifndef SKEWRING_MATRIX_HPP
#define SKEWRING_MATRIX_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skewring/ring.hpp"

namespace skewring {

/// M_n(R): n x n matrices over a coefficient ring R with the usual product
/// (computed with R's possibly non-associative multiplication).
class MatrixRing : public Ring {
  struct Token {};

 public:
  MatrixRing(Token, RingPtr base, std::size_t n)
      : Ring("M" + std::to_string(n) + "(" + base->descriptor() + ")"), base_(std::move(base)), n_(n) {}

  static std::shared_ptr<const MatrixRing> create(RingPtr base, std::size_t n) {
    if (n == 0) throw Error(Errc::invalid_argument, "matrix size must be positive");
    return std::make_shared<MatrixRing>(Token{}, std::move(base), n);
  }

  const RingPtr& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return n_; }

  RingKind kind() const noexcept override { return RingKind::matrix; }

  Element zero() const override {
    return Element::from_entries(self(), std::vector<Element>(n_ * n_, base_->zero()));
  }

  Element one() const override {
    std::vector<Element> e(n_ * n_, base_->zero());
    for (std::size_t i = 0; i < n_; ++i) e[i * n_ + i] = base_->one();
    return Element::from_entries(self(), std::move(e));
  }

  /// The matrix with `value` at (i, j) (0-based) and zeros elsewhere.
  Element unit_matrix(std::size_t i, std::size_t j, const Element& value) const {
    require_ring(*base_, value);
    std::vector<Element> e(n_ * n_, base_->zero());
    e[i * n_ + j] = value;
    return Element::from_entries(self(), std::move(e));
  }

  Element unit_matrix(std::size_t i, std::size_t j) const { return unit_matrix(i, j, base_->one()); }

  Element from_rows(std::vector<Element> entries) const {
    if (entries.size() != n_ * n_) throw Error(Errc::invalid_argument, "wrong number of matrix entries");
    for (const auto& x : entries) require_ring(*base_, x);
    return Element::from_entries(self(), std::move(entries));
  }

  const Element& entry(const Element& a, std::size_t i, std::size_t j) const {
    return a.entries()[i * n_ + j];
  }

  Element multiply(const Element& a, const Element& b) const override {
    std::vector<Element> out;
    out.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        Element acc = base_->zero();
        for (std::size_t j = 0; j < n_; ++j) {
          const Element& x = a.entries()[i * n_ + j];
          const Element& y = b.entries()[j * n_ + k];
          if (x.is_zero() || y.is_zero()) continue;
          acc += x * y;
        }
        out.push_back(std::move(acc));
      }
    return Element::from_entries(self(), std::move(out));
  }

  std::optional<std::size_t> dimension() const override {
    auto d = base_->dimension();
    if (!d) return std::nullopt;
    return n_ * n_ * *d;
  }

  /// E_ij (x) b for each position (row-major) and each basis element b of R.
  std::vector<Element> basis() const override {
    std::vector<Element> out;
    auto inner = base_->basis();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& b : inner) out.push_back(unit_matrix(i, j, b));
    return out;
  }

  std::vector<Rational> coordinates(const Element& a) const override {
    std::vector<Rational> out;
    for (const auto& x : a.entries()) {
      auto c = base_->coordinates(x);
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }

  Element from_coordinates(const std::vector<Rational>& coords) const override {
    auto d = base_->dimension();
    if (!d || coords.size() != n_ * n_ * *d)
      throw Error(Errc::invalid_argument, "coordinate vector has wrong length for " + descriptor());
    std::vector<Element> e;
    for (std::size_t p = 0; p < n_ * n_; ++p)
      e.push_back(base_->from_coordinates(
          std::vector<Rational>(coords.begin() + static_cast<std::ptrdiff_t>(p * *d),
                                coords.begin() + static_cast<std::ptrdiff_t>((p + 1) * *d))));
    return Element::from_entries(self(), std::move(e));
  }

  std::vector<std::string> basis_labels() const override {
    std::vector<std::string> out;
    auto inner = base_->basis_labels();
    const bool scalar = inner.size() == 1;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& l : inner)
          out.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + (scalar ? "" : "_" + l));
    return out;
  }

  bool is_division_ring() const override { return n_ == 1 && base_->is_division_ring(); }

  bool has_involution() const override { return base_->has_involution(); }

  /// Conjugate transpose.
  Element involution(const Element& a) const override {
    std::vector<Element> e;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) e.push_back(base_->involution(a.entries()[j * n_ + i]));
    return Element::from_entries(self(), std::move(e));
  }

  std::string format(const Element& a) const override {
    std::string out = "[";
    auto c = coordinates(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ",";
      out += format_rational(c[i]);
    }
    return out + "]";
  }

 private:
  RingPtr base_;
  std::size_t n_;
};

inline std::shared_ptr<const MatrixRing> matrix_algebra(RingPtr base, std::size_t n) {
  return MatrixRing::create(std::move(base), n);
}

}  // namespace skewring

#endif
