#ifndef LSV_DERIVATION_HPP
#define LSV_DERIVATION_HPP

#include <vector>

#include "lsv/series.hpp"

namespace lsv {

// A degree-d derivation of the tensor algebra, given by one image series
// per generator and extended to words by the graded Leibniz rule:
//
//   D(vw) = (Dv)w + (-1)^{d·deg(v)} v(Dw)
//
// so on a word g_1…g_k the letter g_i is replaced by its image with the
// Koszul sign of moving D past g_1…g_{i-1}. All the differentials in this
// project are degree -1 instances.
class Derivation {
 public:
  // images[i] is the image of generator i; each must live over `alphabet`.
  Derivation(AlphabetPtr alphabet, int degree, std::vector<Series> images);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int degree() const { return degree_; }
  const Series& image(Letter g) const { return images_[g]; }
  // Minimum truncation order across the images; inputs to derive() must
  // not exceed it.
  int order() const { return order_; }

  // True when every generator image is homogeneous of deg(g) + degree().
  bool images_homogeneous() const;

  Series operator()(const Series& s) const;

 private:
  AlphabetPtr alphabet_;
  int degree_;
  int order_;
  std::vector<Series> images_;
};

// Linear Leibniz extension of D to s; result order = order(s).
Series derive(const Derivation& d, const Series& s);

namespace detail {
Series derive_serial(const Derivation& d, const Series& s);
Series derive_parallel(const Derivation& d, const Series& s);
}  // namespace detail

}  // namespace lsv

#endif
