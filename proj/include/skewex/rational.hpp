#ifndef SKEWEX_RATIONAL_HPP
#define SKEWEX_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace skewex {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, so equality is structural.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<Rat>;
using Vec = VectorX<Rat>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);
/// Accepts "p", "-p/q", "p/q" with optional surrounding whitespace.
Rat parse_rat(std::string_view text);

Mat zeros(Index rows, Index cols);
Vec zeros(Index n);
Mat identity(Index n);
Vec unit_vector(Index n, Index i);

bool is_zero(const Mat& m);
bool is_zero(const Vec& v);

Rat numerator_of(const Rat& r);
Rat denominator_of(const Rat& r);

}  // namespace skewex

#endif  // SKEWEX_RATIONAL_HPP
