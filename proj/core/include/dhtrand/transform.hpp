#ifndef DHTRAND_TRANSFORM_HPP
#define DHTRAND_TRANSFORM_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace dhtrand {

/// A finite sequence of doubles. Inputs must be finite (no NaN/Inf);
/// operations below reject anything else.
using RealSequence = std::vector<double>;

/// Strategy for evaluating the transform. All three produce the same
/// values within 1e-9 per element; they differ only in cost.
enum class DhtKernel {
    DirectSum,       // literal double sum over opposite-parity indices, O(n^2)
    Matrix,          // Toeplitz coefficient row, O(n^2) with O(n) setup
    FastConvolution, // zero-padded circular convolution via FFT, O(n log n)
};

std::string kernel_name(DhtKernel kernel);
DhtKernel kernel_from_name(const std::string& name);

/// Dense n-by-n transform matrix. Entry (k, m) is (2/pi)/(k-m) when k-m is
/// odd and exactly 0 otherwise, so the matrix is skew-symmetric with a
/// checkerboard zero pattern.
class DhtMatrix {
public:
    explicit DhtMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    double at(std::size_t row, std::size_t col) const {
        return entries_[row * n_ + col];
    }
    RealSequence column(std::size_t col) const;

    RealSequence apply(const RealSequence& f) const;

private:
    std::size_t n_;
    std::vector<double> entries_;
};

DhtMatrix dht_matrix(std::size_t n);

/// Forward transform of f, truncated to the length of f.
RealSequence dht(const RealSequence& f, DhtKernel kernel);

/// Forward transform via Toeplitz embedding into a power-of-two circular
/// convolution. Equivalent to the Matrix kernel within 1e-9 per element.
RealSequence dht_fast(const RealSequence& f);

/// Finite inverse: multiplication by the transpose (the negation) of the
/// forward matrix. For finite n the round trip only approximates the
/// input; interior samples improve as n grows.
RealSequence inverse_dht(const RealSequence& g, DhtKernel kernel = DhtKernel::Matrix);

/// Column sums of the n-by-n transform matrix, so that
/// (1/n) * sum_j w[j] * f[j] equals the randomness statistic r computed
/// through the full transform. O(n).
RealSequence measure_weights(std::size_t n);

namespace detail {
/// Toeplitz coefficient: (2/pi)/d for odd d, 0 otherwise (including d = 0).
double dht_coefficient(long long d);
void check_finite(const RealSequence& f);
} // namespace detail

} // namespace dhtrand

#endif
