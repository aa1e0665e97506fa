#include "dhtrand/transform.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace dhtrand {

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

void check_nonzero_size(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("sequence length must be at least 1");
    }
}

// In-place iterative radix-2 FFT; data.size() must be a power of two.
void fft(std::vector<std::complex<double>>& data, bool inverse) {
    const std::size_t n = data.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> step(std::cos(angle), std::sin(angle));
        for (std::size_t start = 0; start < n; start += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto even = data[start + k];
                const auto odd = data[start + k + len / 2] * w;
                data[start + k] = even + odd;
                data[start + k + len / 2] = even - odd;
                w *= step;
            }
        }
    }
    if (inverse) {
        for (auto& x : data) {
            x /= static_cast<double>(n);
        }
    }
}

RealSequence dht_direct_sum(const RealSequence& f) {
    const std::size_t n = f.size();
    RealSequence g(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double sum = 0.0;
        for (std::size_t m = (k % 2 == 0) ? 1 : 0; m < n; m += 2) {
            sum += f[m] / (static_cast<double>(k) - static_cast<double>(m));
        }
        g[k] = kTwoOverPi * sum;
    }
    return g;
}

RealSequence dht_toeplitz(const RealSequence& f) {
    const std::size_t n = f.size();
    // coeff[d + n - 1] holds the matrix entry for index difference d.
    std::vector<double> coeff(2 * n - 1, 0.0);
    for (long long d = -static_cast<long long>(n) + 1; d < static_cast<long long>(n); ++d) {
        coeff[static_cast<std::size_t>(d + static_cast<long long>(n) - 1)] =
            detail::dht_coefficient(d);
    }
    RealSequence g(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double sum = 0.0;
        const double* row = coeff.data() + k + n - 1;
        for (std::size_t m = 0; m < n; ++m) {
            sum += row[-static_cast<std::ptrdiff_t>(m)] * f[m];
        }
        g[k] = sum;
    }
    return g;
}

} // namespace

namespace detail {

double dht_coefficient(long long d) {
    if (d % 2 == 0) {
        return 0.0;
    }
    return kTwoOverPi / static_cast<double>(d);
}

void check_finite(const RealSequence& f) {
    check_nonzero_size(f.size());
    for (double v : f) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("input sequence contains a non-finite value");
        }
    }
}

} // namespace detail

std::string kernel_name(DhtKernel kernel) {
    switch (kernel) {
    case DhtKernel::DirectSum:
        return "direct";
    case DhtKernel::Matrix:
        return "matrix";
    case DhtKernel::FastConvolution:
        return "fast";
    }
    throw std::logic_error("unreachable kernel variant");
}

DhtKernel kernel_from_name(const std::string& name) {
    if (name == "direct") return DhtKernel::DirectSum;
    if (name == "matrix") return DhtKernel::Matrix;
    if (name == "fast") return DhtKernel::FastConvolution;
    throw std::invalid_argument("unknown kernel: " + name);
}

DhtMatrix::DhtMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {
    check_nonzero_size(n);
    // Fill the lower triangle and negate into the upper triangle so
    // skew-symmetry holds bit for bit.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < k; ++m) {
            const double v = detail::dht_coefficient(static_cast<long long>(k - m));
            entries_[k * n + m] = v;
            entries_[m * n + k] = -v;
        }
    }
}

RealSequence DhtMatrix::column(std::size_t col) const {
    RealSequence out(n_);
    for (std::size_t k = 0; k < n_; ++k) {
        out[k] = at(k, col);
    }
    return out;
}

RealSequence DhtMatrix::apply(const RealSequence& f) const {
    if (f.size() != n_) {
        throw std::invalid_argument("matrix/vector size mismatch");
    }
    RealSequence g(n_, 0.0);
    for (std::size_t k = 0; k < n_; ++k) {
        double sum = 0.0;
        const double* row = entries_.data() + k * n_;
        for (std::size_t m = 0; m < n_; ++m) {
            sum += row[m] * f[m];
        }
        g[k] = sum;
    }
    return g;
}

DhtMatrix dht_matrix(std::size_t n) {
    return DhtMatrix(n);
}

RealSequence dht(const RealSequence& f, DhtKernel kernel) {
    detail::check_finite(f);
    switch (kernel) {
    case DhtKernel::DirectSum:
        return dht_direct_sum(f);
    case DhtKernel::Matrix:
        return dht_toeplitz(f);
    case DhtKernel::FastConvolution:
        return dht_fast(f);
    }
    throw std::logic_error("unreachable kernel variant");
}

RealSequence dht_fast(const RealSequence& f) {
    detail::check_finite(f);
    const std::size_t n = f.size();
    if (n == 1) {
        return RealSequence{0.0};
    }
    const std::size_t size = std::bit_ceil(2 * n - 1);

    std::vector<std::complex<double>> kernel(size, 0.0);
    for (std::size_t d = 1; d < n; ++d) {
        const double c = detail::dht_coefficient(static_cast<long long>(d));
        kernel[d] = c;
        kernel[size - d] = -c;
    }
    std::vector<std::complex<double>> signal(size, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
        signal[m] = f[m];
    }

    fft(kernel, false);
    fft(signal, false);
    for (std::size_t i = 0; i < size; ++i) {
        signal[i] *= kernel[i];
    }
    fft(signal, true);

    RealSequence g(n);
    for (std::size_t k = 0; k < n; ++k) {
        g[k] = signal[k].real();
    }
    return g;
}

RealSequence inverse_dht(const RealSequence& g, DhtKernel kernel) {
    // The forward matrix is skew-symmetric, so its transpose is its
    // negation; the finite inverse is -dht(g).
    RealSequence f = dht(g, kernel);
    for (double& v : f) {
        v = -v;
    }
    return f;
}

RealSequence measure_weights(std::size_t n) {
    check_nonzero_size(n);
    // Column sum over the diagonal band: w[j] = Hodd(n-1-j) - Hodd(j),
    // where Hodd(m) = (2/pi) * sum of 1/t over odd t in [1, m].
    std::vector<double> odd_harmonic(n, 0.0);
    for (std::size_t m = 1; m < n; ++m) {
        odd_harmonic[m] = odd_harmonic[m - 1] +
            ((m % 2 == 1) ? kTwoOverPi / static_cast<double>(m) : 0.0);
    }
    RealSequence w(n);
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = odd_harmonic[n - 1 - j] - odd_harmonic[j];
    }
    return w;
}

} // namespace dhtrand
