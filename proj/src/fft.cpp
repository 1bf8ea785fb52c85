#include "frit/fft.hpp"

#include <unsupported/Eigen/FFT>

#include "frit/parallel.hpp"

namespace frit {

namespace {

// One FFT engine (plan cache) per thread; Eigen::FFT instances are not
// thread-safe when shared.
Eigen::FFT<double>& thread_fft() {
    thread_local Eigen::FFT<double> fft;
    return fft;
}

void transform_axis(ComplexArray& data, int ndim, int P, int axis, FftDirection dir) {
    std::int64_t stride = 1;
    for (int a = ndim - 1; a > axis; --a) stride *= P;
    const std::int64_t block = stride * P;
    const std::int64_t total = data.size();
    const std::int64_t n_lines = total / P;

    parallel_for(n_lines, [&](std::int64_t lo, std::int64_t hi) {
        Eigen::VectorXcd in(P), out(P);
        auto& fft = thread_fft();
        for (std::int64_t line = lo; line < hi; ++line) {
            // line -> (block index, offset within stride)
            const std::int64_t blk = line / stride;
            const std::int64_t off = line % stride;
            const std::int64_t base = blk * block + off;
            for (int t = 0; t < P; ++t) in[t] = data[base + t * stride];
            if (dir == FftDirection::forward)
                fft.fwd(out, in);
            else
                fft.inv(out, in);
            for (int t = 0; t < P; ++t) data[base + t * stride] = out[t];
        }
    });
}

}  // namespace

void fft_nd(ComplexArray& data, int ndim, int P, FftDirection dir) {
    for (int axis = 0; axis < ndim; ++axis) transform_axis(data, ndim, P, axis, dir);
}

void fft_nd(ComplexArray& data, const BoxDomain& box, FftDirection dir) {
    fft_nd(data, box.n, box.N, dir);
}

}  // namespace frit
