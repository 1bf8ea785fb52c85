// Internal n-dimensional complex FFT over flat row-major arrays.
//
// Orientation: `forward` applies the standard DFT kernel exp(-2*pi*i*j*k/N)
// per axis, unscaled; `inverse` applies exp(+2*pi*i*j*k/N) scaled by 1/N per
// axis, so inverse(forward(x)) == x. Lines along each axis are transformed
// with Eigen's FFT module; line batches run in parallel (see parallel.hpp).
#pragma once

#include "frit/field.hpp"

namespace frit {

enum class FftDirection { forward, inverse };

// In-place transform of data laid out row-major on `box` (data.size() == box.size()).
void fft_nd(ComplexArray& data, const BoxDomain& box, FftDirection dir);

// Same, for an arbitrary cubic shape (P points per axis, ndim axes).
void fft_nd(ComplexArray& data, int ndim, int P, FftDirection dir);

}  // namespace frit
