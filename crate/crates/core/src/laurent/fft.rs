//! Forward DFT over an n-dimensional grid, axis by axis.

use num_complex::Complex64;
use rustfft::FftPlanner;

/// In-place forward transform of a flat row-major grid with `size` points
/// per axis (axis 0 has stride 1, axis `a` has stride `size^a`). The
/// result is the unnormalized DFT sum over every axis.
pub(crate) fn forward_dft_nd(values: &mut [Complex64], axes: usize, size: usize) {
    debug_assert_eq!(values.len(), size.pow(axes as u32));
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(size);
    let mut line = vec![Complex64::new(0.0, 0.0); size];
    for axis in 0..axes {
        let stride = size.pow(axis as u32);
        for start in line_starts(values.len(), stride, size) {
            for (k, slot) in line.iter_mut().enumerate() {
                *slot = values[start + k * stride];
            }
            fft.process(&mut line);
            for (k, slot) in line.iter().enumerate() {
                values[start + k * stride] = *slot;
            }
        }
    }
}

/// Flat indices whose digit along the axis with the given stride is zero:
/// one start per grid line.
fn line_starts(total: usize, stride: usize, size: usize) -> impl Iterator<Item = usize> {
    (0..total).filter(move |i| (i / stride).is_multiple_of(size))
}
