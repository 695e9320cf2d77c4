//! Separable linear resampling (nearest / bilinear / bicubic).
//!
//! A [`Resampler`] precomputes per-axis tap tables under the
//! align-corners=false convention (`src = (dst + 0.5) * in/out - 0.5`), so a
//! resize is two sparse matrix applications. Because the operator is linear
//! with fixed weights, its adjoint is the transposed application — that is
//! what gradient propagation through every parameter-free sampling layer and
//! through the super-resolution downsampler uses.

use crate::{sc, Scalar};

/// Interpolation kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interp {
    Nearest,
    Bilinear,
    /// Catmull-Rom cubic (a = -0.5).
    Bicubic,
}

/// Out-of-range index handling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    Clamp,
    /// Mirror across the pixel edge: index -1 maps to 0, -2 to 1, n to n-1.
    Reflect,
}

/// Catmull-Rom kernel, a = -0.5.
fn cubic(x: f64) -> f64 {
    const A: f64 = -0.5;
    let x = x.abs();
    if x < 1.0 {
        (A + 2.0) * x * x * x - (A + 3.0) * x * x + 1.0
    } else if x < 2.0 {
        A * x * x * x - 5.0 * A * x * x + 8.0 * A * x - 4.0 * A
    } else {
        0.0
    }
}

fn fold(mut i: i64, n: i64, edge: Edge) -> usize {
    match edge {
        Edge::Clamp => i.clamp(0, n - 1) as usize,
        Edge::Reflect => {
            while i < 0 || i >= n {
                if i < 0 {
                    i = -1 - i;
                }
                if i >= n {
                    i = 2 * n - 1 - i;
                }
            }
            i as usize
        }
    }
}

/// One-axis tap table: for each output index, a short list of
/// (source index, weight) pairs whose weights sum to 1.
struct AxisMap<T> {
    in_len: usize,
    out_len: usize,
    offsets: Vec<usize>,
    taps: Vec<(usize, T)>,
}

impl<T: Scalar> AxisMap<T> {
    fn new(method: Interp, in_len: usize, out_len: usize, edge: Edge, antialias: bool) -> Self {
        assert!(in_len >= 1 && out_len >= 1);
        let ratio = in_len as f64 / out_len as f64;
        // Antialiasing widens the kernel by the downscale factor; it is a
        // no-op when upscaling or at identity scale.
        let scale = if antialias && ratio > 1.0 { ratio } else { 1.0 };
        let mut offsets = Vec::with_capacity(out_len + 1);
        let mut taps: Vec<(usize, T)> = Vec::new();
        offsets.push(0);
        for o in 0..out_len {
            let src = (o as f64 + 0.5) * ratio - 0.5;
            let mut raw: Vec<(i64, f64)> = Vec::new();
            match method {
                Interp::Nearest => {
                    let i = ((o as f64 + 0.5) * ratio).floor() as i64;
                    raw.push((i.min(in_len as i64 - 1).max(0), 1.0));
                }
                Interp::Bilinear => {
                    let support = 1.0 * scale;
                    let lo = (src - support).ceil() as i64;
                    let hi = (src + support).floor() as i64;
                    for i in lo..=hi {
                        let w = 1.0 - ((i as f64 - src) / scale).abs();
                        if w > 0.0 {
                            raw.push((i, w));
                        }
                    }
                    if raw.is_empty() {
                        raw.push((src.round() as i64, 1.0));
                    }
                }
                Interp::Bicubic => {
                    let support = 2.0 * scale;
                    let lo = (src - support).ceil() as i64;
                    let hi = (src + support).floor() as i64;
                    for i in lo..=hi {
                        let w = cubic((i as f64 - src) / scale);
                        if w != 0.0 {
                            raw.push((i, w));
                        }
                    }
                    if raw.is_empty() {
                        raw.push((src.round() as i64, 1.0));
                    }
                }
            }
            let total: f64 = raw.iter().map(|&(_, w)| w).sum();
            for (i, w) in raw {
                let idx = fold(i, in_len as i64, edge);
                taps.push((idx, sc(w / total)));
            }
            offsets.push(taps.len());
        }
        AxisMap {
            in_len,
            out_len,
            offsets,
            taps,
        }
    }

    fn taps_of(&self, o: usize) -> &[(usize, T)] {
        &self.taps[self.offsets[o]..self.offsets[o + 1]]
    }
}

/// Precomputed 2D separable resampler for one plane shape.
pub struct Resampler<T> {
    pub in_h: usize,
    pub in_w: usize,
    pub out_h: usize,
    pub out_w: usize,
    vert: AxisMap<T>,
    horz: AxisMap<T>,
}

impl<T: Scalar> Resampler<T> {
    pub fn new(
        method: Interp,
        (in_h, in_w): (usize, usize),
        (out_h, out_w): (usize, usize),
        edge: Edge,
        antialias: bool,
    ) -> Self {
        Resampler {
            in_h,
            in_w,
            out_h,
            out_w,
            vert: AxisMap::new(method, in_h, out_h, edge, antialias),
            horz: AxisMap::new(method, in_w, out_w, edge, antialias),
        }
    }

    /// Resample one row-major plane of shape (in_h, in_w) to (out_h, out_w).
    pub fn forward_plane(&self, input: &[T]) -> Vec<T> {
        assert_eq!(input.len(), self.in_h * self.in_w);
        // Horizontal pass: (in_h, in_w) -> (in_h, out_w).
        let mut tmp = vec![T::zero(); self.in_h * self.out_w];
        for y in 0..self.in_h {
            let row = &input[y * self.in_w..(y + 1) * self.in_w];
            let out = &mut tmp[y * self.out_w..(y + 1) * self.out_w];
            for o in 0..self.out_w {
                let mut acc = T::zero();
                for &(i, w) in self.horz.taps_of(o) {
                    acc += w * row[i];
                }
                out[o] = acc;
            }
        }
        // Vertical pass: (in_h, out_w) -> (out_h, out_w), row axpy keeps the
        // inner loop contiguous.
        let mut out = vec![T::zero(); self.out_h * self.out_w];
        for oy in 0..self.out_h {
            let dst = oy * self.out_w;
            for &(iy, w) in self.vert.taps_of(oy) {
                let srow = iy * self.out_w;
                for x in 0..self.out_w {
                    out[dst + x] += w * tmp[srow + x];
                }
            }
        }
        out
    }

    /// Adjoint (transpose) application: scatter an output-shaped gradient
    /// back to input shape. Satisfies `<forward(x), y> == <x, adjoint(y)>`.
    pub fn adjoint_plane(&self, grad_out: &[T]) -> Vec<T> {
        assert_eq!(grad_out.len(), self.out_h * self.out_w);
        // Transposed vertical pass: (out_h, out_w) -> (in_h, out_w).
        let mut tmp = vec![T::zero(); self.in_h * self.out_w];
        for oy in 0..self.out_h {
            let src = oy * self.out_w;
            for &(iy, w) in self.vert.taps_of(oy) {
                let drow = iy * self.out_w;
                for x in 0..self.out_w {
                    tmp[drow + x] += w * grad_out[src + x];
                }
            }
        }
        // Transposed horizontal pass: (in_h, out_w) -> (in_h, in_w).
        let mut out = vec![T::zero(); self.in_h * self.in_w];
        for y in 0..self.in_h {
            let src = &tmp[y * self.out_w..(y + 1) * self.out_w];
            let dst = &mut out[y * self.in_w..(y + 1) * self.in_w];
            for o in 0..self.out_w {
                let g = src[o];
                for &(i, w) in self.horz.taps_of(o) {
                    dst[i] += w * g;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_plane(h: usize, w: usize, seed: u64) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..h * w).map(|_| rng.gen::<f64>()).collect()
    }

    #[test]
    fn identity_resize_is_exact() {
        let x = random_plane(9, 7, 1);
        for method in [Interp::Nearest, Interp::Bilinear, Interp::Bicubic] {
            let r = Resampler::<f64>::new(method, (9, 7), (9, 7), Edge::Clamp, false);
            let y = r.forward_plane(&x);
            assert_eq!(x, y, "{method:?}");
        }
    }

    #[test]
    fn constants_are_preserved() {
        let x = vec![0.37f64; 16 * 12];
        for method in [Interp::Nearest, Interp::Bilinear, Interp::Bicubic] {
            for antialias in [false, true] {
                for (oh, ow) in [(8, 6), (32, 24), (5, 9)] {
                    let r =
                        Resampler::<f64>::new(method, (16, 12), (oh, ow), Edge::Reflect, antialias);
                    for v in r.forward_plane(&x) {
                        assert!((v - 0.37).abs() < 1e-12, "{method:?} {oh}x{ow}");
                    }
                }
            }
        }
    }

    #[test]
    fn nearest_upsample_replicates() {
        let x: Vec<f64> = (0..6).map(|i| i as f64).collect();
        let r = Resampler::<f64>::new(Interp::Nearest, (2, 3), (4, 6), Edge::Clamp, false);
        let y = r.forward_plane(&x);
        let expect = [
            0.0, 0.0, 1.0, 1.0, 2.0, 2.0, //
            0.0, 0.0, 1.0, 1.0, 2.0, 2.0, //
            3.0, 3.0, 4.0, 4.0, 5.0, 5.0, //
            3.0, 3.0, 4.0, 4.0, 5.0, 5.0,
        ];
        assert_eq!(y, expect);
    }

    #[test]
    fn bilinear_downsample_2x_is_box_average() {
        let x = random_plane(8, 8, 2);
        let r = Resampler::<f64>::new(Interp::Bilinear, (8, 8), (4, 4), Edge::Clamp, false);
        let y = r.forward_plane(&x);
        for oy in 0..4 {
            for ox in 0..4 {
                let m = (x[2 * oy * 8 + 2 * ox]
                    + x[2 * oy * 8 + 2 * ox + 1]
                    + x[(2 * oy + 1) * 8 + 2 * ox]
                    + x[(2 * oy + 1) * 8 + 2 * ox + 1])
                    / 4.0;
                assert!((y[oy * 4 + ox] - m).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn adjoint_matches_inner_product() {
        for method in [Interp::Nearest, Interp::Bilinear, Interp::Bicubic] {
            for antialias in [false, true] {
                for edge in [Edge::Clamp, Edge::Reflect] {
                    let r = Resampler::<f64>::new(method, (11, 13), (6, 20), edge, antialias);
                    let x = random_plane(11, 13, 3);
                    let y = random_plane(6, 20, 4);
                    let ax: f64 = r
                        .forward_plane(&x)
                        .iter()
                        .zip(&y)
                        .map(|(a, b)| a * b)
                        .sum();
                    let aty: f64 = r
                        .adjoint_plane(&y)
                        .iter()
                        .zip(&x)
                        .map(|(a, b)| a * b)
                        .sum();
                    assert!(
                        (ax - aty).abs() < 1e-10,
                        "{method:?} {edge:?} aa={antialias}: {ax} vs {aty}"
                    );
                }
            }
        }
    }

    #[test]
    fn bilinear_reproduces_linear_ramp() {
        // Interior bilinear taps interpolate a linear function exactly.
        let (h, w) = (64, 64);
        let x: Vec<f64> = (0..h * w)
            .map(|i| (i % w) as f64 / (w - 1) as f64)
            .collect();
        let r = Resampler::<f64>::new(Interp::Bilinear, (h, w), (16, 16), Edge::Clamp, false);
        let y = r.forward_plane(&x);
        for oy in 0..16 {
            for ox in 0..16 {
                let src = (ox as f64 + 0.5) * (w as f64 / 16.0) - 0.5;
                let ideal = src / (w - 1) as f64;
                assert!((y[oy * 16 + ox] - ideal).abs() < 1e-12);
            }
        }
    }
}
