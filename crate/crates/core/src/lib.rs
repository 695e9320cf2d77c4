//! Image-specific, training-free ranking of encoder/decoder architectures for
//! the Deep Image Prior (DIP) framework.
//!
//! The pipeline: sample architecture genomes from a discrete search space,
//! score each one by the spectral similarity between its random (untrained)
//! output and the corrupted image, shortlist the top-N, optimize the shortlist
//! under DIP objectives, and pick the final model whose restoration is closest
//! to the inverse-metric-weighted average of all restorations. An analysis
//! layer (rank correlations, top-k overlaps, PSNR histograms, random-selection
//! baselines) quantifies how well the scores predict trained performance.
//!
//! All numeric code is generic over the scalar type: `f32` for production
//! runs, `f64` for high-precision verification (gradient checks, adjoint
//! tests). See [`Scalar`] and the concrete aliases below.

pub mod analysis;
pub mod error;
pub mod genome;
pub mod image_io;
pub mod metrics;
pub mod network;
pub mod ops;
pub mod resample;
pub mod selection;
pub mod spectrum;
pub mod tensor;
pub mod trainer;

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssignOps, Signed, ToPrimitive};

pub use error::{Error, Result};

/// Floating-point scalar the whole crate is generic over: `f32` or `f64`.
///
/// The bounds are chosen so that the blanket `rustfft::FftNum` impl applies
/// and conversions to/from `f64` (seeding constants, statistics) never fail.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + Signed
    + Sum<Self>
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Shorthand conversion from `f64` literals into the generic scalar.
#[inline]
pub(crate) fn sc<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 -> Scalar conversion")
}

/// Production-precision image.
pub type Image32 = image_io::Image<f32>;
/// Verification-precision image.
pub type Image64 = image_io::Image<f64>;
/// Production-precision network.
pub type Network32 = network::Network<f32>;
/// Verification-precision network (used by gradient checks).
pub type Network64 = network::Network<f64>;
/// Production-precision power spectrum.
pub type PowerSpectrum32 = spectrum::PowerSpectrum<f32>;
