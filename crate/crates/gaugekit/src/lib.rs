//! Reading water levels off staff-gauge plates.
//!
//! The pipeline stages are:
//!
//! 1. **Raster core** — grayscale conversion, Gaussian/median smoothing,
//!    Otsu binarization, Sobel gradients, Canny edges.
//! 2. **Deskew** — near-vertical segment detection via a probabilistic Hough
//!    transform and percentile-based angular correction.
//! 3. **Waterline** — coarse-to-fine localization of the water row with a
//!    confidence score and accept/reject threshold.
//! 4. **Scale calibration** — pixel gaps between major scale marks turned
//!    into a centimeter reading through the gap ratio.
//! 5. **Reading extraction** — a two-stage multimodal-model client with a
//!    mock transport for hermetic runs.
//! 6. **Synthesis & evaluation** — a parametric gauge renderer with exact
//!    ground truth, plus the regression/confusion report harness.

pub mod edges;
pub mod error;
pub mod filter;
pub mod gradients;
pub mod io;
pub mod raster;
pub mod stats;
pub mod threshold;

pub use error::{Error, Result};
pub use raster::{ColSpan, Raster, Rect};
