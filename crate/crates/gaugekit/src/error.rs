//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by any stage of the gauge-reading pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("expected a {expected}-channel raster, got {got}")]
    ChannelCount { expected: u8, got: u8 },

    #[error("invalid raster: {0}")]
    InvalidRaster(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("out of bounds: {0}")]
    OutOfBounds(String),

    /// No major keypoint lies at or above the waterline row.
    #[error("no major keypoint at or above the waterline")]
    NoAnchor,

    /// The anchor keypoint carries no numeral value, so only the
    /// geometry (gaps and ratio) can be computed, not a reading.
    #[error("anchor keypoint has no known numeral value")]
    AnchorValueUnknown,

    #[error("waterline gap {d_n} px inconsistent with major gap {d_m} px")]
    GapOutOfRange { d_n: f64, d_m: f64 },

    #[error("no parseable reading in model response")]
    Unparseable,

    #[error("transport: {0}")]
    Transport(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
