//! Image file I/O: PNG and binary PGM/PPM, 8-bit only.

use std::path::Path;

use image::codecs::pnm::{PnmEncoder, PnmSubtype, SampleEncoding};
use image::{DynamicImage, ExtendedColorType, ImageEncoder, ImageFormat, ImageReader};

use crate::error::{Error, Result};
use crate::raster::Raster;

/// Read a PNG or PNM file into a raster.
///
/// Grayscale sources load as one channel, color sources as three; an alpha
/// channel is dropped. Bit depths above 8 are rejected.
pub fn read_image(path: impl AsRef<Path>) -> Result<Raster> {
    let img = ImageReader::open(path.as_ref())?.decode()?;
    match img {
        DynamicImage::ImageLuma8(buf) => {
            Raster::new(buf.width(), buf.height(), 1, buf.into_raw())
        }
        DynamicImage::ImageLumaA8(buf) => {
            let (w, h) = buf.dimensions();
            let data = buf.into_raw().chunks_exact(2).map(|p| p[0]).collect();
            Raster::new(w, h, 1, data)
        }
        DynamicImage::ImageRgb8(buf) => Raster::new(buf.width(), buf.height(), 3, buf.into_raw()),
        DynamicImage::ImageRgba8(buf) => {
            let (w, h) = buf.dimensions();
            let data = buf
                .into_raw()
                .chunks_exact(4)
                .flat_map(|p| [p[0], p[1], p[2]])
                .collect();
            Raster::new(w, h, 3, data)
        }
        other => Err(Error::InvalidRaster(format!(
            "unsupported bit depth or layout: {:?}",
            other.color()
        ))),
    }
}

/// Write a raster as PNG.
pub fn write_png(raster: &Raster, path: impl AsRef<Path>) -> Result<()> {
    let color = match raster.channels() {
        1 => ExtendedColorType::L8,
        _ => ExtendedColorType::Rgb8,
    };
    image::save_buffer_with_format(
        path.as_ref(),
        raster.data(),
        raster.width(),
        raster.height(),
        color,
        ImageFormat::Png,
    )?;
    Ok(())
}

/// Write a single-channel raster as binary (P5) PGM.
pub fn write_pgm(raster: &Raster, path: impl AsRef<Path>) -> Result<()> {
    raster.expect_gray()?;
    let file = std::fs::File::create(path.as_ref())?;
    let encoder = PnmEncoder::new(std::io::BufWriter::new(file))
        .with_subtype(PnmSubtype::Graymap(SampleEncoding::Binary));
    encoder.write_image(
        raster.data(),
        raster.width(),
        raster.height(),
        ExtendedColorType::L8,
    )?;
    Ok(())
}
