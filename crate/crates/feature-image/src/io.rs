use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use ndarray::Array3;

use crate::compose::FeatureImage;
use crate::error::FeatureImageError;
use crate::label::LabelDistribution;
use crate::order::FeatureBlock;

/// Write an image as a raw little-endian f32 tensor (`<stem>.f32`, C order,
/// shape `[3, width, 230]`) plus a text sidecar (`<stem>.meta`) carrying
/// shape, layout, label and source id.
pub fn save_image(image: &FeatureImage, stem: &Path) -> Result<(), FeatureImageError> {
    let raw_path = stem.with_extension("f32");
    let mut raw = BufWriter::new(File::create(raw_path)?);
    for &v in image.data().iter() {
        raw.write_f32::<LittleEndian>(v)?;
    }
    raw.flush()?;

    let meta_path = stem.with_extension("meta");
    let mut meta = BufWriter::new(File::create(meta_path)?);
    let (c, w, h) = image.data().dim();
    writeln!(meta, "shape: {c} {w} {h}")?;
    writeln!(meta, "source_id: {}", image.source_id())?;
    let label: Vec<String> = image.label().values().iter().map(|v| v.to_string()).collect();
    writeln!(meta, "label: {}", label.join(" "))?;
    for (block, range) in image.layout() {
        writeln!(meta, "layout: {} {} {}", block.name(), range.start, range.end)?;
    }
    meta.flush()?;
    Ok(())
}

/// Load an image written by [`save_image`].
pub fn load_image(stem: &Path) -> Result<FeatureImage, FeatureImageError> {
    let malformed = |msg: &str| FeatureImageError::MalformedFile(format!("{}: {msg}", stem.display()));

    let meta = BufReader::new(File::open(stem.with_extension("meta"))?);
    let mut shape: Option<(usize, usize, usize)> = None;
    let mut source_id = String::new();
    let mut label: Option<LabelDistribution> = None;
    let mut layout = Vec::new();
    for line in meta.lines() {
        let line = line?;
        let Some((key, rest)) = line.split_once(':') else {
            continue;
        };
        let rest = rest.trim();
        match key {
            "shape" => {
                let dims: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| t.parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| malformed("bad shape"))?;
                if dims.len() != 3 {
                    return Err(malformed("shape must have 3 dims"));
                }
                shape = Some((dims[0], dims[1], dims[2]));
            }
            "source_id" => source_id = rest.to_string(),
            "label" => {
                let values: Vec<f64> = rest
                    .split_whitespace()
                    .map(|t| t.parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| malformed("bad label"))?;
                label = Some(LabelDistribution::new(values)?);
            }
            "layout" => {
                let mut parts = rest.split_whitespace();
                let name = parts.next().ok_or_else(|| malformed("empty layout"))?;
                let block: FeatureBlock = name.parse()?;
                let start: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| malformed("bad layout start"))?;
                let end: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| malformed("bad layout end"))?;
                layout.push((block, start..end));
            }
            _ => {}
        }
    }
    let shape = shape.ok_or_else(|| malformed("missing shape"))?;
    let label = label.ok_or_else(|| malformed("missing label"))?;

    let mut raw = BufReader::new(File::open(stem.with_extension("f32"))?);
    let count = shape.0 * shape.1 * shape.2;
    let mut values = vec![0.0f32; count];
    raw.read_f32_into::<LittleEndian>(&mut values)?;
    let mut trailing = [0u8; 1];
    if raw.read(&mut trailing)? != 0 {
        return Err(malformed("raw tensor larger than declared shape"));
    }

    let data = Array3::from_shape_vec(shape, values).map_err(|_| malformed("shape mismatch"))?;
    Ok(FeatureImage::from_parts(data, layout, source_id, label))
}
