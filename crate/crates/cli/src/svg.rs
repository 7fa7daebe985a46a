//! Iteration diagrams: stage 0 on top, one row of filled rectangles per stage.

use std::fmt::Write;

use cantor_core::{Construction, FamilySpec, IntervalSet};

use crate::error::{CliError, CliResult};

const MARGIN: f64 = 10.0;
const ROW_GAP: f64 = 8.0;
/// Floor on drawn width so collapsed (point) intervals stay visible.
const MIN_WIDTH: f64 = 0.5;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub depth: u32,
    pub width_px: u32,
    pub row_height_px: u32,
    pub family: FamilySpec,
}

impl RenderSpec {
    pub fn validate(&self, depth_cap: u32) -> CliResult<()> {
        if self.depth > depth_cap {
            return Err(cantor_core::Error::DepthOverCap { depth: self.depth, cap: depth_cap }.into());
        }
        if self.width_px == 0 || self.row_height_px == 0 {
            return Err(CliError::usage("pixel dimensions must be positive"));
        }
        self.family.validate()?;
        Ok(())
    }
}

pub fn render(spec: &RenderSpec, depth_cap: u32) -> CliResult<String> {
    spec.validate(depth_cap)?;
    let mut stages = Vec::with_capacity(spec.depth as usize + 1);
    let mut c = Construction::new(spec.family.clone())?;
    stages.push(c.to_set());
    for _ in 0..spec.depth {
        c.advance()?;
        stages.push(c.to_set());
    }
    Ok(draw(&stages, spec.width_px, spec.row_height_px))
}

fn draw(stages: &[IntervalSet], width_px: u32, row_height_px: u32) -> String {
    let width = f64::from(width_px);
    let row = f64::from(row_height_px);
    let total_w = width + 2.0 * MARGIN;
    let total_h = 2.0 * MARGIN + stages.len() as f64 * row + (stages.len().saturating_sub(1)) as f64 * ROW_GAP;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total_w:.0}" height="{total_h:.0}" viewBox="0 0 {total_w:.0} {total_h:.0}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (k, stage) in stages.iter().enumerate() {
        let y = MARGIN + k as f64 * (row + ROW_GAP);
        writeln!(out, r#"<g id="stage-{k}" fill="black">"#).unwrap();
        for iv in stage.iter() {
            let x = MARGIN + iv.a().to_f64() * width;
            let w = (iv.length().to_f64() * width).max(MIN_WIDTH);
            writeln!(out, r#"<rect x="{x:.4}" y="{y:.4}" width="{w:.4}" height="{row:.4}"/>"#).unwrap();
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
