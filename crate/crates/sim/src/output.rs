//! CSV, JSON and SVG artifacts of a run.

use std::io::Write;

use serde::Serialize;

use crate::error::SimError;
use crate::flow::Frame;
use crate::run::{RunConfig, RunOutput, Summary};
use crate::state::reconstruct;
use crate::verify::conserved;

pub const CSV_HEADER: &str = "t,s,k,x,y,H0,H1,TK";

/// One row per frame and node; floats carry 17 significant digits.
pub fn write_csv<W: Write>(mut out: W, frames: &[Frame]) -> Result<(), SimError> {
    writeln!(out, "{CSV_HEADER}")?;
    for frame in frames {
        let curve = reconstruct(&frame.state, frame.gauge);
        let c = conserved(&frame.state);
        for ((s, k), p) in frame
            .state
            .nodes()
            .iter()
            .zip(frame.state.samples())
            .zip(curve.points())
        {
            writeln!(
                out,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
                c.t, s, k, p[0], p[1], c.h0, c.h1, c.tk
            )?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Manifest<'a> {
    #[serde(flatten)]
    config: &'a RunConfig,
    characteristic: &'a str,
    field: &'a str,
    summary: &'a Summary,
}

pub fn write_manifest<W: Write>(out: W, run: &RunOutput) -> Result<(), SimError> {
    let manifest = Manifest {
        config: &run.config,
        characteristic: &run.summary.characteristic,
        field: &run.summary.field,
        summary: &run.summary,
    };
    serde_json::to_writer_pretty(out, &manifest)?;
    Ok(())
}

#[derive(Serialize)]
struct JsonFrame {
    t: f64,
    theta0: f64,
    origin: [f64; 2],
    k: Vec<f64>,
    x: Vec<f64>,
    y: Vec<f64>,
}

/// Manifest plus every recorded frame.
pub fn write_json<W: Write>(out: W, run: &RunOutput) -> Result<(), SimError> {
    #[derive(Serialize)]
    struct Full<'a> {
        #[serde(flatten)]
        config: &'a RunConfig,
        characteristic: &'a str,
        field: &'a str,
        summary: &'a Summary,
        frames: Vec<JsonFrame>,
    }
    let frames = run
        .frames
        .iter()
        .map(|f| {
            let curve = reconstruct(&f.state, f.gauge);
            JsonFrame {
                t: f.time(),
                theta0: f.gauge.theta0,
                origin: f.gauge.origin,
                k: f.state.samples().to_vec(),
                x: curve.points().iter().map(|p| p[0]).collect(),
                y: curve.points().iter().map(|p| p[1]).collect(),
            }
        })
        .collect();
    serde_json::to_writer(
        out,
        &Full {
            config: &run.config,
            characteristic: &run.summary.characteristic,
            field: &run.summary.field,
            summary: &run.summary,
            frames,
        },
    )?;
    Ok(())
}

/// Curve snapshots as polylines, later frames darker.
pub fn write_svg<W: Write>(mut out: W, frames: &[Frame]) -> Result<(), SimError> {
    let curves: Vec<Vec<[f64; 2]>> = frames
        .iter()
        .map(|f| {
            let c = reconstruct(&f.state, f.gauge);
            let mut pts = c.points().to_vec();
            pts.push(c.end());
            pts
        })
        .collect();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in curves.iter().flatten() {
        for i in 0..2 {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let pad = 0.05 * span;
    let size = 800.0;
    let scale = size / (span + 2.0 * pad);
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )?;
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#)?;
    let count = curves.len().max(2) - 1;
    for (i, pts) in curves.iter().enumerate() {
        let shade = 200 - (160 * i / count) as u32;
        let path: Vec<String> = pts
            .iter()
            .map(|p| {
                let x = (p[0] - lo[0] + pad) * scale;
                let y = size - (p[1] - lo[1] + pad) * scale;
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(
            out,
            r#"<polyline fill="none" stroke="rgb({shade},{shade},255)" stroke-width="1.5" points="{}"/>"#,
            path.join(" ")
        )?;
    }
    writeln!(out, "</svg>")?;
    Ok(())
}
