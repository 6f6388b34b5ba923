//! `sweep`: hot and cold circles on `Σ₁` as the neighbor direction turns.

use std::fmt::Write as _;

use clifford_core::{eggbeater_sweep, GreatCircle, HotColdFrame, UnitQuaternion};
use serde::{Deserialize, Serialize};

use crate::config::{CliError, RunConfig};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleRecord {
    pub a: [f64; 4],
    pub b: [f64; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub theta: f64,
    pub hot: CircleRecord,
    pub cold: CircleRecord,
    pub q_exact: [f64; 4],
    pub q_first_order: [f64; 4],
    pub approx_error: f64,
}

impl From<&HotColdFrame> for SweepRecord {
    fn from(f: &HotColdFrame) -> Self {
        let circle = |c: &GreatCircle| CircleRecord {
            a: c.a().to_array(),
            b: c.b().to_array(),
        };
        Self {
            theta: f.theta,
            hot: circle(&f.hot),
            cold: circle(&f.cold),
            q_exact: f.q_exact.to_array(),
            q_first_order: f.q_first_order.to_array(),
            approx_error: f.approx_error(),
        }
    }
}

pub fn run_sweep(cfg: &RunConfig) -> Result<Vec<HotColdFrame>, CliError> {
    cfg.validate()?;
    if cfg.alpha() == 0.0 {
        return Err(CliError::Usage(
            "sweep needs alpha > 0; Hopf fibers have no hot or cold circles".into(),
        ));
    }
    Ok(eggbeater_sweep(cfg.alpha(), cfg.epsilon, cfg.n_frames)?)
}

pub fn records(frames: &[HotColdFrame]) -> Vec<SweepRecord> {
    frames.iter().map(SweepRecord::from).collect()
}

pub fn to_json(frames: &[HotColdFrame]) -> String {
    let mut s = serde_json::to_string_pretty(&records(frames)).expect("records are plain data");
    s.push('\n');
    s
}

pub const CSV_HEADER: &str = "theta,\
hot_a_w,hot_a_x,hot_a_y,hot_a_z,hot_b_w,hot_b_x,hot_b_y,hot_b_z,\
cold_a_w,cold_a_x,cold_a_y,cold_a_z,cold_b_w,cold_b_x,cold_b_y,cold_b_z,\
q_exact_w,q_exact_x,q_exact_y,q_exact_z,\
q_first_order_w,q_first_order_x,q_first_order_y,q_first_order_z,\
approx_error";

pub fn to_csv(frames: &[HotColdFrame]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records(frames) {
        let mut fields = vec![r.theta];
        for q in [
            r.hot.a,
            r.hot.b,
            r.cold.a,
            r.cold.b,
            r.q_exact,
            r.q_first_order,
        ] {
            fields.extend(q);
        }
        fields.push(r.approx_error);
        let row: Vec<String> = fields.iter().map(|v| format!("{v:?}")).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

const PANEL: f64 = 240.0;
const SCALE: f64 = 40.0;
const COLUMNS: usize = 4;
const CIRCLE_POINTS: usize = 128;
/// Stereographic images farther out than this are dropped (near the pole −1).
const CLIP_RADIUS: f64 = 20.0;

/// Stereographic projection from −1 into R³, then a fixed oblique view.
fn project(q: UnitQuaternion) -> Option<(f64, f64)> {
    let denom = 1.0 + q.w();
    if denom < 1e-9 {
        return None;
    }
    let [x, y, z] = q.vector().map(|c| c / denom);
    if (x * x + y * y + z * z).sqrt() > CLIP_RADIUS {
        return None;
    }
    Some((x - 0.5 * z, -(y - 0.3 * z)))
}

fn polylines(circle: &GreatCircle) -> Vec<Vec<(f64, f64)>> {
    let mut runs = vec![Vec::new()];
    for k in 0..=CIRCLE_POINTS {
        let t = std::f64::consts::TAU * k as f64 / CIRCLE_POINTS as f64;
        match project(circle.point_at(t)) {
            Some(p) => runs.last_mut().expect("non-empty").push(p),
            None => runs.push(Vec::new()),
        }
    }
    runs.retain(|r| r.len() > 1);
    runs
}

/// One panel per frame: hot circle red, cold circle blue.
pub fn to_svg(frames: &[HotColdFrame]) -> String {
    let rows = frames.len().div_ceil(COLUMNS);
    let (width, height) = (PANEL * COLUMNS as f64, PANEL * rows as f64);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    for (k, frame) in frames.iter().enumerate() {
        let (cx, cy) = (
            PANEL * ((k % COLUMNS) as f64 + 0.5),
            PANEL * ((k / COLUMNS) as f64 + 0.5),
        );
        let _ = writeln!(
            out,
            r##"<g><rect x="{:.1}" y="{:.1}" width="{PANEL}" height="{PANEL}" fill="none" stroke="#ccc"/>"##,
            cx - PANEL / 2.0,
            cy - PANEL / 2.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="12" font-family="monospace">theta = {:.4}</text>"#,
            cx - PANEL / 2.0 + 6.0,
            cy - PANEL / 2.0 + 16.0,
            frame.theta
        );
        for (circle, colour) in [(&frame.hot, "#c0392b"), (&frame.cold, "#2471a3")] {
            for run in polylines(circle) {
                let pts: Vec<String> = run
                    .iter()
                    .map(|(x, y)| format!("{:.2},{:.2}", cx + SCALE * x, cy + SCALE * y))
                    .collect();
                let _ = writeln!(
                    out,
                    r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="1.5"/>"#,
                    pts.join(" ")
                );
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
