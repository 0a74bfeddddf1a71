use std::fmt::Write as _;

use crate::geometry::{PointCloud, SupportModel};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 20.0;

struct Frame {
    x0: f64,
    y0: f64,
    scale: f64,
}

impl Frame {
    fn around(lo: [f64; 2], hi: [f64; 2]) -> Self {
        let extent = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
        let scale = (SIZE - 2.0 * MARGIN) / extent;
        // Centre the shorter axis.
        let x0 = lo[0] - ((extent - (hi[0] - lo[0])) / 2.0);
        let y0 = lo[1] - ((extent - (hi[1] - lo[1])) / 2.0);
        Frame { x0, y0, scale }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            MARGIN + (x - self.x0) * self.scale,
            SIZE - MARGIN - (y - self.y0) * self.scale,
        )
    }
}

fn planar(cloud: &PointCloud, i: usize) -> (f64, f64) {
    let p = cloud.point(i);
    (p[0], p.get(1).copied().unwrap_or(0.0))
}

/// Scatter of `cloud` over its support, with optional radius-`r` circles.
///
/// Only the first two coordinates are drawn; one-dimensional clouds sit on
/// the horizontal axis.
pub fn render_trial_svg(cloud: &PointCloud, support: &SupportModel, r: Option<f64>) -> String {
    let pad = r.unwrap_or(0.0);
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for i in 0..cloud.len() {
        let (x, y) = planar(cloud, i);
        lo = [lo[0].min(x), lo[1].min(y)];
        hi = [hi[0].max(x), hi[1].max(y)];
    }
    match support {
        SupportModel::UnitCircle => {
            lo = [lo[0].min(-1.0), lo[1].min(-1.0)];
            hi = [hi[0].max(1.0), hi[1].max(1.0)];
        }
        SupportModel::Interval { a, b } => {
            lo[0] = lo[0].min(*a);
            hi[0] = hi[0].max(*b);
        }
        SupportModel::Ball { center, radius } if center.len() <= 2 => {
            let cy = center.get(1).copied().unwrap_or(0.0);
            lo = [lo[0].min(center[0] - radius), lo[1].min(cy - radius)];
            hi = [hi[0].max(center[0] + radius), hi[1].max(cy + radius)];
        }
        _ => {}
    }
    let frame = Frame::around([lo[0] - pad, lo[1] - pad], [hi[0] + pad, hi[1] + pad]);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="0 0 600 600">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="600" height="600" fill="white"/>"#).unwrap();
    match support {
        SupportModel::UnitCircle => {
            let (cx, cy) = frame.map(0.0, 0.0);
            writeln!(
                s,
                r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="2"/>"#,
                frame.scale
            )
            .unwrap();
        }
        SupportModel::Interval { a, b } => {
            let (x1, y) = frame.map(*a, 0.0);
            let (x2, _) = frame.map(*b, 0.0);
            writeln!(s, r#"<line x1="{x1:.3}" y1="{y:.3}" x2="{x2:.3}" y2="{y:.3}" stroke="black" stroke-width="2"/>"#)
                .unwrap();
        }
        SupportModel::Ball { center, radius } if center.len() <= 2 => {
            let (cx, cy) = frame.map(center[0], center.get(1).copied().unwrap_or(0.0));
            writeln!(
                s,
                r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="2"/>"#,
                radius * frame.scale
            )
            .unwrap();
        }
        _ => {}
    }
    if let Some(r) = r {
        for i in 0..cloud.len() {
            let (x, y) = planar(cloud, i);
            let (cx, cy) = frame.map(x, y);
            writeln!(
                s,
                r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="blue" stroke-width="1"/>"#,
                r * frame.scale
            )
            .unwrap();
        }
    }
    for i in 0..cloud.len() {
        let (x, y) = planar(cloud, i);
        let (cx, cy) = frame.map(x, y);
        writeln!(s, r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="2" fill="red"/>"#).unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_drawing() {
        let cloud = PointCloud::from_xy(&[(1.0, 0.0), (0.0, 1.0)]).unwrap();
        let svg = render_trial_svg(&cloud, &SupportModel::UnitCircle, Some(0.1));
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches(r#"fill="red""#).count(), 2);
        assert_eq!(svg.matches(r#"stroke="blue""#).count(), 2);
        assert_eq!(svg.matches(r#"stroke="black""#).count(), 1);
        // Support circle spans the frame minus margins and the radius pad.
        let expected = (SIZE - 2.0 * MARGIN) / 2.2;
        assert!(svg.contains(&format!(r#"r="{expected:.3}" fill="none" stroke="black""#)));
    }

    #[test]
    fn interval_drawing() {
        let cloud = PointCloud::from_flat(1, vec![0.25, 0.5]).unwrap();
        let svg = render_trial_svg(&cloud, &SupportModel::Interval { a: 0.0, b: 1.0 }, None);
        assert!(svg.contains("<line"));
        assert!(!svg.contains("blue"));
        assert!(svg.contains(r#"<circle cx="160.000" cy="300.000" r="2" fill="red"/>"#));
    }
}
