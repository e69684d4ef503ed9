//! Minimal SVG 1.1 writer for ball figures.

use std::fmt::Write;

use metrikos::balls::BoundaryPolyline;

pub const SIZE: f64 = 400.0;
const MARGIN: f64 = 0.1;

/// Pixel coordinate with at most six decimals and no trailing zeros.
pub fn px(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_owned()
    } else {
        s.to_owned()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    Polyline {
        points: Vec<(f64, f64)>,
        closed: bool,
        stroke: &'static str,
        width: f64,
    },
    Marker {
        at: (f64, f64),
        radius: f64,
    },
    Label {
        at: (f64, f64),
        text: String,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SvgScene {
    pub width: f64,
    pub height: f64,
    pub title: String,
    pub elements: Vec<Element>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

impl SvgScene {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
        let (w, h) = (px(self.width), px(self.height));
        writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
        )
        .unwrap();
        writeln!(out, "  <title>{}</title>", escape(&self.title)).unwrap();
        for e in &self.elements {
            match e {
                Element::Polyline {
                    points,
                    closed,
                    stroke,
                    width,
                } => {
                    let mut d = String::new();
                    for (k, (x, y)) in points.iter().enumerate() {
                        let cmd = if k == 0 { "M" } else { " L" };
                        write!(d, "{cmd} {} {}", px(*x), px(*y)).unwrap();
                    }
                    if *closed {
                        d.push_str(" Z");
                    }
                    writeln!(
                        out,
                        "  <path d=\"{d}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{}\"/>",
                        px(*width)
                    )
                    .unwrap();
                }
                Element::Marker { at, radius } => {
                    writeln!(
                        out,
                        "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>",
                        px(at.0),
                        px(at.1),
                        px(*radius)
                    )
                    .unwrap();
                }
                Element::Label { at, text } => {
                    writeln!(
                        out,
                        "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\">{}</text>",
                        px(at.0),
                        px(at.1),
                        escape(text)
                    )
                    .unwrap();
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Maps the square `center ± radius` onto the viewport inside a 10% margin,
/// with y pointing up.
pub struct Viewport {
    cx: f64,
    cy: f64,
    scale: f64,
}

impl Viewport {
    pub fn around(cx: f64, cy: f64, radius: f64) -> Self {
        Self {
            cx,
            cy,
            scale: SIZE * (0.5 - MARGIN) / radius,
        }
    }

    pub fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            SIZE / 2.0 + (x - self.cx) * self.scale,
            SIZE / 2.0 - (y - self.cy) * self.scale,
        )
    }
}

pub fn ball_scene(b: &BoundaryPolyline, metric: &str, radius_label: &str) -> SvgScene {
    let c = b.center.coords();
    let view = Viewport::around(c[0], c[1], b.radius);
    let axis = |from: (f64, f64), to: (f64, f64)| Element::Polyline {
        points: vec![from, to],
        closed: false,
        stroke: "#bbbbbb",
        width: 0.5,
    };
    let center = view.map(c[0], c[1]);
    let edge = SIZE * MARGIN / 2.0;
    SvgScene {
        width: SIZE,
        height: SIZE,
        title: format!("{metric} ball, radius {radius_label}"),
        elements: vec![
            axis((edge, center.1), (SIZE - edge, center.1)),
            axis((center.0, edge), (center.0, SIZE - edge)),
            Element::Polyline {
                points: b
                    .samples
                    .iter()
                    .map(|p| view.map(p.coords()[0], p.coords()[1]))
                    .collect(),
                closed: true,
                stroke: "black",
                width: 1.5,
            },
            Element::Marker {
                at: center,
                radius: 3.0,
            },
            Element::Label {
                at: (center.0 + 6.0, center.1 - 6.0),
                text: format!("r = {radius_label}"),
            },
        ],
    }
}
