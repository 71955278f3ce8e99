//! Raster and vector renders of a planar coloring.
//!
//! Pixel `(col, row)` shows the color at its exact center
//! `(x0 + (col + 1/2)·Δx, y1 - (row + 1/2)·Δy)`; row 0 is the top edge.

use std::fmt::Write as _;
use std::str::FromStr;

use linf_snake::{Color, ColorOracle, RVector, Rational};

use crate::Error;

pub const RED: [u8; 3] = [220, 60, 50];
pub const BLUE: [u8; 3] = [60, 90, 220];

pub fn rgb(color: Color) -> [u8; 3] {
    match color {
        Color::Red => RED,
        Color::Blue => BLUE,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ppm,
    Svg,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "ppm" => Ok(Format::Ppm),
            "svg" => Ok(Format::Svg),
            _ => Err(Error::Format(format!("unknown render format {s:?}"))),
        }
    }
}

/// World window `[x0, x1] × [y0, y1]` sampled on a `width × height` grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub x0: Rational,
    pub y0: Rational,
    pub x1: Rational,
    pub y1: Rational,
    pub width: u32,
    pub height: u32,
}

impl RenderSpec {
    pub fn new(window: [Rational; 4], width: u32, height: u32) -> Result<Self, Error> {
        let [x0, y0, x1, y1] = window;
        if x0 >= x1 || y0 >= y1 {
            return Err(Error::Format("render window must have x0 < x1 and y0 < y1".into()));
        }
        if width == 0 || height == 0 {
            return Err(Error::Format("render resolution must be positive".into()));
        }
        Ok(RenderSpec { x0, y0, x1, y1, width, height })
    }

    fn half_step(extent: Rational, pixels: u32) -> Rational {
        extent / Rational::from(2 * i64::from(pixels))
    }

    pub fn pixel_center(&self, col: u32, row: u32) -> RVector {
        let hx = Self::half_step(&self.x1 - &self.x0, self.width);
        let hy = Self::half_step(&self.y1 - &self.y0, self.height);
        let x = &self.x0 + &hx * Rational::from(2 * i64::from(col) + 1);
        let y = &self.y1 - &hy * Rational::from(2 * i64::from(row) + 1);
        RVector::new(vec![x, y]).expect("two coordinates")
    }
}

/// Colors of all pixels, row-major from the top-left corner.
pub fn render_colors(oracle: &impl ColorOracle, spec: &RenderSpec) -> Result<Vec<Color>, Error> {
    if oracle.dim() != 2 {
        return Err(Error::Format(format!("renders need a planar coloring, got dimension {}", oracle.dim())));
    }
    let mut colors = Vec::with_capacity(spec.width as usize * spec.height as usize);
    for row in 0..spec.height {
        for col in 0..spec.width {
            colors.push(oracle.color(&spec.pixel_center(col, row))?);
        }
    }
    Ok(colors)
}

/// Binary PPM (`P6`, maxval 255).
pub fn ppm(spec: &RenderSpec, colors: &[Color]) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", spec.width, spec.height).into_bytes();
    out.reserve(colors.len() * 3);
    for &c in colors {
        out.extend_from_slice(&rgb(c));
    }
    out
}

/// SVG with one unit cell per pixel; horizontal runs of one color share a rect.
pub fn svg(spec: &RenderSpec, colors: &[Color]) -> String {
    let (w, h) = (spec.width, spec.height);
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" shape-rendering=\"crispEdges\">\n"
    );
    for (row, line) in colors.chunks(w as usize).enumerate() {
        let mut start = 0;
        while start < line.len() {
            let color = line[start];
            let end = line[start..].iter().position(|&c| c != color).map_or(line.len(), |off| start + off);
            let [r, g, b] = rgb(color);
            let _ = writeln!(
                out,
                "<rect x=\"{start}\" y=\"{row}\" width=\"{}\" height=\"1\" fill=\"rgb({r},{g},{b})\"/>",
                end - start
            );
            start = end;
        }
    }
    out.push_str("</svg>\n");
    out
}

pub fn render(oracle: &impl ColorOracle, spec: &RenderSpec, format: Format) -> Result<Vec<u8>, Error> {
    let colors = render_colors(oracle, spec)?;
    Ok(match format {
        Format::Ppm => ppm(spec, &colors),
        Format::Svg => svg(spec, &colors).into_bytes(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use linf_snake::space_coloring;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn spec(w: u32, h: u32) -> RenderSpec {
        RenderSpec::new([q("-6"), q("-6"), q("14"), q("14")], w, h).unwrap()
    }

    #[test]
    fn pixel_centers_are_exact() {
        let s = spec(400, 400);
        assert_eq!(s.pixel_center(0, 0), "-239/40,559/40".parse().unwrap());
        assert_eq!(s.pixel_center(399, 399), "559/40,-239/40".parse().unwrap());
        assert_eq!(s.pixel_center(120, 279), "1/40,1/40".parse().unwrap());
    }

    #[test]
    fn ppm_header_and_size() {
        let c = space_coloring(2).unwrap();
        let bytes = render(&c, &spec(4, 3), Format::Ppm).unwrap();
        assert!(bytes.starts_with(b"P6\n4 3\n255\n"));
        assert_eq!(bytes.len(), "P6\n4 3\n255\n".len() + 36);
    }

    #[test]
    fn svg_runs_cover_every_row() {
        let c = space_coloring(2).unwrap();
        let s = spec(20, 20);
        let colors = render_colors(&c, &s).unwrap();
        let text = svg(&s, &colors);
        let mut widths = [0usize; 20];
        for line in text.lines().filter(|l| l.starts_with("<rect")) {
            let field = |name: &str| -> usize {
                let rest = &line[line.find(&format!(" {name}=\"")).unwrap() + name.len() + 3..];
                rest[..rest.find('"').unwrap()].parse().unwrap()
            };
            widths[field("y")] += field("width");
        }
        assert!(widths.iter().all(|&w| w == 20));
    }

    #[test]
    fn rejects_degenerate_specs() {
        assert!(RenderSpec::new([q("0"), q("0"), q("0"), q("1")], 1, 1).is_err());
        assert!(RenderSpec::new([q("0"), q("0"), q("1"), q("1")], 0, 1).is_err());
        let c = space_coloring(3).unwrap();
        assert!(render_colors(&c, &spec(1, 1)).is_err());
    }
}
