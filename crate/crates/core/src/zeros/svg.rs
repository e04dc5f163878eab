use std::fmt::Write;

use num_complex::Complex64;

/// One dot series in a scatter plot.
pub struct Series<'a> {
    pub label: String,
    pub points: &'a [Complex64],
}

const PALETTE: [&str; 6] = ["#1f3b9c", "#c0392b", "#1e8449", "#7d3c98", "#b9770e", "#17202a"];

/// SVG 1.1 scatter of zero sets over support outlines with axes through the
/// origin. Coordinates are rounded to 1e-6.
pub fn scatter_svg(title: &str, outlines: &[Vec<Complex64>], series: &[Series<'_>]) -> String {
    let all = outlines
        .iter()
        .flatten()
        .chain(series.iter().flat_map(|s| s.points.iter()))
        .copied()
        .chain([Complex64::new(0.0, 0.0)]);
    let (mut lo, mut hi) = (Complex64::new(f64::INFINITY, f64::INFINITY), Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
    for p in all {
        lo = Complex64::new(lo.re.min(p.re), lo.im.min(p.im));
        hi = Complex64::new(hi.re.max(p.re), hi.im.max(p.im));
    }
    let pad = 0.05 * (hi.re - lo.re).max(hi.im - lo.im).max(1e-9);
    let (x0, x1, y0, y1) = (lo.re - pad, hi.re + pad, lo.im - pad, hi.im + pad);
    let width = 800.0;
    let height = (width * (y1 - y0) / (x1 - x0)).clamp(200.0, 1600.0);
    let sx = width / (x1 - x0);
    let sy = height / (y1 - y0);
    let px = |z: Complex64| ((z.re - x0) * sx, (y1 - z.im) * sy);
    let r6 = |v: f64| (v * 1e6).round() / 1e6;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        r6(width),
        r6(height + 30.0),
        r6(width),
        r6(height + 30.0)
    );
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#, r6(width), r6(height + 30.0));
    let (ax, ay) = px(Complex64::new(0.0, 0.0));
    let _ = writeln!(
        s,
        r##"<g stroke="#999999" stroke-width="1"><line x1="0" y1="{y}" x2="{w}" y2="{y}"/><line x1="{x}" y1="0" x2="{x}" y2="{h}"/></g>"##,
        x = r6(ax),
        y = r6(ay),
        w = r6(width),
        h = r6(height)
    );
    let _ = writeln!(s, r#"<g fill="none" stroke="black" stroke-width="1">"#);
    for path in outlines {
        if path.len() < 2 {
            continue;
        }
        let pts: Vec<String> = path
            .iter()
            .map(|&z| {
                let (x, y) = px(z);
                format!("{},{}", r6(x), r6(y))
            })
            .collect();
        let _ = writeln!(s, r#"<polygon points="{}"/>"#, pts.join(" "));
    }
    let _ = writeln!(s, "</g>");
    for (k, ser) in series.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let _ = writeln!(s, r#"<g fill="{color}" stroke="none"><desc>{}</desc>"#, escape(&ser.label));
        for &z in ser.points {
            let (x, y) = px(z);
            let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="1"/>"#, r6(x), r6(y));
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" fill="{color}">{}</text>"#,
            r6(10.0 + 120.0 * k as f64),
            r6(height + 20.0),
            escape(&ser.label)
        );
    }
    let _ = writeln!(s, "</svg>");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
