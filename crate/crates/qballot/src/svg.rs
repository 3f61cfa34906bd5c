//! Newton polytope plot: q-exponent on the horizontal axis, x-exponent on
//! the vertical axis.

use std::fmt::Write;

use qballot_core::analysis::NewtonPolytope;

pub const GENERATOR_COMMENT: &str = "<!-- generated by qballot polytope -->";

const W: f64 = 640.0;
const H: f64 = 400.0;
const MARGIN: f64 = 60.0;

fn tick_step(range: i64) -> i64 {
    let mut mag = 1;
    loop {
        for m in [1, 2, 5] {
            if range / (m * mag) <= 12 {
                return m * mag;
            }
        }
        mag *= 10;
    }
}

pub fn render(n: u32, p: &NewtonPolytope) -> String {
    let qmax = p.points.iter().map(|pt| pt.0).max().unwrap_or(0).max(1);
    let xmax = p.points.iter().map(|pt| pt.1).max().unwrap_or(0).max(1);
    let sx = (W - 2.0 * MARGIN) / qmax as f64;
    let sy = (H - 2.0 * MARGIN) / xmax as f64;
    let px = |q: i64| MARGIN + q as f64 * sx;
    let py = |x: i64| H - MARGIN - x as f64 * sy;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str(GENERATOR_COMMENT);
    s.push('\n');
    let _ = writeln!(s, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">");
    let _ = writeln!(s, "<title>Newton polytope of P_{n}</title>");
    s.push_str("<g font-family=\"sans-serif\" font-size=\"11\">\n");
    // axes
    let (x0, y0) = (px(0), py(0));
    let _ = writeln!(s, "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>", px(qmax));
    let _ = writeln!(s, "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{:.2}\" stroke=\"black\"/>", py(xmax));
    let step = tick_step(qmax);
    for q in (0..=qmax).step_by(step as usize) {
        let _ = writeln!(s, "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">q^{q}</text>", px(q), y0 + 16.0);
    }
    let step = tick_step(xmax);
    for x in (0..=xmax).step_by(step as usize) {
        let _ = writeln!(s, "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">x^{x}</text>", x0 - 6.0, py(x) + 4.0);
    }
    let _ = writeln!(s, "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">powers of q</text>", W / 2.0, H - 16.0);
    let _ = writeln!(
        s,
        "<text x=\"16\" y=\"{:.2}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.2})\">powers of x</text>",
        H / 2.0,
        H / 2.0
    );
    s.push_str("</g>\n");
    // hull, then the monomials on top
    let hull: Vec<String> = p.hull.iter().map(|&(q, x)| format!("{:.2},{:.2}", px(q), py(x))).collect();
    let _ = writeln!(s, "<polygon points=\"{}\" fill=\"#dde8f5\" stroke=\"#1f4e8c\" stroke-width=\"1.5\"/>", hull.join(" "));
    for &(q, x) in &p.points {
        let _ = writeln!(s, "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\" fill=\"black\"/>", px(q), py(x));
    }
    s.push_str("</svg>\n");
    s
}
