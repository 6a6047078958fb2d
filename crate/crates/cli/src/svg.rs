//! Hand-emitted deterministic SVG: the modulus shadow and the log shadow
//! of a two-dimensional domain side by side, with hull overlays painted
//! light-to-dark (envelope, complete hull, domain) and sampled tori as
//! dots. Regions are rasterized at cell centers and merged into
//! row-run rectangles; all coordinates are printed with fixed precision,
//! so identical inputs give identical bytes.

use std::fmt::Write as _;

use reinhardt_core::domain::ReinhardtDomain;
use reinhardt_core::laurent::TorusSpec;

const CANVAS: f64 = 800.0;
const PANEL_SIZE: f64 = 330.0;
const PANEL_TOP: f64 = 90.0;
const CELLS: usize = 140;

const COLOR_ENVELOPE: &str = "#d6e9f8";
const COLOR_COMPLETE: &str = "#8fc1e8";
const COLOR_DOMAIN: &str = "#20618c";

struct Panel {
    x0: f64,
    y0: f64,
    lo: [f64; 2],
    hi: [f64; 2],
    title: &'static str,
    labels: [&'static str; 2],
}

impl Panel {
    fn to_canvas(&self, u: f64, v: f64) -> (f64, f64) {
        let fx = (u - self.lo[0]) / (self.hi[0] - self.lo[0]);
        let fy = (v - self.lo[1]) / (self.hi[1] - self.lo[1]);
        (self.x0 + fx * PANEL_SIZE, self.y0 + (1.0 - fy) * PANEL_SIZE)
    }

    fn cell(&self) -> (f64, f64) {
        (
            (self.hi[0] - self.lo[0]) / CELLS as f64,
            (self.hi[1] - self.lo[1]) / CELLS as f64,
        )
    }

    /// Paint the membership region of one layer as merged row runs.
    fn paint(&self, out: &mut String, color: &str, member: &dyn Fn(f64, f64) -> bool) {
        let (du, dv) = self.cell();
        let px = PANEL_SIZE / CELLS as f64;
        for row in 0..CELLS {
            let v = self.lo[1] + (row as f64 + 0.5) * dv;
            let mut run_start: Option<usize> = None;
            for col in 0..=CELLS {
                let inside = col < CELLS && {
                    let u = self.lo[0] + (col as f64 + 0.5) * du;
                    member(u, v)
                };
                match (inside, run_start) {
                    (true, None) => run_start = Some(col),
                    (false, Some(start)) => {
                        let (cx, cy) = (
                            self.x0 + start as f64 * px,
                            self.y0 + PANEL_SIZE - (row + 1) as f64 * px,
                        );
                        let width = (col - start) as f64 * px;
                        let _ = writeln!(
                            out,
                            r##"<rect x="{cx:.2}" y="{cy:.2}" width="{width:.2}" height="{px:.2}" fill="{color}"/>"##
                        );
                        run_start = None;
                    }
                    _ => {}
                }
            }
        }
    }

    fn frame(&self, out: &mut String) {
        let _ = writeln!(
            out,
            r##"<rect x="{:.2}" y="{:.2}" width="{PANEL_SIZE:.2}" height="{PANEL_SIZE:.2}" fill="none" stroke="#333333" stroke-width="1"/>"##,
            self.x0, self.y0
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="14" fill="#111111">{}</text>"##,
            self.x0,
            self.y0 - 12.0,
            self.title
        );
        for k in 0..=4 {
            let f = k as f64 / 4.0;
            let u = self.lo[0] + f * (self.hi[0] - self.lo[0]);
            let v = self.lo[1] + f * (self.hi[1] - self.lo[1]);
            let (tx, _) = self.to_canvas(u, self.lo[1]);
            let (_, ty) = self.to_canvas(self.lo[0], v);
            let _ = writeln!(
                out,
                r##"<line x1="{tx:.2}" y1="{:.2}" x2="{tx:.2}" y2="{:.2}" stroke="#333333" stroke-width="1"/>"##,
                self.y0 + PANEL_SIZE,
                self.y0 + PANEL_SIZE + 4.0
            );
            let _ = writeln!(
                out,
                r##"<text x="{tx:.2}" y="{:.2}" font-family="monospace" font-size="10" text-anchor="middle" fill="#333333">{u:.2}</text>"##,
                self.y0 + PANEL_SIZE + 16.0
            );
            let _ = writeln!(
                out,
                r##"<line x1="{:.2}" y1="{ty:.2}" x2="{:.2}" y2="{ty:.2}" stroke="#333333" stroke-width="1"/>"##,
                self.x0 - 4.0,
                self.x0
            );
            let _ = writeln!(
                out,
                r##"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="10" text-anchor="end" fill="#333333">{v:.2}</text>"##,
                self.x0 - 6.0,
                ty + 3.0
            );
        }
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12" text-anchor="middle" fill="#111111">{}</text>"##,
            self.x0 + PANEL_SIZE / 2.0,
            self.y0 + PANEL_SIZE + 34.0,
            self.labels[0]
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12" text-anchor="middle" fill="#111111" transform="rotate(-90 {:.2} {:.2})">{}</text>"##,
            self.x0 - 40.0,
            self.y0 + PANEL_SIZE / 2.0,
            self.x0 - 40.0,
            self.y0 + PANEL_SIZE / 2.0,
            self.labels[1]
        );
    }

    fn dot(&self, out: &mut String, u: f64, v: f64) {
        if u < self.lo[0] || u > self.hi[0] || v < self.lo[1] || v > self.hi[1] {
            return;
        }
        let (cx, cy) = self.to_canvas(u, v);
        let _ = writeln!(
            out,
            r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="3" fill="#111111"/>"##
        );
    }
}

fn legend(out: &mut String) {
    let entries = [
        (COLOR_ENVELOPE, "log-convex complete hull"),
        (COLOR_COMPLETE, "complete hull"),
        (COLOR_DOMAIN, "domain"),
    ];
    for (i, (color, label)) in entries.iter().enumerate() {
        let x = 40.0 + i as f64 * 250.0;
        let _ = writeln!(
            out,
            r##"<rect x="{x:.2}" y="{:.2}" width="14" height="14" fill="{color}" stroke="#333333" stroke-width="0.5"/>"##,
            CANVAS - 40.0
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12" fill="#111111">{label}</text>"##,
            x + 20.0,
            CANVAS - 28.0
        );
    }
}

pub fn render(
    domain: &ReinhardtDomain,
    complete: Option<&ReinhardtDomain>,
    envelope: Option<&ReinhardtDomain>,
    tori: &[TorusSpec],
) -> String {
    assert_eq!(domain.dimension(), 2, "svg rendering is two-dimensional");
    let rho_max = domain.box_log_radius().to_f64();
    let r_max = rho_max.exp() * 1.05;
    let modulus = Panel {
        x0: 60.0,
        y0: PANEL_TOP,
        lo: [0.0, 0.0],
        hi: [r_max, r_max],
        title: "modulus shadow",
        labels: ["|z1|", "|z2|"],
    };
    let log_panel = Panel {
        x0: 440.0,
        y0: PANEL_TOP,
        lo: [rho_max - 6.2, rho_max - 6.2],
        hi: [rho_max + 0.2, rho_max + 0.2],
        title: "log shadow",
        labels: ["log|z1|", "log|z2|"],
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS:.0}" height="{CANVAS:.0}" viewBox="0 0 {CANVAS:.0} {CANVAS:.0}">"##
    );
    let _ = writeln!(out, r##"<rect width="{CANVAS:.0}" height="{CANVAS:.0}" fill="#ffffff"/>"##);
    let _ = writeln!(
        out,
        r##"<text x="40" y="40" font-family="monospace" font-size="16" fill="#111111">Reinhardt domain shadows with hull overlays</text>"##
    );

    let layers: [(Option<&ReinhardtDomain>, &str); 3] = [
        (envelope, COLOR_ENVELOPE),
        (complete, COLOR_COMPLETE),
        (Some(domain), COLOR_DOMAIN),
    ];
    for (set, color) in layers {
        let Some(set) = set else { continue };
        modulus.paint(&mut out, color, &|r1, r2| set.contains_modulus(&[r1, r2]));
        log_panel.paint(&mut out, color, &|x1, x2| {
            set.contains_modulus(&[x1.exp(), x2.exp()])
        });
    }
    for spec in tori {
        let w = spec.radii();
        modulus.dot(&mut out, w[0], w[1]);
        log_panel.dot(&mut out, w[0].ln(), w[1].ln());
    }
    modulus.frame(&mut out);
    log_panel.frame(&mut out);
    legend(&mut out);
    let _ = writeln!(out, "</svg>");
    out
}
