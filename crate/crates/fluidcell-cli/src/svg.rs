//! Minimal self-contained SVG line charts: outage probability on a log
//! axis against the SIR threshold. Plotting is a convenience; the CSV
//! files are the contract.

pub struct Series {
    pub label: &'static str,
    pub probs: Vec<f64>,
    pub dotted: bool,
}

const W: f64 = 720.0;
const H: f64 = 480.0;
const ML: f64 = 70.0;
const MR: f64 = 20.0;
const MT: f64 = 40.0;
const MB: f64 = 55.0;
const P_FLOOR: f64 = 1e-4;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

fn x_px(d: f64, lo: f64, hi: f64) -> f64 {
    ML + (d - lo) / (hi - lo) * (W - ML - MR)
}

fn y_px(p: f64) -> f64 {
    let v = p.clamp(P_FLOOR, 1.0).log10();
    // v in [-4, 0]; 0 maps to the top of the plot area
    MT + (-v / 4.0) * (H - MT - MB)
}

pub fn curve_chart(title: &str, grid: &[f64], series: &[Series]) -> String {
    let lo = grid[0];
    let hi = grid[grid.len() - 1];
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" \
         viewBox=\"0 0 {W} {H}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    ));
    s.push_str(&format!(
        "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>\n<text x=\"{}\" y=\"22\" \
         text-anchor=\"middle\" font-size=\"15\">{title}</text>\n",
        W / 2.0
    ));

    // decade gridlines and labels
    for k in 0..=4 {
        let p = 10f64.powi(-k);
        let y = y_px(p);
        s.push_str(&format!(
            "<line x1=\"{ML}\" y1=\"{y:.1}\" x2=\"{:.1}\" y2=\"{y:.1}\" \
             stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
            W - MR
        ));
        s.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">1e-{k}</text>\n",
            ML - 6.0,
            y + 4.0
        ));
    }
    // x ticks every 5 dB on multiples of 5
    let mut t = (lo / 5.0).ceil() * 5.0;
    while t <= hi + 1e-9 {
        let x = x_px(t, lo, hi);
        s.push_str(&format!(
            "<line x1=\"{x:.1}\" y1=\"{MT}\" x2=\"{x:.1}\" y2=\"{:.1}\" \
             stroke=\"#eeeeee\" stroke-width=\"1\"/>\n",
            H - MB
        ));
        s.push_str(&format!(
            "<text x=\"{x:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{t}</text>\n",
            H - MB + 18.0
        ));
        t += 5.0;
    }
    s.push_str(&format!(
        "<rect x=\"{ML}\" y=\"{MT}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"none\" \
         stroke=\"#333333\"/>\n",
        W - ML - MR,
        H - MT - MB
    ));
    s.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">SIR threshold [dB]</text>\n",
        ML + (W - ML - MR) / 2.0,
        H - 12.0
    ));
    s.push_str(&format!(
        "<text x=\"16\" y=\"{:.1}\" text-anchor=\"middle\" \
         transform=\"rotate(-90 16 {:.1})\">outage probability</text>\n",
        MT + (H - MT - MB) / 2.0,
        MT + (H - MT - MB) / 2.0
    ));

    for (i, ser) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let pts: Vec<String> = grid
            .iter()
            .zip(&ser.probs)
            .map(|(d, p)| format!("{:.1},{:.1}", x_px(*d, lo, hi), y_px(*p)))
            .collect();
        let dash = if ser.dotted {
            " stroke-dasharray=\"5 4\""
        } else {
            ""
        };
        s.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" \
             stroke-width=\"1.8\"{dash}/>\n",
            pts.join(" ")
        ));
        // legend row
        let ly = MT + 16.0 + 16.0 * i as f64;
        s.push_str(&format!(
            "<line x1=\"{:.1}\" y1=\"{ly:.1}\" x2=\"{:.1}\" y2=\"{ly:.1}\" \
             stroke=\"{color}\" stroke-width=\"1.8\"{dash}/>\n",
            ML + 10.0,
            ML + 40.0
        ));
        s.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\">{}</text>\n",
            ML + 46.0,
            ly + 4.0,
            ser.label
        ));
    }
    s.push_str("</svg>\n");
    s
}
