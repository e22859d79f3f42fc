//! CSV emitters. Every file has a fixed header, fixed column order,
//! decimal points and `\n` line endings regardless of locale; NaN is
//! written as `nan`.

use fluidcell::OutageCurve;

use crate::run::ComparisonReport;

fn num(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x}")
    }
}

fn fixed(x: f64, decimals: usize) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x:.decimals$}")
    }
}

pub fn curve_csv(curve: &OutageCurve, stderr: Option<&[f64]>) -> String {
    let mut out = String::from("delta_db,prob,stderr\n");
    for (i, (d, p)) in curve.thresholds_db().iter().zip(curve.probs()).enumerate() {
        let se = stderr.map(|s| s[i]).unwrap_or(0.0);
        out.push_str(&format!("{:.3},{:.6},{:.6}\n", d, p, se));
    }
    out
}

pub struct ReportRow {
    pub eta: f64,
    pub sigma_db: f64,
    pub r_over_rc: f64,
    pub mode_a: &'static str,
    pub mode_b: &'static str,
    pub rep: ComparisonReport,
}

pub fn report_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(
        "eta,sigma_db,r_over_rc,mode_a,mode_b,max_dev,delta10_a_db,delta10_b_db,shift_db\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            num(r.eta),
            num(r.sigma_db),
            num(r.r_over_rc),
            r.mode_a,
            r.mode_b,
            fixed(r.rep.max_dev, 6),
            fixed(r.rep.delta10_a_db, 4),
            fixed(r.rep.delta10_b_db, 4),
            fixed(r.rep.shift_db, 4),
        ));
    }
    out
}

pub struct CoverageRow {
    pub eta: f64,
    pub sigma_db: f64,
    pub mode: &'static str,
    pub delta_db: f64,
    pub p_target: f64,
    pub r_star_m: f64,
    pub r_star_over_rc: f64,
}

pub fn coverage_csv(rows: &[CoverageRow]) -> String {
    let mut out =
        String::from("eta,sigma_db,mode,delta_db,p_target,r_star_m,r_star_over_rc\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            num(r.eta),
            num(r.sigma_db),
            r.mode,
            num(r.delta_db),
            num(r.p_target),
            fixed(r.r_star_m, 6),
            fixed(r.r_star_over_rc, 6),
        ));
    }
    out
}

pub struct CapacityRow {
    pub eta: f64,
    pub sigma_db: f64,
    pub r_over_rc: f64,
    pub mode: &'static str,
    pub capacity: f64,
}

pub fn capacity_csv(rows: &[CapacityRow]) -> String {
    let mut out = String::from("eta,sigma_db,r_over_rc,mode,capacity_bit_per_s_per_hz\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            num(r.eta),
            num(r.sigma_db),
            num(r.r_over_rc),
            r.mode,
            fixed(r.capacity, 6),
        ));
    }
    out
}

pub struct MfRow {
    pub sigma_db: f64,
    pub m_f_db: f64,
    pub s_f_db: f64,
    pub h_factor: f64,
    pub g_factor: f64,
}

pub fn mf_csv(rows: &[MfRow]) -> String {
    let mut out = String::from("sigma_db,m_f_db,s_f_db,h_factor,g_factor\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            num(r.sigma_db),
            fixed(r.m_f_db, 6),
            fixed(r.s_f_db, 6),
            fixed(r.h_factor, 6),
            fixed(r.g_factor, 6),
        ));
    }
    out
}
