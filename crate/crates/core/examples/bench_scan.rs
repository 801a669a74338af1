use candc_core::generate;
use candc_core::group_conn::{self, FlowGroup};
use std::time::Instant;

fn main() {
    // Petersen full scan, both groups
    for group in [FlowGroup::Z4, FlowGroup::Z2x2] {
        let g = generate::petersen();
        let t0 = Instant::now();
        let report = group_conn::almost_connected(&g, group, None, 1 << 16, &mut |_| {}).unwrap();
        let dt = t0.elapsed();
        println!(
            "petersen {:?}: verdict={} inadmissible={:?} checked={} exact={} quick={} in {:.2?} ({:.0} ns/boundary)",
            group, report.verdict, report.inadmissible, report.boundaries_checked,
            report.exact_solves, report.quick_hits, dt,
            dt.as_nanos() as f64 / report.boundaries_checked as f64
        );
    }
    // Blanusa rate estimate: first 2^22 boundaries of one snark
    let (b1, _) = generate::blanusa_snarks();
    for group in [FlowGroup::Z4, FlowGroup::Z2x2] {
        let t0 = Instant::now();
        let p = group_conn::scan_range(&b1, group, 0, 1 << 22).unwrap();
        let dt = t0.elapsed();
        let per = dt.as_nanos() as f64 / (1u64 << 22) as f64;
        println!(
            "blanusa1 {:?}: 2^22 slice inadmissible={} exact={} quick={} in {:.2?} ({:.0} ns/boundary, full scan est {:.1} min)",
            group, p.inadmissible.len(), p.exact_solves, p.quick_hits, dt, per,
            per * 4f64.powi(17) / 1e9 / 60.0
        );
    }
}
