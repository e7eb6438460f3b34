//! Full twelve-vertex check of the omega equality characterization. Needs every
//! graph on 12 vertices (about 1.65e11 classes); run with `--ignored` only with
//! weeks of CPU time to spare.

use perfmax::bounds::omega;
use perfmax::constructions::extremal_decomposition;
use perfmax::search::{sweep_mu_table, SweepConfig};

#[test]
#[ignore]
fn omega_characterization_on_twelve_vertices() {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let cfg = SweepConfig {
        worker_count: workers,
        edge_range: Some(6..=66),
        ..SweepConfig::default()
    };
    for rec in sweep_mu_table(12, &cfg).unwrap() {
        let m = rec.m_edges;
        let w = omega(12, m).unwrap();
        let d = if m <= 36 {
            extremal_decomposition(6, m).unwrap()
        } else {
            None
        };
        if d.is_some() {
            assert_eq!(w.exact(), Some(&rec.max_count), "m={m}");
        } else {
            assert!(w.cmp_count(&rec.max_count, 1e-9).is_gt(), "m={m}");
        }
    }
}
