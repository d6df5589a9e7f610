//! Prints the main counts for every catalog graph.

use std::time::Instant;

use graphsym::*;

fn main() -> Result<()> {
    for name in catalog_names() {
        let g = catalog(name)?;
        let t = Instant::now();
        let wt = edge_weights(&g);
        let iso = enumerate_isometric_cycles(&g)?;
        let lit = enumerate_isometric_cycles_with(&g, EnumOptions { rule: CycleRule::Isometric, ..Default::default() })?;
        let t_iso = t.elapsed();
        let t = Instant::now();
        let orc = enumerate_automorphisms(&g, 1_000_000);
        let t_or = t.elapsed();
        let t = Instant::now();
        let sp = automorphisms_from_generating_cycles(&g, &iso, &SpectralOptions::default());
        let t_sp = t.elapsed();
        let sp = match sp {
            Ok(r) => format!("fam {}x{} nominal {} raw {} distinct {} closure {}", r.family_size, r.cycle_length, r.nominal, r.raw_count, r.distinct_count, r.closure_order),
            Err(e) => format!("err {e}"),
        };
        println!(
            "{name:14} n={:2} m={:2} vf={:?} iso={} lit={} oracle={} | {sp} | t iso {:?} oracle {:?} spectral {:?}",
            g.n(), g.m(), &wt.vertex_fingerprint[..1], iso.count(), lit.count(), orc.order, t_iso, t_or, t_sp
        );
    }
    Ok(())
}
