//! Acceptance suite: one pass/fail line per criterion.
//!
//! Every criterion is asserted except those in `KNOWN_RED`, which are
//! asserted to still fail. When a known-red item starts passing the suite
//! fails too, so the list has to be updated by hand.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use graphsym::*;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Criteria expected to fail, with the reason printed next to them.
const KNOWN_RED: &[(u32, &str)] = &[
    (1, "G3 vertex tuple: published values cannot be reproduced, only the classes they induce"),
    (2, "no single cycle rule gives all published counts; the default rule drops the octahedron squares and one Frucht cycle"),
    (3, "C10(1,2) cover rule gives 46 spanning cycles, not one; the rim is the only one with full dihedral symmetry"),
];

// wall-clock limits per criterion
const LIMIT_WEIGHTS: Duration = Duration::from_secs(1);
const LIMIT_CYCLES: Duration = Duration::from_secs(10);
const LIMIT_COVERS: Duration = Duration::from_secs(60);
const LIMIT_ORACLE: Duration = Duration::from_secs(120);

const RANDOM_BIJECTIONS: usize = 1000;
const AUTOMORPHISM_SAMPLE: usize = 2000;

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(format!("FAILED {}", what.into()));
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn rep(n: usize, x: u64) -> Vec<u64> {
    vec![x; n]
}

fn c1_weights() -> Outcome {
    let mut o = Outcome::new();
    let t0 = Instant::now();
    let full: [(&str, Vec<u64>, Vec<u64>); 12] = [
        ("k4_minus_e", vec![7, 7, 7, 4, 7], vec![14, 18, 14, 18]),
        ("k4", rep(6, 4), rep(4, 12)),
        ("octahedron", rep(12, 14), rep(6, 56)),
        ("dodecahedron", rep(30, 16), rep(20, 48)),
        ("icosahedron", rep(30, 24), rep(12, 120)),
        ("frucht", FRUCHT_XI.to_vec(), FRUCHT_ZETA.to_vec()),
        ("k44", rep(16, 6), rep(8, 24)),
        ("c10_13", rep(20, 12), rep(10, 48)),
        ("c12_13", C12_13_XI.to_vec(), rep(12, 60)),
        ("c10_12", rep(20, 16), rep(10, 64)),
        ("shrikhande", rep(48, 34), rep(16, 204)),
        ("rook4", rep(48, 26), rep(16, 156)),
    ];
    for (name, xi, zeta) in full {
        let t = edge_weights(&g(name));
        o.check(t.edge_weights == xi, format!("{name} edge tuple"));
        o.check(t.vertex_weights == zeta, format!("{name} vertex tuple"));
    }
    let t = edge_weights(&g("c12_13"));
    o.check(t.edge_weights.iter().all(|x| [14, 16].contains(x)), "c12_13 edge values in {14,16}");
    o.check(edge_weights(&g("petersen")).vertex_weights == rep(10, 48), "petersen vertex tuple");
    let g3 = edge_weights(&g("g3_ex13")).vertex_weights;
    o.check(g3 == [10, 16, 16, 14, 10, 14], format!("g3_ex13 vertex tuple: got {g3:?}, published [10, 16, 16, 14, 10, 14]"));
    let dt = t0.elapsed();
    o.check(dt < LIMIT_WEIGHTS, format!("runtime {dt:?}"));
    o
}

fn c2_cycles() -> Outcome {
    let mut o = Outcome::new();
    let t0 = Instant::now();
    let want = [
        ("k4", 4),
        ("octahedron", 11),
        ("dodecahedron", 12),
        ("icosahedron", 20),
        ("frucht", 8),
        ("petersen", 12),
        ("k44", 36),
        ("c10_13", 30),
        ("c12_13", 27),
        ("c10_12", 12),
        ("shrikhande", 44),
        ("rook4", 68),
    ];
    let mut other_rule = Vec::new();
    for (name, n) in want {
        let gr = g(name);
        let got = enumerate_isometric_cycles(&gr).unwrap().count();
        o.check(got == n, format!("{name}: {got} cycles, published {n}"));
        let lit = enumerate_isometric_cycles_with(&gr, EnumOptions { rule: CycleRule::Isometric, ..Default::default() })
            .unwrap()
            .count();
        if lit != n {
            other_rule.push(format!("{name} {lit}"));
        }
    }
    o.note(format!("with every isometric cycle kept instead, mismatches are: {}", other_rule.join(", ")));
    let lists: [(&str, &[&[usize]]); 4] =
        [("k4", &K4_CYCLES), ("octahedron", &OCTAHEDRON_CYCLES), ("petersen", &PETERSEN_CYCLES), ("c10_12", &C10_12_CYCLES)];
    for (name, list) in lists {
        let got: BTreeSet<Vec<usize>> =
            enumerate_isometric_cycles(&g(name)).unwrap().cycles.iter().map(|c| c.edges.to_vec()).collect();
        o.check(got == edge_sets(list), format!("{name} printed edge sets"));
    }
    let dt = t0.elapsed();
    o.check(dt < LIMIT_CYCLES, format!("runtime {dt:?}"));
    o
}

fn c3_covers() -> Outcome {
    let mut o = Outcome::new();
    let t0 = Instant::now();
    let run = |name: &str, k: usize, len: usize| {
        let gr = g(name);
        let s = enumerate_isometric_cycles(&gr).unwrap();
        enumerate_cycle_covers(&gr, &s, k, len, generating::DEFAULT_BUDGET).unwrap()
    };
    let r = run("k44", 3, 4);
    o.check(r.configurations.len() == 864, format!("k44 configurations {}", r.configurations.len()));
    o.check(r.generating.len() == 72, format!("k44 generating {}", r.generating.len()));
    o.check(count_spanning_cycles(&g("k44")).unwrap() == r.generating.len(), "k44 spanning cycle count");
    let r = run("c10_13", 4, 4);
    o.check(r.generating.len() == 156, format!("c10_13 generating {}", r.generating.len()));
    let r = run("c10_12", 6, 0);
    let rim: Vec<usize> = C10_12_RIM.to_vec();
    let has_rim = r.generating.iter().any(|q| q.cycle.edges.to_vec() == rim);
    o.check(has_rim, "c10_12 rim among generating cycles");
    o.check(r.generating.len() == 1, format!("c10_12 generating {} (published: exactly one)", r.generating.len()));
    let full = r.generating.iter().filter(|q| q.symmetry == Some(20)).count();
    o.note(format!("c10_12 cycles with all 20 dihedral maps extending: {full}"));
    let r = run("c12_13", 5, 4);
    let same = (r.configurations.len(), r.generating.len()) == (2229, 335);
    o.note(format!(
        "c12_13: {} configurations, {} generating, {} the published 2229/335 (note: its total 335 x 24 is printed as 8540, not 8040)",
        r.configurations.len(),
        r.generating.len(),
        if same { "matching" } else { "differing from" }
    ));
    let dt = t0.elapsed();
    o.check(dt < LIMIT_COVERS, format!("runtime {dt:?}"));
    o
}

fn c4_groups() -> Outcome {
    let mut o = Outcome::new();
    let mut oracle_time = Duration::ZERO;
    let exact = [
        ("k4", 24),
        ("cube", 48),
        ("octahedron", 48),
        ("dodecahedron", 120),
        ("icosahedron", 120),
        ("petersen", 120),
        ("frucht", 1),
        ("c10_12", 20),
        ("shrikhande", 192),
        ("k44", 1152),
    ];
    let oracle_of = |name: &str, t: &mut Duration| {
        let t0 = Instant::now();
        let r = enumerate_automorphisms(&g(name), oracle::DEFAULT_CAP);
        *t += t0.elapsed();
        r
    };
    let spectral = |name: &str| {
        let gr = g(name);
        automorphisms_from_generating_cycles(&gr, &enumerate_isometric_cycles(&gr).unwrap(), &SpectralOptions::default())
            .unwrap()
    };
    for (name, order) in exact {
        let or = oracle_of(name, &mut oracle_time);
        let sp = spectral(name);
        o.check(!or.truncated && or.order == order, format!("{name} oracle {} expected {order}", or.order));
        o.check(sp.closure == or.group, format!("{name} spectral closure {} vs oracle {}", sp.closure_order, or.order));
    }
    let k9 = oracle_of("k9", &mut oracle_time);
    o.check(k9.order == 362_880, format!("k9 oracle {}", k9.order));
    for (name, published) in [("rook4", 1024), ("c10_13", 3120), ("c12_13", 8540)] {
        let or = oracle_of(name, &mut oracle_time);
        let sp = spectral(name);
        o.check(sp.closure == or.group, format!("{name} spectral closure {} vs oracle {}", sp.closure_order, or.order));
        if or.order != published || sp.raw_count != published {
            o.note(format!(
                "{name}: group order {} (oracle), raw count {}, published total {published}: raw-count-vs-group discrepancy",
                or.order, sp.raw_count
            ));
        }
    }
    o.check(oracle_time < LIMIT_ORACLE, format!("oracle runtime {oracle_time:?}"));
    o
}

fn edge_image(gr: &Graph, p: &Permutation, e: usize) -> usize {
    let (u, v) = gr.edge(e).unwrap();
    gr.edge_between(p.apply(u), p.apply(v)).unwrap()
}

fn c5_properties() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in catalog_names() {
        let gr = g(name);
        let same_path = (1..=gr.m()).all(|e| second_level(&gr, e).unwrap() == second_level_by_parity(&gr, e).unwrap());
        o.check(same_path, format!("{name} second level paths"));

        let wt = edge_weights(&gr);
        let or = enumerate_automorphisms(&gr, oracle::DEFAULT_CAP);
        let grp = &or.group;
        let picks: Vec<&Permutation> = if grp.order() <= AUTOMORPHISM_SAMPLE {
            grp.elements().iter().collect()
        } else {
            grp.elements().choose_multiple(&mut rng, AUTOMORPHISM_SAMPLE).collect()
        };
        let iso = enumerate_isometric_cycles(&gr).unwrap();
        let set: BTreeSet<Vec<usize>> = iso.cycles.iter().map(|c| c.edges.to_vec()).collect();
        for p in &picks {
            let w_ok = (1..=gr.m()).all(|e| wt.xi(e) == wt.xi(edge_image(&gr, p, e)))
                && (1..=gr.n()).all(|v| wt.zeta(v) == wt.zeta(p.apply(v)));
            let c_ok = iso.cycles.iter().all(|c| {
                let mut img: Vec<usize> = c.edges.iter().map(|e| edge_image(&gr, p, e)).collect();
                img.sort();
                set.contains(&img)
            });
            let n_ok = parse_permutation(&p.cycle_notation(false), gr.n()).as_ref() == Ok(*p);
            o.check(w_ok && c_ok && n_ok, format!("{name} invariance under {}", p.cycle_notation(false)));
        }
        o.check(or.orbits.refines(&weight_classes(&gr, &wt), gr.n()), format!("{name} weight classes contain orbits"));

        if grp.order() <= perm::CAYLEY_CAP {
            let t = cayley_table(grp).unwrap();
            let id_ok = (0..t.order).all(|i| t.cells[0][i] == i && t.cells[i][0] == i);
            o.check(t.is_latin_square() && id_ok, format!("{name} cayley table"));
        }

        let mut images: Vec<usize> = (1..=gr.n()).collect();
        for _ in 0..RANDOM_BIJECTIONS {
            images.shuffle(&mut rng);
            let p = Permutation::from_images(images.clone()).unwrap();
            o.check(verify_permutation(&gr, &p).unwrap() == preserves_edge_set(&gr, &p), format!("{name} verify {p:?}"));
        }
    }
    o.note(format!("k9 cayley table skipped: 362880 elements exceed the cap of {}", perm::CAYLEY_CAP));
    o
}

fn c6_fixtures() -> Outcome {
    let mut o = Outcome::new();
    let k4 = g("k4");
    o.check(digit_perms(&K4_PERMS).iter().all(|p| verify_permutation(&k4, p).unwrap()), "k4 p0..p23");
    let pet = g("petersen");
    o.check(PETERSEN_PERMS.iter().all(|s| verify_permutation(&pet, &perm(s, 10)).unwrap()), "petersen p0..p9");
    let g2 = g("g2_ex12");
    o.check(digit_perms(&G2_PERMS).iter().all(|p| verify_permutation(&g2, p).unwrap()), "g2 p0..p7");
    let g3 = g("g3_ex13");
    o.check(G3_AUT.iter().all(|s| verify_permutation(&g3, &perm(s, 6)).unwrap()), "g3 four automorphisms");
    let aut = enumerate_automorphisms(&k4, oracle::DEFAULT_CAP).group;
    let klein: Vec<Permutation> = ["()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"].iter().map(|s| perm(s, 4)).collect();
    let found = find_klein_four(&aut).map(|k| k.elements().to_vec());
    o.check(found.as_ref() == Some(&klein), format!("klein four-group in Aut(k4): {found:?}"));
    o
}

fn c7_negatives() -> Outcome {
    let mut o = Outcome::new();
    o.check(
        !fingerprint_equal(&edge_weights(&g("shrikhande")), &edge_weights(&g("rook4"))),
        "shrikhande and rook4 fingerprints differ",
    );
    o.check(!verify_permutation(&g("g3_ex13"), &perm("(2 3)", 6)).unwrap(), "g3 rejects (2 3)");
    for name in ["k4", "cube", "dodecahedron", "icosahedron"] {
        let gr = g(name);
        o.check(ring_sum_all(&gr, &enumerate_isometric_cycles(&gr).unwrap()).is_empty(), format!("{name} ring sum empty"));
    }
    let oc = g("octahedron");
    let lit = enumerate_isometric_cycles_with(&oc, EnumOptions { rule: CycleRule::Isometric, ..Default::default() }).unwrap();
    o.note(format!(
        "octahedron ring sum: {:?} over the default cycle set, {:?} over all 11 isometric cycles",
        ring_sum_all(&oc, &enumerate_isometric_cycles(&oc).unwrap()),
        ring_sum_all(&oc, &lit)
    ));
    o
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 7] = [
        (1, "weight tuples", c1_weights),
        (2, "isometric cycle counts", c2_cycles),
        (3, "generating cycle machinery", c3_covers),
        (4, "group orders", c4_groups),
        (5, "property suites", c5_properties),
        (6, "fixture permutations", c6_fixtures),
        (7, "known negatives", c7_negatives),
    ];
    let mut problems = Vec::new();
    for (id, title, f) in criteria {
        let t0 = Instant::now();
        let out = f();
        let red = KNOWN_RED.iter().find(|(k, _)| *k == id);
        let status = match (out.pass, red) {
            (true, None) => "PASS",
            (false, Some(_)) => "FAIL (known red)",
            (false, None) => "FAIL",
            (true, Some(_)) => "PASS (listed as known red)",
        };
        println!("criterion {id} {title}: {status} [{:.2?}]", t0.elapsed());
        if let (false, Some((_, why))) = (out.pass, red) {
            println!("    known red: {why}");
        }
        for n in &out.notes {
            println!("    {n}");
        }
        match (out.pass, red) {
            (false, None) => problems.push(format!("criterion {id} failed")),
            (true, Some(_)) => problems.push(format!("criterion {id} passes; drop it from KNOWN_RED")),
            _ => {}
        }
    }
    if !problems.is_empty() {
        panic!("{}", problems.join("; "));
    }
    println!("acceptance: ok ({} known red)", KNOWN_RED.len());
}
