use bootstrap::Bootstrap;
use noa::GenSym;

fn main() {
    let t0 = std::time::Instant::now();
    let mut bs = Bootstrap::seed();
    let report = bs.solve_stage(10).expect("stage 10");
    println!("stage 10 done in {:?}", t0.elapsed());
    println!("unknowns created: {}", report.unknowns_created);
    println!("free parameters: {:?}", report.free_parameters);
    println!("residuals: {}", report.residuals.len());
    for r in &report.residuals {
        println!("  residual: {r}");
    }
    println!("forcing identities: {}", report.forcing.len());
    for (name, a, b) in [("L.W6", 2u32, 6u32), ("W4.W4", 4, 4)] {
        println!("--- {name}");
        for k in (0..(a + b) as i64).rev() {
            let s = bs.alg.gen_gen(GenSym::base(a), k, GenSym::base(b)).unwrap();
            println!("  k={k}: {s}");
        }
    }
    let (g, c, w, f) = bs.alg.cache_sizes();
    println!("caches: gen={g} comp={c} wick={w} flip={f}");
}
