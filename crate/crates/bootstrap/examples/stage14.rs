use bootstrap::{lambda, Bootstrap};

fn main() {
    let t0 = std::time::Instant::now();
    let mut bs = Bootstrap::seed();
    bs.solve_stage(10).expect("stage 10");
    println!("stage 10 done at {:?}", t0.elapsed());
    let r12 = bs.solve_stage(12).expect("stage 12");
    println!(
        "stage 12 done at {:?}; unknowns {}, free {:?}, residuals {}",
        t0.elapsed(),
        r12.unknowns_created,
        r12.free_parameters,
        r12.residuals.len()
    );
    let r14 = bs.solve_stage(14).expect("stage 14");
    println!(
        "stage 14 done at {:?}; unknowns {}, free {:?}, residuals {}",
        t0.elapsed(),
        r14.unknowns_created,
        r14.free_parameters,
        r14.residuals.len()
    );
    let quad = lambda::d28_quadratic(&bs.ctx).primitive();
    println!("target quadratic (primitive): {quad}");
    for r in &r14.residuals {
        let p = r.primitive();
        let ratio_ok = p == quad || p == quad.neg();
        let divisible = quad.divides(r);
        println!("  residual: {p}");
        println!("    equals quadratic up to sign: {ratio_ok}; divisible: {divisible}");
    }
    let (g, c, w, f) = bs.alg.cache_sizes();
    println!("caches: gen={g} comp={c} wick={w} flip={f}");
}
