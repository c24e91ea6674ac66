use fatlab_core::verify::run_check;

fn main() {
    let verbose = std::env::args().any(|a| a == "--verbose" || a == "-v");
    let seed = std::env::var("FATLAB_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(2024);
    let mut failed = 0;
    for id in 1..=15 {
        let r = run_check(id, seed);
        println!("{}", r.line());
        if verbose || !r.pass {
            for d in &r.details {
                println!("      {d}");
            }
        }
        failed += usize::from(!r.pass);
    }
    println!("{} of 15 criteria passed", 15 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
