use g3s5::kernel::Variant;
use g3s5::search::{prove, variant_goals, SearchConfig};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let depth: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(24);
    for v in [Variant::Variant1, Variant::Variant2, Variant::Variant3, Variant::Variant4, Variant::Full] {
        for (name, goal) in variant_goals() {
            let mut cfg = SearchConfig::with_variant(v);
            cfg.depth_bound = depth;
            let t = std::time::Instant::now();
            let res = prove(&goal, &cfg);
            println!("{:>9} {} proved={:<5} {:?}", v.to_string(), name, res.is_proved(), t.elapsed());
        }
    }
}
